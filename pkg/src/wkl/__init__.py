"""Width-bounded trees: analysis, proof-derived path extraction, certificates."""

from .errors import TreeError
from .tree_core import (
    TreeTruncation,
    is_path_prefix,
    level_set,
    lookahead_extendible,
    max_antichain,
    validate_truncation,
    vsmall_check,
    width_profile,
)

__version__ = "0.1.0"
