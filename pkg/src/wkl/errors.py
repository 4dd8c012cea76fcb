"""Exception hierarchy.

Three families map onto the CLI exit codes: malformed input or a violated
precondition (1), a width/antichain hypothesis that fails on the given tree
(2), and an extraction that cannot finish inside the depth horizon (3).
"""

from __future__ import annotations


def _show(node) -> str:
    return " ".join(str(x) for x in node) if node else "-"


class TreeError(Exception):
    exit_code = 1


class ValidationError(TreeError):
    exit_code = 1


class HypothesisFailure(TreeError):
    exit_code = 2


class ExtractionFailure(TreeError):
    exit_code = 3


class ParseError(ValidationError):
    pass


class MissingRoot(ValidationError):
    def __init__(self):
        super().__init__("MissingRoot: the empty sequence is not a node")


class _NodeError(ValidationError):
    label = ""

    def __init__(self, node, detail: str = ""):
        self.node = tuple(node)
        msg = f"{self.label}({_show(self.node)})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotPrefixClosed(_NodeError):
    label = "NotPrefixClosed"


class HorizonExceeded(_NodeError):
    label = "HorizonExceeded"


class AlphabetViolation(_NodeError):
    label = "AlphabetViolation"


class StartNotInTree(_NodeError):
    label = "StartNotInTree"


class NotInHatTree(_NodeError):
    label = "NotInHatTree"


class LevelBeyondHorizon(ValidationError):
    def __init__(self, level: int, horizon: int):
        self.level = level
        super().__init__(f"LevelBeyondHorizon: level {level} > horizon {horizon}")


class LookaheadBeyondHorizon(ValidationError):
    def __init__(self, level: int, lookahead: int, horizon: int):
        self.level = level
        self.lookahead = lookahead
        super().__init__(
            f"LookaheadBeyondHorizon: level {level} + lookahead {lookahead} > horizon {horizon}"
        )


class DepthUnrealizable(ValidationError):
    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"DepthUnrealizable: no string of length {depth - 1} was enumerated")


class RangeEmpty(ValidationError):
    def __init__(self):
        super().__init__("RangeEmpty: no argument of the function table is checkable")


class InvalidBound(ValidationError):
    def __init__(self, c: int):
        self.c = c
        super().__init__(f"InvalidBound: bound must be >= 1, got {c}")


class InvalidParams(ValidationError):
    pass


class BoundViolated(HypothesisFailure):
    def __init__(self, b0: int, c: int, what: str = "b0"):
        self.b0 = b0
        self.c = c
        super().__init__(f"BoundViolated: {what}={b0} exceeds c={c}")


class BoundNotAchievable(HypothesisFailure):
    def __init__(self, level: int, c: int):
        self.level = level
        super().__init__(
            f"BoundNotAchievable({level}): no feasible lookahead brings level {level} to width <= {c}"
        )


class LevelWidthViolated(HypothesisFailure):
    def __init__(self, level: int, width: int, c: int):
        self.level = level
        self.width = width
        super().__init__(f"LevelWidthViolated({level}): width {width} exceeds c={c}")


class NonUniqueExtension(ExtractionFailure):
    def __init__(self, node, lookahead: int):
        self.node = tuple(node)
        self.lookahead = lookahead
        super().__init__(
            f"NonUniqueExtension({_show(self.node)}, {lookahead}): two or more children "
            f"survive lookahead {lookahead}; try a larger lookahead"
        )


class NoExtendiblePivot(ExtractionFailure):
    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"NoExtendiblePivot: no antichain member has an extension at depth {depth}")


class InsufficientStableLevels(ExtractionFailure):
    def __init__(self, detail: str):
        super().__init__(f"InsufficientStableLevels: {detail}")


class EmptySelection(ExtractionFailure):
    def __init__(self, levels):
        self.levels = tuple(levels)
        super().__init__(
            "EmptySelection: no selection threads all sampled levels "
            f"{list(self.levels)}; try a larger lookahead"
        )
