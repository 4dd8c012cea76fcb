"""Plain-text formats.

Tree file (``.tree``)::

    alphabet binary|ternary|nat
    horizon <D>
    -            root
    0 1          one node per line, entries separated by spaces

Enumerated tree (``.enum``): header ``enumerated <alphabet>``, then
``horizon <D>``, then ``<stage> <node>`` lines in enumeration order.

Table (``.tab``)::

    kind predicate            kind function
    horizons <mH> <iH>        bounds <domain> <range|inf>
    <m> <i>                   <x> <v>

Reports are ``key value`` lines; list values separate nodes with `` | ``.
Lines starting with ``#`` and blank lines are ignored on input.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .extractors import EXTCertificate, PathPrefix, PFCertificate, WBDCertificate
from .tables import FunctionTable, PredicateTable
from .transforms import EnumeratedTree
from .tree_core import TreeTruncation, show


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((k, line))
    return out


def parse_node(text: str, where: str = "") -> tuple:
    text = text.strip()
    if text == "-":
        return ()
    try:
        node = tuple(int(x) for x in text.split())
    except ValueError:
        raise ParseError(f"{where}bad node {text!r}") from None
    if any(x < 0 for x in node):
        raise ParseError(f"{where}negative entry in node {text!r}")
    return node


def parse_node_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_node(part) for part in text.split("|"))


def show_list(nodes) -> str:
    return " | ".join(show(n) for n in nodes)


def _header(lines, key: str, k: int) -> list[str]:
    if len(lines) <= k:
        raise ParseError(f"missing header line {k + 1} ({key} ...)")
    lineno, line = lines[k]
    parts = line.split()
    if parts[0] != key:
        raise ParseError(f"line {lineno}: expected '{key} ...', got {line!r}")
    return parts[1:]


def _int(text: str, lineno) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"line {lineno}: expected a natural, got {text!r}") from None


def parse_tree(text: str) -> TreeTruncation:
    lines = _content_lines(text)
    alpha = _header(lines, "alphabet", 0)
    hz = _header(lines, "horizon", 1)
    if len(alpha) != 1 or len(hz) != 1:
        raise ParseError("malformed header")
    seen = set()
    for lineno, line in lines[2:]:
        node = parse_node(line, f"line {lineno}: ")
        if node in seen:
            raise ParseError(f"line {lineno}: duplicate node {show(node)}")
        seen.add(node)
    return TreeTruncation(frozenset(seen), _int(hz[0], lines[1][0]), alpha[0])


def format_tree(tree: TreeTruncation) -> str:
    out = [f"alphabet {tree.alphabet}", f"horizon {tree.horizon}"]
    out += [show(n) for n in tree.sorted_nodes()]
    return "\n".join(out) + "\n"


def parse_enum(text: str) -> EnumeratedTree:
    lines = _content_lines(text)
    alpha = _header(lines, "enumerated", 0)
    hz = _header(lines, "horizon", 1)
    stages = []
    for lineno, line in lines[2:]:
        head, _, rest = line.partition(" ")
        if not rest:
            raise ParseError(f"line {lineno}: expected '<stage> <node>'")
        stages.append((_int(head, lineno), parse_node(rest, f"line {lineno}: ")))
    return EnumeratedTree(tuple(stages), _int(hz[0], lines[1][0]), alpha[0])


def format_enum(enum: EnumeratedTree) -> str:
    out = [f"enumerated {enum.alphabet}", f"horizon {enum.horizon}"]
    out += [f"{stage} {show(node)}" for stage, node in enum.stages]
    return "\n".join(out) + "\n"


def parse_table(text: str):
    lines = _content_lines(text)
    kind = _header(lines, "kind", 0)
    pairs = []
    for lineno, line in lines[2:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two naturals")
        pairs.append((_int(parts[0], lineno), _int(parts[1], lineno)))
    if kind == ["predicate"]:
        mh, ih = _header(lines, "horizons", 1)
        lineno = lines[1][0]
        return PredicateTable(frozenset(pairs), _int(mh, lineno), _int(ih, lineno))
    if kind == ["function"]:
        dom, rng = _header(lines, "bounds", 1)
        lineno = lines[1][0]
        values = {}
        for x, v in pairs:
            if x in values:
                raise ParseError(f"function value at {x} given twice")
            values[x] = v
        bound = None if rng == "inf" else _int(rng, lineno)
        return FunctionTable(values, _int(dom, lineno), bound)
    raise ParseError(f"unknown table kind {' '.join(kind)!r}")


def format_table(table) -> str:
    if isinstance(table, PredicateTable):
        out = ["kind predicate", f"horizons {table.m_horizon} {table.i_horizon}"]
        out += [f"{m} {i}" for m, i in sorted(table.true_pairs)]
    else:
        bound = "inf" if table.range_bound is None else str(table.range_bound)
        out = ["kind function", f"bounds {table.domain_horizon} {bound}"]
        out += [f"{x} {v}" for x, v in sorted(table.values.items())]
    return "\n".join(out) + "\n"


def load_tree(path) -> TreeTruncation:
    """Read a tree file; enumerated files are accumulated into their tree."""
    text = Path(path).read_text()
    first = next((line for _, line in _content_lines(text)), "")
    if first.startswith("enumerated"):
        return parse_enum(text).accumulate()
    return parse_tree(text)


# ---------------------------------------------------------------------------
# extraction reports
# ---------------------------------------------------------------------------

def extraction_lines(variant: str, source: str, c: int, result: PathPrefix, cert) -> list[str]:
    out = [
        "report extract",
        f"variant {variant}",
        f"source {source}",
        f"c {c}",
        f"requested_length {result.requested_length}",
        f"lookahead {result.lookahead_used}",
        f"path {show(result.path)}",
        f"achieved_length {result.achieved_length}",
        f"b0 {cert.b0}",
    ]
    if isinstance(cert, PFCertificate):
        out += [f"p0 {show_list(cert.p0)}", f"pivot {show(cert.pivot)}"]
    elif isinstance(cert, EXTCertificate):
        out += [f"witness_level {cert.witness_level}", f"pivot {show(cert.pivot)}"]
    else:
        out.append("sampled_levels " + " ".join(map(str, cert.sampled_levels)))
        for m, table in zip(cert.sampled_levels, cert.leftmost_tables):
            out.append(f"table {m} {show_list(table)}")
        out.append(f"selection {show(cert.selection)}")
    return out


def parse_report(text: str) -> dict:
    """Key/value map; repeated keys (``table``) collect into lists."""
    out: dict = {}
    for _, line in _content_lines(text):
        key, _, value = line.partition(" ")
        if key == "table":
            out.setdefault("table", []).append(value)
        elif key in out:
            raise ParseError(f"duplicate report key {key!r}")
        else:
            out[key] = value
    return out


def extraction_from_report(fields: dict):
    """Rebuild (variant, c, PathPrefix, certificate) from a parsed report."""
    try:
        if fields.get("report") != "extract":
            raise ParseError("not an extraction report")
        variant = fields["variant"]
        result = PathPrefix(
            parse_node(fields["path"]),
            int(fields["requested_length"]),
            int(fields["achieved_length"]),
            int(fields["lookahead"]),
        )
        b0 = int(fields["b0"])
        if variant == "pf":
            cert = PFCertificate(b0, parse_node_list(fields["p0"]), parse_node(fields["pivot"]))
        elif variant == "ext":
            cert = EXTCertificate(b0, int(fields["witness_level"]), parse_node(fields["pivot"]))
        elif variant == "wbd":
            levels = tuple(int(x) for x in fields["sampled_levels"].split())
            tables = {}
            for entry in fields.get("table", []):
                head, _, rest = entry.partition(" ")
                tables[int(head)] = parse_node_list(rest)
            cert = WBDCertificate(
                b0, levels, tuple(tables.get(m, ()) for m in levels), parse_node(fields["selection"])
            )
        else:
            raise ParseError(f"unknown variant {variant!r}")
        return variant, int(fields["c"]), result, cert
    except KeyError as exc:
        raise ParseError(f"report lacks key {exc.args[0]!r}") from None
    except ValueError as exc:
        raise ParseError(f"malformed report value: {exc}") from None

