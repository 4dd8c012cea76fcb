"""Path extraction under the three width hypotheses.

Each extractor follows its proof: locate a node below which the tree cannot
split (under the hypothesis), then walk down its unique surviving children.
Extractors return a PathPrefix and a certificate holding the witnesses the
argument needs.  The ``verify_*`` functions re-derive everything from the
raw node set and never call the extractors or their helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import (
    BoundViolated,
    EmptySelection,
    InsufficientStableLevels,
    InvalidBound,
    LevelWidthViolated,
    LookaheadBeyondHorizon,
    NoExtendiblePivot,
    NonUniqueExtension,
    StartNotInTree,
)
from .transforms import EnumeratedTree
from .tree_core import (
    Seq,
    TreeTruncation,
    is_prefix,
    level_set,
    lookahead_extendible,
    max_antichain,
    show,
)


@dataclass(frozen=True)
class PathPrefix:
    path: Seq
    requested_length: int
    achieved_length: int
    lookahead_used: int


@dataclass(frozen=True)
class PFCertificate:
    b0: int
    p0: tuple
    pivot: Seq


@dataclass(frozen=True)
class EXTCertificate:
    b0: int
    witness_level: int
    pivot: Seq


@dataclass(frozen=True)
class WBDCertificate:
    b0: int
    sampled_levels: tuple
    leftmost_tables: tuple  # one lexicographically ordered tuple of nodes per sampled level
    selection: Seq


Certificate = Union[PFCertificate, EXTCertificate, WBDCertificate]


def _check_budget(tree: TreeTruncation, target_len: int, s: int) -> None:
    if target_len + s > tree.horizon:
        raise LookaheadBeyondHorizon(target_len, s, tree.horizon)


def follow_unique_extensions(tree: TreeTruncation, start: Seq, target_len: int, s: int) -> PathPrefix:
    """Walk down from ``start`` through the only child surviving lookahead s.

    Stops early when no child survives; two survivors is an error, since the
    width hypothesis is then false at this lookahead.
    """
    start = tuple(start)
    if start not in tree:
        raise StartNotInTree(start)
    _check_budget(tree, target_len, s)
    path = start[:target_len]
    while len(path) < target_len:
        live = [ch for ch in tree.children[path] if tree.has_extension_at(ch, len(ch) + s)]
        if not live:
            break
        if len(live) > 1:
            raise NonUniqueExtension(path, s)
        path = live[0]
    return PathPrefix(path, target_len, len(path), s)


def extract_pf_bounded(tree: TreeTruncation, c: int, target_len: int, s: int) -> tuple[PathPrefix, PFCertificate]:
    if c < 1:
        raise InvalidBound(c)
    _check_budget(tree, target_len, s)
    b0, p0 = max_antichain(tree)
    if b0 > c:
        raise BoundViolated(b0, c)
    depth = target_len + s
    deep = tree.levels[depth]
    pivot = next(
        (p for p in p0 if len(p) >= depth or any(is_prefix(p, t) for t in deep)),
        None,
    )
    if pivot is None:
        raise NoExtendiblePivot(depth)
    # below a member of a maximum antichain the tree is a single chain
    result = follow_unique_extensions(tree, pivot, target_len, s)
    return result, PFCertificate(b0, p0, pivot)


def extract_ext_bounded(tree: TreeTruncation, c: int, target_len: int, s: int) -> tuple[PathPrefix, EXTCertificate]:
    if c < 1:
        raise InvalidBound(c)
    _check_budget(tree, target_len, s)
    widths = [len(lookahead_extendible(tree, n, s)) for n in range(target_len + 1)]
    b0 = max(widths)
    if b0 > c:
        raise BoundViolated(b0, c)
    if b0 == 0:
        raise NoExtendiblePivot(target_len + s)
    witness = widths.index(b0)
    pivot = lookahead_extendible(tree, witness, s)[0]
    result = follow_unique_extensions(tree, pivot, target_len, s)
    return result, EXTCertificate(b0, witness, pivot)


def _select(tables: list, b0: int) -> Seq | None:
    """Least tau with tables[i][tau(i)] a prefix of tables[j][tau(j)] for i <= j."""
    depth = len(tables)
    dead = set()

    def grow(tau: tuple):
        i = len(tau)
        if i == depth:
            return tau
        for j in range(b0):
            if (i, j) in dead:
                continue
            if all(is_prefix(tables[k][tau[k]], tables[i][j]) for k in range(i)):
                found = grow(tau + (j,))
                if found is not None:
                    return found
                # extendibility of (i, j) does not depend on earlier choices
                dead.add((i, j))
        return None

    return grow(())


def extract_w_bounded_kl(tree: TreeTruncation, c: int, target_len: int, s: int) -> tuple[PathPrefix, WBDCertificate]:
    """Selection-tree extraction for trees of bounded level width.

    The tail width b0 is the largest lookahead width over the upper half of
    the checkable levels; the sampled levels are those attaining it.  A
    selection picks, at each sampled level, one of its b0 leftmost-ordered
    strings so that the picks form a chain.
    """
    if c < 1:
        raise InvalidBound(c)
    _check_budget(tree, target_len, s)
    for n in range(tree.horizon + 1):
        width = len(level_set(tree, n))
        if width > c:
            raise LevelWidthViolated(n, width, c)
    top = tree.horizon - s
    window = range((top + 1) // 2, top + 1)
    tables_by_level = {m: lookahead_extendible(tree, m, s) for m in window}
    b0 = max(len(t) for t in tables_by_level.values())
    sampled = [m for m in window if len(tables_by_level[m]) == b0]
    if b0 == 0:
        raise InsufficientStableLevels(f"no level in {window.start}..{top} survives lookahead {s}")
    if sampled[-1] < target_len:
        raise InsufficientStableLevels(
            f"deepest level of width {b0} is {sampled[-1]}, below requested length {target_len}"
        )
    tables = [tables_by_level[m] for m in sampled]
    selection = _select(tables, b0)
    if selection is None:
        raise EmptySelection(sampled)
    deepest = tables[-1][selection[-1]]
    path = deepest[:target_len]
    cert = WBDCertificate(b0, tuple(sampled), tuple(tables), selection)
    return PathPrefix(path, target_len, len(path), s), cert


@dataclass(frozen=True)
class StabilityReport:
    nodes: tuple
    lookaheads: tuple
    survives: dict  # (node, s) -> bool

    def lines(self) -> list[str]:
        out = ["lookaheads " + " ".join(map(str, self.lookaheads))]
        for node in self.nodes:
            cells = " ".join(
                f"{s}:{'yes' if self.survives[node, s] else 'no'}" for s in self.lookaheads
            )
            out.append(f"node {show(node)} | {cells}")
        return out


def lookahead_stability_report(tree, nodes, lookaheads) -> StabilityReport:
    """Survival of each node under each lookahead; accepts an enumerated tree too."""
    if isinstance(tree, EnumeratedTree):
        tree = tree.accumulate()
    nodes = tuple(tuple(n) for n in nodes)
    lookaheads = tuple(sorted(set(lookaheads)))
    top = max(lookaheads, default=0)
    for node in nodes:
        if len(node) + top > tree.horizon:
            raise LookaheadBeyondHorizon(len(node), top, tree.horizon)
    survives = {
        (node, s): node in tree and tree.has_extension_at(node, len(node) + s)
        for node in nodes
        for s in lookaheads
    }
    return StabilityReport(nodes, lookaheads, survives)


# ---------------------------------------------------------------------------
# Independent re-verification: raw node-set scans only
# ---------------------------------------------------------------------------

def _scan_survives(nodes: frozenset, node: Seq, s: int) -> bool:
    want = len(node) + s
    return any(len(t) == want and t[: len(node)] == node for t in nodes)


def _scan_lookahead_level(nodes: frozenset, n: int, s: int) -> list:
    return sorted(v for v in nodes if len(v) == n and _scan_survives(nodes, v, s))


def _scan_leaf_count(nodes: frozenset) -> int:
    parents = {v[:-1] for v in nodes if v}
    return sum(1 for v in nodes if v not in parents)


def check_path(tree: TreeTruncation, result: PathPrefix) -> list[str]:
    problems = []
    path = tuple(result.path)
    nodes = tree.nodes
    if result.achieved_length != len(path):
        problems.append(f"achieved_length {result.achieved_length} != length of path {len(path)}")
    if len(path) > result.requested_length:
        problems.append(f"path longer than requested length {result.requested_length}")
    for k in range(len(path) + 1):
        if path[:k] not in nodes:
            problems.append(f"prefix {show(path[:k])} not in tree")
            return problems
    if not _scan_survives(nodes, path, result.lookahead_used):
        problems.append(f"endpoint {show(path)} does not survive lookahead {result.lookahead_used}")
    return problems


def verify_pf(tree: TreeTruncation, result: PathPrefix, cert: PFCertificate, c: int) -> list[str]:
    problems = check_path(tree, result)
    nodes = tree.nodes
    p0 = [tuple(p) for p in cert.p0]
    for k, a in enumerate(p0):
        if a not in nodes:
            problems.append(f"P0 member {show(a)} not in tree")
        for b in p0[k + 1:]:
            if is_prefix(a, b) or is_prefix(b, a):
                problems.append(f"P0 members {show(a)} and {show(b)} are comparable")
    if len(set(p0)) != cert.b0:
        problems.append(f"|P0| = {len(set(p0))} but b0 = {cert.b0}")
    leaves = _scan_leaf_count(nodes)
    if cert.b0 != leaves:
        problems.append(f"b0 = {cert.b0} but the largest antichain has size {leaves}")
    if cert.b0 > c:
        problems.append(f"b0 = {cert.b0} exceeds c = {c}")
    if tuple(cert.pivot) not in p0:
        problems.append(f"pivot {show(cert.pivot)} not in P0")
    pivot = tuple(cert.pivot)
    if not (is_prefix(pivot, result.path) or is_prefix(result.path, pivot)):
        problems.append("path is not compatible with the pivot")
    return problems


def verify_ext(tree: TreeTruncation, result: PathPrefix, cert: EXTCertificate, c: int) -> list[str]:
    problems = check_path(tree, result)
    nodes = tree.nodes
    s = result.lookahead_used
    widths = [len(_scan_lookahead_level(nodes, n, s)) for n in range(result.requested_length + 1)]
    if max(widths) != cert.b0:
        problems.append(f"b0 = {cert.b0} but recomputed widths peak at {max(widths)}")
    if cert.b0 > c:
        problems.append(f"b0 = {cert.b0} exceeds c = {c}")
    w = cert.witness_level
    if not 0 <= w < len(widths) or widths[w] != cert.b0:
        problems.append(f"witness level {w} does not attain b0 = {cert.b0}")
    elif widths.index(cert.b0) != w:
        problems.append(f"witness level {w} is not the least level attaining b0")
    pivot = tuple(cert.pivot)
    if len(pivot) != w or not _scan_survives(nodes, pivot, s):
        problems.append(f"pivot {show(pivot)} not in the lookahead set of level {w}")
    if not is_prefix(pivot, result.path):
        problems.append("path does not extend the pivot")
    return problems


def verify_wbd(tree: TreeTruncation, result: PathPrefix, cert: WBDCertificate, c: int) -> list[str]:
    problems = check_path(tree, result)
    nodes = tree.nodes
    s = result.lookahead_used
    for n in range(tree.horizon + 1):
        width = sum(1 for v in nodes if len(v) == n)
        if width > c:
            problems.append(f"level {n} has width {width} > c = {c}")
    levels = list(cert.sampled_levels)
    tables = [[tuple(x) for x in t] for t in cert.leftmost_tables]
    if len(tables) != len(levels) or len(cert.selection) != len(levels):
        problems.append("sampled levels, tables and selection differ in length")
        return problems
    for m, table in zip(levels, tables):
        expect = _scan_lookahead_level(nodes, m, s)
        if table != expect:
            problems.append(f"table for level {m} is not the ordered lookahead set")
        if len(expect) != cert.b0:
            problems.append(f"level {m} has lookahead width {len(expect)} != b0 = {cert.b0}")
    if problems:
        return problems
    sel = list(cert.selection)
    if any(not 0 <= x < cert.b0 for x in sel):
        problems.append("selection entry out of range")
        return problems
    for j in range(len(sel)):
        for i in range(j + 1):
            if not is_prefix(tables[i][sel[i]], tables[j][sel[j]]):
                problems.append(f"chain condition fails between sampled levels {levels[i]} and {levels[j]}")
    if sel and not is_prefix(tuple(result.path), tables[-1][sel[-1]]):
        problems.append("path is not a prefix of the deepest selected string")
    return problems


def verify(tree: TreeTruncation, result: PathPrefix, cert: Certificate, c: int) -> list[str]:
    if isinstance(cert, PFCertificate):
        return verify_pf(tree, result, cert, c)
    if isinstance(cert, EXTCertificate):
        return verify_ext(tree, result, cert, c)
    return verify_wbd(tree, result, cert, c)
