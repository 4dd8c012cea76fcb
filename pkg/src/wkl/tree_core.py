"""Finite truncations of trees of sequences and the width measurements on them.

A tree is a prefix-closed set of tuples of naturals.  Infinite trees are
represented by their truncation at a depth ``horizon``; "the tree is
infinite" becomes "some node has length ``horizon``", and extendibility of a
node of length ``n`` becomes membership in the lookahead set
``T_s = {sigma : some node of length n + s extends sigma}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import (
    AlphabetViolation,
    HorizonExceeded,
    LevelBeyondHorizon,
    LookaheadBeyondHorizon,
    MissingRoot,
    NotPrefixClosed,
    RangeEmpty,
    ValidationError,
)
from .tables import FunctionTable

Seq = tuple  # tuple[int, ...]

ALPHABETS = {"binary": 2, "ternary": 3, "nat": None}

ROOT: Seq = ()


def shortlex(seq: Seq):
    """Sort key: shorter first, then pointwise."""
    return (len(seq), seq)


def is_prefix(a: Seq, b: Seq) -> bool:
    return len(a) <= len(b) and b[: len(a)] == a


def comparable(a: Seq, b: Seq) -> bool:
    return is_prefix(a, b) or is_prefix(b, a)


def seq(text) -> Seq:
    """Build a Seq from ``"0101"``, ``"-"``/``""`` (root) or an iterable of ints."""
    if isinstance(text, str):
        if text in ("", "-"):
            return ()
        if " " in text:
            return tuple(int(x) for x in text.split())
        return tuple(int(ch) for ch in text)
    return tuple(int(x) for x in text)


def show(s: Seq) -> str:
    return " ".join(map(str, s)) if s else "-"


def _check_nodes(nodes, horizon: int, alphabet: str) -> None:
    if alphabet not in ALPHABETS:
        raise ValidationError(f"unknown alphabet {alphabet!r}")
    if horizon < 0:
        raise ValidationError(f"negative horizon {horizon}")
    if ROOT not in nodes:
        raise MissingRoot()
    bound = ALPHABETS[alphabet]
    for node in sorted(nodes, key=shortlex):
        if any(x < 0 or (bound is not None and x >= bound) for x in node):
            raise AlphabetViolation(node, f"entries must lie in {alphabet}")
        if len(node) > horizon:
            raise HorizonExceeded(node, f"length {len(node)} > horizon {horizon}")
        if node and node[:-1] not in nodes:
            raise NotPrefixClosed(node, f"missing prefix {show(node[:-1])}")


@dataclass(frozen=True)
class TreeTruncation:
    nodes: frozenset
    horizon: int
    alphabet: str = "binary"

    def __post_init__(self):
        nodes = frozenset(tuple(int(x) for x in n) for n in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        _check_nodes(nodes, self.horizon, self.alphabet)

    def __contains__(self, node) -> bool:
        return tuple(node) in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    @cached_property
    def levels(self) -> dict:
        out = {n: [] for n in range(self.horizon + 1)}
        for node in self.nodes:
            out[len(node)].append(node)
        return {n: tuple(sorted(v)) for n, v in out.items()}

    @cached_property
    def children(self) -> dict:
        out = {node: [] for node in self.nodes}
        for node in self.nodes:
            if node:
                out[node[:-1]].append(node)
        return {k: tuple(sorted(v)) for k, v in out.items()}

    @cached_property
    def leaves(self) -> tuple:
        return tuple(sorted((n for n, ch in self.children.items() if not ch), key=shortlex))

    @property
    def depth(self) -> int:
        return max(len(n) for n in self.nodes)

    @property
    def branching(self) -> int:
        """Largest number of children of any node (the finite branching bound)."""
        return max(len(ch) for ch in self.children.values())

    def sorted_nodes(self) -> list:
        return sorted(self.nodes, key=shortlex)

    def has_extension_at(self, node: Seq, depth: int) -> bool:
        if depth < len(node) or depth > self.horizon:
            return False
        k = len(node)
        return any(t[:k] == node for t in self.levels[depth])


def validate_truncation(raw_nodes: Iterable, horizon: int, alphabet: str = "binary") -> TreeTruncation:
    return TreeTruncation(frozenset(tuple(n) for n in raw_nodes), horizon, alphabet)


def level_set(tree: TreeTruncation, n: int) -> tuple:
    if n > tree.horizon or n < 0:
        raise LevelBeyondHorizon(n, tree.horizon)
    return tree.levels[n]


def lookahead_extendible(tree: TreeTruncation, n: int, s: int) -> tuple:
    """Nodes of length n with an extension of length n + s, in lexicographic order."""
    if n + s > tree.horizon:
        raise LookaheadBeyondHorizon(n, s, tree.horizon)
    if s == 0:
        return level_set(tree, n)
    heads = {t[:n] for t in tree.levels[n + s]}
    return tuple(sorted(heads))


def subtree_leaf_counts(tree: TreeTruncation) -> dict:
    """f(v) = max(1, sum of f over children): the number of leaves below v."""
    f = {}
    for node in sorted(tree.nodes, key=shortlex, reverse=True):
        f[node] = max(1, sum(f[ch] for ch in tree.children[node]))
    return f


def max_antichain(tree: TreeTruncation) -> tuple[int, tuple]:
    """Largest prefix-free subset of the nodes, with a canonical witness.

    The size is f(root).  A maximum antichain picks exactly one node above
    each leaf among the nodes whose subtree holds a single leaf; taking the
    shallowest such node for every leaf gives the least witness when
    antichains are compared as shortlex-sorted node lists.
    """
    f = subtree_leaf_counts(tree)
    witness = [v for v in tree.nodes if f[v] == 1 and (not v or f[v[:-1]] > 1)]
    return f[ROOT], tuple(sorted(witness, key=shortlex))


@dataclass(frozen=True)
class LevelWidths:
    level_width: int
    ext_widths: dict = field(default_factory=dict)


@dataclass(frozen=True)
class WidthReport:
    per_level: dict
    max_antichain: int
    antichain_witness: tuple

    def lines(self) -> list[str]:
        out = [f"max_antichain {self.max_antichain}",
               "antichain_witness " + " | ".join(show(n) for n in self.antichain_witness)]
        for n, lw in sorted(self.per_level.items()):
            ext = " ".join(f"s{s}={w}" for s, w in sorted(lw.ext_widths.items()))
            out.append(f"level {n} width {lw.level_width}" + (f" ext {ext}" if ext else ""))
        return out


def width_profile(tree: TreeTruncation, lookaheads: Iterable[int]) -> WidthReport:
    """Level widths and lookahead widths; (n, s) pairs past the horizon are omitted."""
    lookaheads = sorted(set(lookaheads))
    per_level = {}
    for n in range(tree.horizon + 1):
        ext = {s: len(lookahead_extendible(tree, n, s)) for s in lookaheads if n + s <= tree.horizon}
        per_level[n] = LevelWidths(len(level_set(tree, n)), ext)
    size, witness = max_antichain(tree)
    return WidthReport(per_level, size, witness)


@dataclass(frozen=True)
class VsmallReport:
    passed: bool
    witness: int | None
    checked: tuple  # (m, f(m), lookahead, width) rows
    violations: tuple  # (candidate n, least violating m >= n)

    def lines(self) -> list[str]:
        out = [f"vsmall {'pass' if self.passed else 'fail'}"]
        if self.passed:
            out.append(f"witness_n {self.witness}")
        for n, m in self.violations:
            out.append(f"violation n={n} m={m}")
        for m, fm, s, w in self.checked:
            out.append(f"m {m} f {fm} lookahead {s} width {w} {'ok' if w < m else 'bad'}")
        return out


def vsmall_check(tree: TreeTruncation, f: FunctionTable, start_bound: int) -> VsmallReport:
    """Desk version of very-smallness along ``f``.

    Each m in the table's domain with f(m) <= horizon is checked at the
    largest feasible lookahead, horizon - f(m).  Passes with the least
    n <= start_bound such that every checked m >= n has width < m.
    """
    rows = []
    for m in range(f.domain_horizon):
        level = f(m)
        if level > tree.horizon:
            continue
        s = tree.horizon - level
        rows.append((m, level, s, len(lookahead_extendible(tree, level, s))))
    if not rows:
        raise RangeEmpty()
    bad = [m for m, _, _, w in rows if not w < m]
    violations = []
    for n in range(start_bound + 1):
        later = [m for m in bad if m >= n]
        if not later:
            return VsmallReport(True, n, tuple(rows), tuple(violations))
        violations.append((n, later[0]))
    return VsmallReport(False, None, tuple(rows), tuple(violations))


def is_path_prefix(tree: TreeTruncation, sigma: Seq) -> bool:
    return tuple(sigma) in tree.nodes
