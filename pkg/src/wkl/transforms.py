"""Tree constructions: enumerated trees, their N-branching interpretation,
the unique-path tree of an r.e. set, the width-c padding transform and the
two counterexample generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BoundNotAchievable,
    DepthUnrealizable,
    InvalidBound,
    InvalidParams,
    NotInHatTree,
    NotPrefixClosed,
    ValidationError,
)
from .tables import FunctionTable, PredicateTable
from .tree_core import (
    ROOT,
    Seq,
    TreeTruncation,
    is_prefix,
    lookahead_extendible,
)


@dataclass(frozen=True)
class EnumeratedTree:
    """A staged enumeration sigma_0, sigma_1, ... of the nodes of a tree.

    Repeated emissions are dropped (first one wins), so position ``i`` in
    ``sequence`` is the enumeration index of a distinct string.  Every
    node's parent must be emitted at the same or an earlier stage.
    """

    stages: tuple
    horizon: int
    alphabet: str = "binary"

    def __post_init__(self):
        seen = {}
        kept = []
        last_stage = None
        for stage, node in self.stages:
            stage, node = int(stage), tuple(int(x) for x in node)
            if last_stage is not None and stage < last_stage:
                raise ValidationError(f"stage {stage} listed after stage {last_stage}")
            last_stage = stage
            if node in seen:
                continue
            if node and node[:-1] not in seen:
                raise NotPrefixClosed(node, f"emitted at stage {stage} before its parent")
            seen[node] = stage
            kept.append((stage, node))
        object.__setattr__(self, "stages", tuple(kept))
        self.accumulate()

    @classmethod
    def from_sequence(cls, nodes: Iterable, horizon: int, alphabet: str = "binary") -> "EnumeratedTree":
        return cls(tuple((i, tuple(n)) for i, n in enumerate(nodes)), horizon, alphabet)

    @property
    def sequence(self) -> tuple:
        return tuple(node for _, node in self.stages)

    def accumulate(self, through_stage: int | None = None) -> TreeTruncation:
        nodes = {n for st, n in self.stages if through_stage is None or st <= through_stage}
        return TreeTruncation(frozenset(nodes), self.horizon, self.alphabet)


def in_hat(enum: EnumeratedTree, tau: Seq) -> bool:
    """Direct evaluation of the membership formula for the interpreted tree."""
    seqs = enum.sequence
    if any(k < 0 or k >= len(seqs) for k in tau):
        return False
    for j in range(len(tau)):
        for i in range(j + 1):
            if len(seqs[tau[i]]) != i or not is_prefix(seqs[tau[i]], seqs[tau[j]]):
                return False
    return True


def hat_interpret(enum: EnumeratedTree, depth: int) -> TreeTruncation:
    """The N-branching tree whose nodes are index chains of enumerated strings.

    tau is a node iff sigma_{tau(i)} has length i and the strings
    sigma_{tau(0)}, sigma_{tau(1)}, ... form a chain under extension.
    """
    seqs = enum.sequence
    by_length: dict = {}
    for k, s in enumerate(seqs):
        by_length.setdefault(len(s), []).append(k)
    if depth >= 1 and not by_length.get(depth - 1):
        raise DepthUnrealizable(depth)
    nodes = {ROOT}
    frontier = [ROOT]
    for length in range(depth):
        grown = []
        for tau in frontier:
            for k in by_length.get(length, ()):
                if not tau or is_prefix(seqs[tau[-1]], seqs[k]):
                    grown.append(tau + (k,))
        nodes.update(grown)
        frontier = grown
    return TreeTruncation(frozenset(nodes), depth, "nat")


def project_hat_path(enum: EnumeratedTree, tau: Seq) -> Seq:
    tau = tuple(tau)
    if not in_hat(enum, tau):
        raise NotInHatTree(tau)
    return enum.sequence[tau[-1]] if tau else ROOT


def limit_characteristic(theta: PredicateTable, length: int) -> Seq:
    """Characteristic string of {i : theta(m, i) for some m} on [0, length)."""
    return tuple(1 if theta.exists_before(theta.m_horizon, i) else 0 for i in range(length))


def unique_path_tree(theta: PredicateTable, horizon: int) -> EnumeratedTree:
    """Binary tree whose only extendible branch is the set enumerated by theta.

    At stage m >= 1 the approximation sigma_m(i) = 1 iff theta(m', i) for some
    m' < m is emitted, cut to length min(m - 1, horizon), with its prefixes.
    The cut enforces m > length.
    """
    if theta.i_horizon < horizon:
        raise InvalidParams(f"table covers i < {theta.i_horizon}, need {horizon}")
    emissions = []
    for m in range(1, max(theta.m_horizon, horizon + 1) + 1):
        cut = min(m - 1, horizon)
        approx = tuple(1 if theta.exists_before(m, i) else 0 for i in range(cut))
        emissions.extend((m, approx[:k]) for k in range(cut + 1))
    return EnumeratedTree(tuple(emissions), horizon, "binary")


@dataclass(frozen=True)
class PaddingSchedule:
    c: int
    entries: tuple
    source_horizon: int

    def __post_init__(self):
        prev = 0
        for s in self.entries:
            if s <= prev:
                raise ValidationError(f"schedule not strictly increasing above 0: {self.entries}")
            prev = s

    @property
    def top(self) -> int:
        """Length of the longest padded string."""
        return self.entries[-1] if self.entries else 0

    def revealed_below(self, length: int) -> int:
        return sum(1 for s in self.entries if s < length)


def padding_schedule(tree: TreeTruncation, c: int, max_levels: int | None = None) -> PaddingSchedule:
    """s_n = least s > s_{n-1} with |T_s^{=n}| <= c and n + s within the horizon.

    With ``max_levels`` None, levels are added until the horizon leaves no
    candidate lookahead; a level whose candidates all exceed c is an error
    either way.
    """
    if c < 1:
        raise InvalidBound(c)
    entries = []
    prev = 0
    n = 0
    while max_levels is None or n < max_levels:
        candidates = range(prev + 1, tree.horizon - n + 1)
        if not candidates and max_levels is None:
            break
        found = next((s for s in candidates if len(lookahead_extendible(tree, n, s)) <= c), None)
        if found is None:
            raise BoundNotAchievable(n, c)
        entries.append(found)
        prev = found
        n += 1
    return PaddingSchedule(c, tuple(entries), tree.horizon)


def _pad(sigma: Seq, entries: tuple, length: int) -> Seq:
    where = {s: j for j, s in enumerate(entries)}
    return tuple(sigma[where[p]] if p in where else 2 for p in range(length))


def pad_to_narrow(tree: TreeTruncation, c: int, max_levels: int | None = None) -> tuple[TreeTruncation, PaddingSchedule]:
    """Ternary tree of width <= c whose branches code branches of ``tree``.

    Position s_n of a padded string carries sigma(n); every other position
    carries 2.  A padded string of length L with m scheduled positions below
    L is kept iff its revealed sigma (length m) lies in T_{s_m}^{=m}, which
    holds at most c strings.  Lengths run up to s_{K-1} for K levels.
    """
    if tree.alphabet != "binary":
        raise ValidationError(f"padding needs a binary tree, got {tree.alphabet}")
    sched = padding_schedule(tree, c, max_levels)
    entries = sched.entries
    survivors = {m: lookahead_extendible(tree, m, s) for m, s in enumerate(entries)}
    nodes = {ROOT}
    for length in range(1, sched.top + 1):
        m = sched.revealed_below(length)
        for sigma in survivors[m]:
            nodes.add(_pad(sigma, entries, length))
    return TreeTruncation(frozenset(nodes), sched.top, "ternary"), sched


def strip_twos(tau: Seq) -> Seq:
    return tuple(x for x in tau if x != 2)


def leftmost_deepest(tree: TreeTruncation) -> Seq:
    """Lexicographically least node of maximal length."""
    return tree.levels[tree.depth][0]


def cex_prefix_free(h: FunctionTable, horizon: int) -> EnumeratedTree:
    """Enumerate {1^x 0^y : h(y') = x for some y' >= y}, downward closed.

    Stage n emits 1^a for a <= h(n) and 1^h(n) 0^y for y <= n.
    """
    if h.range_bound is None:
        raise InvalidParams("cex-pf needs a bounded function h: N -> b")
    if h.domain_horizon < horizon:
        raise InvalidParams(f"h defined on [0, {h.domain_horizon}), need [0, {horizon})")
    emissions = []
    for n in range(horizon):
        x = h(n)
        emissions.extend((n, (1,) * a) for a in range(x + 1))
        emissions.extend((n, (1,) * x + (0,) * y) for y in range(n + 1))
    depth = max((h(n) + n for n in range(horizon)), default=0)
    return EnumeratedTree(tuple(emissions), depth, "binary")


def cex_level_width(theta: PredicateTable, c: int, horizon: int) -> EnumeratedTree:
    """Enumerate strings sigma for which some stage m > lh(sigma) has
    sigma(i) = 1 iff theta(m', i) for all m' < m, with at most c ones.

    Stages run over 1..m_horizon, the range on which the table is meaningful.
    """
    if c < 1:
        raise InvalidBound(c)
    if theta.m_horizon < horizon + 1 or theta.i_horizon < horizon:
        raise InvalidParams(
            f"table horizons ({theta.m_horizon}, {theta.i_horizon}) too small for horizon {horizon}"
        )
    emissions = []
    for m in range(1, theta.m_horizon + 1):
        cut = min(m - 1, horizon)
        approx = tuple(1 if theta.forall_before(m, i) else 0 for i in range(cut))
        for k in range(cut + 1):
            if sum(approx[:k]) > c:
                break
            emissions.append((m, approx[:k]))
    return EnumeratedTree(tuple(emissions), horizon, "binary")


def level_widths(tree: TreeTruncation) -> list[int]:
    return [len(tree.levels[n]) for n in range(tree.horizon + 1)]

