"""Named fixture trees and seeded random generators.

Random choices come from a 64-bit linear congruential generator with
Knuth's MMIX constants,

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64,

returning the top 31 bits of the new state.  ``below(n)`` is that value
mod n.  The scheme is fixed so generated fixtures reproduce exactly.
"""

from __future__ import annotations

from .errors import InvalidParams
from .tables import FunctionTable, PredicateTable
from .tree_core import TreeTruncation

_MUL = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (_MUL * self.state + _INC) & _MASK
        return self.state >> 33

    def below(self, n: int) -> int:
        return self.next() % n


def _closure(strings) -> frozenset:
    nodes = {()}
    for s in strings:
        s = tuple(s)
        nodes.update(s[:k] for k in range(len(s) + 1))
    return frozenset(nodes)


def comb(depth: int = 6) -> TreeTruncation:
    """The spine 0^depth with a one-step tooth 0^k 1 at every k < depth."""
    nodes = {(0,) * k for k in range(depth + 1)} | {(0,) * k + (1,) for k in range(depth)}
    return TreeTruncation(frozenset(nodes), depth, "binary")


def twochain(depth: int = 6) -> TreeTruncation:
    nodes = {(0,) * k for k in range(depth + 1)} | {(1,) * k for k in range(depth + 1)}
    return TreeTruncation(frozenset(nodes), depth, "binary")


def chain(depth: int, bit: int = 1) -> TreeTruncation:
    return TreeTruncation(frozenset((bit,) * k for k in range(depth + 1)), depth, "binary")


def fullbinary(depth: int) -> TreeTruncation:
    nodes = {()}
    frontier = [()]
    for _ in range(depth):
        frontier = [s + (b,) for s in frontier for b in (0, 1)]
        nodes.update(frontier)
    return TreeTruncation(frozenset(nodes), depth, "binary")


def vee() -> TreeTruncation:
    return TreeTruncation(frozenset({(), (0,), (1,), (0, 0), (0, 1)}), 2, "binary")


def random_tree(max_nodes: int, seed: int, arity: int = 2) -> TreeTruncation:
    """Random tree with between 1 and ``max_nodes`` nodes, grown leafward.

    The horizon is the depth of the result.
    """
    if max_nodes < 1 or arity < 1:
        raise InvalidParams("need max_nodes >= 1 and arity >= 1")
    rng = Lcg(seed)
    target = 1 + rng.below(max_nodes)
    nodes = [()]
    present = {()}
    attempts = 0
    while len(nodes) < target and attempts < 50 * max_nodes:
        attempts += 1
        parent = nodes[rng.below(len(nodes))]
        child = parent + (rng.below(arity),)
        if child not in present:
            present.add(child)
            nodes.append(child)
    alphabet = {2: "binary", 3: "ternary"}.get(arity, "nat")
    depth = max(len(n) for n in nodes)
    return TreeTruncation(frozenset(nodes), depth, alphabet)


def bristled_chains(k: int, depth: int, seed: int, bristle: int = 3) -> TreeTruncation:
    """k distinct branches of length ``depth`` with finite side bristles.

    A bristle leaves a branch at some level n0 through the child that is on
    no branch and runs for at most ``bristle`` nodes, so no bristle node has
    an extension ``bristle`` levels deeper.  Hence the lookahead width is at
    most k at every level once the lookahead reaches ``bristle``.
    """
    if k < 1 or depth < 1 or bristle < 1 or k > 2 ** depth:
        raise InvalidParams(f"bad bristled-chains parameters k={k} depth={depth} bristle={bristle}")
    rng = Lcg(seed)
    branches: list = []
    while len(branches) < k:
        b = tuple(rng.below(2) for _ in range(depth))
        if b not in branches:
            branches.append(b)
    spine = _closure(branches)
    nodes = set(spine)
    for b in branches:
        for n0 in range(depth - 1):
            if rng.below(3):
                continue
            side = b[:n0] + (1 - b[n0],)
            if side in spine:
                continue
            length = min(1 + rng.below(bristle), depth - n0)
            node = side
            nodes.add(node)
            for _ in range(length - 1):
                node = node + (rng.below(2),)
                nodes.add(node)
    return TreeTruncation(frozenset(nodes), depth, "binary")


def random_predicate_table(seed: int, m_horizon: int, i_horizon: int, density: int = 4) -> PredicateTable:
    """Random theta with roughly one pair in ``density`` true."""
    rng = Lcg(seed)
    pairs = {(m, i) for m in range(m_horizon) for i in range(i_horizon) if rng.below(density) == 0}
    return PredicateTable(frozenset(pairs), m_horizon, i_horizon)


def random_function_table(seed: int, length: int, bound: int) -> FunctionTable:
    rng = Lcg(seed)
    return FunctionTable.from_list([rng.below(bound) for _ in range(length)], bound)


def staircase_theta(i_horizon: int, delay: int = 3) -> PredicateTable:
    """theta(m, i) iff i is even and m = i + delay."""
    pairs = {(i + delay, i) for i in range(0, i_horizon, 2)}
    return PredicateTable(frozenset(pairs), i_horizon + delay + 1, i_horizon)
