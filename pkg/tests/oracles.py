"""Brute-force reference computations used only by the tests."""

from itertools import product


def prefix(a, b):
    return len(a) <= len(b) and tuple(b[: len(a)]) == tuple(a)


def all_antichains(nodes):
    """Every prefix-free subset of ``nodes`` (exhaustive include/exclude search)."""
    order = sorted(nodes, key=lambda s: (len(s), s))
    out = []

    def go(k, chosen):
        if k == len(order):
            out.append(tuple(chosen))
            return
        go(k + 1, chosen)
        x = order[k]
        if not any(prefix(c, x) or prefix(x, c) for c in chosen):
            go(k + 1, chosen + [x])

    go(0, [])
    return out


def brute_max_antichain(nodes):
    """(size, least maximum antichain as a shortlex-sorted tuple)."""
    key = lambda s: (len(s), s)
    best = max(len(a) for a in all_antichains(nodes))
    winners = [tuple(sorted(a, key=key)) for a in all_antichains(nodes) if len(a) == best]
    return best, min(winners, key=lambda a: [key(x) for x in a])


def brute_max_antichain_size_by_subsets(nodes):
    """Plain 2^N subset scan; only for very small trees."""
    nodes = list(nodes)
    best = 0
    for mask in range(1 << len(nodes)):
        pick = [nodes[k] for k in range(len(nodes)) if mask >> k & 1]
        if all(not (prefix(a, b) or prefix(b, a)) for i, a in enumerate(pick) for b in pick[i + 1:]):
            best = max(best, len(pick))
    return best


def brute_lookahead(nodes, n, s):
    """Nodes of length n with some node of length n + s above them."""
    return sorted(
        v for v in nodes if len(v) == n and any(len(t) == n + s and prefix(v, t) for t in nodes)
    )


def up_tree_members(theta_pairs, m_top, length):
    """Length-`length` strings sigma with some m in (length, m_top] such that
    sigma(i) = 1 iff (m', i) is a true pair for some m' < m."""
    out = set()
    for m in range(length + 1, m_top + 1):
        out.add(tuple(int(any((k, i) in theta_pairs for k in range(m))) for i in range(length)))
    return sorted(out)


def level_width_tree_members(theta, c, m_top, length):
    """Length-`length` binary strings satisfying the bounded-width formula,
    found by scanning all 2^length candidates."""
    out = []
    for sigma in product((0, 1), repeat=length):
        for m in range(length + 1, m_top + 1):
            ones = [int(all(theta(k, i) for k in range(m))) for i in range(length)]
            if list(sigma) == ones and sum(ones) <= c:
                out.append(sigma)
                break
    return out
