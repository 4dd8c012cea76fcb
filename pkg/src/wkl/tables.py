"""Finite tables standing in for bounded formulas and number-theoretic functions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParams


@dataclass(frozen=True)
class PredicateTable:
    """A bounded relation theta(m, i) given by the pairs on which it holds.

    Pairs outside ``true_pairs`` are false.  Only ``m < m_horizon`` and
    ``i < i_horizon`` are meaningful.
    """

    true_pairs: frozenset = field(default_factory=frozenset)
    m_horizon: int = 0
    i_horizon: int = 0

    def __post_init__(self):
        pairs = frozenset((int(m), int(i)) for m, i in self.true_pairs)
        object.__setattr__(self, "true_pairs", pairs)
        for m, i in pairs:
            if not (0 <= m < self.m_horizon and 0 <= i < self.i_horizon):
                raise InvalidParams(
                    f"pair ({m}, {i}) outside horizons ({self.m_horizon}, {self.i_horizon})"
                )

    def __call__(self, m: int, i: int) -> bool:
        return (m, i) in self.true_pairs

    @classmethod
    def from_rule(cls, rule, m_horizon: int, i_horizon: int) -> "PredicateTable":
        pairs = {(m, i) for m in range(m_horizon) for i in range(i_horizon) if rule(m, i)}
        return cls(frozenset(pairs), m_horizon, i_horizon)

    def stabilization_bound(self) -> int:
        """Largest m occurring in the table plus one (0 for the empty table)."""
        return max((m for m, _ in self.true_pairs), default=-1) + 1

    def exists_before(self, m: int, i: int) -> bool:
        return any(self(k, i) for k in range(min(m, self.m_horizon)))

    def forall_before(self, m: int, i: int) -> bool:
        return all(self(k, i) for k in range(m))


@dataclass(frozen=True)
class FunctionTable:
    """A function on ``[0, domain_horizon)``; ``range_bound`` None means unbounded."""

    values: dict
    domain_horizon: int
    range_bound: int | None = None

    def __post_init__(self):
        vals = {int(x): int(v) for x, v in self.values.items()}
        object.__setattr__(self, "values", vals)
        missing = [x for x in range(self.domain_horizon) if x not in vals]
        if missing:
            raise InvalidParams(f"function table not total: no value at {missing[0]}")
        for x, v in sorted(vals.items()):
            if v < 0:
                raise InvalidParams(f"negative value {v} at {x}")
            if self.range_bound is not None and v >= self.range_bound:
                raise InvalidParams(f"value {v} at {x} not below range bound {self.range_bound}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    @classmethod
    def from_list(cls, values, range_bound: int | None = None) -> "FunctionTable":
        values = list(values)
        return cls(dict(enumerate(values)), len(values), range_bound)

    def __hash__(self):
        return hash((tuple(sorted(self.values.items())), self.domain_horizon, self.range_bound))
