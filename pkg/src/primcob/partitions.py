"""Partitions of m into parts between 1 and t.

``count_bounded_partitions`` accepts any rational ``m``: a non-integral or
negative argument has no partitions, so expressions such as ``(j - k)/4`` can
be passed in unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

ENUMERATION_LIMIT = 60
DP_LIMIT = 10_000


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True)
class PartitionQuery:
    m: Fraction
    t: int

    def __post_init__(self):
        if self.t < 0:
            raise ValueError(f"maximum part must be nonnegative, got t={self.t}")
        object.__setattr__(self, "m", Fraction(self.m))

    def integral_m(self):
        """``m`` as an int, or None when it is not a nonnegative integer."""
        if self.m.denominator != 1 or self.m < 0:
            return None
        return int(self.m)


@lru_cache(maxsize=None)
def _table(t: int, upto: int) -> tuple[int, ...]:
    # p_{<=t}(n) for n = 0..upto, built one part size at a time
    row = [1] + [0] * upto
    for part in range(1, t + 1):
        for n in range(part, upto + 1):
            row[n] += row[n - part]
    return tuple(row)


def _table_size(m: int) -> int:
    # round up so neighbouring queries share one cached row
    size = 64
    while size < m:
        size *= 2
    return size


def count_bounded_partitions(q: PartitionQuery | Rational | int, t: int | None = None,
                             limit: int = DP_LIMIT) -> int:
    """Number of multisets of integers in [1, t] summing to m.

    Call either as ``count_bounded_partitions(PartitionQuery(m, t))`` or as
    ``count_bounded_partitions(m, t)``.
    """
    if not isinstance(q, PartitionQuery):
        if t is None:
            raise TypeError("t is required when m is passed directly")
        q = PartitionQuery(q, t)
    m = q.integral_m()
    if m is None:
        return 0
    if m > limit:
        raise SizeLimitError(f"m={m} exceeds the table limit {limit}")
    return _table(min(q.t, m), _table_size(m))[m]


def enumerate_bounded_partitions(m: int, t: int) -> list[list[int]]:
    """All nonincreasing lists of parts in [1, t] summing to m."""
    if m < 0 or t < 0:
        raise ValueError("m and t must be nonnegative")
    if m > ENUMERATION_LIMIT:
        raise SizeLimitError(f"enumeration is limited to m <= {ENUMERATION_LIMIT}, got {m}")
    out = []

    def extend(prefix, remaining, largest):
        if remaining == 0:
            out.append(list(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], m, t)
    return out
