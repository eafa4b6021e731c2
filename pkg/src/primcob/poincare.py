"""Rational Poincare series of BSO(n), CP^m, HP^m and Thom spaces.

Only graded ranks are tracked; every torsion class is dropped.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_DEGREE = 64


@dataclass(frozen=True)
class GeneratorSet:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"generator degrees must be positive: {self.degrees}")


@dataclass(frozen=True)
class PoincareSeries:
    ranks: tuple[int, ...]

    @property
    def truncation_degree(self) -> int:
        return len(self.ranks) - 1

    def rank(self, d) -> int:
        """Rank in degree d; zero for negative or non-integral d.

        Raises IndexError above the truncation degree, since the value there
        is not known.
        """
        if int(d) != d or d < 0:
            return 0
        d = int(d)
        if d > self.truncation_degree:
            raise IndexError(f"degree {d} is beyond the truncation degree {self.truncation_degree}")
        return self.ranks[d]

    def nonzero_degrees(self) -> list[int]:
        return [d for d, r in enumerate(self.ranks) if r]

    def total_rank(self, upto: int | None = None) -> int:
        upto = self.truncation_degree if upto is None else upto
        return sum(self.ranks[: upto + 1])


@dataclass(frozen=True)
class CellComplexSeries(PoincareSeries):
    pass


def series_from_generators(g: GeneratorSet, D: int) -> PoincareSeries:
    """Count monomials of each total degree in free commutative generators."""
    if D < 0:
        raise ValueError("truncation degree must be nonnegative")
    ranks = [1] + [0] * D
    # multiply by 1/(1 - x^d) one generator at a time
    for d in g.degrees:
        for n in range(d, D + 1):
            ranks[n] += ranks[n - d]
    return PoincareSeries(tuple(ranks))


def bso_generators(n: int) -> GeneratorSet:
    """Degrees of polynomial generators of H*(BSO(n); Q).

    For n = 2m the Euler class (degree 2m) replaces the top Pontryagin class.
    """
    if n < 2:
        raise ValueError(f"BSO(n) needs n >= 2, got {n}")
    m, odd = divmod(n, 2)
    if odd:
        return GeneratorSet(tuple(4 * i for i in range(1, m + 1)))
    return GeneratorSet(tuple(4 * i for i in range(1, m)) + (2 * m,))


def bso_series(n: int, D: int = DEFAULT_DEGREE) -> PoincareSeries:
    return series_from_generators(bso_generators(n), D)


def thom_shift(s: PoincareSeries, shift: int) -> PoincareSeries:
    """Rational Thom isomorphism: shift ranks up by the bundle's real rank."""
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    if shift > s.truncation_degree:
        raise ValueError(f"shift {shift} exceeds truncation degree {s.truncation_degree}")
    return type(s)((0,) * shift + s.ranks[: len(s.ranks) - shift])


def projective_space_series(kind: str, m, D: int = DEFAULT_DEGREE) -> CellComplexSeries:
    """One cell in each of the degrees 0, c, 2c, ..., mc (c = 2 or 4).

    ``m`` may be ``math.inf`` (or None) for the infinite projective space.
    """
    try:
        c = {"complex": 2, "quaternionic": 4}[kind]
    except KeyError:
        raise ValueError(f"unknown projective space kind {kind!r}") from None
    if D < 0:
        raise ValueError("truncation degree must be nonnegative")
    top = D if m is None or m == math.inf else min(D, c * m)
    if top < 0:
        raise ValueError("projective space dimension must be nonnegative")
    return CellComplexSeries(tuple(1 if d % c == 0 and d <= top else 0 for d in range(D + 1)))
