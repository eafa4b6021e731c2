"""Ranks of homotopy groups of the prim classifying spaces and of the
cobordism groups they classify.

Oriented case, codimension k, singularity bound r, B = BSO(k+1):

* k odd:  rk pi_j = rk H_{j-k}(B) - rk H_{j+1-(r+2)(k+1)}(B)
* k even: rk pi_j = rk H_{j+2-(r+2)(k+1)}(B) + rk H_{j-k}(B)

Quaternionic case (k = 3): the classifying space is rationally
S^3 x S^7 x ... x S^{4r+3}.

The closed partition-count formula printed alongside these chains is kept as
``corollary_eval`` and only compared against them, never substituted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .partitions import count_bounded_partitions
from .poincare import bso_series

ORIENTED = "oriented"
QUATERNIONIC = "quaternionic"

_FLAVOR_ALIASES = {
    "oriented": ORIENTED, "so": ORIENTED,
    "quaternionic": QUATERNIONIC, "sp": QUATERNIONIC,
}
_UNSUPPORTED = {"unoriented", "o"}


class UnsupportedFlavorError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class BettiFormatError(ValueError):
    pass


def normalize_flavor(flavor: str) -> str:
    key = flavor.strip().lower()
    if key in _UNSUPPORTED:
        raise UnsupportedFlavorError(
            f"flavor {flavor!r}: unoriented ranks are not specified by the underlying "
            "derivation; only 'oriented' (so) and 'quaternionic' (sp) are available")
    try:
        return _FLAVOR_ALIASES[key]
    except KeyError:
        raise UnsupportedFlavorError(f"unknown flavor {flavor!r}") from None


@dataclass(frozen=True)
class RankQuery:
    flavor: str
    k: int
    r: int
    j: int

    def __post_init__(self):
        object.__setattr__(self, "flavor", normalize_flavor(self.flavor))
        if self.flavor == QUATERNIONIC and self.k != 3:
            raise ValueError(f"the quaternionic case has codimension 3, got k={self.k}")
        if self.k < 1 or self.r < 0 or self.j < 1:
            raise ValueError(f"need k >= 1, r >= 0, j >= 1; got {self}")

    def evaluate(self) -> int:
        if self.flavor == QUATERNIONIC:
            return rank_pi_quaternionic(self.r, self.j)
        return rank_pi_oriented(self.k, self.r, self.j)


@lru_cache(maxsize=256)
def _bso(n: int, D: int):
    return bso_series(n, D)


def bso_rank(n: int, d: int) -> int:
    """rk H_d(BSO(n); Q), zero in negative degrees."""
    if d < 0:
        return 0
    D = 64
    while D < d:
        D *= 2
    return _bso(n, D).rank(d)


def rank_pi_oriented(k: int, r: int, j: int) -> int:
    if k < 1 or r < 0 or j < 1:
        raise ValueError(f"need k >= 1, r >= 0, j >= 1; got k={k}, r={r}, j={j}")
    n = k + 1
    if k % 2:
        top = bso_rank(n, j - k)
        sub = bso_rank(n, j + 1 - (r + 2) * n)
        # multiplication by e^{r+1} embeds the subtracted group into the first
        assert top >= sub, (k, r, j, top, sub)
        return top - sub
    return bso_rank(n, j + 2 - (r + 2) * n) + bso_rank(n, j - k)


def rank_pi_quaternionic(r: int, j: int) -> int:
    if r < 0 or j < 1:
        raise ValueError(f"need r >= 0, j >= 1; got r={r}, j={j}")
    return 1 if j % 4 == 3 and j <= 4 * r + 3 else 0


@dataclass(frozen=True)
class RankProfile:
    """rk pi_j for j = 1..max_degree; ``profile[j]`` indexes by degree."""
    ranks: tuple[int, ...]
    flavor: str = ORIENTED
    k: int = 0
    r: int = 0

    @property
    def max_degree(self) -> int:
        return len(self.ranks)

    def __getitem__(self, j: int) -> int:
        if not 1 <= j <= self.max_degree:
            raise IndexError(f"degree {j} outside 1..{self.max_degree}")
        return self.ranks[j - 1]

    def nonzero_degrees(self) -> list[int]:
        return [j for j, v in enumerate(self.ranks, start=1) if v]

    def to_dict(self) -> dict:
        return {"flavor": self.flavor, "k": self.k, "r": self.r, "max_degree": self.max_degree,
                "ranks": {str(j): v for j, v in enumerate(self.ranks, start=1)}}


def rank_profile(flavor: str, k: int | None, r: int, J: int) -> RankProfile:
    flavor = normalize_flavor(flavor)
    if J < 1:
        raise ValueError("max degree must be at least 1")
    if flavor == QUATERNIONIC:
        if k not in (None, 3):
            raise ValueError(f"the quaternionic case has codimension 3, got k={k}")
        return RankProfile(tuple(rank_pi_quaternionic(r, j) for j in range(1, J + 1)),
                           flavor, 3, r)
    if k is None:
        raise ValueError("the oriented flavor needs a codimension k")
    return RankProfile(tuple(rank_pi_oriented(k, r, j) for j in range(1, J + 1)), flavor, k, r)


@dataclass(frozen=True)
class BettiVector:
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        if not self.b:
            raise BettiFormatError("Betti vector must contain at least b_0")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in self.b):
            raise BettiFormatError(f"Betti numbers must be nonnegative integers: {self.b}")

    @property
    def dimension(self) -> int:
        return len(self.b) - 1

    @classmethod
    def from_json(cls, obj) -> "BettiVector":
        """Parse ``{"dimension": d, "betti": [b0, ..., bd]}``."""
        if not isinstance(obj, dict) or "betti" not in obj or "dimension" not in obj:
            raise BettiFormatError('expected an object with "dimension" and "betti" keys')
        betti, dim = obj["betti"], obj["dimension"]
        if not isinstance(betti, list) or not isinstance(dim, int) or isinstance(dim, bool):
            raise BettiFormatError('"betti" must be a list and "dimension" an integer')
        if len(betti) != dim + 1:
            raise BettiFormatError(f"dimension {dim} needs {dim + 1} Betti numbers, got {len(betti)}")
        return cls(tuple(betti))

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "betti": list(self.b)}


def cobordism_breakdown(profile: RankProfile, betti: BettiVector) -> list[tuple[int, int, int]]:
    """(j, b_j, rk pi_j) for 1 <= j <= dim P."""
    if betti.dimension > profile.max_degree:
        raise DimensionMismatchError(
            f"target dimension {betti.dimension} exceeds profile range {profile.max_degree}")
    return [(j, betti.b[j], profile[j]) for j in range(1, betti.dimension + 1)]


def cobordism_rank(profile: RankProfile, betti: BettiVector) -> int:
    """Rank of [P, X] from the rational splitting into Eilenberg-MacLane spaces.

    The degree-0 Betti number does not contribute.
    """
    return sum(b * rk for _, b, rk in cobordism_breakdown(profile, betti))


def corollary_eval(k: int, r: int, j: int) -> int:
    """The closed partition formula, evaluated term by term as printed."""
    if k < 1:
        raise ValueError("k must be positive")
    F = Fraction
    n = (r + 2) * (k + 1)
    if k % 2:
        t = (k - 1) // 2
        return (count_bounded_partitions(F(j - k, 4), t)
                + count_bounded_partitions(F(j - 2 * k - 1, 4), t)
                - count_bounded_partitions(F(j + 1 - n, 4), t)
                + count_bounded_partitions(F(j - k - n, 4), t))
    t = k // 2
    return count_bounded_partitions(F(j - k, 4), t) + count_bounded_partitions(F(j + 2 - n, 4), t)


@dataclass
class ComparatorReport:
    k: int
    r: int
    max_degree: int
    rows: list[tuple[int, int, int, bool]] = field(default_factory=list)

    @property
    def disagreements(self) -> list[int]:
        return [j for j, _, _, ok in self.rows if not ok]

    @property
    def first_disagreement(self):
        bad = self.disagreements
        return bad[0] if bad else None

    def summary(self) -> str:
        bad = self.disagreements
        if not bad:
            return "0 disagreements"
        j, derived, printed, _ = self.rows[bad[0] - 1]
        return (f"{len(bad)} disagreement{'s' if len(bad) != 1 else ''}; first at j={j} "
                f"(derived {derived}, printed {printed})")

    def to_dict(self) -> dict:
        return {
            "k": self.k, "r": self.r, "max_degree": self.max_degree,
            "rows": [{"j": j, "derived": d, "printed": p, "agree": ok} for j, d, p, ok in self.rows],
            "disagreements": self.disagreements,
            "first_disagreement": self.first_disagreement,
            "summary": self.summary(),
        }


def corollary_compare(k: int, r: int, Jmax: int) -> ComparatorReport:
    if Jmax < 1:
        raise ValueError("max degree must be at least 1")
    report = ComparatorReport(k, r, Jmax)
    for j in range(1, Jmax + 1):
        derived, printed = rank_pi_oriented(k, r, j), corollary_eval(k, r, j)
        report.rows.append((j, derived, printed, derived == printed))
    return report
