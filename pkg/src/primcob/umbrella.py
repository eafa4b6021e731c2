"""Exact checks on the Whitney umbrella R^4 -> R^7 and its lift to an embedding in R^8.

    (x, t1, t2, t3) -> (t1, t2, t3, t1 x, t2 x, t3 x, x^2)      [+ z5 = x for the lift]

Target coordinates are ordered (y1, y2, y3, z1, z2, z3, z4, z5); the vertical
direction of the lift is the last one.  Every rank, projection and zero-set
decision is made over Q.  Floats appear only in the normalized framing.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import exact

DEFAULT_HEIGHT = 8
DEFAULT_TOLERANCE = 1e-12
VERTICAL = 7  # index of z5 in the lifted target


class FrameError(RuntimeError):
    pass


@dataclass(frozen=True)
class SourcePoint:
    x: Fraction
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        t = tuple(Fraction(v) for v in self.t)
        if len(t) != 3:
            raise ValueError("t must have three coordinates")
        object.__setattr__(self, "t", t)

    @classmethod
    def of(cls, x, t1=0, t2=0, t3=0) -> "SourcePoint":
        return cls(x, (t1, t2, t3))

    @property
    def coords(self) -> tuple:
        return (self.x,) + self.t

    @property
    def is_origin(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


ORIGIN = SourcePoint.of(0)


@dataclass(frozen=True)
class Germ:
    """(x, t) -> (t, t x, x^fold_power); fold_power=2 is the umbrella."""
    fold_power: int = 2

    def image(self, x, t, lifted=False):
        out = list(t) + [tm * x for tm in t] + [x ** self.fold_power]
        if lifted:
            out.append(x)
        return out

    def jacobian(self, x, t, lifted=False):
        """Rows are target coordinates, columns d/dx, d/dt1, d/dt2, d/dt3."""
        a = self.fold_power
        one, zero = x ** 0, x * 0
        rows = []
        for m in range(3):
            rows.append([zero] + [one if i == m else zero for i in range(3)])
        for m in range(3):
            rows.append([t[m]] + [x if i == m else zero for i in range(3)])
        rows.append([a * x ** (a - 1)] + [zero] * 3)
        if lifted:
            rows.append([one] + [zero] * 3)
        return rows

    def integer_jacobian(self, p: "SourcePoint", lifted=False):
        """The Jacobian at p with each column scaled to integers.

        With L the common denominator of p, the d/dx column is multiplied by
        L^(a-1) and the d/dt columns by L; the column space is unchanged.
        """
        a = self.fold_power
        L = math.lcm(*(c.denominator for c in p.coords))
        X = p.x.numerator * (L // p.x.denominator)
        T = [c.numerator * (L // c.denominator) for c in p.t]
        la2 = L ** (a - 2)
        rows = [[0] + [L if i == m else 0 for i in range(3)] for m in range(3)]
        rows += [[T[m] * la2] + [X if i == m else 0 for i in range(3)] for m in range(3)]
        rows.append([a * X ** (a - 1), 0, 0, 0])
        if lifted:
            rows.append([L ** (a - 1), 0, 0, 0])
        return rows


WHITNEY = Germ(2)
NEGATIVE_CONTROL = Germ(3)


def umbrella_map(p: SourcePoint, germ: Germ = WHITNEY) -> tuple:
    return tuple(germ.image(p.x, p.t))


def lift_map(p: SourcePoint, germ: Germ = WHITNEY) -> tuple:
    return tuple(germ.image(p.x, p.t, lifted=True))


def invert_lift(image) -> SourcePoint:
    """Recover (x, t) from the y and z5 coordinates of a lifted image."""
    y1, y2, y3 = image[:3]
    return SourcePoint(image[VERTICAL], (y1, y2, y3))


def in_disk(p: SourcePoint, germ: Germ = WHITNEY) -> bool:
    """Whether p lies in the preimage of the closed unit 7-disk."""
    return exact.dot(umbrella_map(p, germ), umbrella_map(p, germ)) <= 1


def on_sphere(p: SourcePoint, germ: Germ = WHITNEY) -> bool:
    return exact.dot(umbrella_map(p, germ), umbrella_map(p, germ)) == 1


def jacobian_rank(p: SourcePoint, lifted: bool = False, germ: Germ = WHITNEY) -> int:
    return exact.bareiss_rank(germ.integer_jacobian(p, lifted))


def _normal_projector(columns):
    """v -> v minus its orthogonal projection onto span(columns)."""
    gram = [[exact.dot(a, b) for b in columns] for a in columns]

    def project(v):
        coeffs = exact.solve(gram, [exact.dot(c, v) for c in columns])
        return [vi - sum((ci * col[i] for ci, col in zip(coeffs, columns)), 0)
                for i, vi in enumerate(v)]

    return project


def _tangent_columns(x, t, germ):
    return [list(col) for col in zip(*germ.jacobian(x, t, lifted=True))]


def _integer_tangent_columns(p, germ):
    return [list(col) for col in zip(*germ.integer_jacobian(p, lifted=True))]


def _basis_vector(i):
    return [1 if j == i else 0 for j in range(8)]


def _integer_normal_part(columns, v):
    """(d, w) with w / d the normal component of v; columns and v integral."""
    gram = [[exact.dot(a, b) for b in columns] for a in columns]
    d, y = exact.bareiss_solve(gram, [exact.dot(c, v) for c in columns])
    return d, [d * vi - sum(yk * col[i] for yk, col in zip(y, columns)) for i, vi in enumerate(v)]


def _section(x, t, germ):
    columns = _tangent_columns(x, t, germ)
    return _normal_projector(columns)(_basis_vector(VERTICAL))


def section_s1(p: SourcePoint, germ: Germ = WHITNEY) -> tuple:
    """Normal component of the vertical vector d/dz5 along the lift at p."""
    # integer column scaling leaves the tangent space, hence the projection, unchanged
    d, w = _integer_normal_part(_integer_tangent_columns(p, germ), _basis_vector(VERTICAL))
    return tuple(Fraction(wi, d) for wi in w)


def s1_vanishes(p: SourcePoint, germ: Germ = WHITNEY) -> bool:
    _, w = _integer_normal_part(_integer_tangent_columns(p, germ), _basis_vector(VERTICAL))
    return not any(w)


def section_derivative(p: SourcePoint, germ: Germ = WHITNEY):
    """8x4 matrix of partial derivatives of s1 at p, exact via dual numbers."""
    cols = []
    for i in range(4):
        coords = [exact.Dual(c, 1 if i == j else 0) for j, c in enumerate(p.coords)]
        s = _section(coords[0], coords[1:], germ)
        cols.append([v.eps_part for v in s])
    return [list(row) for row in zip(*cols)]


def kernel_of_differential(p: SourcePoint, germ: Germ = WHITNEY):
    return exact.nullspace(germ.jacobian(p.x, p.t, lifted=False))


def sigma2_empty_check(germ: Germ = WHITNEY, point: SourcePoint = ORIGIN) -> bool:
    """True when the singular point is of type Sigma^{1,0}.

    The tangent space of Sigma(f) = s1^{-1}(0) at the point is ker ds1, and its
    normal space nu2 is the quotient of the source tangent space by it.  The
    point is Sigma^{1_2} exactly when the kernel line of df maps to zero in nu2,
    i.e. lies in ker ds1.
    """
    if any(section_s1(point, germ)):
        raise ValueError(f"{point} is not a singular point")
    tangent_sigma = exact.nullspace(section_derivative(point, germ))
    for k in kernel_of_differential(point, germ):
        if tangent_sigma and exact.rank(tangent_sigma + [k]) == len(tangent_sigma):
            return False
    return True


_QUATERNION_ACTIONS = {
    # left multiplication on coordinates (1, i, j, k)
    "i": lambda a, b, c, d: (-b, a, -d, c),
    "j": lambda a, b, c, d: (-c, d, a, -b),
    "k": lambda a, b, c, d: (-d, -c, b, a),
}
FRAME_SEEDS = (3, 4, 5, 6)  # z1..z4: their normal projections span the normal space everywhere


@dataclass(frozen=True)
class NormalFrame:
    base: SourcePoint
    v_raw: tuple
    basis: tuple
    vectors: tuple
    labels: tuple = ("v", "iv", "jv", "kv")
    orthonormality_error: float = 0.0

    def to_dict(self) -> dict:
        return {"base": [str(c) for c in self.base.coords],
                "v_raw": [str(c) for c in self.v_raw],
                "vectors": {lab: list(vec) for lab, vec in zip(self.labels, self.vectors)},
                "orthonormality_error": self.orthonormality_error}


def framing_frame(p: SourcePoint, germ: Germ = WHITNEY, tol: float = DEFAULT_TOLERANCE) -> NormalFrame:
    """The frame (v, iv, jv, kv) of the lift's normal space at p.

    The normal space is identified with the quaternions through the
    Gram-Schmidt basis of the projected seeds z1, z2, z3, z4 (taken as
    1, i, j, k); v is the normalized section s1 and i, j, k act on the left.
    """
    if p.is_origin:
        raise ValueError("the frame is undefined at the origin, where s1 vanishes")
    columns = _integer_tangent_columns(p, germ)

    def project(i):
        d, w = _integer_normal_part(columns, _basis_vector(i))
        return [Fraction(wi, d) for wi in w]

    v_raw = project(VERTICAL)
    if not any(v_raw):
        raise FrameError(f"s1 vanishes at {p}")
    ortho = []
    for s in FRAME_SEEDS:
        u = project(s)
        for w in ortho:
            f = exact.dot(u, w) / exact.dot(w, w)
            u = [a - f * b for a, b in zip(u, w)]
        if not any(u):
            raise FrameError(f"seed projections are dependent at {p}")
        ortho.append(u)
    norms = [math.sqrt(exact.dot(u, u)) for u in ortho]
    unit = [[float(a) / n for a in u] for u, n in zip(ortho, norms)]
    v_norm = math.sqrt(exact.dot(v_raw, v_raw))
    q = tuple(float(exact.dot(v_raw, u)) / (n * v_norm) for u, n in zip(ortho, norms))
    coords = [q] + [_QUATERNION_ACTIONS[name](*q) for name in "ijk"]
    vectors = tuple(tuple(sum(c * b[i] for c, b in zip(cs, unit)) for i in range(8)) for cs in coords)

    err = 0.0
    for a in range(4):
        for b in range(4):
            target = 1.0 if a == b else 0.0
            err = max(err, abs(sum(x * y for x, y in zip(vectors[a], vectors[b])) - target))
        for col in columns:
            norm = math.sqrt(sum(float(c) ** 2 for c in col))
            err = max(err, abs(sum(x * float(c) for x, c in zip(vectors[a], col))) / norm)
    if err > tol:
        raise FrameError(f"frame at {p} is off by {err:.3g} (tolerance {tol:g})")
    return NormalFrame(p, tuple(v_raw), tuple(tuple(u) for u in ortho), vectors, orthonormality_error=err)


def grid_values(height: int = DEFAULT_HEIGHT) -> list[Fraction]:
    """n/height for -height <= n <= height."""
    if height < 1:
        raise ValueError("grid height must be positive")
    return [Fraction(n, height) for n in range(-height, height + 1)]


def grid_points(height: int = DEFAULT_HEIGHT):
    vals = grid_values(height)
    for x, t1, t2, t3 in product(vals, repeat=4):
        yield SourcePoint(x, (t1, t2, t3))


def sphere_sample(count: int = 200, height: int = DEFAULT_HEIGHT) -> list[SourcePoint]:
    """Rational points on the boundary sphere of the preimage disk.

    |U(x,t)|^2 = |t|^2 (1 + x^2) + x^4 equals 1 exactly when x^2 + |t|^2 = 1,
    so the boundary is the round unit 3-sphere and inverse stereographic
    projection of a rational grid in R^3 lands on it exactly.
    """
    vals = grid_values(height)
    grid = list(product(vals, repeat=3))
    step = max(1, len(grid) // count)
    out = []
    for w1, w2, w3 in grid[::step][:count]:
        s = w1 * w1 + w2 * w2 + w3 * w3
        out.append(SourcePoint(2 * w1 / (s + 1), (2 * w2 / (s + 1), 2 * w3 / (s + 1), (s - 1) / (s + 1))))
    return out


def random_point(rng: random.Random, height: int = DEFAULT_HEIGHT) -> SourcePoint:
    return SourcePoint(*_split(Fraction(rng.randint(-height, height), rng.randint(1, height))
                               for _ in range(4)))


def _split(values):
    x, *t = values
    return x, tuple(t)


@dataclass
class UmbrellaReport:
    height: int
    grid_points: int
    singular_points: list = field(default_factory=list)
    s1_zero_points: list = field(default_factory=list)
    rank_counts: dict = field(default_factory=dict)
    lifted_rank_min: int = 4
    sigma2_empty: bool = False
    negative_control_sigma2_empty: bool = True
    injectivity_pairs: int = 0
    injectivity_collisions: list = field(default_factory=list)
    inversion_failures: list = field(default_factory=list)
    sphere_points: int = 0
    sphere_off_boundary: list = field(default_factory=list)
    frame_failures: list = field(default_factory=list)
    max_frame_error: float = 0.0
    seed: int = 0
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def checks(self) -> dict:
        origin = [str(ORIGIN)]
        return {
            "singular_locus_is_origin": self.singular_points == origin,
            "rank_3_only_at_origin": self.rank_counts.get(3, 0) == 1,
            "lift_is_immersion": self.lifted_rank_min == 4,
            "s1_zero_locus_is_origin": self.s1_zero_points == origin,
            "sigma2_empty": self.sigma2_empty,
            "negative_control_detected": not self.negative_control_sigma2_empty,
            "lift_injective": not self.injectivity_collisions and not self.inversion_failures,
            "sphere_sample_exact": not self.sphere_off_boundary,
            "no_frame_failures": not self.frame_failures,
        }

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "grid": {"height": self.height, "values_per_axis": 2 * self.height + 1,
                     "points": self.grid_points, "spacing": f"1/{self.height}"},
            "singular_points": self.singular_points,
            "s1_zero_points": self.s1_zero_points,
            "jacobian_rank_counts": {str(k): v for k, v in sorted(self.rank_counts.items())},
            "lifted_rank_min": self.lifted_rank_min,
            "sigma2_empty": self.sigma2_empty,
            "negative_control": {"germ": "z4 = x^3", "sigma2_empty": self.negative_control_sigma2_empty},
            "injectivity": {"pairs": self.injectivity_pairs, "seed": self.seed,
                            "collisions": self.injectivity_collisions,
                            "inversion_failures": self.inversion_failures},
            "sphere_sample": {"points": self.sphere_points, "off_boundary": self.sphere_off_boundary,
                              "frame_failures": self.frame_failures,
                              "max_orthonormality_error": self.max_frame_error,
                              "tolerance": self.tolerance},
            "checks": self.checks,
            "passed": self.passed,
        }


def _scan_point(p: SourcePoint):
    rows = WHITNEY.integer_jacobian(p, lifted=True)
    columns = [list(col) for col in zip(*rows)]
    _, s1 = _integer_normal_part(columns, _basis_vector(VERTICAL))
    return exact.bareiss_rank(rows[:7]), exact.bareiss_rank(rows), not any(s1)


def verify(height: int = DEFAULT_HEIGHT, pairs: int = 10_000, sphere_count: int = 200, seed: int = 0,
           tol: float = DEFAULT_TOLERANCE) -> UmbrellaReport:
    points = list(grid_points(height))
    report = UmbrellaReport(height, len(points), seed=seed, tolerance=tol)
    for p in points:
        rk, lifted_rk, s1_zero = _scan_point(p)
        report.rank_counts[rk] = report.rank_counts.get(rk, 0) + 1
        report.lifted_rank_min = min(report.lifted_rank_min, lifted_rk)
        if rk < 4:
            report.singular_points.append(str(p))
        if s1_zero:
            report.s1_zero_points.append(str(p))

    report.sigma2_empty = sigma2_empty_check(WHITNEY)
    report.negative_control_sigma2_empty = sigma2_empty_check(NEGATIVE_CONTROL)

    rng = random.Random(seed)
    report.injectivity_pairs = pairs
    for _ in range(pairs):
        p, q = random_point(rng, height), random_point(rng, height)
        if p != q and lift_map(p) == lift_map(q):
            report.injectivity_collisions.append([str(p), str(q)])
        if invert_lift(lift_map(p)) != p:
            report.inversion_failures.append(str(p))

    sample = sphere_sample(sphere_count, height)
    report.sphere_points = len(sample)
    for p in sample:
        if not on_sphere(p):
            report.sphere_off_boundary.append(str(p))
        try:
            frame = framing_frame(p, tol=tol)
        except FrameError as exc:
            report.frame_failures.append({"point": str(p), "error": str(exc)})
            continue
        report.max_frame_error = max(report.max_frame_error, frame.orthonormality_error)
    return report
