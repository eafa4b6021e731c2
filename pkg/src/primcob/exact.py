"""Small exact linear algebra over Q: fraction-free rank, nullspaces, solves."""
from __future__ import annotations

import math
from fractions import Fraction


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), 0)


def integer_columns(rows):
    """Scale each column by the lcm of its denominators; column spans are unchanged."""
    if not rows:
        return []
    scale = [math.lcm(*(getattr(row[c], "denominator", 1) for row in rows)) for c in range(len(rows[0]))]
    return [[int(v * s) for v, s in zip(row, scale)] for row in rows]


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for c in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, n_rows):
            for cc in range(c + 1, n_cols):
                m[i][cc] = (piv * m[i][cc] - m[i][c] * m[rank][cc]) // prev
            m[i][c] = 0
        prev = piv
        rank += 1
        if rank == n_rows:
            break
    return rank


def bareiss_solve(a, b):
    """Integer solve of a nonsingular a x = b: returns (d, y) with x = y / d.

    Fraction-free elimination on [a | b]; d = +-det(a) and every y_i is an
    integer by Cramer's rule, so the back substitution divides exactly.
    """
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    prev = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        m[c], m[pivot] = m[pivot], m[c]
        piv = m[c][c]
        for i in range(c + 1, n):
            for cc in range(c + 1, n + 1):
                m[i][cc] = (piv * m[i][cc] - m[i][c] * m[c][cc]) // prev
            m[i][c] = 0
        prev = piv
    d = m[n - 1][n - 1]
    y = [0] * n
    for i in range(n - 1, -1, -1):
        num = d * m[i][n] - sum(m[i][j] * y[j] for j in range(i + 1, n))
        y[i] = num // m[i][i]
    return d, y


def rank(rows) -> int:
    return bareiss_rank(integer_columns(rows))


def rref(rows):
    """Reduced row echelon form over Q and the pivot columns."""
    m = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    n_cols = len(m[0]) if m else 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows):
    """Basis of {v : M v = 0} over Q."""
    m, pivots = rref(rows)
    n_cols = len(rows[0])
    basis = []
    for free in (c for c in range(n_cols) if c not in pivots):
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis


def _nonzero(v) -> bool:
    # a dual number is invertible iff its real part is
    return getattr(v, "real_part", v) != 0


def _field(v):
    return v if isinstance(v, (Fraction, Dual)) else Fraction(v)


def solve(a, b):
    """Solve the square nonsingular system a x = b.

    Works over any field-like type with +, -, *, / (Fractions, dual numbers).
    """
    n = len(a)
    m = [[_field(v) for v in row] + [_field(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if _nonzero(m[i][c])), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        m[c], m[pivot] = m[pivot], m[c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    x = [None] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n]
        for j in range(i + 1, n):
            s = s - m[i][j] * x[j]
        x[i] = s / m[i][i]
    return x


class Dual:
    """a + b*eps with eps^2 = 0, for exact first derivatives of rational maps."""
    __slots__ = ("real_part", "eps_part")

    def __init__(self, real_part, eps_part=0):
        self.real_part = Fraction(real_part)
        self.eps_part = Fraction(eps_part)

    @staticmethod
    def _lift(v):
        return v if isinstance(v, Dual) else Dual(v)

    def __add__(self, o):
        o = self._lift(o)
        return Dual(self.real_part + o.real_part, self.eps_part + o.eps_part)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.real_part, -self.eps_part)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return Dual(self.real_part * o.real_part,
                    self.real_part * o.eps_part + self.eps_part * o.real_part)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        inv = 1 / o.real_part
        return Dual(self.real_part * inv,
                    (self.eps_part * o.real_part - self.real_part * o.eps_part) * inv * inv)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, n: int):
        out = Dual(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        o = self._lift(o)
        return self.real_part == o.real_part and self.eps_part == o.eps_part

    def __ne__(self, o):
        return not self == o

    __hash__ = None

    def __repr__(self):
        return f"Dual({self.real_part}, {self.eps_part})"
