"""Bookkeeping for the singularity spectral sequence of HP^0 c HP^1 c ... c HP^inf.

E^1_{p,q} = pi^s_{p+q}(S^{4p}) = pi^s(q - 3p), and d^r goes (p, q) -> (p - r, q + r - 1).
The only infinite cells are the Z's on the line q = 3p.  The orders of the
images of the differentials leaving E^r_{p,3p} multiply to Segal's index h(p);
this module enumerates every order tuple compatible with that product and with
the sizes of the target cells, and reads off what is forced.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import sympy

from .ranks import rank_pi_quaternionic


class StemUnknownError(LookupError):
    pass


class StemTableError(ValueError):
    pass


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(sympy.factorint(n)) == 1


def valuation(n: int, prime: int) -> int:
    v = 0
    while n % prime == 0:
        n //= prime
        v += 1
    return v


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


@dataclass(frozen=True)
class FinAbGroup:
    """Z^free_rank plus a sum of cyclic groups of prime-power order."""
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if not all(_is_prime_power(q) for q in self.torsion):
            raise ValueError(f"torsion orders must be prime powers: {self.torsion}")
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    @classmethod
    def cyclic(cls, n: int) -> "FinAbGroup":
        """Z for n == 0, otherwise Z/n split into prime-power parts."""
        if n == 0:
            return cls(1)
        if n < 0:
            raise ValueError("cyclic order must be nonnegative")
        return cls(0, tuple(p ** e for p, e in sympy.factorint(n).items()))

    @classmethod
    def from_cyclic_orders(cls, free_rank: int, orders) -> "FinAbGroup":
        torsion = []
        for q in orders:
            if not isinstance(q, int) or q < 1:
                raise ValueError(f"cyclic orders must be positive integers, got {q!r}")
            torsion.extend(cls.cyclic(q).torsion if q > 1 else ())
        return cls(free_rank, tuple(torsion))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Group order, or None when the group is infinite."""
        return math.prod(self.torsion) if self.is_finite else None

    def torsion_order(self) -> int:
        return math.prod(self.torsion)

    def primes(self) -> list[int]:
        return sorted({int(sympy.primefactors(q)[0]) for q in self.torsion})

    def valuation(self, prime: int) -> int:
        """Exponent of ``prime`` in the order of the torsion subgroup."""
        return valuation(self.torsion_order(), prime)

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = ["Z"] * self.free_rank
        # merge coprime prime powers into the conventional cyclic names (Z24, not Z3+Z8)
        by_prime: dict[int, list[int]] = {}
        for q in self.torsion:
            by_prime.setdefault(sympy.primefactors(q)[0], []).append(q)
        columns = [sorted(v, reverse=True) for v in by_prime.values()]
        for i in range(max((len(c) for c in columns), default=0)):
            parts.append(f"Z{math.prod(c[i] for c in columns if i < len(c))}")
        return "+".join(parts)

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "name": str(self)}


class _Unknown:
    """Marker for a cell whose stem lies beyond the loaded table."""

    def __repr__(self):
        return "UNKNOWN"

    __str__ = __repr__


UNKNOWN = _Unknown()

_BUILTIN_SOURCE = "printed E1 diagram of the quaternionic singularity spectral sequence"
_BUILTIN_STEMS = {0: 0, 1: 2, 2: 2, 3: 24, 4: 1, 5: 1, 6: 2, 7: 240}


@dataclass(frozen=True)
class StableStemTable:
    entries: dict
    sources: dict

    @classmethod
    def builtin(cls) -> "StableStemTable":
        entries = {n: (FinAbGroup() if c == 1 else FinAbGroup.cyclic(c))
                   for n, c in _BUILTIN_STEMS.items()}
        return cls(entries, {n: _BUILTIN_SOURCE for n in entries})

    def extended(self, data: dict) -> "StableStemTable":
        """Add stems from ``{"n": {"free_rank": r, "torsion": [...], "source": "..."}}``."""
        entries, sources = dict(self.entries), dict(self.sources)
        if not isinstance(data, dict):
            raise StemTableError("stem table must be a JSON object keyed by stem")
        for key, rec in data.items():
            try:
                n = int(key)
            except ValueError:
                raise StemTableError(f"stem key {key!r} is not an integer") from None
            if n < 0:
                raise StemTableError(f"negative stem {n}")
            if not isinstance(rec, dict) or not isinstance(rec.get("source"), str) or not rec["source"].strip():
                raise StemTableError(f"stem {n}: every entry needs a nonempty 'source' string")
            try:
                group = FinAbGroup.from_cyclic_orders(rec.get("free_rank", 0), rec.get("torsion", []))
            except (TypeError, ValueError) as exc:
                raise StemTableError(f"stem {n}: {exc}") from None
            if n in entries and entries[n] != group:
                raise StemTableError(f"stem {n}: {group} contradicts the tabulated {entries[n]}")
            entries[n] = group
            sources.setdefault(n, rec["source"])
        return StableStemTable(entries, sources)

    @classmethod
    def load(cls, path) -> "StableStemTable":
        with open(path) as fh:
            data = json.load(fh)
        return cls.builtin().extended(data)

    def __getitem__(self, n: int) -> FinAbGroup:
        try:
            return self.entries[n]
        except KeyError:
            raise StemUnknownError(f"stable stem pi^s({n}) is not in the table "
                                   f"(known: 0..{max(self.entries)}); supply an extension file") from None

    def __contains__(self, n) -> bool:
        return n in self.entries


_BUILTIN = StableStemTable.builtin()


def stable_stem(n: int, table: StableStemTable | None = None) -> FinAbGroup:
    if n < 0:
        return FinAbGroup()
    return (table or _BUILTIN)[n]


@dataclass(frozen=True)
class E1Page:
    p_max: int
    q_max: int
    cells: dict
    p_min: int = 1

    def cell(self, p: int, q: int):
        try:
            return self.cells[(p, q)]
        except KeyError:
            raise IndexError(f"cell ({p},{q}) is outside the page") from None

    def known_cell(self, p: int, q: int) -> FinAbGroup:
        g = self.cell(p, q)
        if g is UNKNOWN:
            raise StemUnknownError(f"E1 cell ({p},{q}) needs stem pi^s({q - 3 * p}), which is not tabulated")
        return g

    def render(self) -> str:
        """Rows q = q_max..0 over columns p, as in the usual picture."""
        cols = list(range(self.p_min, self.p_max + 1))
        labels = {(p, q): ("" if q < 3 * p else _label(self.cells[(p, q)])) for p in cols
                  for q in range(self.q_max + 1)}
        width = max([len(v) for v in labels.values()] + [5])
        lines = []
        for q in range(self.q_max, -1, -1):
            lines.append(f"q={q:<3}| " + " ".join(f"{labels[(p, q)]:>{width}}" for p in cols))
        lines.append("      " + " ".join(f"{'p=' + str(p):>{width}}" for p in cols))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "p_min": self.p_min, "p_max": self.p_max, "q_max": self.q_max,
            "cells": [{"p": p, "q": q, "stem": q - 3 * p,
                       "group": None if g is UNKNOWN else g.to_dict(), "known": g is not UNKNOWN}
                      for (p, q), g in sorted(self.cells.items())],
        }


def _label(g) -> str:
    return "?" if g is UNKNOWN else str(g)


def build_e1_page(p_max: int, q_max: int, table: StableStemTable | None = None,
                  include_p0: bool = False) -> E1Page:
    if p_max < 1 or q_max < 0:
        raise ValueError("need p_max >= 1 and q_max >= 0")
    table = table or _BUILTIN
    p_min = 0 if include_p0 else 1
    cells = {}
    for p in range(p_min, p_max + 1):
        for q in range(q_max + 1):
            n = q - 3 * p
            cells[(p, q)] = stable_stem(n, table) if n < 0 or n in table else UNKNOWN
    return E1Page(p_max, q_max, cells, p_min)


def segal_index(p: int) -> int:
    """Index of the stable Hurewicz image in H_{4p}(HP^inf)."""
    if p < 1:
        raise ValueError("p must be positive")
    f = math.factorial(2 * p)
    return f if p % 2 == 0 else f // 2


@dataclass(frozen=True)
class DifferentialAssignment:
    """Orders o_r = |im d^r_{p,3p}| for r = 1, 2, ... ."""
    p: int
    orders: tuple[int, ...]
    targets: tuple[tuple[int, int], ...]

    @property
    def product(self) -> int:
        return math.prod(self.orders)

    def to_dict(self) -> dict:
        return {"p": self.p, "orders": list(self.orders),
                "targets": [list(t) for t in self.targets]}


def differential_targets(p: int, include_p0: bool = False) -> list[tuple[int, int]]:
    last = p if include_p0 else p - 1
    return [(p - r, 3 * p + r - 1) for r in range(1, last + 1)]


def consistent_assignments(p: int, page: E1Page, include_p0: bool = False) -> list[DifferentialAssignment]:
    """All order tuples with o_r dividing |E1 target| and prod o_r = h(p).

    Output is sorted lexicographically by the order tuple.  An empty list
    means the page and the index are incompatible.
    """
    if include_p0 and page.p_min > 0:
        raise ValueError("page has no p=0 column; build it with include_p0=True")
    targets = differential_targets(p, include_p0)
    bounds = []
    for t in targets:
        g = page.known_cell(*t)
        if not g.is_finite:
            raise ValueError(f"target {t} is infinite")
        bounds.append(g.order())
    h = segal_index(p)
    found = []

    def extend(prefix, remaining, i):
        if i == len(bounds):
            if remaining == 1:
                found.append(tuple(prefix))
            return
        # what the later targets can still absorb
        rest = math.prod(bounds[i + 1:])
        for o in sympy.divisors(math.gcd(bounds[i], remaining)):
            if rest % (remaining // o) == 0:
                prefix.append(o)
                extend(prefix, remaining // o, i + 1)
                prefix.pop()

    extend([], h, 0)
    return [DifferentialAssignment(p, orders, tuple(targets)) for orders in sorted(found)]


@dataclass
class SegalAudit:
    p: int
    h: int
    targets: list
    target_orders: list
    assignments: list
    forced_surjective: list = field(default_factory=list)
    forced_odd_surjective: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.assignments)

    @property
    def verdict(self) -> str:
        if not self.assignments:
            return "inconsistent"
        if not self.targets:
            return "no differentials"
        if all(self.forced_surjective):
            return "surjective"
        if all(self.forced_odd_surjective):
            return "surjective modulo 2-primary torsion"
        return "not forced"

    def to_dict(self) -> dict:
        return {
            "p": self.p, "h": self.h, "verdict": self.verdict, "passed": self.passed,
            "differentials": [
                {"r": r, "target": list(t), "target_order": o,
                 "forced_surjective": fs, "forced_odd_surjective": fo}
                for r, (t, o, fs, fo) in enumerate(zip(self.targets, self.target_orders,
                                                       self.forced_surjective,
                                                       self.forced_odd_surjective), start=1)],
            "assignments": [list(a.orders) for a in self.assignments],
        }


def segal_audit(p: int, page: E1Page | None = None, include_p0: bool = False) -> SegalAudit:
    page = page or build_e1_page(max(p, 1), 4 * p, include_p0=include_p0)
    assignments = consistent_assignments(p, page, include_p0)
    targets = differential_targets(p, include_p0)
    orders = [page.known_cell(*t).order() for t in targets]
    audit = SegalAudit(p, segal_index(p), targets, orders, assignments)
    for i, o in enumerate(orders):
        audit.forced_surjective.append(bool(assignments) and all(a.orders[i] == o for a in assignments))
        audit.forced_odd_surjective.append(
            bool(assignments) and all(odd_part(a.orders[i]) == odd_part(o) for a in assignments))
    return audit


@dataclass
class TorsionAudit:
    i_max: int
    records: list
    sources: dict

    @property
    def passed(self) -> bool:
        return all(rec["verdict"] == "annihilated" for rec in self.records)

    @property
    def conclusion(self) -> str:
        if self.passed:
            return f"odd torsion of pi^s_i(HP^inf) vanishes for i <= {self.i_max}"
        return f"odd torsion of pi^s_i(HP^inf) is not shown to vanish for i <= {self.i_max}"

    def to_dict(self) -> dict:
        return {
            "i_max": self.i_max, "passed": self.passed, "conclusion": self.conclusion,
            "records": self.records,
            "assignments": {str(p): [list(a.orders) for a in v] for p, v in sorted(self.sources.items())},
        }


def odd_torsion_audit(i_max: int, page: E1Page | None = None, table: StableStemTable | None = None,
                      include_p0: bool = False) -> TorsionAudit:
    """Check that every odd-primary E1 class of total degree <= i_max is hit.

    A cell's l-torsion is killed when, in every consistent assignment, the
    differential arriving from the Z-line has image of l-valuation at least the
    cell's.  Cells no Z-line differential reaches, or whose kill is only
    possible in some assignments, fail.
    """
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    p_top = max((i_max + 1) // 4, 1)
    if page is None:
        page = build_e1_page(p_top, i_max + 1, table, include_p0)
    p_min = 0 if include_p0 else 1
    records, sources = [], {}
    for p in range(p_min, i_max // 4 + 1):
        for q in range(3 * p, i_max - p + 1):
            g = page.known_cell(p, q)
            for prime in (ell for ell in g.primes() if ell != 2):
                needed = g.valuation(prime)
                rec = {"p": p, "q": q, "prime": prime, "valuation_needed": needed}
                r, rem = divmod(q - 3 * p + 1, 4)
                if rem or r < 1:
                    rec.update(valuation_forced=0, verdict="survives", source=None)
                    records.append(rec)
                    continue
                src = p + r
                if src not in sources:
                    sources[src] = consistent_assignments(src, page, include_p0)
                vals = [valuation(a.orders[r - 1], prime) for a in sources[src]]
                if not vals:
                    verdict, forced = "inconsistent", 0
                elif min(vals) >= needed:
                    verdict, forced = "annihilated", min(vals)
                elif max(vals) >= needed:
                    verdict, forced = "consistent-but-not-forced", min(vals)
                else:
                    verdict, forced = "survives", max(vals)
                rec.update(valuation_forced=forced, verdict=verdict, source=[src, 3 * src])
                records.append(rec)
    return TorsionAudit(i_max, records, sources)


def infinite_group_criterion(r: int, n: int) -> bool:
    """Whether the quaternionic prim cobordism group of R^{n+3} is infinite."""
    if n < 0:
        return False
    return rank_pi_quaternionic(r, n + 3) > 0
