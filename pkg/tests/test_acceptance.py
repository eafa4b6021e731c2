"""Exit criteria.  Every check is exact (zero tolerance) unless stated.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary lists
one PASS/FAIL line per criterion.
"""
import math

import pytest

from primcob.partitions import count_bounded_partitions, enumerate_bounded_partitions
from primcob.poincare import projective_space_series
from primcob.ranks import (bso_rank, corollary_compare, corollary_eval, rank_pi_oriented,
                           rank_pi_quaternionic)
from primcob.specseq import (FinAbGroup, build_e1_page, consistent_assignments,
                             infinite_group_criterion, odd_part, odd_torsion_audit, segal_index)
from primcob import umbrella

acceptance = pytest.mark.acceptance


@acceptance(1, "bounded partition DP equals enumeration, m <= 40, t <= 12")
def test_partition_oracle_equivalence():
    mismatches = [(m, t) for m in range(41) for t in range(13)
                  if count_bounded_partitions(m, t) != len(enumerate_bounded_partitions(m, t))]
    assert mismatches == []


@acceptance(2, "k=1 ranks equal rk H_{j+1}(CP^{r+1}), r <= 10, j <= 50")
def test_two_route_k1():
    for r in range(11):
        cp = projective_space_series("complex", r + 1, 51)
        for j in range(1, 51):
            assert rank_pi_oriented(1, r, j) == cp.rank(j + 1), (r, j)
            assert cp.rank(j + 1) == (1 if j % 2 == 1 and j <= 2 * r + 1 else 0)


@acceptance(3, "quaternionic ranks equal rk H_{j+1}(HP^{r+1}), r <= 10, j <= 60")
def test_two_route_quaternionic():
    for r in range(11):
        hp = projective_space_series("quaternionic", r + 1, 61)
        spheres = {4 * i + 3 for i in range(r + 1)}  # S^3 x S^7 x ... x S^{4r+3}
        for j in range(1, 61):
            assert rank_pi_quaternionic(r, j) == hp.rank(j + 1), (r, j)
            assert rank_pi_quaternionic(r, j) == (1 if j in spheres else 0)


@acceptance(4, "k odd splitting: rk pi_j(X_r) + rk H_{j+1-(r+2)(k+1)} = rk H_{j-k}")
def test_splitting_telescoping():
    for k in (1, 3, 5):
        n = k + 1
        for r in range(7):
            for j in range(1, 61):
                assert rank_pi_oriented(k, r, j) + bso_rank(n, j + 1 - (r + 2) * n) == bso_rank(n, j - k)


@acceptance(5, "printed formula b) agrees for k even; a) comparator reports k=1,r=2,j=5")
def test_corollary_agreement_and_report():
    for k in (2, 4):
        for r in range(6):
            for j in range(1, 61):
                assert corollary_eval(k, r, j) == rank_pi_oriented(k, r, j), (k, r, j)
    report = corollary_compare(1, 2, 10)
    assert report.disagreements, "k odd comparator must report the disagreement"
    assert report.rows[4] == (5, 1, 0, False)
    assert report.first_disagreement == 5


Z, ZERO = FinAbGroup(1), FinAbGroup()
Z2, Z24, Z240 = FinAbGroup.cyclic(2), FinAbGroup.cyclic(24), FinAbGroup.cyclic(240)

# transcription of the printed E1 diagram, 1 <= p <= 3, 3 <= q <= 10;
# cells left blank in the picture (q < 3p) are trivial
PRINTED_DIAGRAM = {
    (1, 3): Z, (1, 4): Z2, (1, 5): Z2, (1, 6): Z24, (1, 7): ZERO, (1, 8): ZERO, (1, 9): Z2, (1, 10): Z240,
    (2, 3): ZERO, (2, 4): ZERO, (2, 5): ZERO, (2, 6): Z, (2, 7): ZERO, (2, 8): ZERO, (2, 9): Z24, (2, 10): ZERO,
    (3, 3): ZERO, (3, 4): ZERO, (3, 5): ZERO, (3, 6): ZERO, (3, 7): ZERO, (3, 8): ZERO, (3, 9): Z, (3, 10): Z2,
}


@acceptance(6, "E1 page matches the printed diagram cell by cell, p <= 3, q <= 10")
def test_e1_page_reproduction():
    page = build_e1_page(3, 10)
    listed = {(1, 3): Z, (2, 6): Z, (3, 9): Z, (1, 6): Z24, (2, 9): Z24, (1, 10): Z240,
              (1, 4): Z2, (1, 5): Z2, (1, 9): Z2, (3, 10): Z2}
    assert {c: page.cell(*c) for c in listed} == listed
    mismatches = {c: (str(page.cell(*c)), str(g)) for c, g in PRINTED_DIAGRAM.items() if page.cell(*c) != g}
    # (computed, printed); E1 = pi^s(q - 3p) puts pi^s(1) = pi^s(2) = Z2 at (2,7) and (2,8)
    assert mismatches == {}


@acceptance(7, "p=2: h(2) = 24 and the unique assignment has o_1 = 24 (d^1_{2,6} onto Z24)")
def test_segal_forcing_p2():
    page = build_e1_page(3, 10)
    assert segal_index(2) == 24 == math.factorial(4)
    assignments = consistent_assignments(2, page)
    assert [a.orders for a in assignments] == [(24,)]
    assert assignments[0].orders[0] == page.cell(1, 6).order()


@acceptance(8, "p=3: h(3) = 360 and every assignment has odd parts (3, 15)")
def test_segal_forcing_p3():
    page = build_e1_page(3, 10)
    assert segal_index(3) == 360 == math.factorial(6) // 2
    assignments = consistent_assignments(3, page)
    assert assignments
    assert {(odd_part(a.orders[0]), odd_part(a.orders[1])) for a in assignments} == {(3, 15)}
    assert all(math.prod(a.orders) == 360 for a in assignments)


@acceptance(9, "odd torsion of pi^s_i(HP^inf) vanishes for i <= 11")
def test_odd_torsion_audit():
    audit = odd_torsion_audit(11)
    assert audit.passed
    assert {(r["p"], r["q"], r["prime"]) for r in audit.records} == {(1, 6, 3), (2, 9, 3), (1, 10, 3), (1, 10, 5)}


@acceptance(10, "infinite exactly when n = 0 mod 4 and n <= 4r, n <= 20, r <= 5")
def test_infinitude_criterion():
    for r in range(6):
        for n in range(21):
            assert infinite_group_criterion(r, n) == (n % 4 == 0 and n <= 4 * r), (r, n)


@pytest.fixture(scope="module")
def umbrella_report():
    return umbrella.verify(height=8, pairs=10_000, sphere_count=200, seed=0)


@acceptance(11, "Whitney umbrella: rank, s1 zero locus, Sigma^{1,1} control, injectivity, framing")
def test_umbrella(umbrella_report):
    rep = umbrella_report
    assert rep.grid_points == 17 ** 4
    assert umbrella.jacobian_rank(umbrella.ORIGIN) == 3
    assert rep.rank_counts == {3: 1, 4: 17 ** 4 - 1}
    assert rep.singular_points == ["(0, 0, 0, 0)"]
    assert rep.s1_zero_points == ["(0, 0, 0, 0)"]
    assert rep.lifted_rank_min == 4
    assert rep.sigma2_empty is True
    assert rep.negative_control_sigma2_empty is False
    assert rep.injectivity_pairs == 10_000
    assert rep.injectivity_collisions == [] and rep.inversion_failures == []
    assert rep.sphere_points == 200 and rep.sphere_off_boundary == []
    assert rep.frame_failures == []
    assert rep.passed
