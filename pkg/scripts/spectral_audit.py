"""Print the E1 page, Segal assignments for small p, and the odd-torsion audit."""
import argparse

from primcob.specseq import build_e1_page, odd_torsion_audit, segal_audit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-max", type=int, default=3)
    ap.add_argument("--q-max", type=int, default=10)
    ap.add_argument("--i-max", type=int, default=11)
    args = ap.parse_args()

    page = build_e1_page(args.p_max, args.q_max)
    print(page.render())
    print()
    for p in range(1, args.p_max + 1):
        audit = segal_audit(p, build_e1_page(p, 4 * p))
        orders = ", ".join(str(a.orders) for a in audit.assignments)
        print(f"p={p}  h={audit.h}  assignments: {orders or '()'}  -> {audit.verdict}")
    print()
    torsion = odd_torsion_audit(args.i_max)
    for rec in torsion.records:
        print(f"  ({rec['p']},{rec['q']}) prime {rec['prime']}: need {rec['valuation_needed']}, "
              f"forced {rec['valuation_forced']} -> {rec['verdict']}")
    print(("PASS: " if torsion.passed else "FAIL: ") + torsion.conclusion)


if __name__ == "__main__":
    main()
