"""Command-line front end.

Exit codes: 0 pass, 2 unsupported flavor or bad arguments, 3 I/O or malformed
input file, 4 audit failure, 5 stable stem missing from the table.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import ranks, specseq, umbrella
from .config import FORMATS, RunConfig

EXIT_OK, EXIT_FLAVOR, EXIT_IO, EXIT_FAIL, EXIT_STEM = 0, 2, 3, 4, 5


class Output:
    """One report: a JSON payload plus the same numbers as table rows."""

    def __init__(self, cfg: RunConfig, result: dict, headers, rows, text=None, summary=None):
        self.cfg, self.result = cfg, result
        self.headers, self.rows = headers, rows
        self.text, self.summary = text, summary

    def render(self) -> str:
        if self.cfg.format == "json":
            return json.dumps({"config": self.cfg.header(), "result": self.result},
                              indent=2, sort_keys=True)
        if self.cfg.format == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.headers)
            w.writerows(self.rows)
            return buf.getvalue().rstrip("\n")
        lines = ["# " + " ".join(f"{k}={v}" for k, v in self.cfg.header().items() if v is not None)]
        lines.append(self.text if self.text is not None else _table(self.headers, self.rows))
        if self.summary:
            lines.append(self.summary)
        return "\n".join(lines)


def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    out = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    out.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(out)


def _load_table(cfg):
    return specseq.StableStemTable.load(cfg.stems) if cfg.stems else None


def cmd_ranks(cfg: RunConfig):
    flavor = ranks.normalize_flavor(cfg.flavor)
    k = cfg.k if cfg.k is not None else (3 if flavor == ranks.QUATERNIONIC else None)
    profile = ranks.rank_profile(flavor, k, cfg.r, cfg.max_degree)
    rows = [(j, profile[j]) for j in range(1, profile.max_degree + 1)]
    summary = "nonzero at j = " + (", ".join(map(str, profile.nonzero_degrees())) or "none")
    return Output(cfg, profile.to_dict(), ("j", "rank_pi_j"), rows, summary=summary), EXIT_OK


def cmd_cobordism_rank(cfg: RunConfig):
    if not cfg.betti:
        raise OSError("cobordism-rank needs --betti FILE")
    with open(cfg.betti) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ranks.BettiFormatError(f"{cfg.betti}: {exc}") from None
    betti = ranks.BettiVector.from_json(data)
    flavor = ranks.normalize_flavor(cfg.flavor)
    k = cfg.k if cfg.k is not None else (3 if flavor == ranks.QUATERNIONIC else None)
    profile = ranks.rank_profile(flavor, k, cfg.r, max(betti.dimension, 1))
    breakdown = ranks.cobordism_breakdown(profile, betti)
    total = sum(b * rk for _, b, rk in breakdown)
    result = {"betti": betti.to_json(), "flavor": flavor, "k": profile.k, "r": cfg.r,
              "breakdown": [{"j": j, "b_j": b, "rank_pi_j": rk, "product": b * rk} for j, b, rk in breakdown],
              "rank": total}
    rows = [(j, b, rk, b * rk) for j, b, rk in breakdown]
    return Output(cfg, result, ("j", "b_j", "rank_pi_j", "product"), rows, summary=f"rank = {total}"), EXIT_OK


def cmd_e1_page(cfg: RunConfig):
    page = specseq.build_e1_page(cfg.p_max, cfg.q_max, _load_table(cfg), cfg.include_p0)
    rows = [(p, q, q - 3 * p, "?" if g is specseq.UNKNOWN else str(g))
            for (p, q), g in sorted(page.cells.items())]
    return Output(cfg, page.to_dict(), ("p", "q", "stem", "group"), rows, text=page.render()), EXIT_OK


def cmd_segal_audit(cfg: RunConfig):
    page = specseq.build_e1_page(max(cfg.p, 1), 4 * cfg.p, _load_table(cfg), cfg.include_p0)
    audit = specseq.segal_audit(cfg.p, page, cfg.include_p0)
    rows = [(i, *a.orders) for i, a in enumerate(audit.assignments, start=1)]
    headers = ("assignment",) + tuple(f"o_{r}" for r in range(1, len(audit.targets) + 1))
    summary = (f"h({cfg.p}) = {audit.h}; {len(audit.assignments)} consistent assignment(s); "
               f"verdict: {audit.verdict}")
    return Output(cfg, audit.to_dict(), headers, rows, summary=summary), (EXIT_OK if audit.passed else EXIT_FAIL)


def cmd_odd_torsion_audit(cfg: RunConfig):
    audit = specseq.odd_torsion_audit(cfg.i_max, table=_load_table(cfg), include_p0=cfg.include_p0)
    headers = ("p", "q", "prime", "valuation_needed", "valuation_forced", "verdict")
    rows = [tuple(rec[h] for h in headers) for rec in audit.records]
    summary = f"{'PASS' if audit.passed else 'FAIL'}: {audit.conclusion}"
    return Output(cfg, audit.to_dict(), headers, rows, summary=summary), (EXIT_OK if audit.passed else EXIT_FAIL)


def cmd_umbrella_verify(cfg: RunConfig):
    report = umbrella.verify(cfg.height, cfg.pairs, cfg.sphere_points, cfg.seed, cfg.tolerance)
    rows = list(report.checks.items())
    summary = (f"{'PASS' if report.passed else 'FAIL'}: singular locus = "
               f"{{{', '.join(report.singular_points)}}} on {report.grid_points} grid points")
    return Output(cfg, report.to_dict(), ("check", "ok"), rows, summary=summary), (EXIT_OK if report.passed else EXIT_FAIL)


def cmd_corollary_compare(cfg: RunConfig):
    if cfg.k is None:
        raise ValueError("corollary-compare needs --k")
    report = ranks.corollary_compare(cfg.k, cfg.r, cfg.max_degree)
    rows = [(j, d, p, "yes" if ok else "NO") for j, d, p, ok in report.rows]
    return Output(cfg, report.to_dict(), ("j", "derived", "printed", "agree"), rows,
                  summary=report.summary()), EXIT_OK


COMMANDS = {
    "ranks": cmd_ranks,
    "cobordism-rank": cmd_cobordism_rank,
    "e1-page": cmd_e1_page,
    "segal-audit": cmd_segal_audit,
    "odd-torsion-audit": cmd_odd_torsion_audit,
    "umbrella-verify": cmd_umbrella_verify,
    "corollary-compare": cmd_corollary_compare,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primcob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=FORMATS, default="table")
        return sp

    sp = add("ranks", "rank of pi_j of the classifying space for j = 1..max-degree")
    sp.add_argument("--flavor", default="oriented", help="oriented/so or quaternionic/sp")
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int, default=0)
    sp.add_argument("--max-degree", type=int, default=RunConfig.max_degree)

    sp = add("cobordism-rank", "rank of the prim cobordism group of a target with given Betti numbers")
    sp.add_argument("--betti", required=True, help='JSON file {"dimension": d, "betti": [b0, ..., bd]}')
    sp.add_argument("--flavor", default="oriented")
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int, default=0)

    sp = add("e1-page", "E1 page of the quaternionic singularity spectral sequence")
    sp.add_argument("--p-max", type=int, default=RunConfig.p_max)
    sp.add_argument("--q-max", type=int, default=RunConfig.q_max)

    sp = add("segal-audit", "differential orders compatible with Segal's index h(p)")
    sp.add_argument("--p", type=int, default=RunConfig.p)

    sp = add("odd-torsion-audit", "check that odd torsion in total degree <= i-max is killed")
    sp.add_argument("--i-max", type=int, default=RunConfig.i_max)

    for name in ("e1-page", "segal-audit", "odd-torsion-audit"):
        sp = sub.choices[name]
        sp.add_argument("--stems", help="JSON stem extension file")
        sp.add_argument("--include-p0", action="store_true", help="let differentials reach the p=0 column")

    sp = add("umbrella-verify", "exact checks on the Whitney umbrella and its lift")
    sp.add_argument("--height", type=int, default=RunConfig.height)
    sp.add_argument("--pairs", type=int, default=RunConfig.pairs)
    sp.add_argument("--sphere-points", type=int, default=RunConfig.sphere_points)
    sp.add_argument("--seed", type=int, default=RunConfig.seed)
    sp.add_argument("--tolerance", type=float, default=RunConfig.tolerance)

    sp = add("corollary-compare", "printed partition formula against the rank derivation")
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int, default=0)
    sp.add_argument("--max-degree", type=int, default=RunConfig.max_degree)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(args).items() if v is not None}
    try:
        cfg = RunConfig(**opts)
        out, code = COMMANDS[cfg.command](cfg)
    except ranks.UnsupportedFlavorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLAVOR
    except specseq.StemUnknownError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STEM
    except (OSError, ranks.BettiFormatError, specseq.StemTableError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, ranks.DimensionMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLAVOR
    print(out.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
