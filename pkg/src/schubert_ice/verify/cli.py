"""Command line entry point ``schubert-ice``."""

from __future__ import annotations

import argparse
import json
import sys

from .. import bpd as B
from ..ideal import DEFAULT_BUDGET
from ..perm import as_perm, transition
from ..poly import InexactDivision, OrderError, schubert_bpd, schubert_oracle
from .checks import CHECKS, check_block, check_cdg, check_conjecture1, check_recurrence
from .report import FAIL, SKIPPED
from .scan import scan

EXIT_PASS, EXIT_FAIL, EXIT_ERROR, EXIT_SKIPPED = 0, 1, 2, 3


def _perm(text: str):
    try:
        return as_perm(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _exit_for(outcomes) -> int:
    outcomes = list(outcomes)
    if any(o == FAIL for o in outcomes):
        return EXIT_FAIL
    if outcomes and all(o == SKIPPED for o in outcomes):
        return EXIT_SKIPPED
    return EXIT_PASS


def _emit_report(rep, as_json: bool) -> int:
    if as_json:
        print(rep.dumps())
    else:
        print(rep.summary_line())
        for key, val in rep.witnesses.items():
            print(f"  {key}: {val}")
    return _exit_for([rep.outcome])


def cmd_bpd(args) -> int:
    bpds = sorted(B.enumerate_bpds(args.w), key=lambda P: P.grid)
    if args.count:
        print(len(bpds))
    elif args.json:
        print(json.dumps([P.to_json() for P in bpds]))
    else:
        for k, P in enumerate(bpds):
            if k:
                print()
            print(B.render_ascii(P))
    return EXIT_PASS


def cmd_poly(args) -> int:
    f = schubert_bpd(args.w) if args.method == "bpd" else schubert_oracle(args.w)
    print(json.dumps(f.to_json()) if args.json else f)
    return EXIT_PASS


def cmd_transition(args) -> int:
    t = transition(args.w)
    data = {"w": str(t.w), "r": t.r, "s": t.s, "v": str(t.v), "phi": [str(u) for u in t.phi]}
    if args.json:
        print(json.dumps(data))
    else:
        print(f"S_{t.w} = (x{t.r} - y{t.s}) S_{t.v}" + "".join(f" + S_{u}" for u in t.phi))
    return EXIT_PASS


def cmd_cdg(args) -> int:
    return _emit_report(check_cdg(args.w, args.order, args.budget), args.json)


def cmd_conjecture1(args) -> int:
    return _emit_report(check_conjecture1(args.w, args.order, args.budget), args.json)


def cmd_recurrence(args) -> int:
    return _emit_report(check_recurrence(args.w, args.order), args.json)


def cmd_block(args) -> int:
    return _emit_report(check_block(args.u, args.v, args.order, args.budget), args.json)


def cmd_scan(args) -> int:
    if args.sample is not None and args.sample < 1:
        raise SystemExit("--sample must be positive")
    summary = scan(args.n, args.check, args.order, args.jobs, args.sample, args.seed, args.budget)
    if args.json:
        print(json.dumps(summary.to_json(with_reports=args.reports), sort_keys=True))
    else:
        print(summary.summary_line())
        if summary.failing:
            print("  failing: " + " ".join(summary.failing))
        if summary.skipped:
            print("  skipped: " + " ".join(summary.skipped))
    return _exit_for(r.outcome for r in summary.reports)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubert-ice", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def order_opts(sp):
        sp.add_argument("--order", default="row-lex", help="row-lex, col-lex, antidiag or custom:<z-order>")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on monomial operations")

    sp = sub.add_parser("bpd", help="list the bumpless pipe dreams of w")
    sp.add_argument("w", type=_perm)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--json", action="store_true")
    g.add_argument("--render", choices=["ascii"], default="ascii")
    sp.set_defaults(func=cmd_bpd)

    sp = sub.add_parser("poly", help="double Schubert polynomial of w")
    sp.add_argument("w", type=_perm)
    sp.add_argument("--method", choices=["bpd", "oracle"], default="bpd")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("transition", help="transition at the largest inversion")
    sp.add_argument("w", type=_perm)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_transition)

    for name, func, text in (
        ("cdg", cmd_cdg, "are the CDG generators a Groebner basis"),
        ("conjecture1", cmd_conjecture1, "components of init I_w against BPD diagrams"),
    ):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("w", type=_perm)
        order_opts(sp)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("recurrence", help="monomial ideal recurrence for block predominant w")
    sp.add_argument("w", type=_perm)
    sp.add_argument("--order", default="row-lex")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_recurrence)

    sp = sub.add_parser("block", help="block sum laws for partial permutations u and v")
    sp.add_argument("u", type=_perm)
    sp.add_argument("v", type=_perm)
    order_opts(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_block)

    sp = sub.add_parser("scan", help="run a check over S_n")
    sp.add_argument("n", type=int)
    sp.add_argument("--check", required=True, choices=sorted(CHECKS))
    order_opts(sp)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--sample", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--reports", action="store_true", help="include per-permutation reports in JSON")
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OrderError, InexactDivision, ArithmeticError) as exc:
        print(f"schubert-ice: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
