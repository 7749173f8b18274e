"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import verify
from .classification import DiffeoType, classify
from .dsl import DSLError
from .invariants import (
    BRIESKORN,
    FAMILIES,
    FamilyDescriptor,
    InvalidDescriptor,
    bordism_class,
    c_squared_closed_form,
    c_squared_pairing,
    chern_class,
    eta_closed_form,
    eta_via_fixed_points,
    w2_report,
)
from .moduli import build_table, fmt_rational, to_csv, to_json, to_text
from .ring import (
    BUILTIN_SOURCES,
    SingularFormWarning,
    builtin,
    intersection_signature,
    pair_fundamental,
    parse_presentation,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _epsilons(token):
    return {"+1": (1,), "1": (1,), "-1": (-1,), "both": (1, -1)}[token]


def _descriptor(args):
    if args.family is None:
        raise UsageError("--family is required")
    try:
        if args.family == BRIESKORN:
            if args.d is None:
                raise UsageError("brieskorn family needs -d")
            return FamilyDescriptor.brieskorn(args.d)
        if args.k is None or args.l is None:
            raise UsageError(f"{args.family} family needs -k and -l")
        return FamilyDescriptor(args.family, k=args.k, l=args.l)
    except InvalidDescriptor as exc:
        raise UsageError(str(exc)) from None


def _yn(b):
    return "yes" if b else "no"


def cmd_invariants(args):
    f = _descriptor(args)
    eps_list = _epsilons(args.eps)
    report = {"manifold": str(f)}
    if f.is_bundle:
        rep = w2_report(f)
        report.update({
            "chern_class": str(chern_class(f)),
            "c_squared": c_squared_pairing(f),
            "c_squared_closed_form": c_squared_closed_form(f),
        })
    for eps in eps_list:
        report[f"bordism[eps={eps:+d}]"] = bordism_class(f, eps).canonical
        report[f"type[eps={eps:+d}]"] = str(classify(f, eps))
    report["eta_closed_form"] = str(eta_closed_form(f))
    report["eta_fixed_points"] = str(eta_via_fixed_points(f))
    if f.is_bundle:
        report.update({"base_w2_nonzero": rep.base_w2_nonzero,
                       "N_spin": rep.N_spin, "X_spin": rep.X_spin})
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        width = max(len(k) for k in report)
        for k, v in report.items():
            print(f"{k:<{width}}  {_yn(v) if isinstance(v, bool) else v}")
    return EXIT_OK


def cmd_classify(args):
    f = _descriptor(args)
    for eps in _epsilons(args.eps):
        print(f"{f}  eps={eps:+d}  [P]={bordism_class(f, eps).canonical}  type={classify(f, eps)}")
    return EXIT_OK


def cmd_enumerate(args):
    try:
        t = DiffeoType.parse(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.count < 1:
        raise UsageError("--count must be positive")
    eps_list = (1,) if t.kind == "Q" else _epsilons(args.eps)
    tables = [build_table(t, eps, args.count, args.allow_negative_r, args.parallel)
              for eps in eps_list]
    if not args.allow_negative_r:
        for table in tables:
            # every family has strictly growing |eta| in r >= 0
            assert table.distinct_count == len(table.rows), table
    out = {"table": to_text, "csv": to_csv, "json": to_json}[args.format](tables)
    sys.stdout.write(out)
    return EXIT_OK


def cmd_ring(args):
    try:
        if args.presentation:
            with open(args.presentation, encoding="utf-8") as fh:
                pres = parse_presentation(fh.read())
        else:
            pres = builtin(args.builtin)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    if args.eval is None:
        print(f"generators  {', '.join(f'{n}:{d}' for n, d in zip(pres.names, pres.degrees))}")
        print(f"ranks       {pres.ranks()}")
        print("basis       " + ", ".join(pres.format_monomial(m)
                                          for d in range(0, pres.top_degree + 1, 2)
                                          for m in pres.basis(d)))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", SingularFormWarning)
            sig = intersection_signature(pres)
        flag = "  (singular)" if caught else ""
        print(f"signature   {sig}{flag}")
        return EXIT_OK
    e = pres.parse(args.eval)
    print(f"normal form  {e}")
    print(f"pairing      {fmt_rational(pair_fundamental(e))}")
    return EXIT_OK


def cmd_verify(args):
    return EXIT_OK if verify.run_all() else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="s2s3inv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def descriptor_flags(sp):
        sp.add_argument("--family", choices=FAMILIES)
        sp.add_argument("-k", type=int)
        sp.add_argument("-l", type=int)
        sp.add_argument("-d", type=int)
        sp.add_argument("--eps", choices=("+1", "-1", "both"), default="both")

    sp = sub.add_parser("invariants", help="all invariants of one manifold")
    descriptor_flags(sp)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("classify", help="diffeomorphism type of one manifold")
    descriptor_flags(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("enumerate", help="representatives of a type with their eta invariants")
    sp.add_argument("--type", required=True, help="X0 X2 X4 X6 X8 Q0 Q2 Q4 Q6 Q8")
    sp.add_argument("--eps", choices=("+1", "-1", "both"), default="both")
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.add_argument("--allow-negative-r", action="store_true")
    sp.add_argument("--parallel", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("ring", help="evaluate in a presented cohomology ring")
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--builtin", choices=sorted(BUILTIN_SOURCES), default="caseI")
    src.add_argument("--presentation", metavar="PATH")
    sp.add_argument("--eval", metavar="EXPR")
    sp.set_defaults(func=cmd_ring)

    sp = sub.add_parser("verify", help="run every cross-check suite")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DSLError) as exc:
        print(f"s2s3inv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
