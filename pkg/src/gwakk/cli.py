"""Command-line front end.

Exit codes: 0 success, 1 open verdict under --strict, 2 usage error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import expr as _expr
from .classify import EXAMPLES, certificate, classify, named_example, registry
from .gwa import GWA, eval_to_normal_form
from .poly import parse_poly
from .scalar import get_field

EXIT_OK, EXIT_OPEN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

WORD_ORDER_NOTE = (
    "Products are read left to right and never reordered. Relations: x p = sigma(p) x, "
    "y p = sigma^-1(p) y, y x = P, x y = sigma(P). For the Weyl example (sigma(h) = h - 1, "
    "P = h) this gives x*y - y*x = -1; the usual Weyl relation is recovered by swapping x and y."
)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _add_presentation_flags(p: argparse.ArgumentParser):
    g = p.add_argument_group("presentation")
    g.add_argument("--example", help="named example: " + ", ".join(EXAMPLES))
    g.add_argument("--lambda", dest="lam", help="parameter of b-lambda")
    g.add_argument("--k", type=int, help="parameter k of wpq")
    g.add_argument("--l", type=int, help="parameter l of wpq")
    g.add_argument("--mode", choices=("rational", "generic"), help="base field (default rational)")
    g.add_argument("--q", help="sigma(h) = q*h + h0 (default 1)")
    g.add_argument("--h0", help="translation part of sigma (default 0)")
    g.add_argument("--poly", help="defining polynomial P in h")
    g.add_argument("--presentation", metavar="FILE",
                   help='JSON file {"mode": ..., "q": ..., "h0": ..., "poly": ...}')


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")


def presentation_from_args(args, default: str | None = None) -> GWA:
    chosen = [n for n in ("example", "poly", "presentation") if getattr(args, n, None) is not None]
    if len(chosen) > 1:
        raise UsageError("give only one of --example, --poly, --presentation")
    try:
        if args.presentation is not None:
            try:
                with open(args.presentation) as fh:
                    data = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read presentation file: {exc}") from exc
            if not isinstance(data, dict) or "poly" not in data:
                raise UsageError("presentation file needs at least a \"poly\" entry")
            return _from_params(data.get("mode", "rational"), data.get("q", "1"),
                                data.get("h0", "0"), data["poly"])
        if args.example is not None:
            return named_example(args.example, lam=args.lam, k=args.k, l=args.l,
                                 q=args.q, mode=args.mode)
        if args.poly is not None:
            return _from_params(args.mode or "rational", args.q or "1", args.h0 or "0", args.poly)
        if default is not None:
            return named_example(default)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError("no presentation given: use --example, --poly or --presentation")


def _from_params(mode, q, h0, poly) -> GWA:
    fld = get_field(mode)
    qv, h0v = fld.parse(str(q)), fld.parse(str(h0))
    if not qv:
        raise UsageError("automorphism parameter must be nonzero")
    return GWA.from_params(qv, h0v, parse_poly(str(poly), fld), mode)


# -- subcommands ------------------------------------------------------------------------

def _verdict_table(pres: GWA, verdict) -> str:
    v = verdict.to_json()
    lines = [f"presentation  sigma: {pres.sigma}, P = {pres.P} ({pres.field.name})"]
    if v["status"] == "classified":
        r = "-" if v["r"] is None else v["r"]
        lines += [f"class         {v['class']}", f"r             {r}",
                  f"k0, k1        {v['k0_rank']}, {v['k1_rank']}", f"case          {v['case']}"]
    else:
        lines += [f"class         open ({v['reason']})"]
    lines.append(f"reason        {v['citation']}")
    return "\n".join(lines)


def cmd_classify(args, out) -> int:
    if args.registry:
        data = {label: classify(p).to_json() for label, p in registry()}
        print(_dump(data), file=out)
        return EXIT_OK
    pres = presentation_from_args(args)
    verdict = classify(pres)
    if args.certificate:
        print(_dump(certificate(pres)), file=out)
    elif args.json:
        print(_dump(verdict.to_json()), file=out)
    else:
        print(_verdict_table(pres, verdict), file=out)
    return EXIT_OPEN if args.strict and verdict.status == "open" else EXIT_OK


def cmd_nf(args, out) -> int:
    pres = presentation_from_args(args, default="weyl")
    try:
        tree = _expr.parse(args.expr, pres.field.name)
        u = eval_to_normal_form(tree, pres)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    grading = {str(d): str(p) for d, p in sorted(u.components.items())}
    homogeneous = u.homogeneous_degree()
    if args.json:
        print(_dump({"normal_form": str(u), "components": grading,
                     "homogeneous_degree": homogeneous}), file=out)
        return EXIT_OK
    print(str(u), file=out)
    if args.grading:
        for d, p in sorted(u.components.items(), reverse=True):
            print(f"  degree {d:+d}: {u.algebra.element({d: p})}", file=out)
        if homogeneous is not None:
            print(f"  homogeneous of degree {homogeneous}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .suites import verify_all
    pres = presentation_from_args(args, default="weyl")
    suites = ("gwa", "rep", "toeplitz", "morita") if args.suite == "all" else (args.suite,)
    cases = args.cases
    try:
        report = verify_all(pres, cases=cases, seed=args.seed, truncation=args.truncation or 24,
                            max_deg=args.max_degree, morita_truncation=args.truncation or 32,
                            max_index=args.max_index, suites=suites)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.suite in ("rep", "morita") and any("skipped" in r for r in report["suites"].values()):
        raise UsageError("no faithful representation available for this presentation")
    print(_dump(report), file=out)
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def cmd_examples(args, out) -> int:
    if args.json:
        print(_dump(EXAMPLES), file=out)
    else:
        width = max(map(len, EXAMPLES))
        for name, text in EXAMPLES.items():
            print(f"{name.ljust(width)}  {text}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwakk", description="Generalized Weyl algebras: normal forms, checks and KK classification.",
        epilog=WORD_ORDER_NOTE)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a presentation", epilog=WORD_ORDER_NOTE)
    _add_presentation_flags(p)
    _add_common(p)
    p.add_argument("--strict", action="store_true", help="exit 1 on an open verdict")
    p.add_argument("--certificate", action="store_true", help="print the full certificate as JSON")
    p.add_argument("--registry", action="store_true", help="classify every registry entry (JSON)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("nf", help="normal form of an expression in h, x, y", epilog=WORD_ORDER_NOTE)
    _add_presentation_flags(p)
    _add_common(p)
    p.add_argument("--expr", required=True, help='expression such as "y*x" or "x*h^2 + 3/2"')
    p.add_argument("--grading", action="store_true", help="also print the degree decomposition")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("verify", help="run verification suites and print a JSON report")
    p.add_argument("suite", choices=("gwa", "rep", "toeplitz", "morita", "all"))
    _add_presentation_flags(p)
    _add_common(p)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--truncation", type=int, help="matrix size (default 24, morita 32)")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--max-index", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="list the named examples")
    _add_common(p)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "cases", 1) is not None and getattr(args, "cases", 1) < 1:
        print("gwakk: error: --cases must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"gwakk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
