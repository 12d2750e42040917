"""Command line front end.

Exit codes: 0 success, 1 verification (or validation) failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import h1, h1_z2_dim
from .covers import classify, double_cover
from .errors import SeifertError
from .groups import tietze_simplify
from .rs import default_transversal, kernel_presentation
from .seifert import (
    TypeSymbol,
    format_seifert,
    fundamental_presentation,
    parse_seifert,
    require_valid,
    validate,
)
from .verify import FuzzConfig, fuzz, verify_cover
from .z2hom import enumerate_epimorphisms, is_valid, parse_hom

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(sym: str):
    try:
        return require_valid(parse_seifert(sym))
    except SeifertError as exc:
        raise UsageError(str(exc)) from None


def _load_phi(inv, text: str):
    p = fundamental_presentation(inv)
    try:
        phi = parse_hom(text, p)
    except SeifertError as exc:
        raise UsageError(str(exc)) from None
    if not is_valid(p, phi):
        raise UsageError(f"{text!r} does not define an epimorphism onto Z/2")
    return phi


def cmd_validate(args) -> int:
    try:
        inv = parse_seifert(args.symbol)
    except SeifertError as exc:
        raise UsageError(str(exc)) from None
    report = validate(inv)
    text = "ok" if report.ok else "\n".join(f"invalid: {v}" for v in report.violations)
    _emit(args, {"symbol": format_seifert(inv), "ok": report.ok, "violations": report.violations}, text)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_pi1(args) -> int:
    inv = _load(args.symbol)
    p = fundamental_presentation(inv)
    lines = [f"generators: {' '.join(p.generators)}", "relators:"]
    lines += [f"  {r}" for r in p.relators]
    lines.append(f"H1: {h1(p)}")
    payload = {"symbol": format_seifert(inv), "generators": list(p.generators),
               "relators": [str(r) for r in p.relators], "h1": h1(p).to_json()}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    inv = _load(args.symbol)
    p = fundamental_presentation(inv)
    rows = []
    for phi in enumerate_epimorphisms(p):
        case = classify(inv, phi)
        rows.append({"phi": str(phi), "case": case.to_json(),
                     "cover": format_seifert(double_cover(inv, phi))})
    dim = h1_z2_dim(p)
    text = "\n".join(f"{r['phi']}  {r['case']['tag']}  {r['cover']}" for r in rows)
    text += f"\n{len(rows)} epimorphisms (2^{dim} - 1)"
    _emit(args, {"symbol": format_seifert(inv), "h1_z2_dim": dim, "epimorphisms": rows}, text)
    return EXIT_OK


def _kernel_lines(inv, phi) -> list[str]:
    p = fundamental_presentation(inv)
    q = default_transversal(p, phi)
    k = kernel_presentation(p, phi, q)
    lines = [f"kernel presentation (q={q}):", f"  {k}", "simplified:", f"  {tietze_simplify(k)}"]
    return lines


def cmd_cover(args) -> int:
    inv = _load(args.symbol)
    phi = _load_phi(inv, args.phi)
    case = classify(inv, phi)
    cover = double_cover(inv, phi)
    lines = [format_seifert(cover)]
    if args.show_presentation:
        lines += _kernel_lines(inv, phi)
    payload = {"symbol": format_seifert(inv), "phi": str(phi), "case": case.to_json(),
               "cover": format_seifert(cover)}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    inv = _load(args.symbol)
    if args.phi is not None:
        phis = [_load_phi(inv, args.phi)]
    else:
        phis = enumerate_epimorphisms(fundamental_presentation(inv))
    reports = [verify_cover(inv, phi) for phi in phis]
    lines = []
    for phi, rep in zip(phis, reports):
        status = "PASS" if rep.passed else "FAIL"
        lines.append(f"{status} {rep.phi}  {rep.case.tag}  {format_seifert(rep.predicted)}"
                     f"  H1 predicted={rep.predicted_h1} oracle={rep.oracle_h1}")
        for f in rep.failures:
            lines.append(f"    {f['stage']}: expected {f['expected']}, got {f['got']}")
        if args.show_presentation:
            lines += ["    " + s for s in _kernel_lines(inv, phi)]
    ok = all(r.passed for r in reports)
    _emit(args, {"symbol": format_seifert(inv), "reports": [r.to_json() for r in reports], "pass": ok},
          "\n".join(lines) if lines else "no index-2 subgroups")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_fuzz(args) -> int:
    types = tuple(TypeSymbol(t) for t in args.types.split(",")) if args.types else tuple(TypeSymbol)
    cfg = FuzzConfig(count=args.count, seed=args.seed, max_n=args.max_n, max_e=args.max_e,
                     max_g=args.max_g, max_a=args.max_a, max_b=args.max_b, types=types)
    summary = fuzz(cfg, workers=args.workers)
    text = (f"cases={summary['cases']} epimorphisms={summary['epimorphisms']} "
            f"failures={len(summary['failures'])}")
    for f in summary["failures"]:
        text += f"\n  {f['symbol']} {f['phi']} {f['stage']}: expected {f['expected']}, got {f['got']}"
    _emit(args, summary, text)
    return EXIT_OK if not summary["failures"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-covers",
        description="Double covers of Seifert manifolds from their invariants.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a Seifert symbol")
    p.add_argument("symbol")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("pi1", parents=[common], help="print the fundamental group presentation")
    p.add_argument("symbol")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("enumerate", parents=[common], help="list all epimorphisms onto Z/2")
    p.add_argument("symbol")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("cover", parents=[common], help="Seifert invariants of one double cover")
    p.add_argument("symbol")
    p.add_argument("--phi", required=True, help="e.g. h=1,s1=1,s2=1")
    p.add_argument("--show-presentation", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", parents=[common], help="check covers against Reidemeister-Schreier")
    p.add_argument("symbol")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--phi")
    group.add_argument("--all", action="store_true", help="every epimorphism (default)")
    p.add_argument("--show-presentation", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", parents=[common], help="random cross-checking")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-e", type=int, default=3)
    p.add_argument("--max-g", type=int, default=2)
    p.add_argument("--max-a", type=int, default=9)
    p.add_argument("--max-b", type=int, default=9)
    p.add_argument("--types", help="comma-separated subset of o1,o2,n1,n2,n3,n4")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, SeifertError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
