"""Command-line front end.

Subcommands: poly, subduct, sagbi, invariance, catalog, dh, verify.
Exit codes form a stable contract: 0 success, 1 usage or parse error,
2 incomplete SAGBI construction, 3 invariance failure.  All output is
deterministic under fixed flags; sampling seeds are explicit flags with
documented defaults, never wall-clock derived.  `--json` mirrors every
report as one object with `command`, `items` and `pass` fields.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction

from ._kernel import backend
from .group import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    ActionKind,
    check_invariant_sampled,
    check_invariant_symbolic,
    format_group_sample,
    pullback,
)
from .parsing import ParseError, format_poly, parse
from .poly import TermOrder, VariableSet
from .sagbi import eliminate, read_basis_file, sagbi_construct, subduct, write_basis_file
from .screw import (
    dh_invariants,
    parse_multiscrew,
    screw_varset,
    se3_generator_catalog,
    so3_sagbi_catalog,
    translation_sagbi_catalog,
)
from .verification import run_paper_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCOMPLETE = 2
EXIT_INVARIANCE = 3

_GROUPS = {
    "se3": ActionKind.FULL_ADJOINT,
    "so3": ActionKind.ROTATION_SUB,
    "t3": ActionKind.TRANSLATION_SUB,
}


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures remapped onto the exit-code contract."""

    def error(self, message):
        raise _CliError(message, EXIT_USAGE)


def _float15(x: float) -> str:
    return f"{x:.15g}"


def _resolve_varset(args) -> VariableSet:
    if getattr(args, "vars", None):
        names = args.vars.replace(",", " ").split()
        return VariableSet(names)
    if getattr(args, "screws", None):
        return screw_varset(args.screws)
    raise _CliError("give a variable context: --screws M or --vars LIST")


def cmd_poly(args) -> tuple[int, list[str], dict]:
    vs = _resolve_varset(args)
    order = TermOrder(vs, args.order.replace(",", " ").split()) if args.order else vs.default_order()
    f = parse(args.expr, vs)
    if args.eval is not None:
        if args.format:
            raise _CliError("--format and --eval are mutually exclusive")
        point = {}
        for piece in args.eval.split(","):
            if not piece.strip():
                continue
            name, _, value = piece.partition("=")
            if not _:
                raise _CliError(f"bad assignment {piece!r}, expected name=value")
            point[name.strip()] = Fraction(value.strip())
        value = f.evaluate(point)
        return EXIT_OK, [str(value)], {"value": str(value)}
    text = format_poly(f, order)
    return EXIT_OK, [text], {"formatted": text}


def cmd_subduct(args) -> tuple[int, list[str], dict]:
    with open(args.basis) as handle:
        basis, _ = read_basis_file(handle)
    f = parse(args.poly, basis.order.varset)
    result = subduct(f, basis)
    lines = [f"remainder: {format_poly(result.remainder, basis.order)}"]
    cert_items = []
    for exps, coeff in sorted(result.certificate.terms.items()):
        factors = " * ".join(
            f"g{i + 1}^{e}" if e > 1 else f"g{i + 1}" for i, e in enumerate(exps) if e
        )
        cert_items.append({"coefficient": str(coeff), "product": factors or "1"})
        lines.append(f"certificate: {coeff} * {factors or '1'}")
    if not cert_items:
        lines.append("certificate: (empty)")
    lines.append(f"member: {'yes' if result.remainder.is_zero() else 'no'}")
    payload = {
        "remainder": format_poly(result.remainder, basis.order),
        "certificate": cert_items,
        "member": result.remainder.is_zero(),
    }
    return EXIT_OK, lines, payload


def cmd_sagbi(args) -> tuple[int, list[str], dict]:
    with open(args.generators) as handle:
        seed, _ = read_basis_file(handle)
    result = sagbi_construct(seed, degree_bound=args.degree_bound, max_iterations=args.max_iter)
    if args.eliminate:
        block = args.eliminate.replace(",", " ").split()
        result = eliminate(result, block)
    buf = io.StringIO()
    write_basis_file(
        buf,
        result.basis,
        complete=result.complete,
        degree_bound=result.degree_bound,
        iterations=result.iterations,
    )
    lines = buf.getvalue().splitlines()
    payload = {
        "complete": result.complete,
        "degree_bound": result.degree_bound,
        "iterations": result.iterations,
        "basis": [format_poly(g, result.basis.order) for g in result.basis],
    }
    return (EXIT_OK if result.complete else EXIT_INCOMPLETE), lines, payload


def cmd_invariance(args) -> tuple[int, list[str], dict]:
    kind = _GROUPS[args.group]
    vs = screw_varset(args.screws)
    f = parse(args.poly, vs)
    if args.mode == "symbolic":
        ok = check_invariant_symbolic(f, kind, args.screws)
        detail = "symbolic identity holds" if ok else "symbolic difference is nonzero"
        lines = [f"{'PASS' if ok else 'FAIL'}: {detail}"]
        payload = {"invariant": ok, "mode": "symbolic"}
        return (EXIT_OK if ok else EXIT_INVARIANCE), lines, payload
    check = check_invariant_sampled(f, kind, args.screws, n_samples=args.samples, seed=args.seed)
    payload = {"invariant": check.ok, "mode": "sample", "samples": args.samples, "seed": args.seed}
    if check.ok:
        return EXIT_OK, [f"PASS: {args.samples} samples, seed {args.seed:#x}"], payload
    ce = check.counterexample
    lines = [
        "FAIL: counterexample found",
        f"  element: {format_group_sample(ce.quaternion, ce.translation)}",
        "  screw:",
    ]
    from .screw import format_multiscrew

    lines.extend("    " + line for line in format_multiscrew(ce.screw).splitlines())
    lines.append(f"  f(s) = {ce.before}, f(g.s) = {ce.after}")
    payload["counterexample"] = {
        "element": format_group_sample(ce.quaternion, ce.translation),
        "screw": format_multiscrew(ce.screw).splitlines(),
        "before": str(ce.before),
        "after": str(ce.after),
    }
    return EXIT_INVARIANCE, lines, payload


def cmd_catalog(args) -> tuple[int, list[str], dict]:
    m = args.screws
    if args.which == "se3":
        catalog = se3_generator_catalog(m)
    elif args.which == "t3":
        catalog = translation_sagbi_catalog(m)
    elif args.which == "so3":
        catalog = so3_sagbi_catalog(m)
    else:  # pullback: translation pullback images as a ready SAGBI seed file
        system = pullback(ActionKind.TRANSLATION_SUB, m)
        buf = io.StringIO()
        write_basis_file(buf, system.seed_generators())
        lines = buf.getvalue().splitlines()
        payload = {"order": list(system.order.priority), "images": lines[1:]}
        return EXIT_OK, lines, payload
    lines = []
    if catalog.conjectural:
        lines.append("# conjectural: generation is not certified")
    if catalog.complete is None:
        lines.append("# completeness: unknown")
    for note in catalog.notes:
        lines.append(f"# note: {note}")
    for name, p in catalog:
        lines.append(f"{format_poly(p)}  # {name}")
    payload = {
        "which": args.which,
        "screws": m,
        "conjectural": catalog.conjectural,
        "complete": catalog.complete,
        "notes": list(catalog.notes),
        "entries": [{"name": name, "poly": format_poly(p)} for name, p in catalog],
    }
    return EXIT_OK, lines, payload


def cmd_dh(args) -> tuple[int, list[str], dict]:
    with open(args.pair) as handle:
        pair = parse_multiscrew(handle.read())
    if len(pair) != 2:
        raise _CliError("the DH pair file must hold exactly two screws")
    report = dh_invariants(pair)
    w11, w12, w22 = report.dots
    lines = [
        f"dots: w1.w1 = {w11}, w1.w2 = {w12}, w2.w2 = {w22}",
        f"klein_cross: {report.klein_cross}",
        f"cos_alpha: {report.cos_alpha.num} / sqrt({report.cos_alpha.radicand})",
        f"d_sin_alpha: {report.d_sin_alpha.num} / sqrt({report.d_sin_alpha.radicand})",
        f"alpha: {_float15(report.alpha_float)} rad",
    ]
    if report.parallel_axes:
        lines.append("displacement: undefined (parallel axes, sin alpha = 0)")
    else:
        lines.append(
            f"displacement: {report.displacement.num} / sqrt({report.displacement.radicand})"
            f" = {_float15(report.d_float)}"
        )
    payload = {
        "dots": [str(v) for v in report.dots],
        "klein_cross": str(report.klein_cross),
        "cos_alpha": {"num": str(report.cos_alpha.num), "radicand": str(report.cos_alpha.radicand)},
        "d_sin_alpha": {
            "num": str(report.d_sin_alpha.num),
            "radicand": str(report.d_sin_alpha.radicand),
        },
        "alpha_float": _float15(report.alpha_float),
        "parallel_axes": report.parallel_axes,
        "d_float": None if report.d_float is None else _float15(report.d_float),
    }
    return EXIT_OK, lines, payload


def cmd_verify(args) -> tuple[int, list[str], dict]:
    if args.suite != "paper":
        raise _CliError(f"unknown suite {args.suite!r}")
    items = run_paper_suite()
    width = max(len(item.name) for item in items)
    lines = [f"{'PASS' if i.passed else 'FAIL'}  {i.name:<{width}}  {i.detail}" for i in items]
    ok = all(i.passed for i in items)
    lines.append(f"{'all items passed' if ok else 'FAILURES PRESENT'} ({backend()} kernel)")
    payload = {
        "items": [
            {"name": i.name, "passed": i.passed, "detail": i.detail} for i in items
        ],
        "pass": ok,
    }
    return (EXIT_OK if ok else EXIT_INVARIANCE), lines, payload


def build_parser() -> _Parser:
    parser = _Parser(prog="screwinv", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def sub(name: str, **kwargs):
        p = subparsers.add_parser(name, **kwargs)
        # accepted after the subcommand too; SUPPRESS keeps the global value
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help="emit one JSON object")
        return p

    p = sub("poly", help="format or evaluate a polynomial")
    p.add_argument("expr")
    p.add_argument("--screws", type=int, help="use the m-screw w/v variable set")
    p.add_argument("--vars", help="explicit variable list (space or comma separated)")
    p.add_argument("--order", help="lex priority override")
    p.add_argument("--format", action="store_true", help="canonical form (the default)")
    p.add_argument("--eval", help="assignment name=value,... for exact evaluation")
    p.set_defaults(func=cmd_poly)

    p = sub("subduct", help="subduct a polynomial against a basis file")
    p.add_argument("--basis", required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_subduct)

    p = sub("sagbi", help="degree-bounded SAGBI construction from a file")
    p.add_argument("generators")
    p.add_argument("--degree-bound", type=int, default=4)
    p.add_argument("--max-iter", type=int, default=16)
    p.add_argument("--eliminate", help="drop generators touching these leading variables")
    p.set_defaults(func=cmd_sagbi)

    p = sub("invariance", help="check invariance of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--group", choices=sorted(_GROUPS), required=True)
    p.add_argument("--screws", type=int, required=True)
    p.add_argument("--mode", choices=["symbolic", "sample"], default="symbolic")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    p.set_defaults(func=cmd_invariance)

    p = sub("catalog", help="dump an invariant catalog")
    p.add_argument("--screws", type=int, required=True)
    p.add_argument("--which", choices=["se3", "t3", "so3", "pullback"], required=True)
    p.set_defaults(func=cmd_catalog)

    p = sub("dh", help="exact DH pair invariants from a screw file")
    p.add_argument("--pair", required=True)
    p.set_defaults(func=cmd_dh)

    p = sub("verify", help="run the reproduction suite")
    p.add_argument("--suite", default="paper")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, lines, payload = args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        obj = {"command": args.command, "pass": code == EXIT_OK}
        items = payload.pop("items", None)
        obj["items"] = items if items is not None else [payload]
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
