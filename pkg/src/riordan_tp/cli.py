"""Command-line surface: generate triangles, check properties, list numbers.

Output is deterministic (identical inputs give byte-identical output) in
three formats: plain text, CSV, and a versioned JSON document.  Exact
rationals are rendered in lowest terms as ``p/q``, integers without the
``/1``.  Exit codes: 0 when the checked property holds, 1 when it fails
(with a witness section), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .exact import as_scalar
from .riordan import (
    RecursiveMatrixParams,
    RiordanSpec,
    build_triangle,
    catalan_like_numbers,
    named_triangle,
)
from .sequences import (
    MinorWitness,
    RootCountWitness,
    SequenceSpec,
    Tail,
    is_pf_finite,
    is_pf_r_window,
)
from .totalpos import (
    JacobiParams,
    TPReport,
    aigner_decomposition_check,
    column0_logconvex_check,
    jacobi_tp2_criterion,
    jacobi_tp_criterion,
    rows_logconcave_check,
    triangle_tp_check,
)

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2

SCHEMA_VERSION = 1

CHECK_SUBJECTS = (
    "tp",
    "tp2",
    "jacobi-tp",
    "jacobi-tp2",
    "logconvex-col0",
    "logconcave-rows",
    "pf",
    "hankel",
)


class UsageError(Exception):
    pass


def _scalar_text(value: Fraction) -> str:
    return str(value)


def _csv_cell(value: Fraction | str) -> str:
    text = str(value)
    return f'"{text}"' if "/" in text else text


def _parse_scalars(text: str, flag: str) -> tuple[Fraction, ...]:
    try:
        return tuple(as_scalar(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad value for {flag}: {exc}") from None


def _parse_order(text: str) -> int | None:
    if text.lower() == "all":
        return None
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"--order must be a positive integer or 'all', got {text!r}") from None
    if value < 1:
        raise UsageError("--order must be >= 1")
    return value


def _spec_from_args(args: argparse.Namespace) -> tuple[RiordanSpec, dict]:
    if args.name:
        try:
            return named_triangle(args.name), {"name": args.name}
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.z is None or args.a is None:
        raise UsageError("provide --name, or both --z and --a")
    tail = Tail.REPEAT_LAST if args.tail == "repeat" else Tail.ZERO
    try:
        spec = RiordanSpec(
            a_seq=SequenceSpec(_parse_scalars(args.a, "--a"), tail),
            z_seq=SequenceSpec(_parse_scalars(args.z, "--z"), tail),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return spec, {"z": args.z, "a": args.a, "tail": args.tail}


def _witness_payload(witness: MinorWitness | RootCountWitness | None) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, MinorWitness):
        return {
            "kind": "minor",
            "rows": list(witness.rows),
            "cols": list(witness.cols),
            "value": _scalar_text(witness.value),
        }
    return {
        "kind": "root-count",
        "distinct_real_roots": witness.distinct_real_roots,
        "squarefree_degree": witness.squarefree_degree,
    }


def _tp_payload(report: TPReport) -> dict:
    return {
        "holds": report.holds,
        "order": "all" if report.order is None else report.order,
        "shape": list(report.shape),
        "witness": _witness_payload(report.witness),
    }


def _emit(document: dict, lines: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(document, indent=2) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def _witness_lines(prefix: str, witness: MinorWitness | RootCountWitness | None, sep: str) -> list[str]:
    if witness is None:
        return []
    if isinstance(witness, MinorWitness):
        return [
            f"{prefix}witness rows{sep}{' '.join(map(str, witness.rows))}",
            f"{prefix}witness cols{sep}{' '.join(map(str, witness.cols))}",
            f"{prefix}witness value{sep}{_scalar_text(witness.value)}",
        ]
    return [
        f"{prefix}distinct real roots{sep}{witness.distinct_real_roots}",
        f"{prefix}squarefree degree{sep}{witness.squarefree_degree}",
    ]


def _cmd_gen(args: argparse.Namespace, out) -> int:
    if args.rows < 1:
        raise UsageError("--rows must be >= 1")
    spec, echo = _spec_from_args(args)
    triangle = build_triangle(spec, args.rows)
    rendered = [[_scalar_text(x) for x in row] for row in triangle.rows]
    document = {
        "schema": SCHEMA_VERSION,
        "command": "gen",
        "parameters": {**echo, "rows": args.rows},
        "result": {"rows": rendered},
    }
    if args.format == "csv":
        lines = [",".join(_csv_cell(x) for x in row) for row in rendered]
    else:
        lines = [" ".join(row) for row in rendered]
    _emit(document, lines, args.format, out)
    return EXIT_HOLDS


def _cmd_catalan_like(args: argparse.Namespace, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    values = _parse_scalars(args.params, "--params")
    if len(values) != 4:
        raise UsageError("--params must be the four values a,b,s,t")
    try:
        params = RecursiveMatrixParams(*values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    numbers = [_scalar_text(x) for x in catalan_like_numbers(params, args.count)]
    document = {
        "schema": SCHEMA_VERSION,
        "command": "catalan-like",
        "parameters": {"params": args.params, "count": args.count},
        "result": {"values": numbers},
    }
    if args.format == "csv":
        lines = [",".join(_csv_cell(x) for x in numbers)]
    else:
        lines = [" ".join(numbers)]
    _emit(document, lines, args.format, out)
    return EXIT_HOLDS


def _check_tp(args, order: int | None, echo: dict) -> tuple[bool, dict, list[str]]:
    spec, spec_echo = _spec_from_args(args)
    rows = args.rows if args.rows is not None else args.window
    if rows < 1:
        raise UsageError("--rows must be >= 1")
    try:
        report = triangle_tp_check(spec, order, rows, force=args.force)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    echo.update(spec_echo)
    echo["rows"] = rows
    echo["order"] = "all" if order is None else order
    holds = report.triangle.holds
    payload = {
        "holds": holds,
        "triangle": _tp_payload(report.triangle),
        "coefficient_matrix": _tp_payload(report.coefficient),
    }
    lines = [
        f"triangle holds: {str(report.triangle.holds).lower()}",
        f"coefficient matrix holds: {str(report.coefficient.holds).lower()}",
    ]
    lines += _witness_lines("triangle ", report.triangle.witness, ": ")
    lines += _witness_lines("coefficient ", report.coefficient.witness, ": ")
    return holds, payload, lines


def _check_jacobi(args, full_order: bool, echo: dict) -> tuple[bool, dict, list[str]]:
    values = _parse_scalars(args.params, "--params")
    if len(values) != 5:
        raise UsageError("--params must be the five values a,b,r,s,t")
    try:
        params = JacobiParams(*values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    holds = jacobi_tp_criterion(params) if full_order else jacobi_tp2_criterion(params)
    echo["params"] = args.params
    return holds, {"holds": holds}, []


def _check_column(args, echo: dict, convex: bool) -> tuple[bool, dict, list[str]]:
    spec, spec_echo = _spec_from_args(args)
    rows = args.rows if args.rows is not None else args.window
    if rows < 1:
        raise UsageError("--rows must be >= 1")
    echo.update(spec_echo)
    echo["rows"] = rows
    if convex:
        holds = column0_logconvex_check(spec, rows)
        return holds, {"holds": holds}, []
    report = rows_logconcave_check(spec, rows)
    payload = {"holds": report.holds, "first_failing_row": report.first_failing_row}
    lines = [] if report.holds else [f"first failing row: {report.first_failing_row}"]
    return report.holds, payload, lines


def _check_pf(args, echo: dict) -> tuple[bool, dict, list[str]]:
    if args.seq is None:
        raise UsageError("check pf needs --seq")
    values = _parse_scalars(args.seq, "--seq")
    echo["seq"] = args.seq
    try:
        if args.order is not None:
            order = _parse_order(args.order)
            if order is None:
                raise UsageError("check pf --order must be a finite order")
            tail = Tail.REPEAT_LAST if args.tail == "repeat" else Tail.ZERO
            spec = SequenceSpec(values, tail)
            verdict = is_pf_r_window(spec, order, args.window)
            echo["order"] = order
            echo["tail"] = args.tail
            echo["window"] = args.window
        else:
            verdict = is_pf_finite(values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"holds": verdict.holds, "witness": _witness_payload(verdict.witness)}
    return verdict.holds, payload, _witness_lines("", verdict.witness, ": ")


def _check_hankel(args, echo: dict) -> tuple[bool, dict, list[str]]:
    values = _parse_scalars(args.params, "--params")
    if len(values) != 4:
        raise UsageError("--params must be the four values a,b,s,t")
    try:
        params = RecursiveMatrixParams(*values)
        report = aigner_decomposition_check(params, args.window)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    echo["params"] = args.params
    echo["window"] = args.window
    mismatch = None
    lines: list[str] = []
    if report.mismatch is not None:
        i, j, hankel_value, product_value = report.mismatch
        mismatch = {
            "row": i,
            "col": j,
            "hankel": _scalar_text(hankel_value),
            "product": _scalar_text(product_value),
        }
        lines = [
            f"first mismatch at: {i} {j}",
            f"hankel entry: {_scalar_text(hankel_value)}",
            f"product entry: {_scalar_text(product_value)}",
        ]
    payload = {"holds": report.holds, "size": report.size, "mismatch": mismatch}
    return report.holds, payload, lines


def _cmd_check(args: argparse.Namespace, out) -> int:
    echo: dict = {"subject": args.subject}
    if args.subject == "tp":
        order = _parse_order(args.order) if args.order is not None else None
        holds, payload, extra = _check_tp(args, order, echo)
    elif args.subject == "tp2":
        holds, payload, extra = _check_tp(args, 2, echo)
    elif args.subject == "jacobi-tp":
        holds, payload, extra = _check_jacobi(args, True, echo)
    elif args.subject == "jacobi-tp2":
        holds, payload, extra = _check_jacobi(args, False, echo)
    elif args.subject == "logconvex-col0":
        holds, payload, extra = _check_column(args, echo, convex=True)
    elif args.subject == "logconcave-rows":
        holds, payload, extra = _check_column(args, echo, convex=False)
    elif args.subject == "pf":
        holds, payload, extra = _check_pf(args, echo)
    elif args.subject == "hankel":
        holds, payload, extra = _check_hankel(args, echo)
    else:  # argparse choices make this unreachable
        raise UsageError(f"unknown subject {args.subject!r}")
    document = {
        "schema": SCHEMA_VERSION,
        "command": "check",
        "parameters": echo,
        "result": payload,
    }
    lines = [f"subject: {args.subject}", f"holds: {str(holds).lower()}"] + extra
    if args.format == "csv":
        lines = [line.replace(": ", ",", 1) for line in lines]
    _emit(document, lines, args.format, out)
    return EXIT_HOLDS if holds else EXIT_FAILS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan-tp",
        description="Exact Riordan triangles, total positivity, and Polya frequency checks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_spec_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--name", help="one of the named triangles")
        p.add_argument("--z", help="comma-separated z-sequence prefix")
        p.add_argument("--a", help="comma-separated a-sequence prefix")
        p.add_argument("--tail", choices=("zero", "repeat"), default="zero",
                       help="tail rule for custom prefixes (default zero)")

    def add_format_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    gen = sub.add_parser("gen", help="print a triangle")
    add_spec_flags(gen)
    gen.add_argument("--rows", type=int, required=True)
    add_format_flag(gen)

    check = sub.add_parser("check", help="test a property; exit 0 holds, 1 fails")
    check.add_argument("subject", choices=CHECK_SUBJECTS)
    add_spec_flags(check)
    check.add_argument("--rows", type=int, help="window height (default --window)")
    check.add_argument("--order", help="minor order k, or 'all'")
    check.add_argument("--params", help="a,b,r,s,t for jacobi-*; a,b,s,t for hankel")
    check.add_argument("--seq", help="comma-separated finite sequence for pf")
    check.add_argument("--window", type=int, default=10,
                       help="leading-principal-window size (default 10)")
    check.add_argument("--force", action="store_true",
                       help="lift the full-scan size cap")
    add_format_flag(check)

    catalan = sub.add_parser("catalan-like", help="print column 0 of a recursive triangle")
    catalan.add_argument("--params", required=True, help="the four values a,b,s,t")
    catalan.add_argument("--count", type=int, required=True)
    add_format_flag(catalan)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    out = sys.stdout
    try:
        if args.subcommand == "gen":
            return _cmd_gen(args, out)
        if args.subcommand == "check":
            return _cmd_check(args, out)
        return _cmd_catalan_like(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
