"""Command line surface.

Every invocation emits exactly one envelope on standard output. In machine
format the envelope is a single-line JSON document with floats rendered to
17 significant digits (enough to round-trip any double); in text format it
is a human-readable rendering of the same content.

Exit codes: 0 success, 1 usage or input error, 2 validation failure (a
verification command ran but its checks did not pass).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .experiment import (
    ALPHA,
    Behavior,
    CrossReport,
    ExperimentConfig,
    Tally,
    UniformityResult,
    ValidityError,
    chi_square_uniform,
    cross_validate,
    run,
)
from .devices import born, prepare
from .logic import Proposition, decide, partition_table
from .modmath import Dimension, DimensionMismatch, NotPrimeError
from .mub import MubReport, verify

SCHEMA_VERSION = "1.0.0"
MAX_TEXT_TABLE_D = 7


# ---------------------------------------------------------------------------
# serialization


def to_json(value) -> str:
    """Render a plain-python document as JSON with 17-significant-digit floats."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            raise ValueError("only finite numbers are serializable")
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in value) + "]"
    raise TypeError(f"unserializable value: {value!r}")


def _behavior_doc(behavior: Behavior) -> dict:
    return {"kind": behavior.kind, "outcome": behavior.outcome}


def _uniformity_doc(result: UniformityResult) -> dict:
    return {
        "chi_square_statistic": float(result.chi_square_statistic),
        "degrees_of_freedom": int(result.degrees_of_freedom),
        "critical_value": float(result.critical_value),
        "alpha": ALPHA,
        "verdict": result.verdict.value,
    }


def _mub_report_doc(d: int, report: MubReport) -> dict:
    return {
        "d": d,
        "tol": float(report.tol),
        "max_orthonormality_deviation": float(report.max_orthonormality_deviation),
        "max_unbiasedness_deviation": float(report.max_unbiasedness_deviation),
        "max_eigen_residual": float(report.max_eigen_residual),
        "max_shift_residual": float(report.max_shift_residual),
        "passed": report.passed,
    }


def _cross_report_doc(report: CrossReport) -> dict:
    return {
        "d": report.dim.d,
        "tol": float(report.tol),
        "cells": [
            {
                "axiom": [cell.axiom.a, cell.axiom.b.value],
                "measure": cell.m,
                "predicted": _behavior_doc(cell.predicted),
                "observed": _behavior_doc(cell.observed),
                "agree": cell.agree,
                "born_vs_counting_deviation": float(cell.born_vs_counting_deviation),
            }
            for cell in report.cells
        ],
        "disagreements": report.disagreements,
        "max_born_vs_counting_deviation": float(report.max_born_vs_counting_deviation),
    }


# ---------------------------------------------------------------------------
# table rendering


def relation_label(a: int, d: int) -> str:
    if a == d:
        return "f(0) = b"
    if a == 0:
        return "f(1) = b"
    if a == 1:
        return "f(1) = f(0) + b"
    return f"f(1) = {a} f(0) + b"


def render_table_text(dim: Dimension) -> str:
    """Fixed-layout text table; each cell lists its pairs f(0)f(1)."""
    d = dim.d
    if d > MAX_TEXT_TABLE_D:
        raise ValueError(
            f"text table rendering is defined for d <= {MAX_TEXT_TABLE_D}; "
            "use --format machine"
        )
    table = partition_table(dim)
    labels = [relation_label(a, d) for a in range(d + 1)]
    label_width = max(len(label) for label in labels)
    cell_width = 3 * d - 1

    lines = [f"Partition table for d = {d} (pairs f(0)f(1); arithmetic mod {d})", ""]
    prefix_width = len(f"a={d}  ") + label_width + len(" : ")
    header_cells = "   ".join(f"b={b}".ljust(cell_width) for b in range(d))
    lines.append((" " * prefix_width + header_cells).rstrip())
    for a in range(d + 1):
        cells = " | ".join(
            " ".join(f"{f.f0.value}{f.f1.value}" for f in table[a][b])
            for b in range(d)
        )
        lines.append(f"a={a}  {labels[a].ljust(label_width)} : {cells}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise UsageError(message)


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated integers, got {text!r}"
        )
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated integers, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mublogic", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--d", type=int, required=True, help="prime dimension")
        sub.add_argument(
            "--format",
            choices=("text", "machine"),
            default="text",
            help="output rendering (default: text)",
        )
        return sub

    add("table", "render the (d+1) x d partition table of function groups")

    sub = add("verify-mub", "verify the d+1 mutually unbiased bases numerically")
    sub.add_argument("--tol", type=float, default=1e-10, help="pass tolerance")

    sub = add("decide", "decide a theorem relative to an axiom by enumeration")
    sub.add_argument("--axiom", type=_pair, required=True, metavar="A,B")
    sub.add_argument("--theorem", type=_pair, required=True, metavar="M,N")

    sub = add("probs", "exact Born probabilities for an encoded axiom")
    sub.add_argument("--axiom", type=_pair, required=True, metavar="A,B")
    sub.add_argument("--measure", type=int, required=True, metavar="M")

    sub = add("run", "seeded multi-trial sampling experiment")
    sub.add_argument("--axiom", type=_pair, required=True, metavar="A,B")
    sub.add_argument("--measure", type=int, required=True, metavar="M")
    sub.add_argument("--trials", type=int, required=True)
    sub.add_argument("--seed", type=int, required=True)

    sub = add("cross-validate", "sweep all axiom/measurement cells for agreement")
    sub.add_argument("--tol", type=float, default=1e-9, help="classification tolerance")

    return parser


def _parameters(args: argparse.Namespace) -> dict:
    params: dict = {"d": args.d}
    for name in ("axiom", "theorem"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = list(value)
    for name in ("measure", "trials", "seed", "tol"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    return params


# ---------------------------------------------------------------------------
# command handlers: each returns (payload, failure_message, text)


def _cmd_table(args):
    dim = Dimension(args.d)
    table = partition_table(dim)
    payload = {
        "d": dim.d,
        "labels": [relation_label(a, dim.d) for a in range(dim.d + 1)],
        "cells": [
            [[list(f.pair) for f in cell] for cell in row] for row in table
        ],
    }
    text = render_table_text(dim) if args.format == "text" else ""
    return payload, None, text


def _cmd_verify_mub(args):
    dim = Dimension(args.d)
    report = verify(dim, args.tol)
    payload = _mub_report_doc(dim.d, report)
    failure = None if report.passed else (
        f"MUB verification failed: max deviation {report.max_deviation:.3e} "
        f"exceeds tolerance {args.tol:g}"
    )
    lines = [
        f"MUB verification for d = {dim.d} (tolerance {args.tol:g})",
        f"  max orthonormality deviation : {report.max_orthonormality_deviation:.3e}",
        f"  max unbiasedness deviation   : {report.max_unbiasedness_deviation:.3e}",
        f"  max eigenvector residual     : {report.max_eigen_residual:.3e}",
        f"  max shift residual           : {report.max_shift_residual:.3e}",
        "PASS" if report.passed else "FAIL",
    ]
    return payload, failure, "\n".join(lines) + "\n"


def _cmd_decide(args):
    dim = Dimension(args.d)
    axiom = Proposition.of(args.axiom[0], args.axiom[1], dim)
    theorem = Proposition.of(args.theorem[0], args.theorem[1], dim)
    verdict = decide(axiom, theorem)
    payload = {
        "d": dim.d,
        "axiom": list(args.axiom),
        "theorem": list(args.theorem),
        "decidability": verdict.value,
    }
    text = (
        f"axiom {{{axiom.a},{axiom.b.value}}}, theorem "
        f"{{{theorem.a},{theorem.b.value}}}, d={dim.d}: {verdict.value}\n"
    )
    return payload, None, text


def _cmd_probs(args):
    dim = Dimension(args.d)
    axiom = Proposition.of(args.axiom[0], args.axiom[1], dim)
    dist = born(prepare(axiom), args.measure)
    payload = {
        "d": dim.d,
        "axiom": list(args.axiom),
        "measure": args.measure,
        "probabilities": [float(p) for p in dist.probabilities],
    }
    lines = [
        f"Born probabilities for axiom {{{axiom.a},{axiom.b.value}}}, "
        f"measurement m={args.measure}, d={dim.d}"
    ]
    lines += [
        f"  n={n}: {float(p):.12g}" for n, p in enumerate(dist.probabilities)
    ]
    return payload, None, "\n".join(lines) + "\n"


def _cmd_run(args):
    dim = Dimension(args.d)
    axiom = Proposition.of(args.axiom[0], args.axiom[1], dim)
    config = ExperimentConfig(dim, axiom, args.measure, args.trials, args.seed)
    tally = run(config)
    # the uniformity test has a validity floor; below it the tally is still
    # reported, just without a verdict
    uniformity = None
    if args.trials >= 5 * dim.d and dim.d - 1 <= 30:
        uniformity = chi_square_uniform(tally)
    payload = {
        "d": dim.d,
        "axiom": list(args.axiom),
        "measure": args.measure,
        "trials": args.trials,
        "seed": args.seed,
        "counts": list(tally.counts),
        "uniformity": None if uniformity is None else _uniformity_doc(uniformity),
    }
    lines = [
        f"counts for axiom {{{axiom.a},{axiom.b.value}}}, m={args.measure}, "
        f"d={dim.d}, trials={args.trials}, seed={args.seed}"
    ]
    lines += [f"  n={n}: {c}" for n, c in enumerate(tally.counts)]
    if uniformity is None:
        lines.append(
            f"chi-square skipped: needs at least {5 * dim.d} trials for a verdict"
        )
    else:
        lines.append(
            f"chi-square statistic {uniformity.chi_square_statistic:.6g} "
            f"(df {uniformity.degrees_of_freedom}, critical "
            f"{uniformity.critical_value:g} at alpha {ALPHA}): "
            f"{uniformity.verdict.value}"
        )
    return payload, None, "\n".join(lines) + "\n"


def _cmd_cross_validate(args):
    dim = Dimension(args.d)
    report = cross_validate(dim, args.tol)
    payload = _cross_report_doc(report)
    failure = None
    if not report.all_agree:
        failure = f"cross-validation found {report.disagreements} disagreeing cells"
    lines = [
        f"cross-validation for d = {dim.d} (classification tolerance {args.tol:g})",
        f"  cells checked           : {len(report.cells)}",
        f"  disagreements           : {report.disagreements}",
        f"  max |born - counting/d| : {report.max_born_vs_counting_deviation:.3e}",
    ]
    for cell in report.cells:
        if not cell.agree:
            lines.append(
                f"  DISAGREE axiom {{{cell.axiom.a},{cell.axiom.b.value}}} m={cell.m}: "
                f"predicted {cell.predicted.kind}, observed {cell.observed.kind}"
            )
    lines.append("PASS" if report.all_agree else "FAIL")
    return payload, failure, "\n".join(lines) + "\n"


_HANDLERS = {
    "table": _cmd_table,
    "verify-mub": _cmd_verify_mub,
    "decide": _cmd_decide,
    "probs": _cmd_probs,
    "run": _cmd_run,
    "cross-validate": _cmd_cross_validate,
}


def _envelope(command: str, parameters: dict, status: str, payload, error_message=None) -> dict:
    env = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "status": status,
        "payload": payload,
    }
    if error_message is not None:
        env["error_message"] = error_message
    return env


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    parameters = _parameters(args)
    try:
        payload, failure, text = _HANDLERS[args.command](args)
    except (NotPrimeError, DimensionMismatch, ValidityError, ValueError) as exc:
        envelope = _envelope(args.command, parameters, "error", None, str(exc))
        if args.format == "machine":
            print(to_json(envelope))
        else:
            print(f"error: {exc}")
        return 1

    if failure is None:
        envelope = _envelope(args.command, parameters, "ok", payload)
        code = 0
    else:
        envelope = _envelope(args.command, parameters, "error", payload, failure)
        code = 2

    if args.format == "machine":
        print(to_json(envelope))
    else:
        sys.stdout.write(text)
    return code


def entrypoint() -> None:
    sys.exit(main())
