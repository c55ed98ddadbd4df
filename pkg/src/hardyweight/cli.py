"""Command-line interface.

Subcommands expose the weight tables, exact series coefficients, the
verification battery, the eigenvalue scan, and the ground-state residual.
Results are emitted as CSV (with ``#``-prefixed metadata lines) or JSON;
both formats carry a schema tag, an echo of the invocation, the resolved
arguments, and identical numeric values (floats are rendered by repr in
either format, so they round-trip exactly).

Exit status: 0 on success, 1 when a requested check fails its tolerance,
2 on usage errors (click's default for bad options).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .eigen import TruncatedOperatorPair, min_generalized_eigenvalue
from .verify import VerificationConfig, ground_state_residual, run_verification
from .weights import (
    classical_weight,
    ground_state_weight,
    improved_weight,
    improved_weight_closed,
    improved_weight_series,
    series_coefficient,
)

_FORMAT = click.Choice(["csv", "json"])


def _command_echo() -> str:
    return " ".join(sys.argv[1:])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _record(schema: str, arguments: dict, columns: list[str], rows: list[list]) -> dict:
    return {
        "schema": schema,
        "command": _command_echo(),
        "arguments": arguments,
        "columns": columns,
        "rows": rows,
    }


def _render_csv(record: dict) -> str:
    lines = [
        f"# schema: {record['schema']}",
        f"# command: {record['command']}",
        f"# arguments: {json.dumps(record['arguments'])}",
        ",".join(record["columns"]),
    ]
    for row in record["rows"]:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit(record: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = json.dumps(record, indent=2) + "\n"
    else:
        text = _render_csv(record)
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


def _parse_sizes(ctx, param, value: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter("expected a comma-separated list of integers")
    if not sizes or any(s < 1 for s in sizes):
        raise click.BadParameter("sizes must be integers >= 1")
    return sizes


@click.group()
@click.version_option(package_name="hardyweight")
def main() -> None:
    """Improved discrete Hardy weight: tables, coefficients, verification."""


@main.command()
@click.option("--n-max", type=click.IntRange(min=1), default=10, show_default=True,
              help="Tabulate indices 1..N_MAX.")
@click.option("--k-max", type=click.IntRange(min=1), default=25, show_default=True,
              help="Series truncation order for the w_series column.")
@click.option("--precision", type=click.IntRange(min=1), default=None,
              help="Add an mpmath cross-check column at this many decimal digits.")
@click.option("--format", "fmt", type=_FORMAT, default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write to this file instead of stdout.")
def weights(n_max: int, k_max: int, precision: int | None, fmt: str, out: str | None) -> None:
    """Tabulate the improved weight, its series truncation, and the classical weight.

    The series column starts at n = 2 (the expansion does not converge at
    n = 1) and the ratio column shows w_improved / w_classical > 1.
    """
    columns = ["n", "w_improved", "w_series", "w_classical", "ratio"]
    if precision is not None:
        columns.append("mp_rel_err")
    rows: list[list] = []
    for n in range(1, n_max + 1):
        w = improved_weight_closed(n)
        w_h = 1.0 / (4 * n * n)
        series = improved_weight_series(n, k_max) if n >= 2 else None
        row: list = [n, w, series, w_h, w / w_h]
        if precision is not None:
            oracle = improved_weight_closed(n, digits=precision)
            row.append(float(abs(w - oracle) / oracle))
        rows.append(row)
    arguments = {"n_max": n_max, "k_max": k_max, "precision": precision}
    _emit(_record("hardyweight.weights/1", arguments, columns, rows), fmt, out)


@main.command()
@click.option("--k-max", type=click.IntRange(min=1), default=10, show_default=True,
              help="Emit coefficients c_1 .. c_K_MAX.")
@click.option("--format", "fmt", type=_FORMAT, default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def coeffs(k_max: int, fmt: str, out: str | None) -> None:
    """Exact rational series coefficients c_k of the improved weight."""
    columns = ["k", "numerator", "denominator", "value"]
    rows = []
    for k in range(1, k_max + 1):
        c = series_coefficient(k)
        rows.append([k, str(c.numerator), str(c.denominator), float(c)])
    _emit(_record("hardyweight.coeffs/1", {"k_max": k_max}, columns, rows), fmt, out)


@main.command()
@click.option("--trials", type=click.IntRange(min=1), default=10_000, show_default=True,
              help="Random energy-gap trials.")
@click.option("--identity-trials", type=click.IntRange(min=1), default=1_000,
              show_default=True, help="Random (u, phi) operator-identity trials.")
@click.option("--equivalence-trials", type=click.IntRange(min=1), default=1_000,
              show_default=True, help="Classical-formulation equivalence trials.")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Master seed; the whole battery is deterministic in it.")
@click.option("--max-support", type=click.IntRange(min=1), default=1_000, show_default=True)
@click.option("--tol", type=float, default=1e-12, show_default=True,
              help="Gap / identity / equivalence tolerance.")
@click.option("--residual-n-max", type=click.IntRange(min=1), default=100_000,
              show_default=True)
@click.option("--eigen-sizes", default="1,10,100,1000", show_default=True,
              callback=_parse_sizes, help="Comma-separated truncation sizes.")
@click.option("--format", "fmt", type=_FORMAT, default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
def verify(ctx: click.Context, trials: int, identity_trials: int,
           equivalence_trials: int, seed: int, max_support: int, tol: float,
           residual_n_max: int, eigen_sizes: tuple[int, ...], fmt: str,
           out: str | None) -> None:
    """Run the verification battery and report verdicts.

    Exits 1 when any verdict fails.  The CSV rendering flattens the report
    into (field, value) rows carrying the same values as the JSON payload.
    """
    if tol <= 0:
        raise click.BadParameter("--tol must be positive")
    config = VerificationConfig(
        seed=seed,
        gap_trials=trials,
        identity_trials=identity_trials,
        equivalence_trials=equivalence_trials,
        max_support=max_support,
        gap_tol=tol,
        identity_tol=tol,
        equivalence_tol=tol,
        residual_n_max=residual_n_max,
        eigen_sizes=eigen_sizes,
    )
    report = run_verification(config).to_dict()
    if fmt == "json":
        record = dict(report)
        record["command"] = _command_echo()
        text = json.dumps(record, indent=2) + "\n"
        if out is None:
            click.echo(text, nl=False)
        else:
            Path(out).write_text(text)
    else:
        rows = [[field, value] for field, value in _flatten(report)]
        record = _record(report["schema"], {"seed": seed, "tol": tol},
                         ["field", "value"], rows)
        _emit(record, fmt, out)
    ctx.exit(0 if report["passed"] else 1)


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for key, value in obj.items():
            yield from _flatten(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(obj, (list, tuple)):
        for i, value in enumerate(obj):
            yield from _flatten(value, f"{prefix}.{i}")
    else:
        yield prefix, obj


@main.command()
@click.option("--sizes", default="1,10,100,1000", show_default=True, callback=_parse_sizes,
              help="Comma-separated truncation sizes N.")
@click.option("--weight", "which", type=click.Choice(["improved", "classical", "inflated"]),
              default="improved", show_default=True)
@click.option("--inflation", type=float, default=0.05, show_default=True,
              help="Epsilon for the inflated weight (1 + epsilon) w.")
@click.option("--tol", type=float, default=1e-10, show_default=True,
              help="Absolute bisection accuracy.")
@click.option("--format", "fmt", type=_FORMAT, default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def eigen(sizes: tuple[int, ...], which: str, inflation: float, tol: float,
          fmt: str, out: str | None) -> None:
    """Smallest generalized eigenvalue of the truncated pencil per size.

    For the improved weight each row is flagged when it violates the
    floor lambda_min >= 1 or monotonicity in N.
    """
    if tol <= 0:
        raise click.BadParameter("--tol must be positive")
    if which == "inflated" and inflation <= 0:
        raise click.BadParameter("--inflation must be positive")
    if which == "improved":
        w = improved_weight
    elif which == "classical":
        w = classical_weight
    else:
        w = improved_weight.scaled(1.0 + inflation)
    values = [
        min_generalized_eigenvalue(TruncatedOperatorPair.from_weight(w, n), tol)
        for n in sizes
    ]
    rows = []
    prev = None
    for n, lam in zip(sizes, values):
        flags = []
        if which == "improved":
            if lam < 1.0 - 2.0 * tol:
                flags.append("below_floor")
            if prev is not None and lam > prev + 2.0 * tol:
                flags.append("monotonicity_violation")
        rows.append([n, lam, ";".join(flags)])
        prev = lam
    arguments = {"sizes": list(sizes), "weight": which,
                 "inflation": inflation if which == "inflated" else None, "tol": tol}
    _emit(_record("hardyweight.eigen/1", arguments, ["N", "lambda_min", "flag"], rows),
          fmt, out)


@main.command()
@click.option("--n-max", type=click.IntRange(min=1), default=100_000, show_default=True)
@click.option("--tol", type=float, default=1e-12, show_default=True)
@click.option("--precision", type=click.IntRange(min=1), default=None,
              help="Evaluate by mpmath at this many decimal digits.")
@click.option("--format", "fmt", type=_FORMAT, default="csv", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
def residual(ctx: click.Context, n_max: int, tol: float, precision: int | None,
             fmt: str, out: str | None) -> None:
    """Largest relative eigenequation residual of u = sqrt against the improved weight.

    Exits 1 when the residual exceeds the tolerance.
    """
    if tol <= 0:
        raise click.BadParameter("--tol must be positive")
    value = ground_state_residual(ground_state_weight, improved_weight, n_max,
                                  digits=precision)
    passed = value <= tol
    arguments = {"n_max": n_max, "tol": tol, "precision": precision}
    rows = [[n_max, value, tol, passed]]
    _emit(_record("hardyweight.residual/1", arguments,
                  ["n_max", "max_relative_residual", "tol", "passed"], rows), fmt, out)
    ctx.exit(0 if passed else 1)


if __name__ == "__main__":
    main()
