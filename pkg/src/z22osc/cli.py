"""Command-line front end.

Usage::

    z22osc verify [--cutoff 6] [--max-level 5] [--seed 0] [--format human|json|csv]
    z22osc spectrum [--max-level 4] [--format human|json|csv]
    z22osc op NAME [--cutoff N] [--phase LAMBDA] [--format human|json|csv]

Payload goes to stdout, diagnostics to stderr. Exit status is 0 on success,
1 when a verification check fails and 2 on usage errors.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import logging
import sys

import click

from .algebra import OPERATORS, get_operator
from .errors import CutoffTooSmall, UnknownOperator
from .fock import matrix_of, spectrum
from .grading import Degree
from .verify import run_all

__all__ = ["main"]

log = logging.getLogger("z22osc")

FORMATS = click.Choice(["human", "json", "csv"])


def _setup_logging(verbose: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool) -> None:
    """Verification engine for the Z2 x Z2 graded oscillator."""
    _setup_logging(verbose)


@main.command("verify")
@click.option("--cutoff", default=6, show_default=True, type=int)
@click.option("--max-level", default=5, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--format", "fmt", default="human", show_default=True, type=FORMATS)
@click.option("--timing/--no-timing", default=None, help="Include per-check milliseconds (default: only in human format).")
def cmd_verify(cutoff: int, max_level: int, seed: int, fmt: str, timing: bool | None) -> None:
    """Run every check and report pass/fail per check."""
    if timing is None:
        timing = fmt == "human"
    try:
        reports = run_all(cutoff, max_level, seed, timings=timing)
    except (CutoffTooSmall, ValueError) as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)
    ok = all(r.passed for r in reports)
    if fmt == "json":
        click.echo(
            _dump_json(
                {
                    "cutoff": cutoff,
                    "max_level": max_level,
                    "seed": seed,
                    "passed": ok,
                    "reports": [r.to_dict() for r in reports],
                }
            ),
            nl=False,
        )
    elif fmt == "csv":
        rows = [[r.check, r.status, r.exactness, r.residual, r.tolerance, r.anchor, r.ms] for r in reports]
        click.echo(_csv_text(["check", "status", "exactness", "residual", "tolerance", "anchor", "ms"], rows), nl=False)
    else:
        for r in reports:
            resid = "" if r.residual is None else f" residual={r.residual:.3g}"
            ms = "" if r.ms is None else f" ({r.ms:.1f} ms)"
            click.echo(f"{r.status.upper():4} {r.check:<20} {r.exactness:<15}{resid}{ms}  [{r.anchor}]")
            for d in r.details:
                if d.get("informational"):
                    click.echo(f"       note: {d['claim']}")
                elif not d["ok"]:
                    click.echo(f"       failed: {d['claim']}")
        n_pass = sum(r.passed for r in reports)
        click.echo(f"{n_pass}/{len(reports)} checks passed")
    for r in reports:
        if not r.passed:
            log.warning("check %s failed", r.check)
    sys.exit(0 if ok else 1)


def spectrum_table(max_level: int) -> list[dict]:
    """Levels 0..max_level with states per sector in Boson/Exotic/Fermion-1/Fermion-2 order."""
    levels = spectrum(max(max_level + 1, 2))
    out = []
    for n in range(max_level + 1):
        members = levels.get(n, [])
        sectors = {}
        for d in Degree:
            states = sorted((s for s, sec in members if sec is d), reverse=True)
            sectors[d.label] = [list(s) for s in states]
        out.append({"level": n, "degeneracy": len(members), "sectors": sectors})
    return out


@main.command("spectrum")
@click.option("--max-level", default=4, show_default=True, type=click.IntRange(min=0))
@click.option("--format", "fmt", default="human", show_default=True, type=FORMATS)
def cmd_spectrum(max_level: int, fmt: str) -> None:
    """Energy levels, degeneracies and states per sector."""
    table = spectrum_table(max_level)
    if fmt == "json":
        click.echo(_dump_json({"max_level": max_level, "levels": table}), nl=False)
    elif fmt == "csv":
        rows = [
            [row["level"], sec, *state]
            for row in table
            for sec, states in row["sectors"].items()
            for state in states
        ]
        click.echo(_csv_text(["level", "sector", "n_b", "n_e", "n_f1", "n_f2"], rows), nl=False)
    else:
        names = {"00": "Boson", "11": "Exotic", "01": "Fermion 1", "10": "Fermion 2"}
        click.echo("level  deg  " + "  ".join(f"{names[d.label]} ({d.label})" for d in Degree))
        for row in table:
            cells = []
            for d in Degree:
                kets = [f"|{','.join(map(str, s))}>" for s in row["sectors"][d.label]]
                cells.append(" ".join(kets) or "-")
            click.echo(f"{row['level']:>5}  {row['degeneracy']:>3}  " + "  |  ".join(cells))


@main.command("op")
@click.argument("name")
@click.option("--cutoff", default=None, type=int, help="Also dump the truncated sparse matrix.")
@click.option("--phase", default=0.0, show_default=True, type=float, help="Angle lambda; the formal phase u becomes exp(i*lambda).")
@click.option("--format", "fmt", default="human", show_default=True, type=FORMATS)
def cmd_op(name: str, cutoff: int | None, phase: float, fmt: str) -> None:
    """Dump a named operator: H00 Q01 Q10 K1 K2 a1 a2 H Q1 Q2 Z11."""
    try:
        poly = get_operator(name)
    except UnknownOperator:
        click.echo(f"error: unknown operator {name!r}; choose from {', '.join(OPERATORS)}", err=True)
        sys.exit(2)
    matrix = None
    if cutoff is not None:
        try:
            matrix = matrix_of(poly, cutoff, phase=cmath.exp(1j * phase))
        except CutoffTooSmall as exc:
            click.echo(f"error: CutoffTooSmall: {exc}", err=True)
            sys.exit(2)
    if fmt == "json":
        payload = {"name": name, "polynomial": poly.to_json()}
        if matrix is not None:
            payload["cutoff"] = cutoff
            payload["matrix"] = matrix.to_json()
        click.echo(_dump_json(payload), nl=False)
    elif fmt == "csv":
        rows = [
            [" ".join(r["word"]), r["coeff"]["re"], r["coeff"]["im"], r["coeff"]["upow"]]
            for r in poly.to_json()
        ]
        click.echo(_csv_text(["word", "re", "im", "upow"], rows), nl=False)
        if matrix is not None:
            click.echo()
            mrows = [[r, c, v.real, v.imag] for r, c, v in matrix.entries()]
            click.echo(_csv_text(["row", "col", "re", "im"], mrows), nl=False)
    else:
        click.echo(f"{name} = {poly!r}")
        if matrix is not None:
            click.echo(f"matrix at cutoff {cutoff}: dim {matrix.dim}, {len(matrix.entries())} nonzero entries")
            for r, c, v in matrix.entries():
                click.echo(f"  ({r}, {c})  {v.real:+.12g} {v.imag:+.12g}i")


if __name__ == "__main__":  # pragma: no cover
    main()
