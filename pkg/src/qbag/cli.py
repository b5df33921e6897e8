"""Command-line front door.

Subcommands: validate, eval, analyze, sweep, curve.  Input files are
UTF-8 documents in the format described in qbag.serialize; results go to
standard output, diagnostics to standard error.  Exit status is 0 on
success and 2 on any usage or input problem.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .analysis import (
    SLFQuery,
    fairness_report,
    fluctuation_count,
    is_cautiously_fair,
    is_ideally_fair,
    is_live,
    is_lively_fair,
    is_strongly_safe,
    is_weakly_safe,
)
from .chain import (
    evaluate_chain,
    is_expansion_chain,
    is_normal_expansion_chain,
    is_weak_expansion_chain,
    sweep_chain,
)
from .errors import QbagError
from .graph import is_acyclic
from .semantics import evaluate, semantics_by_name
from .serialize import (
    export_curve_csv,
    export_strengths_csv,
    parse_chain,
    parse_qbag,
    report_to_dict,
    serialize_chain,
)


def _fail(message: str) -> None:
    click.echo(message, err=True)
    sys.exit(2)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")


def _parse(path: str, parser):
    try:
        return parser(_read_text(path))
    except QbagError as exc:
        _fail(f"{type(exc).__name__}: {exc}")


def _semantics(name: str):
    try:
        return semantics_by_name(name)
    except QbagError as exc:
        _fail(f"{type(exc).__name__}: {exc}")


def _split_topics(topics: str) -> list[str]:
    ids = [t for t in topics.split(",") if t]
    if not ids:
        _fail("no topics given")
    return ids


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Evaluate argumentation graphs and analyze dialogue chains."""


@main.command()
@click.argument("chain_path")
def validate(chain_path: str) -> None:
    """Check a chain document and classify the chain."""
    chain = _parse(chain_path, parse_chain)
    cyclic_steps = []
    for i, g in enumerate(chain.steps, start=1):
        acyclic = is_acyclic(g)
        if not acyclic:
            cyclic_steps.append(i)
        click.echo(f"step {i}: {'acyclic' if acyclic else 'cyclic'}")
    if cyclic_steps:
        _fail(f"CyclicGraph at step {cyclic_steps[0]}")
    click.echo(f"expansion: {_yesno(is_expansion_chain(chain))}")
    click.echo(f"normal: {_yesno(is_normal_expansion_chain(chain))}")
    click.echo(f"weak: {_yesno(is_weak_expansion_chain(chain))}")


@main.command(name="eval")
@click.argument("qbag_path")
@click.option("--semantics", "semantics_name", default="dfquad", show_default=True)
def eval_cmd(qbag_path: str, semantics_name: str) -> None:
    """Print final strengths of a single graph."""
    g = _parse(qbag_path, parse_qbag)
    sem = _semantics(semantics_name)
    try:
        assignment = evaluate(g, sem)
    except QbagError as exc:
        _fail(f"{type(exc).__name__}: {exc}")
    click.echo(
        " ".join(
            f"{x}={format(assignment[x], '.12g')}" for x in sorted(assignment.values)
        )
    )


@main.command()
@click.argument("chain_path")
@click.option("--topics", required=True, help="Comma-separated topic argument ids.")
@click.option("--threshold", required=True, type=float, help="Justification threshold in [0, 1].")
@click.option(
    "--checks",
    type=click.Choice(["safety", "liveness", "fairness", "all"]),
    default="all",
    show_default=True,
)
@click.option("--semantics", "semantics_name", default="dfquad", show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "structured", "csv"]),
    default="text",
    show_default=True,
)
def analyze(
    chain_path: str,
    topics: str,
    threshold: float,
    checks: str,
    semantics_name: str,
    fmt: str,
) -> None:
    """Run safety, liveness, and fairness checks on a chain."""
    chain = _parse(chain_path, parse_chain)
    sem = _semantics(semantics_name)
    try:
        matrix = evaluate_chain(chain, sem)
        query = SLFQuery(topics=frozenset(_split_topics(topics)), threshold=threshold)
        entries: list[tuple[str, object]] = []
        report = None
        if checks in ("safety", "all"):
            entries.append(("strongly_safe", is_strongly_safe(matrix, query)))
            entries.append(("weakly_safe", is_weakly_safe(matrix, query)))
        if checks in ("liveness", "all"):
            for x in query.sorted_topics():
                entries.append(
                    (f"fluctuations[{x}]", fluctuation_count(matrix, x, threshold))
                )
            entries.append(("live", is_live(matrix, query)))
        if checks in ("fairness", "all"):
            entries.append(("ideally_fair", is_ideally_fair(matrix, query)))
            entries.append(("lively_fair", is_lively_fair(matrix, query)))
            entries.append(("cautiously_fair", is_cautiously_fair(matrix, query)))
            report = fairness_report(matrix, query)
            entries.append(("gini_score", report.gini_score))
            entries.append(("shannon_score", report.shannon_score))
    except QbagError as exc:
        _fail(f"{type(exc).__name__}: {exc}")

    if fmt == "structured":
        payload: dict[str, object] = {}
        for key, value in entries:
            if key.startswith("fluctuations["):
                payload.setdefault("fluctuations", {})[key[len("fluctuations[") : -1]] = value
            elif key in ("gini_score", "shannon_score"):
                payload[key] = round(value, 5)
            else:
                payload[key] = value
        if report is not None:
            payload["fairness_report"] = report_to_dict(report)
        click.echo(json.dumps(payload, indent=2))
    else:
        sep = "," if fmt == "csv" else ": "
        for key, value in entries:
            if isinstance(value, bool):
                value = _yesno(value)
            elif isinstance(value, float):
                value = format(value, ".5f")
            click.echo(f"{key}{sep}{value}")


@main.command()
@click.argument("qbag_path")
@click.option("--argument", "argument_id", required=True, help="Argument whose strength varies.")
@click.option("--from", "start", required=True, type=float)
@click.option("--to", "stop", required=True, type=float)
@click.option("--steps", required=True, type=int)
@click.option("--out", "out_path", default=None, help="Write the chain document here instead of stdout.")
@click.option("--csv", "as_csv", is_flag=True, help="Evaluate the sweep and print the strength CSV.")
@click.option("--semantics", "semantics_name", default="dfquad", show_default=True)
def sweep(
    qbag_path: str,
    argument_id: str,
    start: float,
    stop: float,
    steps: int,
    out_path: str | None,
    as_csv: bool,
    semantics_name: str,
) -> None:
    """Generate (and optionally evaluate) an initial-strength sweep chain."""
    g = _parse(qbag_path, parse_qbag)
    sem = _semantics(semantics_name)
    if steps < 1:
        _fail(f"steps must be >= 1, got {steps}")
    if not (0.0 <= start <= 1.0 and 0.0 <= stop <= 1.0):
        _fail(f"sweep range [{start}, {stop}] outside [0, 1]")
    if steps == 1:
        values = [start]
    else:
        values = [start + i * (stop - start) / (steps - 1) for i in range(steps)]
    try:
        chain = sweep_chain(g, argument_id, values)
        if as_csv:
            matrix = evaluate_chain(chain, sem)
            click.echo(export_strengths_csv(matrix), nl=False)
            return
        document = serialize_chain(chain)
    except QbagError as exc:
        _fail(f"{type(exc).__name__}: {exc}")
    if out_path is None:
        click.echo(document, nl=False)
    else:
        try:
            Path(out_path).write_text(document, encoding="utf-8")
        except OSError as exc:
            _fail(f"cannot write {out_path}: {exc}")
        click.echo(f"wrote {out_path}")


@main.command()
@click.argument("chain_path")
@click.option("--topics", required=True, help="Comma-separated topic argument ids.")
@click.option("--threshold", required=True, type=float)
@click.option("--semantics", "semantics_name", default="dfquad", show_default=True)
def curve(chain_path: str, topics: str, threshold: float, semantics_name: str) -> None:
    """Print the safety-curve / fairness-line breakpoints as CSV."""
    chain = _parse(chain_path, parse_chain)
    sem = _semantics(semantics_name)
    try:
        matrix = evaluate_chain(chain, sem)
        query = SLFQuery(topics=frozenset(_split_topics(topics)), threshold=threshold)
        report = fairness_report(matrix, query)
    except QbagError as exc:
        _fail(f"{type(exc).__name__}: {exc}")
    click.echo(export_curve_csv(report), nl=False)


if __name__ == "__main__":
    main()
