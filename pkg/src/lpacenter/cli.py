"""Command-line frontend: thin argument handling over the library.

Exit codes: 0 success / all properties hold, 1 property failure,
2 input error (bad file, bad flags, enumeration cap exceeded).
"""

from __future__ import annotations

import sys

import click

from .graphio import GraphParseError, load_graph
from .lattice import SubsetCapExceededError
from .reports import (
    build_analyze_report,
    build_center_report,
    render_analyze_text,
    render_center_text,
    render_json,
)
from .rings import ring_from_spec
from .verify import build_verify_report, render_verify_text


def _load(file):
    try:
        return load_graph(file)
    except GraphParseError as exc:
        click.echo(f"error: {file}: {exc}", err=True)
        sys.exit(2)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


def _ring(spec):
    try:
        return ring_from_spec(spec)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


@click.group()
@click.version_option(package_name="lpacenter")
def main():
    """Analyze a graph and compute the graded center of its Leavitt path
    algebra, with every emitted element machine-verified."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def analyze(file, fmt):
    """Vertex classes, hereditary saturated sets, and exit-free cycles."""
    g = _load(file)
    try:
        report = build_analyze_report(g)
    except SubsetCapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(render_json(report) if fmt == "json" else render_analyze_text(report),
               nl=False)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--ring", "ring_spec", default="z", show_default=True,
              help="coefficients: z, q, or zmod:N")
@click.option("--max-degree", "max_degree", type=click.IntRange(min=0), default=12,
              show_default=True, help="materialize components with |degree| up to this")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def center(file, ring_spec, max_degree, fmt):
    """Basis of the center by degree, each element verified central."""
    g = _load(file)
    ring = _ring(ring_spec)
    try:
        report = build_center_report(g, ring, max_degree)
    except SubsetCapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(render_json(report) if fmt == "json" else render_center_text(report),
               nl=False)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--ring", "ring_spec", default="z", show_default=True,
              help="coefficients: z, q, or zmod:N")
@click.option("--max-degree", "max_degree", type=click.IntRange(min=0), default=4,
              show_default=True, help="centrality is checked for |degree| up to this")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def verify(file, ring_spec, max_degree, fmt):
    """Run the property suite; exit 0 iff every check passes."""
    g = _load(file)
    ring = _ring(ring_spec)
    try:
        report = build_verify_report(g, ring, max_degree)
    except SubsetCapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(render_json(report) if fmt == "json" else render_verify_text(report),
               nl=False)
    sys.exit(0 if report["passed"] else 1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("lpacenter.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
