"""The built-in graph corpus used by tests, docs, and the service."""

from __future__ import annotations

from importlib import resources

from .graphio import parse_graph
from .graphs import Graph

NAMES = ("loop", "a3", "toeplitz", "rose2", "infbundle", "twocycles",
         "entry", "sink_tree")


def names() -> tuple[str, ...]:
    return NAMES


def graph_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown corpus graph {name!r}; have {', '.join(NAMES)}")
    return (resources.files(__package__) / "corpus" / f"{name}.graph").read_text(
        encoding="utf-8")


def load(name: str) -> Graph:
    return parse_graph(graph_text(name))


def load_all() -> dict[str, Graph]:
    return {name: load(name) for name in NAMES}
