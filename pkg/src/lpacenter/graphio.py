"""Line-oriented text format for graphs.

    # comment, blank lines ignored
    vertex <name>
    edge <name>: <src> -> <dst>
    bundle <name>: <src> -> <dst> * <multiplicity or inf>

An ``edge`` line is shorthand for a multiplicity-1 bundle.  Parsing and
serialization round-trip; errors carry 1-based line numbers.
"""

from __future__ import annotations

import re

from .graphs import Bundle, Graph, GraphDefinitionError, OMEGA, is_omega


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


_VERTEX_RE = re.compile(r"^vertex\s+(\S+)$")
_EDGE_RE = re.compile(r"^edge\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_BUNDLE_RE = re.compile(r"^bundle\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*\*\s*(\S+)$")


def parse_graph(text: str) -> Graph:
    vertices: list[str] = []
    vertex_lines: dict[str, int] = {}
    bundles: list[Bundle] = []
    bundle_lines: dict[str, int] = {}

    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        entries.append((lineno, line))

    for lineno, line in entries:
        m = _VERTEX_RE.match(line)
        if m:
            name = m.group(1)
            if name in vertex_lines:
                raise GraphParseError(
                    f"duplicate vertex {name!r} (first declared on line "
                    f"{vertex_lines[name]})", lineno)
            vertex_lines[name] = lineno
            vertices.append(name)

    for lineno, line in entries:
        if _VERTEX_RE.match(line):
            continue
        m = _EDGE_RE.match(line)
        if m:
            name, src, dst = m.groups()
            mult = 1
        else:
            m = _BUNDLE_RE.match(line)
            if not m:
                raise GraphParseError(f"unrecognized line {line!r}", lineno)
            name, src, dst, multtext = m.groups()
            if multtext == "inf":
                mult = OMEGA
            else:
                try:
                    mult = int(multtext)
                except ValueError:
                    raise GraphParseError(
                        f"bad multiplicity {multtext!r} (positive integer or inf)",
                        lineno) from None
                if mult < 1:
                    raise GraphParseError(
                        f"bad multiplicity {mult} (must be >= 1)", lineno)
        if name in bundle_lines:
            raise GraphParseError(
                f"duplicate edge or bundle {name!r} (first declared on line "
                f"{bundle_lines[name]})", lineno)
        if name in vertex_lines:
            raise GraphParseError(
                f"name {name!r} already used for a vertex on line "
                f"{vertex_lines[name]}", lineno)
        for endpoint in (src, dst):
            if endpoint not in vertex_lines:
                raise GraphParseError(f"unknown vertex {endpoint!r}", lineno)
        bundle_lines[name] = lineno
        bundles.append(Bundle(name, src, dst, mult))

    try:
        return Graph(vertices, bundles)
    except GraphDefinitionError as exc:
        raise GraphParseError(str(exc), 0) from exc


def serialize_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    for b in g.bundles:
        if b.multiplicity == 1:
            lines.append(f"edge {b.name}: {b.source} -> {b.range}")
        elif is_omega(b.multiplicity):
            lines.append(f"bundle {b.name}: {b.source} -> {b.range} * inf")
        else:
            lines.append(f"bundle {b.name}: {b.source} -> {b.range} * {b.multiplicity}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
