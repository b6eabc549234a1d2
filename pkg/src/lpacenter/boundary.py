"""Boundary paths and groupoid sample points.

The unit space of the path groupoid consists of infinite paths together
with finite paths ending at sinks or infinite emitters.  For testing we
represent two kinds of points exactly: finite boundary paths, and
eventually periodic infinite paths written prefix . cycle^infinity.
Indicator elements can be evaluated pointwise at these samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import EdgeRef, Graph, Path, VertexKind, paths_up_to, simple_cycles


@dataclass(frozen=True)
class BoundaryPath:
    """A finite boundary path (cycle is None) or prefix . cycle^infinity."""

    prefix: Path
    cycle: Optional[Path] = None

    @property
    def source(self) -> str:
        return self.prefix.base

    @property
    def is_finite(self) -> bool:
        return self.cycle is None


def finite_boundary_path(g: Graph, p: Path) -> BoundaryPath:
    p = g.path(p.base, p.edges)
    if g.classify(g.path_range(p)) is VertexKind.REGULAR:
        raise ValueError(
            f"finite boundary paths must end at a sink or infinite emitter, "
            f"not the regular vertex {g.path_range(p)!r}")
    return BoundaryPath(p)


def periodic_boundary_path(g: Graph, prefix: Path, cycle: Path) -> BoundaryPath:
    prefix = g.path(prefix.base, prefix.edges)
    cycle = g.path(cycle.base, cycle.edges)
    if cycle.length == 0:
        raise ValueError("the repeating part must have length >= 1")
    if g.path_range(cycle) != cycle.base:
        raise ValueError("the repeating part must be a closed path")
    if g.path_range(prefix) != cycle.base:
        raise ValueError("prefix must end where the repeating part starts")
    return BoundaryPath(prefix, cycle)


def expand_edges(x: BoundaryPath, n: int) -> tuple[EdgeRef, ...]:
    """The first n edges of x (fewer if x is finite and shorter)."""
    edges = list(x.prefix.edges[:n])
    if x.cycle is not None:
        i = 0
        while len(edges) < n:
            edges.append(x.cycle.edges[i % x.cycle.length])
            i += 1
    return tuple(edges)


def starts_with(g: Graph, x: BoundaryPath, p: Path) -> bool:
    if x.source != p.base:
        return False
    return expand_edges(x, p.length) == p.edges


def strip_prefix(g: Graph, x: BoundaryPath, p: Path) -> BoundaryPath:
    """The boundary path y with x = p.y; requires starts_with(g, x, p)."""
    if not starts_with(g, x, p):
        raise ValueError("not a prefix of this boundary path")
    k = p.length
    if k <= x.prefix.length:
        rest = x.prefix.edges[k:]
        base = g.path_range(p)
        return BoundaryPath(Path(base, rest), x.cycle)
    # consumed into the repeating part: rotate the cycle
    j = (k - x.prefix.length) % x.cycle.length
    rotated = Path(g.path_range(Path(x.cycle.base, x.cycle.edges[:j])),
                   x.cycle.edges[j:] + x.cycle.edges[:j])
    return BoundaryPath(Path(rotated.base), rotated)


def boundary_paths_equal(g: Graph, x: BoundaryPath, y: BoundaryPath) -> bool:
    """Semantic equality of the edge sequences (representations may differ)."""
    if x.source != y.source:
        return False
    if x.is_finite != y.is_finite:
        return False
    if x.is_finite:
        return x.prefix == y.prefix
    n = (x.prefix.length + y.prefix.length
         + 2 * x.cycle.length * y.cycle.length + 2)
    return expand_edges(x, n) == expand_edges(y, n)


@dataclass(frozen=True)
class GroupoidPoint:
    """A point (x, k, y) of the path groupoid: x and y are tail equivalent
    with lag k = (position in x) - (position in y)."""

    x: BoundaryPath
    k: int
    y: BoundaryPath


def sample_boundary_paths(g: Graph, max_length: int = 3,
                          omega_indices: int = 2) -> list[BoundaryPath]:
    """A deterministic sample of the unit space: all finite boundary paths up
    to the length bound, plus a.c^infinity for sampled approaches a to each
    simple cycle c."""
    samples: list[BoundaryPath] = []
    seen = set()

    def add(bp: BoundaryPath):
        if bp not in seen:
            seen.add(bp)
            samples.append(bp)

    finite_paths = paths_up_to(g, max_length, omega_indices)
    for p in finite_paths:
        if g.classify(g.path_range(p)) is not VertexKind.REGULAR:
            add(BoundaryPath(p))
    for c in simple_cycles(g):
        for p in finite_paths:
            if g.path_range(p) == c.base:
                add(BoundaryPath(p, c))
    return samples


def sample_groupoid_points(g: Graph, max_length: int = 2,
                           omega_indices: int = 2,
                           limit: int = 400) -> list[GroupoidPoint]:
    """Points (a.z, |a|-|b|, b.z) over sampled tails z and short heads a, b."""
    points: list[GroupoidPoint] = []
    tails = sample_boundary_paths(g, max_length, omega_indices)
    heads = paths_up_to(g, max_length, omega_indices)
    by_range: dict[str, list[Path]] = {}
    for p in heads:
        by_range.setdefault(g.path_range(p), []).append(p)
    for z in tails:
        for a in by_range.get(z.source, ()):
            for b in by_range.get(z.source, ()):
                xa = BoundaryPath(g.concat(a, z.prefix), z.cycle)
                xb = BoundaryPath(g.concat(b, z.prefix), z.cycle)
                points.append(GroupoidPoint(xa, a.length - b.length, xb))
                if len(points) >= limit:
                    return points
    return points
