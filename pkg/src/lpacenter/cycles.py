"""Exit-free cycles, their rotation classes, and entry-path enumeration.

A cycle has no exits when every vertex on it emits exactly one edge; such
a cycle is determined by its vertex set, so rotation classes are keyed by
vertex set.  Classes whose vertex set admits only finitely many entry
paths are the ones contributing to the center away from degree zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Count,
    Graph,
    InfinitePathFamilyError,
    Path,
    count_first_hitting_paths,
    first_hitting_paths,
    simple_cycles,
)


@dataclass(frozen=True)
class CycleClass:
    """All rotations of one exit-free simple cycle; the canonical
    representative (least base vertex) comes first."""

    rotations: tuple[Path, ...]

    @property
    def length(self) -> int:
        return self.rotations[0].length

    @property
    def representative(self) -> Path:
        return self.rotations[0]

    def vertex_set(self, g: Graph) -> frozenset[str]:
        return frozenset(g.path_vertices(self.representative))


@dataclass(frozen=True)
class EntryDescriptor:
    """The finite family of ways into an exit-free cycle: its own vertices
    as length-0 paths plus every first-entry path."""

    cycle_class: CycleClass
    entries: tuple[Path, ...]


def cycles_without_exits(g: Graph) -> list[CycleClass]:
    """Rotation classes of simple cycles on which every vertex emits
    exactly one edge.  A vertex carrying an OMEGA bundle emits infinitely
    many edges, so it never lies on an exit-free cycle."""
    classes: dict[frozenset[str], list[Path]] = {}
    order: list[frozenset[str]] = []
    for c in simple_cycles(g):
        vs = frozenset(g.path_vertices(c))
        if not all(g.out_degree(v) == Count(1) for v in vs):
            continue
        if vs not in classes:
            classes[vs] = []
            order.append(vs)
        classes[vs].append(c)
    out = []
    for vs in order:
        rotations = sorted(classes[vs], key=g.path_sort_key)
        out.append(CycleClass(tuple(rotations)))
    return out


def _require_exit_free(g: Graph, cc: CycleClass) -> CycleClass:
    for v in cc.vertex_set(g):
        if g.out_degree(v) != Count(1):
            raise ValueError(f"cycle through {v!r} has exits; not an exit-free class")
    for d in cc.rotations:
        g.path(d.base, d.edges)
        if g.path_range(d) != d.base:
            raise ValueError("rotation is not a closed path")
    return cc


def has_finite_entries(g: Graph, cc: CycleClass) -> bool:
    """True iff only finitely many paths enter the cycle's vertex set."""
    _require_exit_free(g, cc)
    return count_first_hitting_paths(g, cc.vertex_set(g)).is_finite


def entry_paths(g: Graph, cc: CycleClass) -> EntryDescriptor:
    """Enumerate the entry family: the base vertex of each rotation (as a
    length-0 path) followed by every first-entry path into the cycle.

    Raises InfinitePathFamilyError, naming a pumpable cycle or an OMEGA
    bundle, when the family is infinite."""
    _require_exit_free(g, cc)
    entries = [Path(d.base) for d in cc.rotations]
    entries.extend(first_hitting_paths(g, cc.vertex_set(g)))
    return EntryDescriptor(cc, tuple(entries))
