"""Finitely presented directed graphs with possibly infinite emitters.

A graph is a finite ordered vertex list plus a finite ordered list of edge
*bundles*.  A bundle is a named family of parallel edges v -> w whose
multiplicity is a positive integer or OMEGA (countably infinite); an
OMEGA bundle is how a vertex gets to emit infinitely many edges while the
presentation stays finite.  Individual edges are addressed as
(bundle name, index).

Everything here is immutable and purely functional: graphs never mutate
after construction and all operations are safe for concurrent reads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union


class GraphDefinitionError(ValueError):
    """A graph presentation is malformed (bad names, endpoints, multiplicities)."""


class InfinitePathFamilyError(RuntimeError):
    """An operation would have to enumerate an infinite family of paths.

    ``cycle`` names a pumpable cycle and ``bundle`` an infinite bundle whose
    parallel edges all belong to the family, whichever applies.
    """

    def __init__(self, message: str, *, cycle: Optional["Path"] = None,
                 bundle: Optional[str] = None):
        super().__init__(message)
        self.cycle = cycle
        self.bundle = bundle


class _Omega:
    """Singleton marker for countably infinite bundle multiplicity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"


OMEGA = _Omega()

Multiplicity = Union[int, _Omega]


def is_omega(m: Multiplicity) -> bool:
    return m is OMEGA


def _check_multiplicity(m: Multiplicity, name: str) -> None:
    if is_omega(m):
        return
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise GraphDefinitionError(
            f"bundle {name!r}: multiplicity must be a positive integer or OMEGA, got {m!r}")


@dataclass(frozen=True)
class Count:
    """A path or edge count; ``value`` is None when the count is infinite.

    Arithmetic saturates: inf + n = inf, inf * n = inf for n >= 1, inf * 0 = 0.
    """

    value: Optional[int]

    def __post_init__(self):
        if self.value is not None and (not isinstance(self.value, int) or self.value < 0):
            raise ValueError(f"count must be a natural number or None, got {self.value!r}")

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other: "Count") -> "Count":
        if self.value is None or other.value is None:
            return INFINITE
        return Count(self.value + other.value)

    def __mul__(self, other: "Count") -> "Count":
        if self.value == 0 or other.value == 0:
            return Count(0)
        if self.value is None or other.value is None:
            return INFINITE
        return Count(self.value * other.value)

    def __repr__(self):
        return "Count(inf)" if self.value is None else f"Count({self.value})"


INFINITE = Count(None)


class VertexKind(Enum):
    SINK = "sink"
    INFINITE_EMITTER = "infinite_emitter"
    REGULAR = "regular"


@dataclass(frozen=True)
class Bundle:
    """A named family of parallel edges source -> range."""

    name: str
    source: str
    range: str
    multiplicity: Multiplicity = 1


@dataclass(frozen=True)
class EdgeRef:
    """One edge of a bundle: index < multiplicity for finite bundles,
    any natural number for OMEGA bundles."""

    bundle: str
    index: int = 0


@dataclass(frozen=True)
class Path:
    """A finite path: a base vertex plus a composable edge sequence.

    A length-0 path is just its base vertex.
    """

    base: str
    edges: tuple[EdgeRef, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges


_NAME_RE = re.compile(r"^\w+$")


class Graph:
    """Immutable directed graph presented by vertices and edge bundles."""

    def __init__(self, vertices: Sequence[str],
                 bundles: Sequence[Union[Bundle, tuple]] = ()):
        vs = tuple(vertices)
        bs = []
        for b in bundles:
            if not isinstance(b, Bundle):
                b = Bundle(*b)
            bs.append(b)
        bs = tuple(bs)

        vpos: dict[str, int] = {}
        for v in vs:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise GraphDefinitionError(f"bad vertex name {v!r}")
            if v in vpos:
                raise GraphDefinitionError(f"duplicate vertex name {v!r}")
            vpos[v] = len(vpos)

        bpos: dict[str, int] = {}
        by_name: dict[str, Bundle] = {}
        out: dict[str, list[Bundle]] = {v: [] for v in vs}
        into: dict[str, list[Bundle]] = {v: [] for v in vs}
        for b in bs:
            if not isinstance(b.name, str) or not _NAME_RE.match(b.name):
                raise GraphDefinitionError(f"bad bundle name {b.name!r}")
            if b.name in bpos:
                raise GraphDefinitionError(f"duplicate bundle name {b.name!r}")
            if b.name in vpos:
                raise GraphDefinitionError(
                    f"bundle name {b.name!r} collides with a vertex name")
            if b.source not in vpos:
                raise GraphDefinitionError(
                    f"bundle {b.name!r}: unknown source vertex {b.source!r}")
            if b.range not in vpos:
                raise GraphDefinitionError(
                    f"bundle {b.name!r}: unknown range vertex {b.range!r}")
            _check_multiplicity(b.multiplicity, b.name)
            bpos[b.name] = len(bpos)
            by_name[b.name] = b
            out[b.source].append(b)
            into[b.range].append(b)

        self._vertices = vs
        self._bundles = bs
        self._vpos = vpos
        self._bpos = bpos
        self._by_name = by_name
        self._out = {v: tuple(l) for v, l in out.items()}
        self._in = {v: tuple(l) for v, l in into.items()}

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def bundles(self) -> tuple[Bundle, ...]:
        return self._bundles

    def has_vertex(self, v: str) -> bool:
        return v in self._vpos

    def check_vertex(self, v: str) -> str:
        if v not in self._vpos:
            raise GraphDefinitionError(f"unknown vertex {v!r}")
        return v

    def vertex_position(self, v: str) -> int:
        self.check_vertex(v)
        return self._vpos[v]

    def bundle(self, name: str) -> Bundle:
        try:
            return self._by_name[name]
        except KeyError:
            raise GraphDefinitionError(f"unknown bundle {name!r}") from None

    def bundle_position(self, name: str) -> int:
        self.bundle(name)
        return self._bpos[name]

    def out_bundles(self, v: str) -> tuple[Bundle, ...]:
        self.check_vertex(v)
        return self._out[v]

    def in_bundles(self, v: str) -> tuple[Bundle, ...]:
        self.check_vertex(v)
        return self._in[v]

    # -- edges ---------------------------------------------------------------

    def check_edge(self, e: EdgeRef) -> EdgeRef:
        b = self.bundle(e.bundle)
        if not isinstance(e.index, int) or isinstance(e.index, bool) or e.index < 0:
            raise GraphDefinitionError(f"bad edge index in {e!r}")
        if not is_omega(b.multiplicity) and e.index >= b.multiplicity:
            raise GraphDefinitionError(
                f"edge index {e.index} out of range for bundle {b.name!r} "
                f"of multiplicity {b.multiplicity}")
        return e

    def edge_source(self, e: EdgeRef) -> str:
        return self.bundle(e.bundle).source

    def edge_range(self, e: EdgeRef) -> str:
        return self.bundle(e.bundle).range

    def out_degree(self, v: str) -> Count:
        total = Count(0)
        for b in self.out_bundles(v):
            total = total + (INFINITE if is_omega(b.multiplicity) else Count(b.multiplicity))
        return total

    def finite_out_edges(self, v: str) -> tuple[EdgeRef, ...]:
        """All outgoing edges of v, which must not be an infinite emitter."""
        refs = []
        for b in self.out_bundles(v):
            if is_omega(b.multiplicity):
                raise GraphDefinitionError(
                    f"vertex {v!r} is an infinite emitter; its edge set is not finite")
            refs.extend(EdgeRef(b.name, i) for i in range(b.multiplicity))
        return tuple(refs)

    def classify(self, v: str) -> VertexKind:
        bundles = self.out_bundles(v)
        if not bundles:
            return VertexKind.SINK
        if not self.out_degree(v).is_finite:
            return VertexKind.INFINITE_EMITTER
        return VertexKind.REGULAR

    def is_regular(self, v: str) -> bool:
        return self.classify(v) is VertexKind.REGULAR

    def is_sink(self, v: str) -> bool:
        return self.classify(v) is VertexKind.SINK

    def is_infinite_emitter(self, v: str) -> bool:
        return self.classify(v) is VertexKind.INFINITE_EMITTER

    def regular_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self._vertices if self.is_regular(v))

    # -- paths ---------------------------------------------------------------

    def vertex_path(self, v: str) -> Path:
        return Path(self.check_vertex(v))

    def edge_path(self, e: EdgeRef) -> Path:
        self.check_edge(e)
        return Path(self.edge_source(e), (e,))

    def path(self, base: str, edges: Iterable[EdgeRef] = ()) -> Path:
        p = Path(self.check_vertex(base), tuple(edges))
        at = base
        for e in p.edges:
            self.check_edge(e)
            if self.edge_source(e) != at:
                raise GraphDefinitionError(
                    f"edges do not compose at {at!r}: {e!r} starts at "
                    f"{self.edge_source(e)!r}")
            at = self.edge_range(e)
        return p

    def path_range(self, p: Path) -> str:
        if not p.edges:
            return p.base
        return self.edge_range(p.edges[-1])

    def path_vertices(self, p: Path) -> tuple[str, ...]:
        vs = [p.base]
        vs.extend(self.edge_range(e) for e in p.edges)
        return tuple(vs)

    def extend(self, p: Path, e: EdgeRef) -> Path:
        self.check_edge(e)
        if self.edge_source(e) != self.path_range(p):
            raise GraphDefinitionError(
                f"cannot extend path ending at {self.path_range(p)!r} "
                f"with edge from {self.edge_source(e)!r}")
        return Path(p.base, p.edges + (e,))

    def concat(self, p: Path, q: Path) -> Path:
        if self.path_range(p) != q.base:
            raise GraphDefinitionError(
                f"paths do not compose: {self.path_range(p)!r} != {q.base!r}")
        return Path(p.base, p.edges + q.edges)

    def repeat(self, cycle: Path, m: int) -> Path:
        """m-fold concatenation of a cycle with itself (m >= 0)."""
        if self.path_range(cycle) != cycle.base:
            raise GraphDefinitionError("repeat requires a closed path")
        return Path(cycle.base, cycle.edges * m)

    # -- deterministic ordering ------------------------------------------------

    def edge_sort_key(self, e: EdgeRef) -> tuple[int, int]:
        return (self._bpos[e.bundle], e.index)

    def path_sort_key(self, p: Path):
        return (p.length, self._vpos[p.base],
                tuple(self.edge_sort_key(e) for e in p.edges))

    def render_edge(self, e: EdgeRef) -> str:
        b = self.bundle(e.bundle)
        if b.multiplicity == 1:
            return b.name
        return f"{b.name}[{e.index}]"

    def render_path(self, p: Path) -> str:
        if p.is_vertex:
            return p.base
        return " ".join(self.render_edge(e) for e in p.edges)

    # -- value semantics ---------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self._vertices == other._vertices
                and self._bundles == other._bundles)

    def __hash__(self):
        return hash((self._vertices, self._bundles))

    def __repr__(self):
        return f"Graph({len(self._vertices)} vertices, {len(self._bundles)} bundles)"


# -- vertex classification and reachability -----------------------------------


def classify_vertex(g: Graph, v: str) -> VertexKind:
    """Sink (emits nothing), infinite emitter, or regular."""
    return g.classify(v)


def reachable_from(g: Graph, starts: Iterable[str]) -> frozenset[str]:
    """Forward closure of a vertex set along edges, including the starts."""
    seen = set()
    stack = [g.check_vertex(v) for v in starts]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        for b in g.out_bundles(v):
            if b.range not in seen:
                stack.append(b.range)
    return frozenset(seen)


def vertices_reaching(g: Graph, targets: Iterable[str]) -> frozenset[str]:
    """All vertices with a (possibly trivial) path into the target set."""
    seen = set()
    stack = [g.check_vertex(v) for v in targets]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        for b in g.in_bundles(v):
            if b.source not in seen:
                stack.append(b.source)
    return frozenset(seen)


def reaches(g: Graph, v: str, targets: Iterable[str]) -> bool:
    """True iff some path of length >= 0 from v ends in the target set."""
    return g.check_vertex(v) in vertices_reaching(g, targets)


# -- cycles ---------------------------------------------------------------------


def simple_cycles(g: Graph) -> list[Path]:
    """All simple cycles, one entry per base vertex (rotations are distinct).

    Order: base vertex declaration order, then lexicographic in
    (bundle declaration position, index).  OMEGA bundles contribute only
    index 0; their parallel edges give cycles that differ only by relabeling.
    """
    cycles: list[Path] = []

    def candidate_edges(v: str):
        for b in g.out_bundles(v):
            if is_omega(b.multiplicity):
                yield EdgeRef(b.name, 0)
            else:
                for i in range(b.multiplicity):
                    yield EdgeRef(b.name, i)

    def walk(base: str, v: str, acc: tuple[EdgeRef, ...], visited: frozenset[str]):
        for e in candidate_edges(v):
            w = g.edge_range(e)
            if w == base:
                cycles.append(Path(base, acc + (e,)))
            elif w not in visited:
                walk(base, w, acc + (e,), visited | {w})

    for base in g.vertices:
        walk(base, base, (), frozenset({base}))
    return cycles


def _find_cycle_within(g: Graph, allowed: frozenset[str]) -> Optional[Path]:
    """A simple cycle whose vertices all lie in ``allowed``, or None."""
    color = {}  # 0 active, 1 done
    order = [v for v in g.vertices if v in allowed]

    def visit(v: str, stack: list[tuple[str, EdgeRef]]) -> Optional[Path]:
        color[v] = 0
        for b in g.out_bundles(v):
            w = b.range
            if w not in allowed:
                continue
            e = EdgeRef(b.name, 0)
            if w not in color:
                found = visit(w, stack + [(v, e)])
                if found is not None:
                    return found
            elif color[w] == 0:
                edges = [se for sv, se in stack + [(v, e)]]
                starts = [sv for sv, se in stack + [(v, e)]]
                i = starts.index(w)
                return Path(w, tuple(edges[i:]))
        color[v] = 1
        return None

    for v in order:
        if v not in color:
            found = visit(v, [])
            if found is not None:
                return found
    return None


# -- path counting and enumeration ------------------------------------------------


def count_first_hitting_paths(g: Graph, hitting: Iterable[str]) -> Count:
    """Number of paths that stay outside H strictly before their final vertex,
    which lies in H (length >= 1, parallel edges counted with multiplicity).

    Decided without enumeration: the count is infinite exactly when a cycle
    outside H can be traversed before entering H, or an OMEGA bundle edge can
    occur on such a path.
    """
    H = frozenset(g.check_vertex(v) for v in hitting)
    feeders = vertices_reaching(g, H) - H
    for b in g.bundles:
        if is_omega(b.multiplicity) and b.source not in H and (
                b.range in H or b.range in feeders):
            return INFINITE
    if _find_cycle_within(g, feeders) is not None:
        return INFINITE
    return Count(_count_paths_dag(g, feeders, H))


def _count_paths_dag(g: Graph, feeders: frozenset[str], H: frozenset[str]) -> int:
    # feeders induce a DAG; count first-entry paths per start vertex.
    memo: dict[str, int] = {}

    def paths_from(v: str) -> int:
        if v in memo:
            return memo[v]
        total = 0
        for b in g.out_bundles(v):
            if is_omega(b.multiplicity):
                continue  # cannot head toward H, or we would have bailed out
            if b.range in H:
                total += b.multiplicity
            elif b.range in feeders:
                total += b.multiplicity * paths_from(b.range)
        memo[v] = total
        return total

    return sum(paths_from(v) for v in feeders)


def first_hitting_paths(g: Graph, hitting: Iterable[str]) -> list[Path]:
    """Explicit enumeration of the paths counted by count_first_hitting_paths.

    Raises InfinitePathFamilyError (naming a pumpable cycle or an OMEGA
    bundle) when the family is infinite.  Output is sorted by
    (length, base vertex, edge sequence).
    """
    H = frozenset(g.check_vertex(v) for v in hitting)
    feeders = vertices_reaching(g, H) - H
    for b in g.bundles:
        if is_omega(b.multiplicity) and b.source not in H and (
                b.range in H or b.range in feeders):
            raise InfinitePathFamilyError(
                f"bundle {b.name!r} puts infinitely many parallel edges on "
                "first-entry paths", bundle=b.name)
    cyc = _find_cycle_within(g, feeders)
    if cyc is not None:
        raise InfinitePathFamilyError(
            f"cycle {g.render_path(cyc)!r} outside the target set can be pumped "
            "before entry", cycle=cyc)

    out: list[Path] = []

    def walk(start: str, v: str, acc: tuple[EdgeRef, ...]):
        for b in g.out_bundles(v):
            if is_omega(b.multiplicity):
                continue
            for i in range(b.multiplicity):
                e = EdgeRef(b.name, i)
                if b.range in H:
                    out.append(Path(start, acc + (e,)))
                elif b.range in feeders:
                    walk(start, b.range, acc + (e,))

    for v in g.vertices:
        if v in feeders:
            walk(v, v, ())
    out.sort(key=g.path_sort_key)
    return out


def count_paths_ending_in(g: Graph, targets: Iterable[str]) -> Count:
    """Number of paths of length >= 0 whose final vertex lies in the target set."""
    W = frozenset(g.check_vertex(v) for v in targets)
    reach = vertices_reaching(g, W)
    for b in g.bundles:
        if is_omega(b.multiplicity) and b.range in reach:
            return INFINITE
    if _find_cycle_within(g, reach) is not None:
        return INFINITE
    memo: dict[str, int] = {}

    def paths_from(v: str) -> int:
        if v in memo:
            return memo[v]
        total = 1 if v in W else 0
        for b in g.out_bundles(v):
            if b.range in reach and not is_omega(b.multiplicity):
                total += b.multiplicity * paths_from(b.range)
        memo[v] = total
        return total

    return Count(sum(paths_from(v) for v in reach))


def paths_ending_in(g: Graph, targets: Iterable[str]) -> list[Path]:
    """Explicit enumeration behind count_paths_ending_in; raises
    InfinitePathFamilyError when infinite."""
    W = frozenset(g.check_vertex(v) for v in targets)
    reach = vertices_reaching(g, W)
    for b in g.bundles:
        if is_omega(b.multiplicity) and b.range in reach:
            raise InfinitePathFamilyError(
                f"bundle {b.name!r} puts infinitely many parallel edges on "
                "paths into the target set", bundle=b.name)
    cyc = _find_cycle_within(g, reach)
    if cyc is not None:
        raise InfinitePathFamilyError(
            f"cycle {g.render_path(cyc)!r} can be pumped on the way to the "
            "target set", cycle=cyc)

    out: list[Path] = []

    def walk(start: str, v: str, acc: tuple[EdgeRef, ...]):
        if v in W:
            out.append(Path(start, acc))
        for b in g.out_bundles(v):
            if b.range in reach and not is_omega(b.multiplicity):
                for i in range(b.multiplicity):
                    walk(start, b.range, acc + (EdgeRef(b.name, i),))

    for v in g.vertices:
        if v in reach:
            walk(v, v, ())
    out.sort(key=g.path_sort_key)
    return out


def paths_up_to(g: Graph, max_length: int, omega_indices: int = 1) -> list[Path]:
    """All paths of length <= max_length; OMEGA bundles contribute the first
    ``omega_indices`` parallel edges.  Used for bounded sampling."""
    out: list[Path] = []

    def walk(start: str, v: str, acc: tuple[EdgeRef, ...]):
        out.append(Path(start, acc))
        if len(acc) == max_length:
            return
        for b in g.out_bundles(v):
            n = omega_indices if is_omega(b.multiplicity) else b.multiplicity
            for i in range(n):
                walk(start, b.range, acc + (EdgeRef(b.name, i),))

    for v in g.vertices:
        walk(v, v, ())
    out.sort(key=g.path_sort_key)
    return out
