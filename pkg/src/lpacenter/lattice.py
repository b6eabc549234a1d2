"""Hereditary saturated vertex sets and the combinatorics of compactness.

The open invariant subsets of the unit space correspond to admissible
pairs (H, S): a hereditary saturated vertex set H plus a set S of breaking
vertices of H.  This module decides when the set for (H, B_H) is compact
(the finiteness condition), materializes its disjoint decomposition into
basic cylinder sets, and enumerates the compact and minimal compact pairs
that index the degree-zero center.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .boundary import BoundaryPath, starts_with, strip_prefix
from .graphs import (
    EdgeRef,
    Graph,
    InfinitePathFamilyError,
    Path,
    is_omega,
    vertices_reaching,
    _find_cycle_within,
)

SUBSET_CAP_ENV = "LPA_CENTER_SUBSET_CAP"
DEFAULT_SUBSET_CAP = 1 << 16


class SubsetCapExceededError(RuntimeError):
    """Enumerating hereditary saturated sets would scan too many subsets."""


# -- hereditary / saturated ------------------------------------------------------


def is_hereditary(g: Graph, vertex_set: Iterable[str]) -> bool:
    H = frozenset(g.check_vertex(v) for v in vertex_set)
    return all(b.range in H for v in H for b in g.out_bundles(v))


def is_saturated(g: Graph, vertex_set: Iterable[str]) -> bool:
    """Every regular vertex feeding only into the set already belongs to it."""
    H = frozenset(g.check_vertex(v) for v in vertex_set)
    for v in g.vertices:
        if v in H or not g.is_regular(v):
            continue
        if all(b.range in H for b in g.out_bundles(v)):
            return False
    return True


def saturated_hereditary_closure(g: Graph, seed: Iterable[str]) -> frozenset[str]:
    """Least hereditary and saturated vertex set containing the seed."""
    H = set(g.check_vertex(v) for v in seed)
    changed = True
    while changed:
        changed = False
        for v in list(H):
            for b in g.out_bundles(v):
                if b.range not in H:
                    H.add(b.range)
                    changed = True
        for v in g.vertices:
            if v in H or not g.is_regular(v):
                continue
            if all(b.range in H for b in g.out_bundles(v)):
                H.add(v)
                changed = True
    return frozenset(H)


def _require_hereditary_saturated(g: Graph, vertex_set: Iterable[str]) -> frozenset[str]:
    H = frozenset(g.check_vertex(v) for v in vertex_set)
    if not is_hereditary(g, H):
        raise ValueError(f"vertex set {sorted(H)} is not hereditary")
    if not is_saturated(g, H):
        raise ValueError(f"vertex set {sorted(H)} is not saturated")
    return H


# -- breaking vertices --------------------------------------------------------------


def breaking_vertices(g: Graph, hereditary_saturated: Iterable[str]) -> frozenset[str]:
    """Infinite emitters outside H with finitely many (but at least one)
    edges back outside H."""
    H = _require_hereditary_saturated(g, hereditary_saturated)
    out = set()
    for v in g.vertices:
        if v in H or not g.is_infinite_emitter(v):
            continue
        escaping = 0
        infinite = False
        for b in g.out_bundles(v):
            if b.range in H:
                continue
            if is_omega(b.multiplicity):
                infinite = True
                break
            escaping += b.multiplicity
        if not infinite and 0 < escaping:
            out.add(v)
    return frozenset(out)


class FAlphaSplit(NamedTuple):
    """Edges at a breaking vertex, split by where they land.

    ``outside`` is the finite set of edges escaping H; ``into_h_bundles``
    names the bundles (finite or infinite) landing inside H, kept symbolic
    because an infinite bundle cannot be listed edge by edge.
    """

    outside: frozenset[EdgeRef]
    into_h_bundles: tuple[str, ...]


def f_alpha_split(g: Graph, alpha: Path, hereditary_saturated: Iterable[str]) -> FAlphaSplit:
    H = _require_hereditary_saturated(g, hereditary_saturated)
    alpha = g.path(alpha.base, alpha.edges)
    v = g.path_range(alpha)
    if v not in breaking_vertices(g, H):
        raise ValueError(f"path range {v!r} is not a breaking vertex of {sorted(H)}")
    outside = []
    into_h = []
    for b in g.out_bundles(v):
        if b.range in H:
            into_h.append(b.name)
        else:
            # a breaking vertex escapes along finitely many edges only
            outside.extend(EdgeRef(b.name, i) for i in range(b.multiplicity))
    return FAlphaSplit(frozenset(outside), tuple(into_h))


def _escaping_edges(g: Graph, v: str, H: frozenset[str]) -> frozenset[EdgeRef]:
    refs = []
    for b in g.out_bundles(v):
        if b.range not in H:
            refs.extend(EdgeRef(b.name, i) for i in range(b.multiplicity))
    return frozenset(refs)


# -- the finiteness condition ---------------------------------------------------------


@dataclass(frozen=True)
class FinitenessViolation:
    """Why the families attached to (H, B_H) are infinite."""

    kind: str  # "cycle" | "omega_interior" | "omega_entry"
    cycle: Optional[Path] = None
    bundle: Optional[str] = None

    def describe(self, g: Graph) -> str:
        if self.kind == "cycle":
            return (f"cycle {g.render_path(self.cycle)!r} outside H reaches H, "
                    "so the first-entry path family is infinite")
        if self.kind == "omega_interior":
            return (f"infinite bundle {self.bundle!r} lies on paths toward H, "
                    "so infinitely many parallel first-entry paths exist")
        return (f"infinite bundle {self.bundle!r} enters H from a non-breaking "
                "infinite emitter, so the first-entry path family is infinite")


def finiteness_violation(g: Graph, hereditary_saturated: Iterable[str],
                         ) -> Optional[FinitenessViolation]:
    """The reason the finiteness condition fails for H, or None if it holds.

    The condition asks that H, the first-entry paths whose last edge does
    not leave a breaking vertex, and the paths ending at breaking vertices
    are all finite families.  Decided purely by reachability.
    """
    H = _require_hereditary_saturated(g, hereditary_saturated)
    feeders = vertices_reaching(g, H) - H
    B = breaking_vertices(g, H)
    for b in g.bundles:
        if not is_omega(b.multiplicity) or b.source in H:
            continue
        if b.range in H:
            if b.source not in B:
                return FinitenessViolation("omega_entry", bundle=b.name)
        elif b.range in feeders:
            return FinitenessViolation("omega_interior", bundle=b.name)
    cyc = _find_cycle_within(g, feeders)
    if cyc is not None:
        return FinitenessViolation("cycle", cycle=cyc)
    return None


def satisfies_condition_f(g: Graph, hereditary_saturated: Iterable[str]) -> bool:
    return finiteness_violation(g, hereditary_saturated) is None


def nonbreaking_entry_paths(g: Graph, hereditary_saturated: Iterable[str]) -> list[Path]:
    """First-entry paths into H whose final edge does not leave a breaking
    vertex.  Requires the finiteness condition (the family is infinite
    otherwise)."""
    H = _require_hereditary_saturated(g, hereditary_saturated)
    viol = finiteness_violation(g, H)
    if viol is not None:
        raise InfinitePathFamilyError(viol.describe(g), cycle=viol.cycle,
                                      bundle=viol.bundle)
    B = breaking_vertices(g, H)
    feeders = vertices_reaching(g, H) - H
    out: list[Path] = []

    def walk(start: str, v: str, acc: tuple[EdgeRef, ...]):
        for b in g.out_bundles(v):
            if is_omega(b.multiplicity):
                continue  # into H only from breaking vertices, excluded here
            for i in range(b.multiplicity):
                e = EdgeRef(b.name, i)
                if b.range in H:
                    if v not in B:
                        out.append(Path(start, acc + (e,)))
                elif b.range in feeders:
                    walk(start, b.range, acc + (e,))

    for v in g.vertices:
        if v in feeders:
            walk(v, v, ())
    out.sort(key=g.path_sort_key)
    return out


def paths_into_breaking(g: Graph, hereditary_saturated: Iterable[str]) -> list[Path]:
    """All paths of length >= 0 ending at a breaking vertex of H.  Requires
    the finiteness condition."""
    H = _require_hereditary_saturated(g, hereditary_saturated)
    viol = finiteness_violation(g, H)
    if viol is not None:
        raise InfinitePathFamilyError(viol.describe(g), cycle=viol.cycle,
                                      bundle=viol.bundle)
    B = breaking_vertices(g, H)
    reach_b = vertices_reaching(g, B)
    out: list[Path] = []

    def walk(start: str, v: str, acc: tuple[EdgeRef, ...]):
        if v in B:
            out.append(Path(start, acc))
        for b in g.out_bundles(v):
            if b.range in reach_b and not is_omega(b.multiplicity):
                for i in range(b.multiplicity):
                    walk(start, b.range, acc + (EdgeRef(b.name, i),))

    for v in g.vertices:
        if v in reach_b:
            walk(v, v, ())
    out.sort(key=g.path_sort_key)
    return out


# -- admissible pairs --------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissiblePair:
    """A hereditary saturated set H together with S, a subset of its
    breaking vertices."""

    h: frozenset[str]
    s: frozenset[str]


def admissible_pair(g: Graph, h: Iterable[str], s: Iterable[str]) -> AdmissiblePair:
    H = _require_hereditary_saturated(g, h)
    S = frozenset(g.check_vertex(v) for v in s)
    if not S <= breaking_vertices(g, H):
        raise ValueError(f"{sorted(S)} is not a set of breaking vertices of {sorted(H)}")
    return AdmissiblePair(H, S)


def pair_sort_key(g: Graph, pair: AdmissiblePair):
    return (len(pair.h), tuple(sorted(g.vertex_position(v) for v in pair.h)))


def is_compact_pair(g: Graph, h: Iterable[str], s: Iterable[str]) -> bool:
    """True iff S exhausts the breaking vertices and H satisfies the
    finiteness condition; the corresponding invariant open set is then
    compact.  For a proper subset S the set is not closed, and a missing
    breaking vertex contributes an infinite disjoint open family, so the
    answer is False."""
    pair = admissible_pair(g, h, s)
    if pair.s != breaking_vertices(g, pair.h):
        return False
    return satisfies_condition_f(g, pair.h)


# -- disjoint decompositions ---------------------------------------------------------------


KIND_VERTEX = "vertex"
KIND_PATH = "path"
KIND_PATH_MINUS = "path_minus"


@dataclass(frozen=True)
class UnitBasicSet:
    """A basic subset of the unit space: all boundary paths through a
    vertex, a cylinder over a path, or a cylinder minus finitely many
    one-edge continuations."""

    kind: str
    path: Path
    exclusions: frozenset[EdgeRef] = frozenset()

    def contains(self, g: Graph, x: BoundaryPath) -> bool:
        if not starts_with(g, x, self.path):
            return False
        if not self.exclusions:
            return True
        rest = strip_prefix(g, x, self.path)
        first = rest.prefix.edges[0] if rest.prefix.edges else (
            rest.cycle.edges[0] if rest.cycle is not None else None)
        return first not in self.exclusions

    def to_json(self, g: Graph) -> dict:
        return {
            "kind": self.kind,
            "path": {"base": self.path.base,
                     "edges": [g.render_edge(e) for e in self.path.edges]},
            "exclusions": sorted(g.render_edge(e) for e in self.exclusions),
        }


@dataclass(frozen=True)
class Decomposition:
    """Pairwise disjoint basic pieces covering one invariant open set."""

    pieces: tuple[UnitBasicSet, ...]

    def contains(self, g: Graph, x: BoundaryPath) -> bool:
        return any(p.contains(g, x) for p in self.pieces)

    def pairwise_disjoint(self, g: Graph) -> bool:
        ps = self.pieces
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                if _pieces_overlap(g, ps[i], ps[j]):
                    return False
        return True

    def to_json(self, g: Graph) -> list[dict]:
        return [p.to_json(g) for p in self.pieces]


def _pieces_overlap(g: Graph, a: UnitBasicSet, b: UnitBasicSet) -> bool:
    # cylinders overlap only along prefix extension; exclusions can block
    # the connecting edge (one-step sets only, which is all we emit).
    if a.path.length > b.path.length:
        a, b = b, a
    if b.path.base != a.path.base or b.path.edges[:a.path.length] != a.path.edges:
        return False
    gamma = b.path.edges[a.path.length:]
    if gamma:
        return gamma[0] not in a.exclusions
    # identical base paths: disjoint only if exclusions exhaust continuations
    v = g.path_range(a.path)
    if g.is_regular(v):
        return frozenset(g.finite_out_edges(v)) != (a.exclusions | b.exclusions)
    return True


def decompose(g: Graph, h: Iterable[str], s: Iterable[str]) -> Decomposition:
    """The invariant open set of a compact pair (H, B_H) as a disjoint union
    of basic sets: one per vertex of H, one per non-breaking first-entry
    path, and one punctured cylinder per path into a breaking vertex.

    Raises InfinitePathFamilyError when the pair is not compact (one of the
    three families would be infinite)."""
    pair = admissible_pair(g, h, s)
    B = breaking_vertices(g, pair.h)
    if pair.s != B:
        raise ValueError(
            f"decomposition is materialized only for S = B_H; got S = "
            f"{sorted(pair.s)} with B_H = {sorted(B)}")
    viol = finiteness_violation(g, pair.h)
    if viol is not None:
        raise InfinitePathFamilyError(viol.describe(g), cycle=viol.cycle,
                                      bundle=viol.bundle)
    pieces: list[UnitBasicSet] = []
    for v in g.vertices:
        if v in pair.h:
            pieces.append(UnitBasicSet(KIND_VERTEX, g.vertex_path(v)))
    for p in nonbreaking_entry_paths(g, pair.h):
        pieces.append(UnitBasicSet(KIND_PATH, p))
    for p in paths_into_breaking(g, pair.h):
        excl = _escaping_edges(g, g.path_range(p), pair.h)
        pieces.append(UnitBasicSet(KIND_PATH_MINUS, p, excl))
    return Decomposition(tuple(pieces))


def invariant_set_contains(g: Graph, pair: AdmissiblePair, x: BoundaryPath) -> bool:
    """Direct membership test for the invariant open set of (H, S): the
    path visits H at some vertex, or it is a finite path ending in S."""
    at = x.source
    if at in pair.h:
        return True
    for e in x.prefix.edges:
        at = g.edge_range(e)
        if at in pair.h:
            return True
    if x.cycle is not None:
        if any(v in pair.h for v in g.path_vertices(x.cycle)):
            return True
        return False
    return g.path_range(x.prefix) in pair.s


# -- enumeration ----------------------------------------------------------------------------


def _subset_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(SUBSET_CAP_ENV)
    if env:
        return int(env)
    return DEFAULT_SUBSET_CAP


def hereditary_saturated_sets(g: Graph, cap: Optional[int] = None) -> list[frozenset[str]]:
    """All hereditary saturated vertex sets, as closures of all subsets.

    Exponential in the vertex count; guarded by a candidate-subset cap
    (default 2**16, overridable via the LPA_CENTER_SUBSET_CAP environment
    variable or the ``cap`` argument)."""
    n = len(g.vertices)
    limit = _subset_cap(cap)
    if (1 << n) > limit:
        raise SubsetCapExceededError(
            f"enumerating hereditary saturated sets needs 2**{n} candidate "
            f"subsets, above the cap {limit}; raise {SUBSET_CAP_ENV} to override")
    seen: set[frozenset[str]] = set()
    for mask in range(1 << n):
        seed = [g.vertices[i] for i in range(n) if mask >> i & 1]
        seen.add(saturated_hereditary_closure(g, seed))
    return sorted(seen, key=lambda H: (len(H), tuple(sorted(
        g.vertex_position(v) for v in H))))


def enumerate_compact_pairs(g: Graph, cap: Optional[int] = None) -> list[AdmissiblePair]:
    """All pairs (H, B_H) whose invariant open set is compact, including the
    empty pair; ordered by (|H|, vertex positions)."""
    pairs = []
    for H in hereditary_saturated_sets(g, cap):
        if satisfies_condition_f(g, H):
            pairs.append(AdmissiblePair(H, breaking_vertices(g, H)))
    return pairs


def minimal_compact_pairs(g: Graph, cap: Optional[int] = None) -> list[AdmissiblePair]:
    """The nonempty compact pairs minimal under inclusion of H; distinct
    minimal pairs have disjoint invariant open sets."""
    pairs = [p for p in enumerate_compact_pairs(g, cap) if p.h]
    return [p for p in pairs
            if not any(q.h < p.h for q in pairs)]
