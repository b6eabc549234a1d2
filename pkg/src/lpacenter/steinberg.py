"""Normal form, equality, and centrality through groupoid indicators.

An algebra element maps to an R-combination of indicator functions of
basic compact open bisections Z((mu, nu) \\ F): pairs of paths with a
common range plus finitely many excluded one-edge continuations.  Two
indicators overlap only along prefix extension, so repeatedly splitting
the shallower descriptor yields a combination whose supports are pairwise
disjoint; an element is zero exactly when nothing survives.  All relation
reasoning (in particular the vertex = sum of ee* expansion) lives in this
refinement, keeping multiplication in :mod:`lpacenter.algebra` a pure
prefix computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import lattice
from .algebra import (
    AlgebraElement,
    Monomial,
    generators,
    monomial_element,
    zero_element,
)
from .boundary import GroupoidPoint, boundary_paths_equal, starts_with, strip_prefix
from .graphs import EdgeRef, Graph, Path, VertexKind
from .rings import Ring

_SPLIT_BUDGET = 1_000_000


@dataclass(frozen=True)
class BasicBisection:
    """Descriptor of Z((mu, nu) \\ F): tail-equivalent pairs extending
    (mu, nu) whose continuation does not start with an excluded edge.

    Invariants: r(mu) = r(nu); exclusions are outgoing edges of r(mu) and
    never exhaust the continuations, so the set is nonempty.
    """

    mu: Path
    nu: Path
    exclusions: frozenset[EdgeRef] = frozenset()

    @property
    def degree(self) -> int:
        return self.mu.length - self.nu.length

    def contains(self, g: Graph, pt: GroupoidPoint) -> bool:
        if pt.k != self.degree:
            return False
        if not (starts_with(g, pt.x, self.mu) and starts_with(g, pt.y, self.nu)):
            return False
        rx = strip_prefix(g, pt.x, self.mu)
        ry = strip_prefix(g, pt.y, self.nu)
        if not boundary_paths_equal(g, rx, ry):
            return False
        first = rx.prefix.edges[0] if rx.prefix.edges else (
            rx.cycle.edges[0] if rx.cycle is not None else None)
        return first not in self.exclusions


def _make_bisection(g: Graph, mu: Path, nu: Path,
                    exclusions: Iterable[EdgeRef]) -> Optional[BasicBisection]:
    """Validated descriptor, or None when the set is empty.  At a regular
    vertex, excluding all but one continuation collapses to the extended
    cylinder, keeping descriptors closer to canonical."""
    v = g.path_range(mu)
    if g.path_range(nu) != v:
        raise ValueError(f"ranges differ: {v!r} vs {g.path_range(nu)!r}")
    excl = frozenset(exclusions)
    for e in excl:
        g.check_edge(e)
        if g.edge_source(e) != v:
            raise ValueError(f"excluded edge {e!r} does not leave {v!r}")
    if g.classify(v) is VertexKind.REGULAR:
        out = frozenset(g.finite_out_edges(v))
        if excl == out:
            return None
        if len(excl) == len(out) - 1 and len(excl) >= 1:
            (e,) = out - excl
            return BasicBisection(g.extend(mu, e), g.extend(nu, e))
    return BasicBisection(mu, nu, excl)


class SteinbergElement:
    """A finite R-combination of basic bisection indicators."""

    def __init__(self, graph: Graph, ring: Ring,
                 terms: Optional[dict[BasicBisection, object]] = None):
        self.graph = graph
        self.ring = ring
        self._terms = {b: c for b, c in (terms or {}).items()
                       if not ring.is_zero(c)}

    def terms(self) -> list[tuple[BasicBisection, object]]:
        key = self.graph.path_sort_key
        return sorted(
            self._terms.items(),
            key=lambda tc: (tc[0].degree, key(tc[0].mu), key(tc[0].nu),
                            sorted(self.graph.edge_sort_key(e)
                                   for e in tc[0].exclusions)))

    @property
    def is_structurally_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        return (isinstance(other, SteinbergElement)
                and self.graph == other.graph
                and self.ring == other.ring
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.graph, self.ring, frozenset(self._terms.items())))

    def _check_compatible(self, other: "SteinbergElement"):
        if self.graph != other.graph or self.ring != other.ring:
            raise ValueError("elements live over different graphs or rings")

    def __add__(self, other: "SteinbergElement") -> "SteinbergElement":
        self._check_compatible(other)
        terms = dict(self._terms)
        for b, c in other._terms.items():
            acc = self.ring.add(terms.get(b, self.ring.zero()), c)
            if self.ring.is_zero(acc):
                terms.pop(b, None)
            else:
                terms[b] = acc
        return SteinbergElement(self.graph, self.ring, terms)

    def __neg__(self) -> "SteinbergElement":
        return SteinbergElement(self.graph, self.ring,
                                {b: self.ring.neg(c) for b, c in self._terms.items()})

    def __sub__(self, other: "SteinbergElement") -> "SteinbergElement":
        return self + (-other)

    def scale(self, coeff) -> "SteinbergElement":
        return SteinbergElement(self.graph, self.ring,
                                {b: self.ring.mul(coeff, c)
                                 for b, c in self._terms.items()})

    def evaluate(self, pt: GroupoidPoint):
        total = self.ring.zero()
        for b, c in self._terms.items():
            if b.contains(self.graph, pt):
                total = self.ring.add(total, c)
        return total

    def degrees(self) -> set[int]:
        return {b.degree for b in self._terms}

    # -- normal form ----------------------------------------------------------

    def normalize(self) -> "SteinbergElement":
        """Equivalent combination whose supports are pairwise disjoint.

        Overlaps happen only between a descriptor and a prefix-extension of
        it (same degree, matching nu), or between equal cylinders with
        different exclusions; both resolve by carving one continuation out
        of the shallower descriptor.  Splits never go deeper than the
        deepest existing descriptor does along its own prefix, so the
        refinement terminates.
        """
        g = self.graph
        ring = self.ring
        terms = dict(self._terms)
        budget = _SPLIT_BUDGET

        def add_piece(acc: dict, b: Optional[BasicBisection], c) -> None:
            if b is None:
                return
            total = ring.add(acc.get(b, ring.zero()), c)
            if ring.is_zero(total):
                acc.pop(b, None)
            else:
                acc[b] = total

        while True:
            action = _find_overlap(g, terms)
            if action is None:
                break
            budget -= 1
            if budget < 0:
                raise RuntimeError("bisection refinement exceeded its budget")
            target, pieces = action
            coeff = terms.pop(target)
            for piece in pieces:
                add_piece(terms, piece, coeff)
        return SteinbergElement(g, ring, terms)

    def to_json(self) -> list[dict]:
        g = self.graph
        return [{
            "coeff": self.ring.format(c),
            "mu": [g.render_edge(e) for e in b.mu.edges],
            "nu": [g.render_edge(e) for e in b.nu.edges],
            "vertex": g.path_range(b.mu),
            "exclusions": sorted(g.render_edge(e) for e in b.exclusions),
        } for b, c in self.terms()]

    def __repr__(self):
        bits = ", ".join(
            f"{self.ring.format(c)}*Z({self.graph.render_path(b.mu)}|"
            f"{self.graph.render_path(b.nu)}"
            + (f" minus {len(b.exclusions)}" if b.exclusions else "") + ")"
            for b, c in self.terms())
        return f"<steinberg {bits or '0'}>"


def _extends(shallow: Path, deep: Path) -> Optional[tuple[EdgeRef, ...]]:
    if deep.base != shallow.base or deep.length < shallow.length:
        return None
    if deep.edges[:shallow.length] != shallow.edges:
        return None
    return deep.edges[shallow.length:]


def _find_overlap(g: Graph, terms: dict):
    """First overlapping pair in deterministic order, as
    (descriptor to replace, replacement pieces)."""
    items = sorted(terms.keys(),
                   key=lambda b: (b.degree, b.mu.length,
                                  g.path_sort_key(b.mu), g.path_sort_key(b.nu),
                                  sorted(g.edge_sort_key(e) for e in b.exclusions)))
    for i, b1 in enumerate(items):
        for b2 in items[i + 1:]:
            if b1.degree != b2.degree:
                continue
            shallow, deep = (b1, b2) if b1.mu.length <= b2.mu.length else (b2, b1)
            gamma = _extends(shallow.mu, deep.mu)
            if gamma is None:
                continue
            nu_gamma = _extends(shallow.nu, deep.nu)
            if nu_gamma != gamma:
                continue
            if gamma:
                e = gamma[0]
                if e in shallow.exclusions:
                    continue
                return shallow, [
                    _make_bisection(g, shallow.mu, shallow.nu,
                                    shallow.exclusions | {e}),
                    _make_bisection(g, g.extend(shallow.mu, e),
                                    g.extend(shallow.nu, e), ()),
                ]
            # same cylinder, different exclusions: push toward the union
            extra = deep.exclusions - shallow.exclusions
            if not extra:
                extra = shallow.exclusions - deep.exclusions
                shallow = deep
            e = sorted(extra, key=g.edge_sort_key)[0]
            return shallow, [
                _make_bisection(g, shallow.mu, shallow.nu,
                                shallow.exclusions | {e}),
                _make_bisection(g, g.extend(shallow.mu, e),
                                g.extend(shallow.nu, e), ()),
            ]
    return None


# -- transport from the path algebra ---------------------------------------------


def pi(a: AlgebraElement) -> SteinbergElement:
    """Indicator image of an element: each monomial alpha beta* becomes the
    indicator of Z(alpha, beta); the result is normalized."""
    terms: dict[BasicBisection, object] = {}
    for m, c in a.terms():
        b = _make_bisection(a.graph, m.alpha, m.beta, ())
        if b is None:
            continue
        acc = a.ring.add(terms.get(b, a.ring.zero()), c)
        terms[b] = acc
    return SteinbergElement(a.graph, a.ring, terms).normalize()


def pi_inverse(s: SteinbergElement) -> AlgebraElement:
    """Preimage of a combination of basic indicators: Z((mu, nu) \\ F) pulls
    back to mu nu* minus the excluded one-edge corrections."""
    g, ring = s.graph, s.ring
    out = zero_element(g, ring)
    for b, c in s.terms():
        out = out + monomial_element(g, ring, b.mu, b.nu, c)
        for e in sorted(b.exclusions, key=g.edge_sort_key):
            out = out - monomial_element(g, ring, g.extend(b.mu, e),
                                         g.extend(b.nu, e), c)
    return out


def is_zero(a: AlgebraElement) -> bool:
    return pi(a).is_structurally_zero


def equals(a: AlgebraElement, b: AlgebraElement) -> bool:
    """Algebra equality, decided in the indicator normal form."""
    if a.graph != b.graph or a.ring != b.ring:
        raise ValueError("elements live over different graphs or rings")
    return is_zero(a - b)


def convolve(s: SteinbergElement, t: SteinbergElement) -> SteinbergElement:
    """Product of indicator combinations: basic bisections compose pairwise
    (the product of two basic sets is again basic or empty)."""
    s._check_compatible(t)
    g, ring = s.graph, s.ring
    terms: dict[BasicBisection, object] = {}
    for b1, c1 in s.terms():
        for b2, c2 in t.terms():
            b = _compose_bisections(g, b1, b2)
            if b is None:
                continue
            acc = ring.add(terms.get(b, ring.zero()), ring.mul(c1, c2))
            terms[b] = acc
    return SteinbergElement(g, ring, terms).normalize()


def _compose_bisections(g: Graph, b1: BasicBisection,
                        b2: BasicBisection) -> Optional[BasicBisection]:
    gamma = _extends(b1.nu, b2.mu)
    if gamma is not None:
        if gamma:
            if gamma[0] in b1.exclusions:
                return None
            mu = Path(b1.mu.base, b1.mu.edges + gamma)
            return _make_bisection(g, mu, b2.nu, b2.exclusions)
        return _make_bisection(g, b1.mu, b2.nu, b1.exclusions | b2.exclusions)
    delta = _extends(b2.mu, b1.nu)
    if delta is not None and delta:
        if delta[0] in b2.exclusions:
            return None
        nu = Path(b2.nu.base, b2.nu.edges + delta)
        return _make_bisection(g, b1.mu, nu, b1.exclusions)
    return None


# -- centrality and compact-pair indicators ------------------------------------------


def is_central(a: AlgebraElement) -> bool:
    """True iff the element commutes with a finite generator cover: all
    vertices, all finite-bundle edges and ghosts, and per OMEGA bundle the
    occurring indices plus one fresh representative."""
    for gen in generators(a.graph, a):
        x = gen.as_element(a.graph, a.ring)
        if not equals(a * x, x * a):
            return False
    return True


def indicator_of_pair(g: Graph, ring: Ring, h: Iterable[str],
                      s: Iterable[str]) -> AlgebraElement:
    """The element whose indicator image is the invariant open set of the
    compact pair (H, B_H): the vertices of H, plus a a* over non-breaking
    first-entry paths, plus punctured a a* corrections at breaking vertices.
    """
    pair = lattice.admissible_pair(g, h, s)
    if not lattice.is_compact_pair(g, pair.h, pair.s):
        raise ValueError(
            f"({sorted(pair.h)}, {sorted(pair.s)}) is not a compact pair")
    out = zero_element(g, ring)
    for v in g.vertices:
        if v in pair.h:
            p = g.vertex_path(v)
            out = out + monomial_element(g, ring, p, p)
    for p in lattice.nonbreaking_entry_paths(g, pair.h):
        out = out + monomial_element(g, ring, p, p)
    for p in lattice.paths_into_breaking(g, pair.h):
        out = out + monomial_element(g, ring, p, p)
        split = lattice.f_alpha_split(g, p, pair.h)
        for e in sorted(split.outside, key=g.edge_sort_key):
            q = g.extend(p, e)
            out = out - monomial_element(g, ring, q, q)
    return out
