"""The Leavitt path algebra of a graph as a symbolic span of monomials.

An element is a finite R-linear combination of monomials alpha beta* where
alpha and beta are paths with a common range.  Multiplication is the pure
prefix computation coming from the ghost-edge cancellation rule; monomials
are deliberately kept unreduced (the monomials do not form a basis), so
equality of elements is decided elsewhere, by the groupoid-indicator
normal form in :mod:`lpacenter.steinberg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import EdgeRef, Graph, Path, is_omega
from .rings import Ring


@dataclass(frozen=True)
class Monomial:
    """alpha beta* with r(alpha) = r(beta)."""

    alpha: Path
    beta: Path

    @property
    def degree(self) -> int:
        return self.alpha.length - self.beta.length


def _check_monomial(g: Graph, m: Monomial) -> Monomial:
    a = g.path(m.alpha.base, m.alpha.edges)
    b = g.path(m.beta.base, m.beta.edges)
    if g.path_range(a) != g.path_range(b):
        raise ValueError(
            f"monomial ranges differ: {g.path_range(a)!r} != {g.path_range(b)!r}")
    return m


def _mono_mul_raw(m1: Monomial, m2: Monomial) -> Optional[Monomial]:
    """(a1 b1*)(a2 b2*) as a single monomial, or None when it vanishes.

    If a2 = b1.g the product is (a1.g) b2*; if b1 = a2.d it is a1 (b2.d)*;
    otherwise the ghost/real interface kills the term.
    """
    b1, a2 = m1.beta, m2.alpha
    if a2.base != b1.base:
        return None
    n1, n2 = b1.length, a2.length
    if n2 >= n1:
        if a2.edges[:n1] != b1.edges:
            return None
        gamma = a2.edges[n1:]
        return Monomial(Path(m1.alpha.base, m1.alpha.edges + gamma), m2.beta)
    if b1.edges[:n2] != a2.edges:
        return None
    delta = b1.edges[n2:]
    return Monomial(m1.alpha, Path(m2.beta.base, m2.beta.edges + delta))


class AlgebraElement:
    """A finite R-linear combination of monomials over a fixed graph.

    Value semantics; ``==`` is structural (same stored terms), not algebra
    equality.  Use :func:`lpacenter.steinberg.equals` for the latter.
    """

    def __init__(self, graph: Graph, ring: Ring,
                 terms: Optional[dict[Monomial, object]] = None):
        self.graph = graph
        self.ring = ring
        clean: dict[Monomial, object] = {}
        for m, c in (terms or {}).items():
            if ring.is_zero(c):
                continue
            _check_monomial(graph, m)
            clean[m] = c
        self._terms = clean

    # -- inspection -----------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, object]]:
        key = self.graph.path_sort_key
        return sorted(self._terms.items(),
                      key=lambda mc: (key(mc[0].alpha), key(mc[0].beta)))

    def coefficient(self, m: Monomial):
        return self._terms.get(m, self.ring.zero())

    @property
    def is_structurally_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.graph == other.graph
                and self.ring == other.ring
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.graph, self.ring,
                     frozenset(self._terms.items())))

    # -- arithmetic -------------------------------------------------------------

    def _check_compatible(self, other: "AlgebraElement"):
        if self.graph != other.graph:
            raise ValueError("elements live over different graphs")
        if self.ring != other.ring:
            raise ValueError("elements live over different rings")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            acc = self.ring.add(terms.get(m, self.ring.zero()), c)
            if self.ring.is_zero(acc):
                terms.pop(m, None)
            else:
                terms[m] = acc
        return AlgebraElement(self.graph, self.ring, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.graph, self.ring,
                              {m: self.ring.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, coeff) -> "AlgebraElement":
        return AlgebraElement(self.graph, self.ring,
                              {m: self.ring.mul(coeff, c) for m, c in self._terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        ring = self.ring
        terms: dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul_raw(m1, m2)
                if m is None:
                    continue
                acc = ring.add(terms.get(m, ring.zero()), ring.mul(c1, c2))
                if ring.is_zero(acc):
                    terms.pop(m, None)
                else:
                    terms[m] = acc
        return AlgebraElement(self.graph, self.ring, terms)

    def involution(self) -> "AlgebraElement":
        """The anti-automorphism alpha beta* -> beta alpha*; fixes vertices."""
        return AlgebraElement(self.graph, self.ring,
                              {Monomial(m.beta, m.alpha): c
                               for m, c in self._terms.items()})

    def degree_component(self, n: int) -> "AlgebraElement":
        return AlgebraElement(self.graph, self.ring,
                              {m: c for m, c in self._terms.items()
                               if m.degree == n})

    # -- rendering -----------------------------------------------------------------

    def monomial_text(self, m: Monomial) -> str:
        g = self.graph
        if m.alpha.is_vertex and m.beta.is_vertex:
            return m.alpha.base
        parts = []
        if not m.alpha.is_vertex:
            parts.append(g.render_path(m.alpha))
        if not m.beta.is_vertex:
            parts.append(f"({g.render_path(m.beta)})^*")
        return " ".join(parts)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for m, c in self.terms():
            cs = self.ring.format(c)
            body = self.monomial_text(m)
            if not chunks:
                chunks.append(f"{cs} {body}")
            elif cs.startswith("-"):
                chunks.append(f"- {cs[1:]} {body}")
            else:
                chunks.append(f"+ {cs} {body}")
        return " ".join(chunks)

    def to_json(self) -> list[dict]:
        g = self.graph
        return [{
            "coeff": self.ring.format(c),
            "alpha": [g.render_edge(e) for e in m.alpha.edges],
            "beta": [g.render_edge(e) for e in m.beta.edges],
            "vertex": g.path_range(m.alpha),
        } for m, c in self.terms()]

    def __repr__(self):
        return f"<{self.to_text()}>"


# -- constructors -------------------------------------------------------------------


def zero_element(g: Graph, ring: Ring) -> AlgebraElement:
    return AlgebraElement(g, ring)

def monomial_element(g: Graph, ring: Ring, alpha: Path, beta: Path,
                     coeff=None) -> AlgebraElement:
    c = ring.one() if coeff is None else coeff
    return AlgebraElement(g, ring, {Monomial(alpha, beta): c})


def vertex_element(g: Graph, ring: Ring, v: str) -> AlgebraElement:
    p = g.vertex_path(v)
    return monomial_element(g, ring, p, p)


def edge_element(g: Graph, ring: Ring, e: EdgeRef) -> AlgebraElement:
    p = g.edge_path(e)
    return monomial_element(g, ring, p, g.vertex_path(g.edge_range(e)))


def ghost_element(g: Graph, ring: Ring, e: EdgeRef) -> AlgebraElement:
    p = g.edge_path(e)
    return monomial_element(g, ring, g.vertex_path(g.edge_range(e)), p)


def path_element(g: Graph, ring: Ring, p: Path) -> AlgebraElement:
    return monomial_element(g, ring, p, g.vertex_path(g.path_range(p)))


def identity_element(g: Graph, ring: Ring) -> AlgebraElement:
    """Sum of all vertices: the unit, since the vertex set is finite."""
    out = zero_element(g, ring)
    for v in g.vertices:
        out = out + vertex_element(g, ring, v)
    return out


def mono_mul(g: Graph, ring: Ring, m1: Monomial, m2: Monomial) -> AlgebraElement:
    """Product of two monomials: zero or a single monomial."""
    _check_monomial(g, m1)
    _check_monomial(g, m2)
    m = _mono_mul_raw(m1, m2)
    if m is None:
        return zero_element(g, ring)
    return monomial_element(g, ring, m.alpha, m.beta)


def ck2_expand(g: Graph, ring: Ring, v: str) -> AlgebraElement:
    """Sum of e e* over the outgoing edges of a regular vertex."""
    if not g.is_regular(v):
        raise ValueError(
            f"vertex {v!r} is {g.classify(v).value}; the edge expansion only "
            "applies to regular vertices")
    out = zero_element(g, ring)
    for e in g.finite_out_edges(v):
        p = g.edge_path(e)
        out = out + monomial_element(g, ring, p, p)
    return out


# -- generator covers ----------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """A vertex, a real edge, or a ghost edge."""

    kind: str  # "vertex" | "edge" | "ghost"
    vertex: Optional[str] = None
    edge: Optional[EdgeRef] = None

    def as_element(self, g: Graph, ring: Ring) -> AlgebraElement:
        if self.kind == "vertex":
            return vertex_element(g, ring, self.vertex)
        if self.kind == "edge":
            return edge_element(g, ring, self.edge)
        if self.kind == "ghost":
            return ghost_element(g, ring, self.edge)
        raise ValueError(f"bad generator kind {self.kind!r}")


def generators(g: Graph, a: Optional[AlgebraElement] = None) -> list[Generator]:
    """A finite generator cover sufficient for centrality checks.

    All vertices; all edges and ghost edges of finite bundles; and for each
    OMEGA bundle, the indices occurring in ``a`` plus one fresh index (the
    first index past those occurring).  Indices of an OMEGA bundle that do
    not occur in ``a`` are interchangeable by relabeling, so one fresh
    representative suffices.
    """
    used: dict[str, set[int]] = {}
    if a is not None:
        if a.graph != g:
            raise ValueError("element lives over a different graph")
        for m, _ in a.terms():
            for e in m.alpha.edges + m.beta.edges:
                used.setdefault(e.bundle, set()).add(e.index)

    gens: list[Generator] = [Generator("vertex", vertex=v) for v in g.vertices]
    edge_refs: list[EdgeRef] = []
    for b in g.bundles:
        if is_omega(b.multiplicity):
            occurring = sorted(used.get(b.name, ()))
            fresh = (occurring[-1] + 1) if occurring else 0
            edge_refs.extend(EdgeRef(b.name, i) for i in occurring + [fresh])
        else:
            edge_refs.extend(EdgeRef(b.name, i) for i in range(b.multiplicity))
    gens.extend(Generator("edge", edge=e) for e in edge_refs)
    gens.extend(Generator("ghost", edge=e) for e in edge_refs)
    return gens
