"""Generators and bases of the graded center of the Leavitt path algebra.

Degree zero is indexed by compact pairs (generators) and by minimal
compact pairs (a basis).  Away from degree zero, each exit-free cycle
class with finitely many entries contributes, in every degree its length
divides, the sum of alpha d^m alpha* over its rotations d and entry paths
alpha.  Negative degrees are materialized as involutions of the positive
ones.  A linear-algebra oracle over finite-dimensional cases double-checks
the combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import lattice
from .algebra import AlgebraElement, monomial_element, zero_element
from .cycles import CycleClass, cycles_without_exits, entry_paths, has_finite_entries
from .graphs import Graph, Path, is_omega, simple_cycles
from .rings import QQ, Ring
from .steinberg import indicator_of_pair

DEFAULT_DEGREE_CAP = 12


def center_zero_generators(g: Graph, ring: Ring,
                           cap: Optional[int] = None) -> list[AlgebraElement]:
    """One generator of the degree-zero center per nonempty compact pair."""
    out = []
    for pair in lattice.enumerate_compact_pairs(g, cap):
        if pair.h:
            out.append(indicator_of_pair(g, ring, pair.h, pair.s))
    return out


def center_zero_basis(g: Graph, ring: Ring,
                      cap: Optional[int] = None) -> list[AlgebraElement]:
    """A free basis of the degree-zero center: one indicator per minimal
    compact pair."""
    return [indicator_of_pair(g, ring, pair.h, pair.s)
            for pair in lattice.minimal_compact_pairs(g, cap)]


def _finite_entry_classes(g: Graph) -> list[CycleClass]:
    return [cc for cc in cycles_without_exits(g) if has_finite_entries(g, cc)]


def _component_element(g: Graph, ring: Ring, cc: CycleClass, m: int) -> AlgebraElement:
    """Sum of alpha d^m alpha* over rotations d and entries alpha with
    r(alpha) = s(d)."""
    out = zero_element(g, ring)
    entries = entry_paths(g, cc).entries
    for d in cc.rotations:
        power = g.repeat(d, m)
        for alpha in entries:
            if g.path_range(alpha) != d.base:
                continue
            out = out + monomial_element(g, ring, g.concat(alpha, power), alpha)
    return out


def center_component_basis(g: Graph, ring: Ring, n: int) -> list[AlgebraElement]:
    """A free basis of the degree-n center, n != 0: one element per
    exit-free finite-entry class whose length divides n.  For n < 0 the
    elements are the involutions of the degree |n| basis."""
    if n == 0:
        raise ValueError("degree-zero basis is computed by center_zero_basis")
    if n < 0:
        return [a.involution() for a in center_component_basis(g, ring, -n)]
    out = []
    for cc in _finite_entry_classes(g):
        if n % cc.length == 0:
            out.append(_component_element(g, ring, cc, n // cc.length))
    return out


def nonzero_center_degrees(g: Graph) -> frozenset[int]:
    """Lengths of exit-free finite-entry cycle classes; the center has a
    nonzero component in degree n != 0 exactly when some length divides n."""
    return frozenset(cc.length for cc in _finite_entry_classes(g))


@dataclass(frozen=True)
class CenterBasis:
    """A materialized basis of the center up to a degree cap.

    ``positive_components`` maps each contributing cycle class to its
    degree-|c| building block; higher degrees are its powers, negative
    degrees its involutions.
    """

    graph: Graph
    ring: Ring
    zero_component: tuple[AlgebraElement, ...]
    positive_components: tuple[tuple[CycleClass, AlgebraElement], ...]
    degree_cap: int

    def component(self, n: int) -> list[AlgebraElement]:
        if n == 0:
            return list(self.zero_component)
        return center_component_basis(self.graph, self.ring, n)

    def materialized_degrees(self) -> list[int]:
        lengths = {cc.length for cc, _ in self.positive_components}
        degs = [0]
        for n in range(1, self.degree_cap + 1):
            if any(n % l == 0 for l in lengths):
                degs.extend([n, -n])
        return sorted(degs)


def center_basis(g: Graph, ring: Ring, degree_cap: int = DEFAULT_DEGREE_CAP,
                 cap: Optional[int] = None) -> CenterBasis:
    blocks = tuple((cc, _component_element(g, ring, cc, 1))
                   for cc in _finite_entry_classes(g))
    return CenterBasis(g, ring, tuple(center_zero_basis(g, ring, cap)),
                       blocks, degree_cap)


# -- linear-algebra oracle for finite-dimensional cases ----------------------------------


@dataclass(frozen=True)
class BruteforceCenter:
    """Center of a finite-dimensional Leavitt path algebra computed by exact
    linear algebra: dimension in degree zero, a basis as elements, and the
    dimension found in every other degree (expected zero throughout)."""

    rank0: int
    elements: tuple[AlgebraElement, ...]
    degree_dims: dict[int, int]


def center_bruteforce(g: Graph, ring: Ring = QQ) -> BruteforceCenter:
    """Independent center computation for acyclic graphs with finite bundles.

    Boundary paths all end at sinks, so the groupoid is finite and elements
    are block matrices indexed by pairs of boundary paths sharing a sink.
    The commutant equations [x, generator] = 0 are solved degree by degree
    over the coefficient field.
    """
    if not ring.is_field:
        raise ValueError("the linear-algebra oracle needs a field, e.g. the rationals")
    if any(is_omega(b.multiplicity) for b in g.bundles):
        raise ValueError("the oracle handles finite bundles only")
    if simple_cycles(g):
        raise ValueError("the oracle handles acyclic graphs only")

    paths = _all_paths_acyclic(g)
    boundary = [p for p in paths if g.is_sink(g.path_range(p))]
    points = [(p, q) for p in boundary for q in boundary
              if g.path_range(p) == g.path_range(q)]
    index = {pt: i for i, pt in enumerate(points)}

    def vec(m_alpha: Path, m_beta: Path) -> list:
        zero, one = ring.zero(), ring.one()
        row = [zero] * len(points)
        for i, (p, q) in enumerate(points):
            ta = _strip(m_alpha, p)
            tb = _strip(m_beta, q)
            if ta is not None and ta == tb:
                row[i] = one
        return row

    # sanity: monomials span the whole block-matrix space
    monomial_rows = []
    for a in paths:
        for b in paths:
            if g.path_range(a) == g.path_range(b):
                monomial_rows.append(vec(a, b))
    if _rank(monomial_rows, ring) != len(points):
        raise AssertionError("monomials failed to span the groupoid functions")

    gen_mats = []
    for v in g.vertices:
        gen_mats.append(_as_matrix(vec(g.vertex_path(v), g.vertex_path(v)),
                                   points, index))
    for b in g.bundles:
        for i in range(b.multiplicity):
            e = g.edge_path(_edge(g, b.name, i))
            r = g.vertex_path(b.range)
            gen_mats.append(_as_matrix(vec(e, r), points, index))
            gen_mats.append(_as_matrix(vec(r, e), points, index))

    degree_of = [p.length - q.length for p, q in points]
    degree_dims: dict[int, int] = {}
    elements: list[AlgebraElement] = []
    for n in sorted(set(degree_of)):
        coords = [i for i, d in enumerate(degree_of) if d == n]
        basis = _commutant_nullspace(gen_mats, points, index, coords, ring)
        degree_dims[n] = len(basis)
        if n == 0:
            for x in basis:
                elem = zero_element(g, ring)
                for ci, c in zip(coords, x):
                    if not ring.is_zero(c):
                        p, q = points[ci]
                        elem = elem + monomial_element(g, ring, p, q, c)
                elements.append(elem)
    return BruteforceCenter(degree_dims.get(0, 0), tuple(elements), degree_dims)


def _edge(g: Graph, bundle: str, i: int):
    from .graphs import EdgeRef
    return EdgeRef(bundle, i)


def _all_paths_acyclic(g: Graph) -> list[Path]:
    out = []

    def walk(start, v, acc):
        out.append(Path(start, acc))
        for b in g.out_bundles(v):
            for i in range(b.multiplicity):
                walk(start, b.range, acc + (_edge(g, b.name, i),))

    for v in g.vertices:
        walk(v, v, ())
    out.sort(key=g.path_sort_key)
    return out


def _strip(prefix: Path, p: Path) -> Optional[tuple]:
    if p.base != prefix.base or p.length < prefix.length:
        return None
    if p.edges[:prefix.length] != prefix.edges:
        return None
    return p.edges[prefix.length:]


def _as_matrix(row: list, points, index) -> dict:
    mat = {}
    for i, c in enumerate(row):
        if c:
            mat[points[i]] = c
    return mat


def _commutant_nullspace(gen_mats, points, index, coords, ring) -> list[list]:
    """Null space of x -> (x G - G x for all generators G), restricted to the
    given coordinate set."""
    pos = {ci: j for j, ci in enumerate(coords)}
    rows = []
    for G in gen_mats:
        # build equations indexed by output points (p, q)
        eq: dict[tuple, list] = {}
        for ci in coords:
            p, q = points[ci]
            # (x G)(p, r): x(p, q) G(q, r)
            for (gq, gr), c in G.items():
                if gq == q:
                    key = (p, gr)
                    row = eq.setdefault(key, [ring.zero()] * len(coords))
                    row[pos[ci]] = ring.add(row[pos[ci]], c)
            # -(G x)(r, q): G(r, p) x(p, q)
            for (gr, gp), c in G.items():
                if gp == p:
                    key = (gr, q)
                    row = eq.setdefault(key, [ring.zero()] * len(coords))
                    row[pos[ci]] = ring.add(row[pos[ci]], ring.neg(c))
        rows.extend(eq.values())
    return _nullspace(rows, len(coords), ring)


def _rank(rows: list[list], ring) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if not ring.is_zero(mat[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv_pivot = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and not ring.is_zero(mat[r][col]):
                factor = ring.divide(mat[r][col], inv_pivot)
                mat[r] = [ring.sub(a, ring.mul(factor, b))
                          for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _nullspace(rows: list[list], ncols: int, ring) -> list[list]:
    """Basis of the solution space of rows . x = 0 over a field."""
    mat = [list(r) for r in rows if any(not ring.is_zero(c) for c in r)]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if not ring.is_zero(mat[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [ring.divide(c, pv) for c in mat[rank]]
        for r in range(len(mat)):
            if r != rank and not ring.is_zero(mat[r][col]):
                factor = mat[r][col]
                mat[r] = [ring.sub(a, ring.mul(factor, b))
                          for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [ring.zero()] * ncols
        x[fc] = ring.one()
        for r, pc in enumerate(pivots):
            x[pc] = ring.neg(mat[r][fc])
        basis.append(x)
    return basis
