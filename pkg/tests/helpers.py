"""Shared test utilities: random graphs and elements, independent oracles."""

from __future__ import annotations

import random

from lpacenter import (
    AlgebraElement,
    Bundle,
    EdgeRef,
    Graph,
    Monomial,
    OMEGA,
    Path,
)
from lpacenter.graphs import is_omega, paths_up_to


def random_graph(rng: random.Random, max_vertices: int = 6, max_bundles: int = 8,
                 omega_prob: float = 0.2, max_multiplicity: int = 3) -> Graph:
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(n)]
    bundles = []
    for j in range(rng.randint(0, max_bundles)):
        src = rng.choice(vertices)
        dst = rng.choice(vertices)
        if rng.random() < omega_prob:
            mult = OMEGA
        else:
            mult = rng.randint(1, max_multiplicity)
        bundles.append(Bundle(f"b{j}", src, dst, mult))
    return Graph(vertices, bundles)


def small_random_graph(rng: random.Random) -> Graph:
    """Small enough for exhaustive path oracles to stay cheap."""
    return random_graph(rng, max_vertices=4, max_bundles=5, max_multiplicity=2)


def random_element(g: Graph, ring, rng: random.Random, max_terms: int = 2,
                   max_len: int = 2) -> AlgebraElement:
    paths = paths_up_to(g, max_len, omega_indices=2)
    by_range: dict[str, list[Path]] = {}
    for p in paths:
        by_range.setdefault(g.path_range(p), []).append(p)
    ranges = sorted(by_range)
    terms: dict[Monomial, object] = {}
    for _ in range(rng.randint(1, max_terms)):
        r = rng.choice(ranges)
        alpha = rng.choice(by_range[r])
        beta = rng.choice(by_range[r])
        coeff = ring.from_int(rng.choice([-3, -2, -1, 1, 2, 3]))
        m = Monomial(alpha, beta)
        terms[m] = ring.add(terms.get(m, ring.zero()), coeff)
    return AlgebraElement(g, ring, terms)


def disjoint_union(g1: Graph, g2: Graph, suffix1: str = "_l",
                   suffix2: str = "_r") -> Graph:
    vertices = [v + suffix1 for v in g1.vertices] + [v + suffix2 for v in g2.vertices]
    bundles = [Bundle(b.name + suffix1, b.source + suffix1, b.range + suffix1,
                      b.multiplicity) for b in g1.bundles]
    bundles += [Bundle(b.name + suffix2, b.source + suffix2, b.range + suffix2,
                       b.multiplicity) for b in g2.bundles]
    return Graph(vertices, bundles)


def brute_first_hitting(g: Graph, hitting, max_len: int) -> list[Path]:
    """Exhaustive first-entry enumeration up to a length bound, walking only
    the outside-H part of the graph.  OMEGA bundles contribute index 0."""
    H = frozenset(hitting)
    out: list[Path] = []

    def walk(start: str, v: str, acc: tuple[EdgeRef, ...]):
        if len(acc) >= max_len:
            return
        for b in g.out_bundles(v):
            n = 1 if is_omega(b.multiplicity) else b.multiplicity
            for i in range(n):
                e = EdgeRef(b.name, i)
                if b.range in H:
                    out.append(Path(start, acc + (e,)))
                else:
                    walk(start, b.range, acc + (e,))

    for v in g.vertices:
        if v not in H:
            walk(v, v, ())
    out.sort(key=g.path_sort_key)
    return out


def brute_simple_cycles(g: Graph) -> set[tuple]:
    """Independent simple-cycle search: closed bounded paths without
    repeated intermediate vertices, as (base, edges) keys."""
    found = set()
    for p in paths_up_to(g, len(g.vertices), omega_indices=1):
        if p.length == 0 or g.path_range(p) != p.base:
            continue
        inner = g.path_vertices(p)[:-1]
        if len(set(inner)) == len(inner):
            found.add((p.base, p.edges))
    return found


def all_subsets(g: Graph):
    n = len(g.vertices)
    for mask in range(1 << n):
        yield frozenset(g.vertices[i] for i in range(n) if mask >> i & 1)
