"""Graph core: classification, reachability, cycles, and path counting."""

import random

import pytest

from lpacenter import (
    Bundle,
    Count,
    EdgeRef,
    Graph,
    GraphDefinitionError,
    INFINITE,
    OMEGA,
    Path,
    VertexKind,
    classify_vertex,
    count_first_hitting_paths,
    first_hitting_paths,
    reaches,
    simple_cycles,
)
from lpacenter.graphs import is_omega, paths_up_to

from helpers import (
    brute_first_hitting,
    brute_simple_cycles,
    random_graph,
    small_random_graph,
)


class TestGraphConstruction:
    def test_duplicate_vertex_rejected(self):
        with pytest.raises(GraphDefinitionError):
            Graph(["v", "v"])

    def test_duplicate_bundle_rejected(self):
        with pytest.raises(GraphDefinitionError):
            Graph(["v"], [Bundle("e", "v", "v"), Bundle("e", "v", "v")])

    def test_bundle_vertex_name_collision_rejected(self):
        with pytest.raises(GraphDefinitionError):
            Graph(["v"], [Bundle("v", "v", "v")])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(GraphDefinitionError):
            Graph(["v"], [Bundle("e", "v", "w")])

    def test_bad_multiplicity_rejected(self):
        with pytest.raises(GraphDefinitionError):
            Graph(["v"], [Bundle("e", "v", "v", 0)])

    def test_edge_index_bounds(self):
        g = Graph(["v"], [Bundle("e", "v", "v", 2), Bundle("b", "v", "v", OMEGA)])
        g.check_edge(EdgeRef("e", 1))
        g.check_edge(EdgeRef("b", 999))
        with pytest.raises(GraphDefinitionError):
            g.check_edge(EdgeRef("e", 2))

    def test_path_composability_enforced(self, a3):
        with pytest.raises(GraphDefinitionError):
            a3.path("v1", [EdgeRef("e2")])
        p = a3.path("v1", [EdgeRef("e1"), EdgeRef("e2")])
        assert a3.path_range(p) == "v3"


class TestCount:
    def test_saturating_arithmetic(self):
        assert INFINITE + Count(5) == INFINITE
        assert Count(2) + Count(3) == Count(5)
        assert INFINITE * Count(2) == INFINITE
        assert INFINITE * Count(0) == Count(0)
        assert Count(0) * INFINITE == Count(0)

    def test_finiteness_flag(self):
        assert Count(7).is_finite
        assert not INFINITE.is_finite


class TestClassifyVertex:
    def test_sink(self, a3):
        assert classify_vertex(a3, "v3") is VertexKind.SINK

    def test_infinite_emitter(self, infbundle):
        assert classify_vertex(infbundle, "v") is VertexKind.INFINITE_EMITTER

    def test_regular(self, loop):
        assert classify_vertex(loop, "v") is VertexKind.REGULAR

    def test_unknown_vertex(self, loop):
        with pytest.raises(GraphDefinitionError):
            classify_vertex(loop, "nope")

    def test_partitions_vertices(self, graphs):
        rng = random.Random(7)
        pool = list(graphs.values()) + [random_graph(rng) for _ in range(25)]
        for g in pool:
            for v in g.vertices:
                kinds = [g.is_sink(v), g.is_infinite_emitter(v), g.is_regular(v)]
                assert sum(kinds) == 1


class TestReaches:
    def test_chain(self, a3):
        assert reaches(a3, "v1", {"v3"})
        assert not reaches(a3, "v3", {"v1"})

    def test_sink_does_not_reach_back(self, toeplitz):
        assert not reaches(toeplitz, "w", {"v"})

    def test_reflexive(self, graphs):
        for g in graphs.values():
            for v in g.vertices:
                assert reaches(g, v, {v})

    def test_transitive_and_union(self):
        rng = random.Random(11)
        for _ in range(30):
            g = random_graph(rng)
            vs = g.vertices
            for v in vs:
                for w in vs:
                    for u in vs:
                        if reaches(g, v, {w}) and reaches(g, w, {u}):
                            assert reaches(g, v, {u})
            w1 = {v for v in vs if rng.random() < 0.4}
            w2 = {v for v in vs if rng.random() < 0.4}
            for v in vs:
                assert reaches(g, v, w1 | w2) == (
                    reaches(g, v, w1) or reaches(g, v, w2))


class TestSimpleCycles:
    def test_acyclic(self, a3):
        assert simple_cycles(a3) == []

    def test_single_loop(self, loop):
        assert simple_cycles(loop) == [Path("v", (EdgeRef("c"),))]

    def test_rotations_reported_per_base(self, twocycles):
        cycles = simple_cycles(twocycles)
        assert cycles == [
            Path("v1", (EdgeRef("c1"),)),
            Path("v2", (EdgeRef("d1"), EdgeRef("d2"))),
            Path("v3", (EdgeRef("d2"), EdgeRef("d1"))),
        ]

    def test_outputs_are_closed_valid_paths(self, graphs):
        for g in graphs.values():
            for c in simple_cycles(g):
                g.path(c.base, c.edges)
                assert g.path_range(c) == c.base
                inner = g.path_vertices(c)[:-1]
                assert len(set(inner)) == len(inner)

    def test_against_exhaustive_search(self, graphs):
        rng = random.Random(13)
        pool = list(graphs.values()) + [small_random_graph(rng) for _ in range(25)]
        for g in pool:
            got = {(c.base, c.edges) for c in simple_cycles(g)}
            assert got == brute_simple_cycles(g)


class TestCountFirstHittingPaths:
    def test_loop_cannot_be_left(self, loop):
        assert count_first_hitting_paths(loop, {"v"}) == Count(0)

    def test_pumpable_loop_gives_infinity(self, toeplitz):
        assert count_first_hitting_paths(toeplitz, {"w"}) == INFINITE
        # bounded enumeration keeps growing with the length bound
        sizes = [len(brute_first_hitting(toeplitz, {"w"}, k)) for k in range(1, 6)]
        assert sizes == sorted(sizes) and sizes[0] < sizes[-1]

    def test_chain_count_matches_enumeration_oracle(self, a3):
        expected = brute_first_hitting(a3, {"v3"}, len(a3.vertices))
        assert len(expected) == 2  # e2 and e1 e2
        assert count_first_hitting_paths(a3, {"v3"}) == Count(2)
        assert first_hitting_paths(a3, {"v3"}) == expected

    def test_omega_bundle_into_target(self, infbundle):
        assert count_first_hitting_paths(infbundle, {"w"}) == INFINITE

    def test_multiplicity_weighting(self):
        g = Graph(["a", "b"], [Bundle("m", "a", "b", 3)])
        assert count_first_hitting_paths(g, {"b"}) == Count(3)

    def test_finite_counts_match_bounded_enumeration(self, graphs):
        # when the count is finite, feeders form a DAG, so every first-entry
        # path has length <= |vertices| and the bounded oracle is exhaustive
        rng = random.Random(17)
        pool = list(graphs.values()) + [small_random_graph(rng) for _ in range(40)]
        for g in pool:
            for mask in range(1 << len(g.vertices)):
                H = frozenset(v for i, v in enumerate(g.vertices) if mask >> i & 1)
                n = count_first_hitting_paths(g, H)
                if not n.is_finite:
                    continue
                # a finite count means no OMEGA edge lies on any such path,
                # so walking one index per OMEGA bundle loses nothing
                oracle = brute_first_hitting(g, H, len(g.vertices))
                assert n.value == len(oracle)
                assert first_hitting_paths(g, H) == oracle

    def test_infinite_counts_show_growth_or_omega(self, graphs):
        rng = random.Random(19)
        pool = list(graphs.values()) + [small_random_graph(rng) for _ in range(15)]
        for g in pool:
            for mask in range(1 << len(g.vertices)):
                H = frozenset(v for i, v in enumerate(g.vertices) if mask >> i & 1)
                if count_first_hitting_paths(g, H).is_finite:
                    continue
                with pytest.raises(Exception):
                    first_hitting_paths(g, H)
                lo = len(brute_first_hitting(g, H, len(g.vertices)))
                hi = len(brute_first_hitting(g, H, 2 * len(g.vertices) + 2))
                omega_route = any(is_omega(b.multiplicity) for b in g.bundles)
                assert hi > lo or omega_route


class TestPathsUpTo:
    def test_includes_vertices_and_respects_bound(self, a3):
        ps = paths_up_to(a3, 1)
        assert Path("v1") in ps
        assert all(p.length <= 1 for p in ps)

    def test_deterministic(self, graphs):
        for g in graphs.values():
            assert paths_up_to(g, 2) == paths_up_to(g, 2)
