"""Graph core: representation, subgraphs, cliques, matching, isomorphism."""

import itertools
import random

import pytest

from colorline.core import (
    Graph,
    are_isomorphic,
    bridges,
    complement,
    complete_bipartite_graph,
    complete_graph,
    complete_minus_edge,
    connected_components,
    cycle_graph,
    disjoint_union,
    enumerate_labeled_graphs,
    find_clique_at_least,
    graph_from_edge_mask,
    induced_subgraph,
    is_co_bipartite,
    find_odd_cycle,
    maximum_matching,
    path_graph,
    star_graph,
)
from colorline.colored import line_graph
from colorline.errors import CapabilityError, GraphArgumentError
from colorline.fixtures import bridgeless_cubic_fixtures, petersen_graph, prism_graph

from conftest import brute_max_matching_size, graphs_equal_as_sets


class TestGraph:
    def test_invariants(self):
        g = Graph(4, [(0, 1), (2, 1), (3, 0)])
        assert g.m == 3
        assert g.has_edge(1, 0) and g.has_edge(0, 1)
        assert not g.has_edge(0, 0)
        assert sum(g.degree(v) for v in range(4)) == 2 * g.m

    def test_rejects_self_loop(self):
        with pytest.raises(GraphArgumentError):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphArgumentError):
            Graph(3, [(0, 3)])

    def test_vertex_cap(self):
        with pytest.raises(CapabilityError):
            Graph(65)

    def test_edges_lexicographic(self):
        g = Graph(4, [(3, 2), (0, 3), (1, 0)])
        assert g.edges() == ((0, 1), (0, 3), (2, 3))


class TestInducedSubgraph:
    def test_k4_triangle(self):
        sub, order = induced_subgraph(complete_graph(4), {0, 1, 2})
        assert graphs_equal_as_sets(sub, complete_graph(3))
        assert order == [0, 1, 2]

    def test_c5_path(self):
        sub, _ = induced_subgraph(cycle_graph(5), {0, 1, 2})
        assert graphs_equal_as_sets(sub, path_graph(3))

    def test_k5_minus_edge_gives_path(self):
        # K5-e misses (0,4); on {0,1,4} only 0-1 and 1-4 survive.
        g = complete_minus_edge(5, (0, 4))
        sub, order = induced_subgraph(g, {0, 1, 4})
        assert graphs_equal_as_sets(sub, path_graph(3))
        assert order == [0, 1, 4]

    def test_out_of_range(self):
        with pytest.raises(GraphArgumentError):
            induced_subgraph(complete_graph(3), {0, 5})


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(complete_graph(4)).m == 0

    def test_c5_self_complementary(self):
        assert are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)) is not None

    def test_2k2_to_c4(self):
        two_k2 = Graph(4, [(0, 1), (2, 3)])
        comp = complement(two_k2)
        # Direct enumeration of the six vertex pairs.
        expected = {(0, 2), (0, 3), (1, 2), (1, 3)}
        assert set(comp.edges()) == expected
        assert are_isomorphic(comp, cycle_graph(4)) is not None

    def test_involution_small(self):
        for n in range(5):
            for g in enumerate_labeled_graphs(n):
                assert complement(complement(g)) == g


class TestCoBipartite:
    def test_k5_minus_edge(self):
        g = complete_minus_edge(5, (0, 4))
        sides = is_co_bipartite(g)
        assert sides is not None
        a, b = sides
        # The complement is the single edge (0,4): endpoints split.
        assert (0 in a) != (4 in a)
        for side in (a, b):
            assert all(g.has_edge(u, v) for u, v in itertools.combinations(sorted(side), 2))

    def test_c5_none(self):
        assert is_co_bipartite(cycle_graph(5)) is None

    def test_k3_one_sided(self):
        assert is_co_bipartite(complete_graph(3)) == (frozenset({0, 1, 2}), frozenset())

    def test_empty(self):
        assert is_co_bipartite(Graph(0)) == (frozenset(), frozenset())

    def test_matches_odd_cycle_absence(self):
        for g in enumerate_labeled_graphs(5):
            sides = is_co_bipartite(g)
            odd = find_odd_cycle(complement(g))
            assert (sides is None) == (odd is not None)
            if odd is not None:
                assert len(odd) % 2 == 1
                comp = complement(g)
                ring = list(odd)
                assert all(comp.has_edge(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
            else:
                a, b = sides
                for side in (a, b):
                    assert all(
                        g.has_edge(u, v) for u, v in itertools.combinations(sorted(side), 2)
                    )


class TestComponents:
    def test_2k2(self):
        comps = connected_components(Graph(4, [(0, 1), (2, 3)]))
        assert comps == [frozenset({0, 1}), frozenset({2, 3})]

    def test_k1(self):
        assert connected_components(Graph(1)) == [frozenset({0})]

    def test_p4(self):
        assert connected_components(path_graph(4)) == [frozenset({0, 1, 2, 3})]


class TestFindClique:
    def test_k7_minus_edge(self):
        g = complete_minus_edge(7, (0, 6))
        # Exhaustive check over all 7 candidate 6-subsets: exactly those
        # avoiding vertex 0 or vertex 6 are cliques; lexicographic least is
        # {0..5}, and it is already maximal.
        candidates = [
            set(c)
            for c in itertools.combinations(range(7), 6)
            if all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
        ]
        assert min(map(sorted, candidates)) == [0, 1, 2, 3, 4, 5]
        assert find_clique_at_least(g, 6) == frozenset(range(6))

    def test_triangle_free(self):
        assert find_clique_at_least(cycle_graph(5), 3) is None

    def test_k4_extends(self):
        assert find_clique_at_least(complete_graph(4), 2) == frozenset(range(4))

    def test_found_clique_is_maximal(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randrange(1, 8)
            g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            for q in range(1, 5):
                found = find_clique_at_least(g, q)
                if found is None:
                    continue
                assert len(found) >= q
                assert all(
                    g.has_edge(u, v) for u, v in itertools.combinations(sorted(found), 2)
                )
                outside = set(range(n)) - found
                assert not any(
                    all(g.has_edge(w, v) for v in found) for w in outside
                )


class TestMaximumMatching:
    def test_k4_perfect(self):
        assert len(maximum_matching(complete_graph(4))) == 2

    def test_petersen_perfect(self):
        assert len(maximum_matching(petersen_graph())) == 5

    def test_star(self):
        assert len(maximum_matching(star_graph(3))) == 1

    def test_bridgeless_cubic_fixtures_perfect(self):
        for name, g in bridgeless_cubic_fixtures().items():
            m = maximum_matching(g)
            assert 2 * len(m) == g.n, name
            covered = {v for e in m for v in e}
            assert covered == set(range(g.n)), name

    def test_agrees_with_brute_force(self):
        for n in range(6):
            for g in enumerate_labeled_graphs(n):
                assert len(maximum_matching(g)) == brute_max_matching_size(g)

    def test_agrees_with_brute_force_random(self):
        rng = random.Random(11)
        for _ in range(150):
            n = rng.randrange(2, 11)
            g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            matching = maximum_matching(g)
            assert all(g.has_edge(u, v) for u, v in matching)
            seen = [v for e in matching for v in e]
            assert len(seen) == len(set(seen))
            assert len(matching) == brute_max_matching_size(g)


class TestIsomorphism:
    def test_different_edge_counts(self):
        assert are_isomorphic(cycle_graph(4), Graph(4, [(0, 1), (2, 3)])) is None

    def test_star_line_graph_is_triangle(self):
        assert are_isomorphic(line_graph(star_graph(3)).cl, complete_graph(3)) is not None

    def test_octahedron_identity(self):
        # K6 minus a perfect matching is the line graph of K4; checked
        # against the constructed line graph, with the mapping verified.
        k6_minus = Graph(6, [e for e in itertools.combinations(range(6), 2)
                             if e not in {(0, 1), (2, 3), (4, 5)}])
        lk4 = line_graph(complete_graph(4)).cl
        phi = are_isomorphic(k6_minus, lk4)
        assert phi is not None
        for u, v in itertools.combinations(range(6), 2):
            assert k6_minus.has_edge(u, v) == lk4.has_edge(phi[u], phi[v])

    def test_reflexive_small(self):
        for n in range(5):
            for g in enumerate_labeled_graphs(n):
                assert are_isomorphic(g, g) is not None

    def test_relabeling_invariance(self):
        rng = random.Random(3)
        for _ in range(120):
            n = rng.randrange(1, 9)
            g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
            perm = list(range(n))
            rng.shuffle(perm)
            h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
            phi = are_isomorphic(g, h)
            assert phi is not None
            for u, v in itertools.combinations(range(n), 2):
                assert g.has_edge(u, v) == h.has_edge(phi[u], phi[v])
            assert are_isomorphic(h, g) is not None

    def test_cap(self):
        with pytest.raises(CapabilityError):
            are_isomorphic(Graph(17), Graph(17))


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (3, 8), (5, 1024)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_labeled_graphs(n)) == count

    def test_cap(self):
        with pytest.raises(CapabilityError):
            list(enumerate_labeled_graphs(8))

    def test_distinct(self):
        seen = {g for g in enumerate_labeled_graphs(4)}
        assert len(seen) == 64


class TestBridges:
    def test_path_all_bridges(self):
        assert set(bridges(path_graph(4))) == {(0, 1), (1, 2), (2, 3)}

    def test_cycle_none(self):
        assert bridges(cycle_graph(5)) == []

    def test_cubic_fixtures_bridgeless(self):
        for name, g in bridgeless_cubic_fixtures().items():
            assert bridges(g) == [], name

    def test_two_triangles_joined(self):
        g = disjoint_union(complete_graph(3), complete_graph(3))
        edges = list(g.edges()) + [(0, 3)]
        assert bridges(Graph(6, edges)) == [(0, 3)]

    def test_prism_is_not_bridged(self):
        assert bridges(prism_graph()) == []

    def test_k33_structure(self):
        g = complete_bipartite_graph(3, 3)
        assert all(g.degree(v) == 3 for v in range(6))
