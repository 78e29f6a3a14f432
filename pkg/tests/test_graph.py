from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from c4free import (
    GraphInputError,
    OddCycle,
    OracleLimitError,
    bipartition,
    build_graph,
    classify_set,
    common_neighbors,
    complement,
    cycle_power,
    find_independent_set_of_size,
    find_induced_c4,
    greedy_maximal_independent_set,
    has_induced_c4_naive,
    induced_subgraph,
    max_clique_exact,
    max_independent_set_exact,
)
from helpers import (
    brute_alpha,
    brute_omega,
    complete,
    cycle,
    edgeless,
    house,
    path,
    raw_graphs,
)


class TestBuildGraph:
    def test_c5(self):
        g = cycle(5)
        assert g.n == 5
        assert g.edge_count == 5
        assert g.degrees() == [2, 2, 2, 2, 2]

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1
        assert g.edge_count == 0

    def test_duplicate_edges_collapse(self):
        g = build_graph(4, [(0, 1), (0, 1), (1, 2)])
        assert g.edge_count == 2

    def test_out_of_range_vertex(self):
        with pytest.raises(GraphInputError):
            build_graph(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(GraphInputError):
            build_graph(3, [(1, 1)])

    def test_adjacency_symmetric(self):
        g = build_graph(4, [(0, 2), (1, 3)])
        for u in range(4):
            for v in range(4):
                assert g.has_edge(u, v) == g.has_edge(v, u)


class TestCommonNeighbors:
    def test_c5(self):
        assert common_neighbors(cycle(5), 0, 2) == (1,)

    def test_cycle_power_two(self):
        assert common_neighbors(cycle_power(2), 0, 3) == (1, 2)

    def test_complete(self):
        assert common_neighbors(complete(4), 0, 1) == (2, 3)

    def test_same_vertex_rejected(self):
        with pytest.raises(GraphInputError):
            common_neighbors(cycle(5), 2, 2)


class TestClassifySet:
    def test_independent_pair(self):
        assert classify_set(cycle(5), [0, 2]).kind == "independent"

    def test_clique(self):
        assert classify_set(complete(4), [0, 1, 2]).kind == "clique"

    def test_neither(self):
        assert classify_set(cycle(5), [0, 1, 2]).kind == "neither"

    def test_small_sets_are_both(self):
        for members in ([], [3]):
            result = classify_set(cycle(5), members)
            assert result.kind == "clique"
            assert result.also_independent


class TestFindInducedC4:
    def test_c4_itself(self):
        got = find_induced_c4(cycle(4))
        assert got is not None
        assert got.vertices == (0, 1, 2, 3)

    def test_c5_is_free(self):
        assert find_induced_c4(cycle(5)) is None

    def test_house(self):
        got = find_induced_c4(house())
        assert got is not None
        assert got.vertices == (0, 2, 3, 4)

    def test_witness_is_an_induced_four_cycle(self):
        g = house()
        a, b, c, d = find_induced_c4(g)
        assert g.has_edge(a, b) and g.has_edge(b, c)
        assert g.has_edge(c, d) and g.has_edge(d, a)
        assert not g.has_edge(a, c) and not g.has_edge(b, d)

    def test_agrees_with_naive_exhaustively_small(self):
        for n in range(0, 6):
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
                g = build_graph(n, edges)
                assert (find_induced_c4(g) is not None) == has_induced_c4_naive(g)

    @settings(max_examples=200, deadline=None)
    @given(raw_graphs(max_n=12))
    def test_agrees_with_naive_random(self, g):
        assert (find_induced_c4(g) is not None) == has_induced_c4_naive(g)

    @settings(max_examples=150, deadline=None)
    @given(raw_graphs(max_n=10))
    def test_c4free_iff_charged_pairs_have_clique_intersections(self, g):
        pairs_clique = all(
            classify_set(g, common_neighbors(g, u, v)).kind == "clique"
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        )
        assert pairs_clique == (find_induced_c4(g) is None)


class TestExactOracles:
    def test_k5(self):
        assert max_clique_exact(complete(5)) == (0, 1, 2, 3, 4)

    def test_cycle_power_two(self):
        assert max_clique_exact(cycle_power(2)) == (0, 1, 2)

    def test_w5(self):
        from c4free import w5_base

        assert max_clique_exact(w5_base()) == (0, 1, 2)

    def test_limit_refused(self):
        with pytest.raises(OracleLimitError):
            max_clique_exact(edgeless(49))

    def test_independent_c5(self):
        assert max_independent_set_exact(cycle(5)) == (0, 2)

    def test_independent_k4(self):
        assert max_independent_set_exact(complete(4)) == (0,)

    def test_independent_cycle_power_two(self):
        assert max_independent_set_exact(cycle_power(2)) == (0, 3, 6)

    @settings(max_examples=80, deadline=None)
    @given(raw_graphs(max_n=9))
    def test_matches_brute_enumeration(self, g):
        assert len(max_clique_exact(g)) == brute_omega(g)
        assert len(max_independent_set_exact(g)) == brute_alpha(g)

    @settings(max_examples=80, deadline=None)
    @given(raw_graphs(max_n=9))
    def test_returns_the_lexicographically_least_maximum_clique(self, g):
        # combinations() yields subsets in lexicographic order, so the
        # first maximum-size clique it produces is the expected one.
        expected = ()
        for size in range(g.n, 0, -1):
            for subset in itertools.combinations(range(g.n), size):
                if all(g.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
                    expected = subset
                    break
            if expected:
                break
        assert max_clique_exact(g) == expected

    @settings(max_examples=60, deadline=None)
    @given(raw_graphs(max_n=9))
    def test_independent_set_search_is_lexicographically_least(self, g):
        for t in range(1, g.n + 1):
            expected = next(
                (
                    subset
                    for subset in itertools.combinations(range(g.n), t)
                    if not any(
                        g.has_edge(u, v)
                        for u, v in itertools.combinations(subset, 2)
                    )
                ),
                None,
            )
            assert find_independent_set_of_size(g, t) == expected

    @settings(max_examples=60, deadline=None)
    @given(raw_graphs(max_n=9))
    def test_alpha_equals_omega_of_complement(self, g):
        assert len(max_independent_set_exact(g)) == len(max_clique_exact(complement(g)))

    @settings(max_examples=40, deadline=None)
    @given(raw_graphs(max_n=9))
    def test_monotone_under_induced_subgraphs(self, g):
        keep = [v for v in range(g.n) if v % 2 == 0]
        sub = induced_subgraph(g, keep)
        assert len(max_clique_exact(sub)) <= len(max_clique_exact(g))


class TestGreedyIndependentSet:
    def test_c5(self):
        assert greedy_maximal_independent_set(cycle(5)) == (0, 2)

    def test_edgeless(self):
        assert greedy_maximal_independent_set(edgeless(4)) == (0, 1, 2, 3)

    def test_k4(self):
        assert greedy_maximal_independent_set(complete(4)) == (0,)

    @settings(max_examples=150, deadline=None)
    @given(raw_graphs(max_n=12))
    def test_independent_and_maximal(self, g):
        s = greedy_maximal_independent_set(g)
        members = set(s)
        for u, v in itertools.combinations(s, 2):
            assert not g.has_edge(u, v)
        for v in range(g.n):
            if v not in members:
                assert any(g.has_edge(v, u) for u in members)


class TestIndependentSetOfSize:
    def test_c5_pair(self):
        assert find_independent_set_of_size(cycle(5), 2) == (0, 2)

    def test_c5_triple_does_not_exist(self):
        assert find_independent_set_of_size(cycle(5), 3) is None

    def test_cycle_power_two_triple(self):
        assert find_independent_set_of_size(cycle_power(2), 3) == (0, 3, 6)

    def test_rejects_nonpositive(self):
        with pytest.raises(GraphInputError):
            find_independent_set_of_size(cycle(5), 0)


class TestBipartition:
    def test_c6(self):
        assert bipartition(cycle(6)) == ((0, 2, 4), (1, 3, 5))

    def test_c5_witness(self):
        got = bipartition(cycle(5))
        assert got == OddCycle((0, 1, 2, 3, 4))

    def test_p4(self):
        assert bipartition(path(4)) == ((0, 2), (1, 3))

    def test_pentagram_witness(self):
        got = bipartition(complement(cycle(5)))
        assert isinstance(got, OddCycle)
        assert got.vertices == (0, 2, 4, 1, 3)

    @settings(max_examples=150, deadline=None)
    @given(raw_graphs(max_n=12))
    def test_partition_or_induced_odd_cycle(self, g):
        got = bipartition(g)
        if isinstance(got, OddCycle):
            cyc = got.vertices
            assert len(cyc) % 2 == 1 and len(cyc) >= 3
            k = len(cyc)
            for i in range(k):
                assert g.has_edge(cyc[i], cyc[(i + 1) % k])
            for i in range(k):
                for j in range(i + 2, k):
                    if (j + 1) % k != i:
                        assert not g.has_edge(cyc[i], cyc[j])
        else:
            p1, p2 = got
            assert sorted({*p1, *p2}) == list(range(g.n))
            for part in (p1, p2):
                for u, v in itertools.combinations(part, 2):
                    assert not g.has_edge(u, v)


class TestComplement:
    def test_k4(self):
        assert complement(complete(4)).edge_count == 0

    def test_c5_self_complementary(self):
        comp = complement(cycle(5))
        assert comp.degrees() == [2, 2, 2, 2, 2]
        assert comp.edge_count == 5
        assert find_induced_c4(comp) is None

    def test_p4_relabels_to_a_path(self):
        comp = complement(path(4))
        assert sorted(comp.edges()) == [(0, 2), (0, 3), (1, 3)]

    @settings(max_examples=100, deadline=None)
    @given(raw_graphs(max_n=12))
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestDeterminism:
    def test_repeated_calls_identical(self):
        g = cycle_power(3)
        assert max_clique_exact(g) == max_clique_exact(g)
        assert find_induced_c4(house()) == find_induced_c4(house())
        assert bipartition(complement(g)) == bipartition(complement(g))
