import itertools
import random

import pytest

from vmramsey.graphs import (
    Graph,
    are_isomorphic,
    canonical_form,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_canonical_form,
    graph_from_edges,
    induced_subgraph,
    join,
    local_complement,
    mask_of,
    path_graph,
    permute,
    petersen_graph,
    pivot,
)


def all_labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield graph_from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def assert_valid(g):
    # constructor re-checks symmetry, looplessness, and high bits
    Graph(g.n, g.rows)


class TestGraphBasics:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph(2, (1, 2))

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, (2, 0))

    def test_rejects_high_bits(self):
        with pytest.raises(ValueError):
            Graph(2, (4, 0))

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            Graph(0, ())
        with pytest.raises(ValueError):
            Graph(63, (0,) * 63)

    def test_edges_roundtrip(self):
        g = graph_from_edges(4, [(0, 1), (2, 3), (1, 2)])
        assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]
        assert g.edge_count() == 3
        assert g.degree(1) == 2
        assert g.has_edge(3, 2)
        assert not g.has_edge(0, 3)

    def test_equality_is_labeled(self):
        assert path_graph(3) == graph_from_edges(3, [(0, 1), (1, 2)])
        assert path_graph(3) != graph_from_edges(3, [(0, 2), (1, 2)])
        assert hash(path_graph(3)) == hash(graph_from_edges(3, [(0, 1), (1, 2)]))


class TestLocalComplement:
    def test_k3_at_zero(self):
        # orbit entry point of the smallest non-trivial case
        g = local_complement(complete_graph(3), 0)
        assert sorted(g.edges()) == [(0, 1), (0, 2)]

    def test_empty_fixed(self):
        g = empty_graph(5)
        assert local_complement(g, 2) == g

    def test_involution_small(self):
        for n in range(2, 6):
            for g in all_labeled_graphs(n):
                for v in range(n):
                    h = local_complement(g, v)
                    assert_valid(h)
                    assert local_complement(h, v) == g

    def test_only_neighborhood_changes(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randrange(4, 9)
            edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
            g = graph_from_edges(n, edges)
            v = rng.randrange(n)
            h = local_complement(g, v)
            nb = g.neighbors(v)
            for x in range(n):
                for y in range(x + 1, n):
                    inside = (nb >> x & 1) and (nb >> y & 1)
                    if not inside:
                        assert g.has_edge(x, y) == h.has_edge(x, y)
                    else:
                        assert g.has_edge(x, y) != h.has_edge(x, y)

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            local_complement(complete_graph(3), 3)


class TestPivot:
    def test_matches_composition(self):
        g = path_graph(3)
        expected = local_complement(local_complement(local_complement(g, 0), 1), 0)
        assert pivot(g, 0, 1) == expected

    def test_requires_edge(self):
        with pytest.raises(ValueError):
            pivot(path_graph(3), 0, 2)

    def test_involution_and_symmetry_exhaustive(self):
        # pivot at vw equals pivot at wv and undoes itself; all graphs n <= 5
        for n in range(2, 6):
            for g in all_labeled_graphs(n):
                for v, w in g.edges():
                    p = pivot(g, v, w)
                    assert_valid(p)
                    assert p == pivot(g, w, v)
                    assert pivot(p, v, w) == g


class TestUnaryBinaryOps:
    def test_complement_involution(self):
        for g in all_labeled_graphs(4):
            assert complement(complement(g)) == g

    def test_complement_of_empty(self):
        assert complement(empty_graph(4)) == complete_graph(4)

    def test_union_shifts(self):
        g = disjoint_union(complete_graph(2), complete_graph(3))
        assert sorted(g.edges()) == [(0, 1), (2, 3), (2, 4), (3, 4)]

    def test_union_of_cycles(self):
        g = disjoint_union(cycle_graph(5), cycle_graph(5))
        assert g.n == 10
        assert g.edge_count() == 10
        assert all(g.degree(v) == 2 for v in range(10))

    def test_join_small(self):
        assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
        w5 = join(empty_graph(1), cycle_graph(5))
        assert w5.n == 6
        assert w5.degree(0) == 5
        assert all(w5.degree(v) == 3 for v in range(1, 6))

    def test_complement_of_join_is_union_of_complements(self):
        for g in all_labeled_graphs(3):
            for h in all_labeled_graphs(2):
                assert complement(join(g, h)) == disjoint_union(complement(g), complement(h))

    def test_capacity(self):
        g = empty_graph(40)
        with pytest.raises(ValueError):
            disjoint_union(g, g)


class TestInducedSubgraph:
    def test_k4_pair(self):
        assert induced_subgraph(complete_graph(4), mask_of([0, 1])) == complete_graph(2)

    def test_cycle_alternation(self):
        g = induced_subgraph(cycle_graph(5), mask_of([0, 2, 4]))
        # old vertices 0,2,4 become 0,1,2; only the old edge 4-0 survives
        assert sorted(g.edges()) == [(0, 2)]

    def test_full_set_identity(self):
        g = petersen_graph()
        assert induced_subgraph(g, g.full_mask()) == g

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            induced_subgraph(complete_graph(3), 0)

    def test_out_of_range_mask_rejected(self):
        with pytest.raises(ValueError):
            induced_subgraph(complete_graph(3), 0b1001)


class TestCanonicalForm:
    def test_relabeled_paths_agree(self):
        a = graph_from_edges(3, [(0, 1), (1, 2)])
        b = graph_from_edges(3, [(0, 2), (1, 2)])
        assert canonical_form(a) == canonical_form(b)

    def test_distinguishes_k3_from_p3(self):
        assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))

    def test_invariant_under_random_permutations(self):
        rng = random.Random(20240311)
        hosts = [
            path_graph(6),
            cycle_graph(7),
            petersen_graph(),
            complement(cycle_graph(6)),
            join(cycle_graph(5), cycle_graph(5)),
        ]
        for g in hosts:
            key = canonical_form(g)
            for _ in range(100):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert canonical_form(permute(g, perm)) == key

    def test_key_decodes_to_isomorphic_graph(self):
        g = petersen_graph()
        h = graph_from_canonical_form(canonical_form(g))
        assert are_isomorphic(g, h)
        assert canonical_form(h) == canonical_form(g)

    def test_malformed_key_rejected(self):
        with pytest.raises(ValueError):
            graph_from_canonical_form(bytes([5, 0, 0]))

    def test_bad_permutation_rejected(self):
        with pytest.raises(ValueError):
            permute(complete_graph(3), [0, 0, 2])

    def test_exhaustive_separation_n4(self):
        # equal keys iff isomorphic, against a permutation-closure oracle
        graphs = list(all_labeled_graphs(4))
        for g in graphs:
            orbit = {permute(g, list(p)).rows for p in itertools.permutations(range(4))}
            for h in graphs:
                iso = h.rows in orbit
                assert (canonical_form(g) == canonical_form(h)) == iso


class TestAreIsomorphic:
    def test_relabeling(self):
        rng = random.Random(5)
        g = join(cycle_graph(5), cycle_graph(5))
        perm = list(range(10))
        rng.shuffle(perm)
        assert are_isomorphic(g, permute(g, perm))

    def test_different_sizes(self):
        assert not are_isomorphic(complete_graph(3), complete_graph(4))

    def test_same_degrees_not_isomorphic(self):
        # C6 vs 2*C3: both 2-regular on six vertices
        a = cycle_graph(6)
        b = disjoint_union(cycle_graph(3), cycle_graph(3))
        assert not are_isomorphic(a, b)
