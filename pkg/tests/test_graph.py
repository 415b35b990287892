from __future__ import annotations

from itertools import combinations

import pytest

from conftest import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    oracle_is_connected,
    path_graph,
)
from linarr import (
    ValidationError,
    are_isomorphic,
    canonical_form,
    enumerate_connected_graphs,
    is_connected,
    is_outerplanar,
    make_graph,
    pentagon_with_chord,
)


class TestMakeGraph:
    def test_pentagon_fixture(self, pentagon):
        assert pentagon.order == 5
        assert pentagon.size == 6
        assert pentagon.edges == frozenset(
            {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)}
        )

    def test_empty_graph(self):
        g = make_graph(0, [])
        assert g.order == 0
        assert g.size == 0

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError):
            make_graph(3, [(0, 0)])

    def test_out_of_range_endpoint_rejected(self):
        with pytest.raises(ValidationError):
            make_graph(3, [(0, 3)])
        with pytest.raises(ValidationError):
            make_graph(3, [(-1, 2)])

    def test_duplicate_edges_collapse(self):
        g = make_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.size == 1

    def test_negative_order_rejected(self):
        with pytest.raises(ValidationError):
            make_graph(-1, [])


class TestIsomorphism:
    def test_identity(self, pentagon):
        assert are_isomorphic(pentagon, pentagon)

    def test_cyclic_shift(self, pentagon):
        shifted = make_graph(5, [((u + 1) % 5, (v + 1) % 5) for u, v in pentagon.edges])
        assert are_isomorphic(pentagon, shifted)

    def test_path_vs_triangle(self):
        assert not are_isomorphic(path_graph(3), cycle_graph(3))

    def test_order_mismatch_is_false(self):
        assert not are_isomorphic(path_graph(3), path_graph(4))

    def test_same_degree_sequence_not_isomorphic(self):
        # C6 vs two triangles: both 2-regular on six vertices.
        two_triangles = make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not are_isomorphic(cycle_graph(6), two_triangles)

    def test_equivalence_relation_on_sample(self, pentagon):
        import random

        rng = random.Random(7)
        base = [pentagon, path_graph(4), cycle_graph(5), complete_graph(4)]
        variants = []
        for g in base:
            perm = list(range(g.order))
            rng.shuffle(perm)
            variants.append(
                make_graph(g.order, [(perm[u], perm[v]) for u, v in g.edges])
            )
        sample = base + variants
        for g in sample:
            assert are_isomorphic(g, g)
        for g1 in sample:
            for g2 in sample:
                assert are_isomorphic(g1, g2) == are_isomorphic(g2, g1)
        for g1 in sample:
            for g2 in sample:
                for g3 in sample:
                    if are_isomorphic(g1, g2) and are_isomorphic(g2, g3):
                        assert are_isomorphic(g1, g3)

    def test_canonical_form_identifies_isomorphs(self, pentagon):
        shifted = make_graph(5, [((u + 2) % 5, (v + 2) % 5) for u, v in pentagon.edges])
        assert canonical_form(pentagon) == canonical_form(shifted)
        assert are_isomorphic(canonical_form(pentagon), pentagon)


class TestEnumeration:
    def test_order_one(self):
        graphs = list(enumerate_connected_graphs(1))
        assert len(graphs) == 1
        assert graphs[0].order == 1

    def test_order_three_classes(self):
        graphs = list(enumerate_connected_graphs(3))
        assert len(graphs) == 2
        assert any(are_isomorphic(g, path_graph(3)) for g in graphs)
        assert any(are_isomorphic(g, cycle_graph(3)) for g in graphs)

    def test_order_four_count(self):
        assert len(list(enumerate_connected_graphs(4))) == 6

    def test_matches_labeled_enumeration_oracle(self):
        # Brute force every labeled graph and dedup with pairwise isomorphism.
        for n in range(1, 5):
            pairs = list(combinations(range(n), 2))
            classes: list = []
            for mask in range(1 << len(pairs)):
                edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
                if not oracle_is_connected(n, edges):
                    continue
                g = make_graph(n, edges)
                if not any(are_isomorphic(g, h) for h in classes):
                    classes.append(g)
            yielded = list(enumerate_connected_graphs(n))
            assert len(yielded) == len(classes)
            for g in yielded:
                assert sum(1 for h in classes if are_isomorphic(g, h)) == 1

    def test_yields_are_connected(self):
        for n in range(1, 6):
            for g in enumerate_connected_graphs(n):
                assert is_connected(g)

    def test_deterministic_order(self):
        first = list(enumerate_connected_graphs(5))
        second = list(enumerate_connected_graphs(5))
        assert first == second

    def test_rejects_order_zero(self):
        with pytest.raises(ValidationError):
            list(enumerate_connected_graphs(0))


class TestOuterplanarity:
    def test_pentagon_with_chord(self, pentagon):
        assert is_outerplanar(pentagon)

    def test_k4(self):
        assert not is_outerplanar(complete_graph(4))

    def test_k23(self):
        assert not is_outerplanar(complete_bipartite(2, 3))

    def test_paths_cycles_trees(self):
        assert is_outerplanar(path_graph(6))
        assert is_outerplanar(cycle_graph(7))
        star = make_graph(6, [(0, i) for i in range(1, 6)])
        assert is_outerplanar(star)

    def test_diamond(self):
        assert is_outerplanar(make_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))

    def test_wheel_has_k4_minor_but_no_k4_subgraph(self):
        wheel = make_graph(
            5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]
        )
        assert not any(
            all(e in wheel.edges for e in combinations(q, 2))
            for q in combinations(range(5), 4)
        )
        assert not is_outerplanar(wheel)

    def test_prism_needs_contractions(self):
        prism = make_graph(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
        assert not is_outerplanar(prism)

    def test_subdivided_k23(self):
        # K2,3 with one edge subdivided: still contains the minor.
        g = make_graph(6, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (5, 4)])
        assert not is_outerplanar(g)

    def test_disconnected_components(self):
        ok = make_graph(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
        assert is_outerplanar(ok)
        bad = make_graph(
            7,
            [(0, 1), (1, 2), (2, 0)]
            + [(3 + a, 3 + b) for a, b in combinations(range(4), 2)],
        )
        assert not is_outerplanar(bad)
