import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resq.errors import Disconnected
from resq.graph import (
    FamilySpec,
    Graph,
    add_edge,
    classical_distance_matrix,
    generate,
    laplacian,
    non_edges,
    random_connected_graph,
    random_tree,
)
from resq.resistance import (
    is_transmission_regular,
    laplacian_pseudoinverse,
    resistance_bundle,
    resistance_laplacian,
    resistance_matrix,
    resistance_signless_laplacian,
    resistance_transmissions,
)


def random_corpus(count, max_n, seed0):
    return [
        random_connected_graph(3 + seed % (max_n - 2), 0.25 + (seed % 7) / 10.0, seed0 + seed)
        for seed in range(count)
    ]


class TestPseudoinverse:
    def test_complete_graph_formula(self):
        # pinv(L(K_n)) has diagonal (n-1)/n^2 and off-diagonal -1/n^2
        for n in range(2, 9):
            pinv = laplacian_pseudoinverse(laplacian(generate(FamilySpec.complete(n))))
            expected = ((n - 1) / n**2 + 1 / n**2) * np.eye(n) - (1 / n**2) * np.ones((n, n))
            np.testing.assert_allclose(pinv, expected, atol=1e-12)

    def test_k2_exact(self):
        pinv = laplacian_pseudoinverse(np.array([[1.0, -1.0], [-1.0, 1.0]]))
        np.testing.assert_allclose(pinv, [[0.25, -0.25], [-0.25, 0.25]], atol=1e-14)

    def test_penrose_identities_path3(self):
        lap = laplacian(generate(FamilySpec.path(3)))
        pinv = laplacian_pseudoinverse(lap)
        assert np.abs(lap @ pinv @ lap - lap).max() < 1e-10
        assert np.abs(pinv @ lap @ pinv - pinv).max() < 1e-10
        assert np.abs((lap @ pinv) - (lap @ pinv).T).max() < 1e-10
        assert np.abs((pinv @ lap) - (pinv @ lap).T).max() < 1e-10
        assert np.abs(pinv @ np.ones(3)).max() < 1e-10

    def test_matches_svd_pseudoinverse(self):
        # independent cross-check of the inverse-shift identity
        for g in random_corpus(12, 10, seed0=500):
            lap = laplacian(g)
            np.testing.assert_allclose(
                laplacian_pseudoinverse(lap), np.linalg.pinv(lap), atol=1e-10
            )

    def test_single_vertex(self):
        np.testing.assert_array_equal(laplacian_pseudoinverse(np.zeros((1, 1))), [[0.0]])

    def test_disconnected_detected(self):
        lap = laplacian(Graph.from_edges(4, [(0, 1), (2, 3)]))
        with pytest.raises(Disconnected):
            laplacian_pseudoinverse(lap)


class TestResistanceMatrix:
    def test_complete_graphs(self):
        for n in range(2, 11):
            r = resistance_matrix(generate(FamilySpec.complete(n)))
            off = r[~np.eye(n, dtype=bool)]
            np.testing.assert_allclose(off, 2.0 / n, atol=1e-12)
            assert np.abs(np.diag(r)).max() == 0.0

    def test_path3_matches_tree_distances(self):
        r = resistance_matrix(generate(FamilySpec.path(3)))
        np.testing.assert_allclose(r, [[0, 1, 2], [1, 0, 1], [2, 1, 0]], atol=1e-12)

    def test_cycle4(self):
        r = resistance_matrix(generate(FamilySpec.cycle(4)))
        assert r[0, 1] == pytest.approx(0.75, abs=1e-12)
        assert r[0, 2] == pytest.approx(1.0, abs=1e-12)

    def test_disconnected_raises(self):
        with pytest.raises(Disconnected):
            resistance_matrix(Graph.from_edges(3, [(0, 1)]))

    def test_single_vertex(self):
        np.testing.assert_array_equal(resistance_matrix(Graph.from_edges(1, [])), [[0.0]])

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(2, 10), seed=st.integers(0, 10**6))
    def test_symmetric_nonnegative_metric(self, n, seed):
        g = random_connected_graph(n, 0.45, seed)
        r = resistance_matrix(g)
        assert np.abs(r - r.T).max() == 0.0
        assert r.min() >= 0.0
        sums = r[:, :, None] + r[None, :, :]
        assert (r - sums.min(axis=1)).max() <= 1e-9


class TestTransmissions:
    def test_complete(self):
        r = resistance_matrix(generate(FamilySpec.complete(4)))
        np.testing.assert_allclose(resistance_transmissions(r), 1.5, atol=1e-12)

    def test_cycle(self):
        r = resistance_matrix(generate(FamilySpec.cycle(4)))
        np.testing.assert_allclose(resistance_transmissions(r), 2.5, atol=1e-12)

    def test_bipartite_22(self):
        r = resistance_matrix(generate(FamilySpec.bipartite(2, 2)))
        np.testing.assert_allclose(resistance_transmissions(r), 2.5, atol=1e-12)

    def test_path3_from_bfs_distances(self):
        # oracle: in a tree, transmissions are the distance column sums
        g = generate(FamilySpec.path(3))
        rtr = resistance_transmissions(resistance_matrix(g))
        oracle = classical_distance_matrix(g).sum(axis=0)
        np.testing.assert_allclose(rtr, oracle, atol=1e-12)
        np.testing.assert_allclose(rtr, [3.0, 2.0, 3.0], atol=1e-12)


class TestDerivedLaplacians:
    def test_k2(self):
        g = generate(FamilySpec.complete(2))
        np.testing.assert_allclose(resistance_laplacian(g), [[1, -1], [-1, 1]], atol=1e-14)
        np.testing.assert_allclose(
            resistance_signless_laplacian(g), [[1, 1], [1, 1]], atol=1e-14
        )

    def test_complete_closed_structure(self):
        for n in (3, 5, 8):
            g = generate(FamilySpec.complete(n))
            expected_rl = 2.0 * np.eye(n) - (2.0 / n) * np.ones((n, n))
            expected_rq = (2.0 / n) * np.ones((n, n)) + (2.0 - 4.0 / n) * np.eye(n)
            np.testing.assert_allclose(resistance_laplacian(g), expected_rl, atol=1e-12)
            np.testing.assert_allclose(resistance_signless_laplacian(g), expected_rq, atol=1e-12)

    def test_bundle_consistency(self):
        for g in random_corpus(10, 9, seed0=900):
            b = resistance_bundle(g)
            np.testing.assert_allclose(b.rl, np.diag(b.rtr) - b.r, atol=0)
            np.testing.assert_allclose(b.rq, np.diag(b.rtr) + b.r, atol=0)
            assert np.abs(b.rl @ np.ones(g.n)).max() < 1e-9
            assert abs(np.trace(b.rl) - b.rtr.sum()) < 1e-9 * max(1.0, b.rtr.sum())


class TestTransmissionRegularity:
    def test_cycle5(self):
        rtr = resistance_transmissions(resistance_matrix(generate(FamilySpec.cycle(5))))
        assert is_transmission_regular(rtr) == pytest.approx(4.0, abs=1e-9)

    def test_k4(self):
        rtr = resistance_transmissions(resistance_matrix(generate(FamilySpec.complete(4))))
        assert is_transmission_regular(rtr) == pytest.approx(1.5, abs=1e-9)

    def test_path3_irregular(self):
        rtr = resistance_transmissions(resistance_matrix(generate(FamilySpec.path(3))))
        assert is_transmission_regular(rtr) is None

    def test_tolerance(self):
        assert is_transmission_regular(np.array([1.0, 1.0 + 5e-10])) is not None
        assert is_transmission_regular(np.array([1.0, 1.1])) is None


class TestOrderRelations:
    def test_resistance_below_distance(self):
        for g in random_corpus(25, 12, seed0=100):
            r = resistance_matrix(g)
            d = classical_distance_matrix(g)
            assert (r - d).max() <= 1e-9

    def test_tree_resistance_equals_distance(self):
        for seed in range(25):
            t = random_tree(2 + seed % 12, seed)
            r = resistance_matrix(t)
            d = classical_distance_matrix(t)
            assert np.abs(r - d).max() <= 1e-9

    def test_edge_addition_shrinks_resistances(self):
        added = 0
        for g in random_corpus(30, 9, seed0=300):
            candidates = non_edges(g)
            if not candidates:
                continue
            added += 1
            r = resistance_matrix(g)
            r2 = resistance_matrix(add_edge(g, *candidates[0]))
            assert (r2 - r).max() <= 1e-9
        assert added >= 10
