import numpy as np
import pytest

from resq.errors import InvalidPartition, NonRealSpectrum, NotSymmetric
from resq.graph import FamilySpec, add_edge, generate, laplacian, non_edges, random_connected_graph
from resq.resistance import resistance_bundle, resistance_laplacian, resistance_signless_laplacian
from resq.spectral import (
    Partition,
    Spectrum,
    circulant_eigenvalues,
    eigenvalues_symmetric,
    quotient_matrix,
    transmission_regular_shift,
)


class TestEigenvaluesSymmetric:
    def test_rl_of_triangle(self):
        rl = resistance_laplacian(generate(FamilySpec.complete(3)))
        s = eigenvalues_symmetric(rl)
        np.testing.assert_allclose(s.values, [2.0, 2.0, 0.0], atol=1e-9)
        assert [c for _, c in s.multiplicities] == [2, 1]

    def test_rank_one_shift(self):
        # aI + bJ has eigenvalues a + nb once and a with multiplicity n-1
        m = np.eye(3) + 2.0 * np.ones((3, 3))
        np.testing.assert_allclose(eigenvalues_symmetric(m).values, [7.0, 1.0, 1.0], atol=1e-9)

    def test_zero_matrix(self):
        s = eigenvalues_symmetric(np.zeros((4, 4)))
        np.testing.assert_array_equal(s.values, np.zeros(4))
        assert s.multiplicities == ((0.0, 4),)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetric):
            eigenvalues_symmetric(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(NotSymmetric):
            eigenvalues_symmetric(np.ones((2, 3)))

    def test_sum_matches_trace(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            n = int(rng.integers(2, 30))
            a = rng.normal(size=(n, n))
            m = (a + a.T) / 2
            s = eigenvalues_symmetric(m)
            assert abs(s.values.sum() - np.trace(m)) <= 1e-9 * max(1.0, abs(np.trace(m)))

    def test_grouping_tolerance(self):
        s = Spectrum.from_values([1.0, 1.0 + 5e-8, 0.0], tol=1e-7)
        assert [c for _, c in s.multiplicities] == [2, 1]
        tight = Spectrum.from_values([1.0, 1.0 + 5e-8, 0.0], tol=1e-9)
        assert [c for _, c in tight.multiplicities] == [1, 1, 1]


class TestQuotientMatrix:
    def test_bipartite_laplacian(self):
        p, q = 2, 3
        g = generate(FamilySpec.bipartite(p, q))
        quot, equitable = quotient_matrix(laplacian(g), Partition.from_sizes(p, q))
        assert equitable
        np.testing.assert_allclose(quot, [[q, -q], [-p, p]], atol=1e-12)

    def test_bipartite_rl(self):
        g = generate(FamilySpec.bipartite(2, 2))
        quot, equitable = quotient_matrix(resistance_laplacian(g), Partition.from_sizes(2, 2))
        assert equitable
        np.testing.assert_allclose(quot, [[1.5, -1.5], [-1.5, 1.5]], atol=1e-12)

    def test_trivial_partition(self):
        g = generate(FamilySpec.cycle(4))
        rl = resistance_laplacian(g)
        quot, equitable = quotient_matrix(rl, Partition.of([range(4)]))
        assert equitable  # constant row sums (zero)
        np.testing.assert_allclose(quot, [[0.0]], atol=1e-12)

    def test_not_equitable(self):
        lap = laplacian(generate(FamilySpec.path(3)))
        _, equitable = quotient_matrix(lap, Partition.of([(0, 1), (2,)]))
        assert not equitable

    def test_invalid_partitions(self):
        m = np.zeros((3, 3))
        with pytest.raises(InvalidPartition):
            quotient_matrix(m, Partition.of([(0, 1)]))  # misses 2
        with pytest.raises(InvalidPartition):
            quotient_matrix(m, Partition.of([(0, 1), (1, 2)]))  # overlap
        with pytest.raises(InvalidPartition):
            quotient_matrix(m, Partition.of([(0, 1, 2), ()]))  # empty block
        with pytest.raises(InvalidPartition):
            quotient_matrix(m, Partition.of([(0, 1, 5)]))  # out of range

    def test_equitable_quotient_eigenvalues_contained(self):
        for p, q in [(1, 1), (2, 2), (2, 5), (3, 4), (8, 8), (1, 8)]:
            g = generate(FamilySpec.bipartite(p, q))
            partition = Partition.from_sizes(p, q)
            for matrix in (
                laplacian(g),
                resistance_laplacian(g),
                resistance_signless_laplacian(g),
            ):
                quot, equitable = quotient_matrix(matrix, partition)
                assert equitable
                parent = eigenvalues_symmetric(matrix).values
                for ev in np.linalg.eigvals(quot):
                    assert abs(ev.imag) < 1e-9
                    assert np.abs(parent - ev.real).min() <= 1e-7


class TestCirculantEigenvalues:
    def test_rl_cycle4_first_row(self):
        s = circulant_eigenvalues([2.5, -0.75, -1.0, -0.75])
        np.testing.assert_allclose(s.values, [3.5, 3.5, 3.0, 0.0], atol=1e-9)

    def test_constant_row(self):
        c = 1.7
        s = circulant_eigenvalues([c, c, c])
        np.testing.assert_allclose(s.values, [3 * c, 0.0, 0.0], atol=1e-12)

    def test_rq_cycle4_first_row(self):
        s = circulant_eigenvalues([2.5, 0.75, 1.0, 0.75])
        np.testing.assert_allclose(s.values, [5.0, 2.0, 1.5, 1.5], atol=1e-9)

    def test_matches_dense_eigensolver(self):
        rng = np.random.default_rng(5)
        for n in (3, 8, 17, 32, 64):
            half = rng.normal(size=n // 2 + 1)
            row = np.zeros(n)
            for k in range(n):
                row[k] = half[min(k, n - k)]
            idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
            dense = row[idx]
            fast = circulant_eigenvalues(row).values
            slow = eigenvalues_symmetric(dense).values
            assert np.abs(fast - slow).max() <= 1e-8

    def test_asymmetric_row_rejected(self):
        with pytest.raises(NonRealSpectrum):
            circulant_eigenvalues([0.0, 1.0, 0.0])


class TestTransmissionRegularShift:
    def test_triangle_both_signs(self):
        # R(K_3) spectrum is {4/3, -2/3, -2/3}; k = 4/3
        r_spec = Spectrum.from_values([4 / 3, -2 / 3, -2 / 3])
        shifted_l = transmission_regular_shift(4 / 3, r_spec, "L")
        np.testing.assert_allclose(shifted_l.values, [2.0, 2.0, 0.0], atol=1e-12)
        shifted_q = transmission_regular_shift(4 / 3, r_spec, "Q")
        np.testing.assert_allclose(shifted_q.values, [8 / 3, 2 / 3, 2 / 3], atol=1e-12)

    def test_degenerate_single_vertex(self):
        s = transmission_regular_shift(0.0, Spectrum.from_values([0.0]), "L")
        np.testing.assert_array_equal(s.values, [0.0])

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            transmission_regular_shift(1.0, Spectrum.from_values([0.0]), "X")

    def test_matches_direct_eigensolve_on_cycles(self):
        for n in (3, 5, 8, 12):
            bundle = resistance_bundle(generate(FamilySpec.cycle(n)))
            k = bundle.rtr[0]
            r_spec = eigenvalues_symmetric(bundle.r)
            for sign, matrix in (("L", bundle.rl), ("Q", bundle.rq)):
                shifted = transmission_regular_shift(k, r_spec, sign)
                direct = eigenvalues_symmetric(matrix)
                assert np.abs(shifted.values - direct.values).max() <= 1e-9


class TestStructuralSpectralProperties:
    def corpus(self):
        return [random_connected_graph(3 + s % 8, 0.3 + (s % 5) / 10, 7000 + s) for s in range(30)]

    def test_rl_psd_and_zero_eigenvalue(self):
        for g in self.corpus():
            bundle = resistance_bundle(g)
            values = eigenvalues_symmetric(bundle.rl).values
            norm = np.abs(values).max()
            assert values.min() >= -1e-9 * norm
            assert np.abs(bundle.rl @ np.ones(g.n)).max() <= 1e-9 * norm

    def test_rl_spectral_radius_at_least_two(self):
        for g in self.corpus():
            values = eigenvalues_symmetric(resistance_laplacian(g)).values
            assert values[0] >= 2.0 - 1e-9

    def test_edge_addition_spectral_monotonicity(self):
        checked = 0
        for g in self.corpus():
            candidates = non_edges(g)
            if not candidates:
                continue
            checked += 1
            before = eigenvalues_symmetric(resistance_laplacian(g)).values
            after = eigenvalues_symmetric(
                resistance_laplacian(add_edge(g, *candidates[-1]))
            ).values
            assert (after - before).max() <= 1e-9
        assert checked >= 10
