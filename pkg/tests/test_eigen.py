import numpy as np
import pytest

from helpers import random_banded
from spingap import (
    BandedHermitian,
    DriverSpec,
    EigenSolverError,
    build_driver,
    build_xbasis_matrix,
    eigen_full,
    eigen_lowest,
    make_spin_system,
    sx_squared_matrix,
)


class TestEigenFull:
    def test_sx_squared_n2(self):
        vals = eigen_full(sx_squared_matrix(make_spin_system(2))).eigenvalues
        assert np.allclose(vals, [0, 1, 1], atol=1e-13)

    def test_free_rotor_even_n(self):
        # extended driver at tau = 0: n k^2 with k >= 1 doubled
        n = 8
        drv = build_driver(make_spin_system(n), DriverSpec("extended"))
        vals = eigen_full(drv).eigenvalues
        expected = np.sort([n * k * k for k in range(-n // 2, n // 2 + 1)])
        assert np.allclose(vals, expected, rtol=1e-10, atol=1e-10 * n)

    def test_two_by_two_closed_form(self):
        a, b = 0.7, -2.3
        m = BandedHermitian((np.array([a, a]), np.array([b])))
        vals = eigen_full(m).eigenvalues
        assert np.allclose(vals, sorted([a - b, a + b]), atol=1e-14)

    def test_vectors_and_diagnostics(self):
        rng = np.random.default_rng(0)
        m = random_banded(rng, 40, 2)
        spec = eigen_full(m, want_vectors=True)
        assert spec.eigenvectors.shape == (40, 40)
        assert spec.residual_max < 1e-12 * (m.norm_inf() + 1)
        assert spec.ortho_max < 1e-12

    def test_no_vectors_no_diagnostics(self):
        spec = eigen_full(sx_squared_matrix(make_spin_system(4)))
        assert spec.eigenvectors is None
        assert spec.residual_max is None and spec.ortho_max is None

    def test_rejects_complex(self):
        hx = build_xbasis_matrix(make_spin_system(6), 3, 0.1)
        with pytest.raises(EigenSolverError, match="real-symmetric"):
            eigen_full(hx)

    def test_rejects_non_finite(self):
        m = BandedHermitian((np.array([1.0, np.nan]), np.array([0.0])))
        with pytest.raises(EigenSolverError, match="non-finite"):
            eigen_full(m)


class TestEigenLowest:
    def test_prefix_consistency(self):
        rng = np.random.default_rng(1)
        m = random_banded(rng, 60, 3)
        full = eigen_full(m).eigenvalues
        low = eigen_lowest(m, 2).eigenvalues
        assert np.allclose(low, full[:2], atol=1e-12)

    def test_k_equals_dim(self):
        rng = np.random.default_rng(2)
        m = random_banded(rng, 25, 1)
        assert np.allclose(
            eigen_lowest(m, 25).eigenvalues, eigen_full(m).eigenvalues, atol=1e-12
        )

    def test_extended_null_vector(self):
        drv = build_driver(make_spin_system(12), DriverSpec("extended"))
        assert abs(eigen_lowest(drv, 1).eigenvalues[0]) < 1e-10

    @pytest.mark.parametrize("k", [0, 8])
    def test_k_out_of_range(self, k):
        m = sx_squared_matrix(make_spin_system(4))
        with pytest.raises(ValueError):
            eigen_lowest(m, k)

    def test_gap_property(self):
        drv = build_driver(make_spin_system(10), DriverSpec("extended"))
        assert eigen_lowest(drv, 2).gap == pytest.approx(10.0, rel=1e-12)


class TestSolverHealth:
    def test_random_banded_batch(self):
        # residuals, orthogonality and trace across 100 random matrices
        rng = np.random.default_rng(2024)
        for _ in range(100):
            dim = int(rng.integers(2, 201))
            bandwidth = int(rng.integers(0, min(4, dim)))
            m = random_banded(rng, dim, bandwidth)
            spec = eigen_full(m, want_vectors=True)
            assert spec.residual_max <= 1e-10 * m.norm_inf()
            assert spec.ortho_max <= 1e-10
            tr = m.trace()
            assert abs(spec.eigenvalues.sum() - tr) <= 1e-9 * (abs(tr) + 1.0)

    def test_kramers_pairs_not_split(self):
        drv = build_driver(make_spin_system(3), DriverSpec("extended"))
        vals = eigen_full(drv).eigenvalues
        assert vals[1] - vals[0] < 1e-11
        assert vals[3] - vals[2] < 1e-11

    def test_deterministic(self):
        rng = np.random.default_rng(5)
        m = random_banded(rng, 80, 2)
        a = eigen_full(m, want_vectors=True)
        b = eigen_full(m, want_vectors=True)
        assert np.array_equal(a.eigenvalues, b.eigenvalues)
        assert np.array_equal(a.eigenvectors, b.eigenvectors)
