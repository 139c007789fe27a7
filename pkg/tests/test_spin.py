import math

import numpy as np
import pytest

from spingap import (
    DriverSpec,
    WavefunctionProfile,
    build_driver,
    eigen_full,
    eigen_lowest,
    ground_state_extended_asymptotic,
    ground_state_localized_asymptotic,
    ground_state_localized_exact,
    make_spin_system,
    sx_matrix,
    sx_squared_matrix,
)


class TestSpinSystem:
    def test_even_example(self):
        s = make_spin_system(2)
        assert (s.two_l, s.dim, s.parity) == (2, 3, "even")

    def test_odd_example(self):
        s = make_spin_system(3)
        assert (s.two_l, s.dim, s.parity) == (3, 4, "odd")

    def test_figure_size(self):
        assert make_spin_system(46).dim == 47

    @pytest.mark.parametrize("bad", [0, -1, 2.5, "4"])
    def test_rejects_bad_n(self, bad):
        with pytest.raises(ValueError):
            make_spin_system(bad)

    def test_two_m_grid(self):
        s = make_spin_system(5)
        tm = s.two_m_values()
        assert list(tm) == [5, 3, 1, -1, -3, -5]
        assert s.index_of(-1) == 3
        with pytest.raises(ValueError):
            s.index_of(2)  # wrong parity for odd n


class TestSxMatrix:
    def test_spin_one(self):
        s = make_spin_system(2)
        m = sx_matrix(s)
        assert np.allclose(m.diagonals[1], [1 / math.sqrt(2)] * 2)
        assert np.allclose(m.diagonals[0], 0.0)
        vals = eigen_full(m).eigenvalues
        assert np.allclose(vals, [-1.0, 0.0, 1.0], atol=1e-14)

    def test_spin_half(self):
        s = make_spin_system(1)
        m = sx_matrix(s)
        assert np.allclose(m.diagonals[1], [0.5])
        assert np.allclose(eigen_full(m).eigenvalues, [-0.5, 0.5], atol=1e-15)

    def test_full_ladder_n4(self):
        # eigenvalues of S_x must reproduce the m-ladder {-l..l}
        vals = eigen_full(sx_matrix(make_spin_system(4))).eigenvalues
        assert np.allclose(vals, [-2, -1, 0, 1, 2], atol=1e-13)


class TestSxSquared:
    @pytest.mark.parametrize("n", [2, 3, 6, 7, 15])
    def test_equals_matrix_square(self, n):
        s = make_spin_system(n)
        sq = sx_squared_matrix(s).to_dense()
        sx = sx_matrix(s).to_dense()
        assert np.max(np.abs(sq - sx @ sx)) < 1e-14 * (np.max(np.abs(sq)) + 1)

    def test_spectrum_n2(self):
        vals = eigen_full(sx_squared_matrix(make_spin_system(2))).eigenvalues
        assert np.allclose(vals, [0, 1, 1], atol=1e-13)

    def test_spectrum_n3_kramers(self):
        vals = eigen_full(sx_squared_matrix(make_spin_system(3))).eigenvalues
        assert np.allclose(vals, [0.25, 0.25, 2.25, 2.25], atol=1e-13)

    def test_spectrum_n6(self):
        vals = eigen_full(sx_squared_matrix(make_spin_system(6))).eigenvalues
        assert np.allclose(vals, [0, 1, 1, 4, 4, 9, 9], rtol=1e-10, atol=1e-12)

    @pytest.mark.parametrize("n", [4, 9, 20])
    def test_spectrum_is_m_squared(self, n):
        s = make_spin_system(n)
        vals = eigen_full(sx_squared_matrix(s)).eigenvalues
        expected = np.sort(s.m_values() ** 2)
        assert np.allclose(vals, expected, rtol=1e-10, atol=1e-11)


class TestExtendedProfile:
    def test_parity_zero(self):
        s = make_spin_system(2)
        assert ground_state_extended_asymptotic(s, 0) == 0.0

    def test_center_magnitude_n100(self):
        s = make_spin_system(100)
        val = ground_state_extended_asymptotic(s, 0)
        # k = (l - m)/2 = 25 is odd, so the closed form is negative here
        assert val == pytest.approx(-1.0 / math.sqrt(2 * math.pi * 50), rel=1e-12)

    def test_edge_singularity(self):
        s = make_spin_system(100)
        with pytest.raises(ValueError, match="edge"):
            ground_state_extended_asymptotic(s, 100)

    def test_odd_n_rejected(self):
        with pytest.raises(ValueError):
            ground_state_extended_asymptotic(make_spin_system(5), 1)

    def test_formula_ratio_m48(self):
        s = make_spin_system(100)
        r = abs(
            ground_state_extended_asymptotic(s, 96)
            / ground_state_extended_asymptotic(s, 0)
        )
        assert r == pytest.approx((50**2 / (50**2 - 48**2)) ** 0.25, rel=1e-12)

    def test_against_exact_eigenvector_n100(self):
        s = make_spin_system(100)
        drv = build_driver(s, DriverSpec("extended"))
        spec = eigen_lowest(drv, 1, want_vectors=True)
        v = spec.eigenvectors[:, 0]
        if v[s.index_of(100)] < 0:  # top-positive sign convention (m = +l)
            v = -v
        v0 = v[s.index_of(0)]
        # parity selection: odd l - m amplitudes vanish
        odd = [v[i] for i, tm in enumerate(s.two_m_values()) if ((100 - tm) // 2) % 2 == 1]
        assert np.max(np.abs(odd)) < 1e-12
        # envelope agreement within 2% for |m| <= 0.9 l, looser at m = 48
        for tm in s.two_m_values():
            half_diff = (100 - tm) // 2
            if half_diff % 2 == 1 or abs(tm) >= 100:
                continue
            m = tm / 2.0
            ratio = abs(v[s.index_of(tm)] / v0)
            envelope = (1 - (m / 50.0) ** 2) ** -0.25
            tol = 0.02 if abs(m) <= 45 else 0.08
            assert abs(ratio - envelope) / envelope < tol, f"m={m}"
        # signs of the closed form track the exact eigenvector on the
        # nonzero sublattice (l - m even, i.e. two_m = 0 mod 4 here)
        for tm in range(-96, 97, 4):
            asym = ground_state_extended_asymptotic(s, tm)
            assert math.copysign(1, asym) == math.copysign(1, v[s.index_of(tm)])
        # the printed prefactor is half the true amplitude (shape-only form);
        # measured normalization constant ~= 1.99 at n = 100
        const = abs(v0 / ground_state_extended_asymptotic(s, 0))
        assert const == pytest.approx(2.0, rel=0.02)


class TestLocalizedProfile:
    def test_center_value(self):
        s = make_spin_system(100)
        assert ground_state_localized_asymptotic(s, 0) == pytest.approx(
            1.0 / math.sqrt(50 * math.pi), rel=1e-12
        )

    def test_exact_oracle_small(self):
        # d^1_{1,1}(pi/2) = 2^{-1} sqrt(C(2,0)) = 1/2
        assert ground_state_localized_exact(make_spin_system(2), 2) == pytest.approx(0.5)

    def test_exact_oracle_binomials(self):
        s = make_spin_system(7)
        for tm in s.two_m_values():
            w = (7 - tm) // 2
            expected = math.sqrt(math.comb(7, w)) / 2 ** 3.5
            assert ground_state_localized_exact(s, tm) == pytest.approx(expected, rel=1e-14)

    def test_matches_driver_eigenvector_n100(self):
        s = make_spin_system(100)
        drv = build_driver(s, DriverSpec("localized"))
        v = eigen_lowest(drv, 1, want_vectors=True).eigenvectors[:, 0]
        if v[0] < 0:
            v = -v
        oracle = np.array([ground_state_localized_exact(s, int(t)) for t in s.two_m_values()])
        assert np.max(np.abs(v - oracle)) < 1e-10

    def test_gaussian_is_probability_profile(self):
        # the closed form tracks squared amplitudes: at m = 0 it equals
        # C(2l, l) / 4^l to a fraction of a percent, and the m = 20 decay of
        # the squared oracle follows exp(-m^2/l) to ~15%
        s = make_spin_system(100)
        amp0 = ground_state_localized_exact(s, 0)
        assert amp0**2 == pytest.approx(ground_state_localized_asymptotic(s, 0), rel=0.01)
        amp20 = ground_state_localized_exact(s, 40)
        decay_sq = (amp20 / amp0) ** 2
        assert decay_sq == pytest.approx(math.exp(-400 / 50.0), rel=0.15)


class TestProfileContainer:
    def test_length_validation(self):
        s = make_spin_system(4)
        with pytest.raises(ValueError):
            WavefunctionProfile(s, np.zeros(3))

    def test_norm_of_exact_state(self):
        s = make_spin_system(12)
        drv = build_driver(s, DriverSpec("extended"))
        v = eigen_lowest(drv, 1, want_vectors=True).eigenvectors[:, 0]
        profile = WavefunctionProfile(s, v, label="driver ground state")
        assert abs(profile.norm() - 1.0) < 1e-12
