import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qesd.matcore import check_density_matrix
from qesd.states import (Family, R_MAX, StateSpec, acceleration_to_r,
                         build_initial, reduced_state, reduced_state_analytic,
                         rindler_expand)

INV_SQRT2 = 1 / np.sqrt(2)

alphas = st.floats(min_value=-0.99, max_value=0.99).filter(lambda a: abs(a) > 1e-3)
rs = st.floats(min_value=0.0, max_value=R_MAX)


class TestStateSpec:
    @pytest.mark.parametrize("alpha", [0.0, 1.0, -1.0, 1.5, np.nan])
    def test_rejects_degenerate_or_invalid(self, alpha):
        with pytest.raises(ValueError):
            StateSpec(Family.THETA1, alpha)

    def test_degenerate_flag_allows_boundary(self):
        spec = StateSpec(Family.THETA1, 1.0, allow_degenerate=True)
        np.testing.assert_allclose(build_initial(spec), [0, 0, 0, 1])

    def test_out_of_range_rejected_even_with_flag(self):
        with pytest.raises(ValueError):
            StateSpec(Family.THETA1, 1.5, allow_degenerate=True)


class TestBuildInitial:
    def test_bell_phi_plus(self):
        ket = build_initial(StateSpec(Family.THETA1, INV_SQRT2))
        np.testing.assert_allclose(ket, [INV_SQRT2, 0, 0, INV_SQRT2], atol=1e-15)

    def test_bell_psi_minus(self):
        ket = build_initial(StateSpec(Family.THETA2, -INV_SQRT2))
        np.testing.assert_allclose(ket, [0, INV_SQRT2, -INV_SQRT2, 0], atol=1e-15)

    def test_theta1_generic(self):
        ket = build_initial(StateSpec(Family.THETA1, 0.6))
        np.testing.assert_allclose(ket, [0.8, 0, 0, 0.6], atol=1e-15)

    @given(st.sampled_from(list(Family)), alphas)
    @settings(max_examples=50, deadline=None)
    def test_unit_norm(self, family, alpha):
        ket = build_initial(StateSpec(family, alpha))
        assert abs(np.linalg.norm(ket) - 1.0) <= 1e-12


class TestAccelerationToR:
    def test_infinite_acceleration_limit(self):
        assert abs(acceleration_to_r(1e12, 1.0) - np.pi / 4) <= 1e-6

    def test_zero_acceleration_limit(self):
        assert abs(acceleration_to_r(1e-3, 1.0)) <= 1e-6

    def test_closed_formula_point(self):
        # a = 2*pi*omega*c: cos r = (e^-1 + 1)^(-1/2)
        assert abs(acceleration_to_r(2 * np.pi, 1.0) - 0.5452076238305835) <= 1e-15

    @pytest.mark.parametrize("a,omega,c", [(0.0, 1.0, 1.0), (1.0, -1.0, 1.0), (1.0, 1.0, 0.0)])
    def test_rejects_nonpositive(self, a, omega, c):
        with pytest.raises(ValueError):
            acceleration_to_r(a, omega, c)


class TestRindlerExpand:
    def test_inertial_limit(self):
        ket = rindler_expand(StateSpec(Family.THETA1, INV_SQRT2), 0.0)
        expected = np.zeros(8)
        expected[0] = expected[6] = INV_SQRT2  # |000>, |110>
        np.testing.assert_allclose(ket, expected, atol=1e-15)

    def test_theta1_three_amplitudes(self):
        a, r = 0.6, np.pi / 6
        ket = rindler_expand(StateSpec(Family.THETA1, a), r)
        expected = np.zeros(8)
        expected[0] = 0.8 * np.cos(r)   # |000>
        expected[3] = 0.8 * np.sin(r)   # |011>
        expected[6] = a                 # |110>
        np.testing.assert_allclose(ket, expected, atol=1e-15)

    def test_theta2_amplitudes(self):
        a, r = 0.6, np.pi / 6
        ket = rindler_expand(StateSpec(Family.THETA2, a), r)
        expected = np.zeros(8)
        expected[2] = 0.8               # |010>
        expected[4] = a * np.cos(r)     # |100>
        expected[7] = a * np.sin(r)     # |111>
        np.testing.assert_allclose(ket, expected, atol=1e-15)

    @given(st.sampled_from(list(Family)), alphas, rs)
    @settings(max_examples=50, deadline=None)
    def test_norm_preserved(self, family, alpha, r):
        ket = rindler_expand(StateSpec(family, alpha), r)
        assert abs(np.linalg.norm(ket) - 1.0) <= 1e-12


class TestReducedState:
    def test_inertial_bell_projector(self):
        rho = reduced_state(StateSpec(Family.THETA1, INV_SQRT2), 0.0)
        bell = np.zeros(4)
        bell[0] = bell[3] = INV_SQRT2
        np.testing.assert_allclose(rho, np.outer(bell, bell), atol=1e-14)

    def test_theta1_entries(self):
        rho = reduced_state(StateSpec(Family.THETA1, 0.6), np.pi / 6)
        assert abs(rho[0, 0] - 0.48) <= 1e-15
        assert abs(rho[1, 1] - 0.16) <= 1e-15
        assert abs(rho[2, 2]) <= 1e-15
        assert abs(rho[3, 3] - 0.36) <= 1e-15
        assert abs(rho[0, 3] - 0.41569219381653055) <= 1e-15

    def test_matches_analytic_oracle_on_grid(self):
        for family in Family:
            for alpha in np.linspace(0.05, 0.95, 20):
                for r in np.linspace(0.0, R_MAX, 20):
                    spec = StateSpec(family, alpha)
                    num = reduced_state(spec, r)
                    ana = reduced_state_analytic(spec, r)
                    assert np.max(np.abs(num - ana)) <= 1e-12
                    check_density_matrix(num)

    def test_inertial_limit_is_initial_projector(self):
        for family in Family:
            spec = StateSpec(family, 0.37)
            ket = build_initial(spec)
            np.testing.assert_allclose(reduced_state(spec, 0.0),
                                       np.outer(ket, ket.conj()), atol=1e-14)

    @given(alphas, rs)
    @settings(max_examples=50, deadline=None)
    def test_theta1_has_no_10_population(self, alpha, r):
        rho = reduced_state(StateSpec(Family.THETA1, alpha), r)
        assert abs(rho[2, 2]) <= 1e-14

    @given(st.sampled_from(list(Family)), alphas, rs)
    @settings(max_examples=50, deadline=None)
    def test_purity(self, family, alpha, r):
        rho = reduced_state(StateSpec(family, alpha), r)
        purity = np.trace(rho @ rho).real
        if r == 0.0:
            assert abs(purity - 1.0) <= 1e-12
        else:
            assert purity < 1.0 + 1e-12
            # weight of the traced-out branch; mixedness only when it is material
            if family is Family.THETA1:
                m = (1 - alpha ** 2) * np.sin(r) ** 2
            else:
                m = alpha ** 2 * np.sin(r) ** 2
            if 1e-4 < m < 1 - 1e-4:
                assert purity < 1.0 - 1e-5
