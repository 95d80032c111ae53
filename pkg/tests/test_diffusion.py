import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from csl_bounds.diffusion import (
    NonConvergence,
    QuadratureSpec,
    QuadratureTooLarge,
    csl_dns,
    decay_terms,
    diffusion_pair,
    eta_numeric,
    eta_r_cube,
    eta_r_shape,
    eta_v_cube,
    eta_v_shape,
    g_aux,
)
from csl_bounds.physics import Channel, CslParams, CubeGeometry, PhysicalConstants, UnitKind

from oracles import G_AUX_AT_2, SHAPE_TABLE, separable_shapes


class TestAuxiliary:
    def test_zero(self):
        assert g_aux(0.0) == 0.0

    def test_beta_two(self):
        assert g_aux(2.0) == pytest.approx(G_AUX_AT_2, rel=1e-15)

    @pytest.mark.parametrize("b", [50.0, 1e3, 1e6])
    def test_large_beta_slope(self, b):
        assert g_aux(b) / b == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    def test_vectorised_and_negative(self):
        out = g_aux(np.array([0.0, 2.0]))
        assert out.shape == (2,)
        with pytest.raises(ValueError):
            g_aux(-1.0)

    def test_decay_terms_small_beta_precision(self):
        e, one_minus_e = decay_terms(1e-9)
        assert e == 1.0
        assert one_minus_e == pytest.approx(0.25e-18, rel=1e-15)


class TestShapes:
    @pytest.mark.parametrize("b, f_v, f_r, _", SHAPE_TABLE)
    def test_frozen_oracle(self, b, f_v, f_r, _):
        assert eta_v_shape(b) == pytest.approx(f_v, rel=1e-13)
        assert eta_r_shape(b) == pytest.approx(f_r, rel=1e-13)

    @pytest.mark.parametrize("b", [0.3, 2.99, 3.01, 7.0])
    def test_live_mpmath_oracle(self, b):
        f_v, f_r = separable_shapes(b)
        assert eta_v_shape(b) == pytest.approx(f_v, rel=1e-13)
        assert eta_r_shape(b) == pytest.approx(f_r, rel=1e-13)

    def test_series_and_closed_forms_meet(self):
        lo, hi = np.nextafter(3.0, 0.0), 3.0
        assert eta_v_shape(lo) == pytest.approx(eta_v_shape(hi), rel=1e-14)
        assert eta_r_shape(lo) == pytest.approx(eta_r_shape(hi), rel=1e-13)

    def test_small_beta_leading_order(self):
        # point-like limit: f_V -> beta^2 / 2, f_R ~ beta^8 / 4320
        b = 1e-3
        assert eta_v_shape(b) == pytest.approx(b**2 / 2, rel=1e-6)
        assert eta_r_shape(b) / b**8 == pytest.approx(eta_r_shape(2e-3) / 2e-3**8, rel=1e-5)

    def test_positive_and_finite_over_range(self):
        b = np.logspace(-3, 6, 2001)
        for f in (eta_v_shape(b), eta_r_shape(b)):
            assert np.all(np.isfinite(f)) and np.all(f > 0)

    def test_array_matches_scalar(self):
        b = np.array([0.5, 3.0, 40.0])
        assert eta_v_shape(b).tolist() == [eta_v_shape(x) for x in b]


class TestCubeCoefficients:
    def test_zero_rate(self, lisa):
        p = CslParams(0.0, 1e-7)
        assert eta_v_cube(p, lisa) == 0.0
        assert eta_r_cube(p, lisa) == 0.0
        assert eta_numeric(p, lisa, which="V") == 0.0

    def test_doubling_rate_is_exact(self, lisa):
        a = diffusion_pair(CslParams(1.0, 1e-7), lisa)
        b = diffusion_pair(CslParams(2.0, 1e-7), lisa)
        assert b.eta_v == 2 * a.eta_v and b.eta_r == 2 * a.eta_r

    @settings(max_examples=200)
    @given(
        lam=st.floats(min_value=1e-20, max_value=1e5),
        c=st.floats(min_value=1e-3, max_value=1e3),
        r_c=st.floats(min_value=1e-8, max_value=1e-2),
    )
    def test_rate_scaling(self, lam, c, r_c):
        geom = CubeGeometry(0.046, 1.928)
        a = eta_r_cube(CslParams(lam, r_c), geom)
        b = eta_r_cube(CslParams(c * lam, r_c), geom)
        # c*lam rounds once before the product, the reference once after
        assert abs(b - c * a) <= 2 * math.ulp(b)

    @given(e=st.integers(min_value=-10, max_value=10), r_c=st.floats(min_value=1e-8, max_value=1e-2))
    def test_mass_scaling_binary_factor(self, e, r_c):
        c = 2.0**e
        p = CslParams(1.0, r_c)
        a = eta_v_cube(p, CubeGeometry(0.046, 1.928))
        b = eta_v_cube(p, CubeGeometry(0.046, c * 1.928))
        assert b == c * c * a

    @given(c=st.floats(min_value=0.1, max_value=10), r_c=st.floats(min_value=1e-8, max_value=1e-2))
    def test_mass_scaling_general(self, c, r_c):
        p = CslParams(1.0, r_c)
        a = eta_v_cube(p, CubeGeometry(0.046, 1.928))
        b = eta_v_cube(p, CubeGeometry(0.046, c * 1.928))
        assert abs(b - c * c * a) <= 6 * math.ulp(b)

    def test_m0_override(self, lisa):
        p = CslParams(1.0, 1e-7)
        proton = PhysicalConstants(m0=1.67262192369e-27)
        ratio = eta_r_cube(p, lisa, proton) / eta_r_cube(p, lisa)
        assert ratio == pytest.approx((1.66053906660 / 1.67262192369) ** 2, rel=1e-14)

    def test_unit_tags(self, lisa):
        p = CslParams(1.0, 1e-7)
        s_f, kind_f = csl_dns(p, lisa, Channel.TRANSLATIONAL)
        s_t, kind_t = csl_dns(p, lisa, Channel.ROTATIONAL)
        assert kind_f is UnitKind.FORCE2 and kind_t is UnitKind.TORQUE2
        assert s_f == pytest.approx(1.054571817e-34**2 * eta_v_cube(p, lisa), rel=1e-15)
        assert s_t == pytest.approx(1.054571817e-34**2 * eta_r_cube(p, lisa), rel=1e-15)


class TestQuadrature:
    @pytest.mark.parametrize("b", [0.1, 1.0, 10.0, 50.0])
    @pytest.mark.parametrize("which", ["V", "R"])
    def test_oracle_agreement(self, lisa, b, which):
        p = CslParams(1.0, lisa.side / b)
        analytic = eta_v_cube(p, lisa) if which == "V" else eta_r_cube(p, lisa)
        assert eta_numeric(p, lisa, which=which) == pytest.approx(analytic, rel=1e-6)

    @pytest.mark.parametrize("b", [1.0, 10.0])
    @pytest.mark.parametrize("which", [Channel.TRANSLATIONAL, Channel.ROTATIONAL])
    def test_octant_symmetry(self, lisa, b, which):
        p = CslParams(1.0, lisa.side / b)
        octant = eta_numeric(p, lisa, which=which, spec=QuadratureSpec(check_convergence=False))
        full = eta_numeric(p, lisa, which=which, spec=QuadratureSpec(check_convergence=False, octant=False))
        assert octant == pytest.approx(full, rel=1e-12)

    def test_bit_reproducible(self, lisa):
        p = CslParams(1.0, lisa.side / 7.0)
        assert eta_numeric(p, lisa, which="R") == eta_numeric(p, lisa, which="R")

    def test_nonconvergence_detected(self, lisa):
        # one node per sinc lobe is too coarse for 1e-14 agreement
        p = CslParams(1.0, lisa.side / 20.0)
        with pytest.raises(NonConvergence):
            eta_numeric(p, lisa, which="R", spec=QuadratureSpec(rtol=1e-15))

    def test_budget_exceeded(self, lisa):
        with pytest.raises(QuadratureTooLarge):
            eta_numeric(CslParams(1.0, 1e-7), lisa, which="V")

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(nodes_per_panel=4)
        with pytest.raises(ValueError):
            QuadratureSpec(k_max_in_units_of_inv_rc=3.0)
        with pytest.raises(ValueError):
            eta_numeric(CslParams(1.0, 1.0), CubeGeometry(1.0, 1.0), which="Q")
