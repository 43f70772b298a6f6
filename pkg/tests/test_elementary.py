"""Interior expansion: front factor, values, reduced phase, zeros."""

import math

import numpy as np
import pytest

from fastgj import (
    BranchMisuse,
    DomainTooCloseToEndpoint,
    JacobiParams,
    eval_poly_elementary,
    eval_W_shifted,
    g_front_factor,
    node_elementary,
)
from fastgj.elementary import nodes_elementary, theta0_elementary
from fastgj.quadrature import eval_recurrence
from tests.conftest import load_golden


class TestFrontFactor:
    def test_alpha_zero_exact(self):
        assert g_front_factor(JacobiParams(57, 0.0, 1.3)) == 1.0

    def test_reference_n100(self):
        # 50-digit gamma-ratio value
        val = g_front_factor(JacobiParams(100, 1 / 3, 1 / 4))
        assert val == pytest.approx(0.999587652770174547840775, rel=5e-16)

    def test_exact_rational_case(self):
        # Gamma(13)/(10! * 12^2) = 11/12 exactly
        assert g_front_factor(JacobiParams(10, 2.0, 1.0)) == pytest.approx(
            11 / 12, rel=1e-13)

    def test_series_vs_direct_consistency(self):
        # both evaluation routes must agree where they overlap
        from fastgj.core import log_front_factor_direct
        for n, a, b in ((40, 2.0, 1.0), (50, 0.3, -0.6), (35, 4.5, 3.0)):
            params = JacobiParams(n, a, b)
            assert g_front_factor(params) == pytest.approx(
                math.exp(log_front_factor_direct(params)), rel=2e-13)


class TestEvalPoly:
    def test_chebyshev_closed_form(self):
        # closed form Gamma(n+1/2)/(sqrt(pi) n!) cos(n theta)
        n, theta = 10, 0.7
        ref = math.gamma(n + 0.5) / (math.sqrt(math.pi) * math.factorial(n)) \
            * math.cos(n * theta)
        val = eval_poly_elementary(JacobiParams(n, -0.5, -0.5), theta)
        assert val == pytest.approx(ref, rel=5e-14)

    def test_vs_recurrence_midrange(self):
        params = JacobiParams(100, 0.1, -0.3)
        theta = np.pi / 2
        ref, _ = eval_recurrence(params, math.cos(theta))
        assert eval_poly_elementary(params, theta) == pytest.approx(
            float(ref), rel=1e-13)

    @pytest.mark.parametrize("theta", [0.45, 0.9, 1.7, 2.4])
    def test_reflection_symmetry(self, theta):
        n = 37
        lhs = eval_poly_elementary(JacobiParams(n, 0.4, -0.2), theta)
        rhs = (-1) ** n * eval_poly_elementary(JacobiParams(n, -0.2, 0.4),
                                               np.pi - theta)
        assert lhs == pytest.approx(rhs, rel=4e-15)

    def test_domain_guard(self):
        with pytest.raises(DomainTooCloseToEndpoint):
            eval_poly_elementary(JacobiParams(100, 0.0, 0.0), 0.1)


class TestWShifted:
    def test_parity_at_eps_zero(self):
        # cos(chi) = 0 exactly at theta0, so W(theta0) = -sin(chi) V
        params = JacobiParams(100, 1 / 3, 1 / 5)
        W, _ = eval_W_shifted(params, 50, 0.0)
        from fastgj.elementary import _uv_series
        from fastgj.tables import default_table

        th0 = float(theta0_elementary(params, 50))
        bound = default_table().bind(params.alpha, params.beta)
        _, V = _uv_series(bound, np.float64(math.cos(th0)),
                          np.float64(math.sin(th0)), params.kappa)
        assert W == pytest.approx(-float(V) * (-1.0) ** (params.n - 50),
                                  rel=1e-13)

    def test_phase_argument_contract(self):
        params = JacobiParams(500, 0.2, 0.2)
        with pytest.raises(ValueError):
            eval_W_shifted(params, 250, 0.5)    # kappa*eps way out of range

    def test_derivative_sign_scale(self):
        # |W'| ~ kappa near a node (the oscillation steepness)
        params = JacobiParams(200, 0.1, -0.3)
        _, dW = eval_W_shifted(params, 100, 1e-6)
        assert 0.2 * params.kappa < abs(dW) < 5.0 * params.kappa


class TestNodes:
    def test_chebyshev_zero_corrections(self):
        # every correction vanishes: theta = theta0, x = cos((k-1/2)pi/n)
        params = JacobiParams(64, -0.5, -0.5)
        ks = np.arange(20, 45)
        theta, th0, eps, x, _ = nodes_elementary(params, ks)
        assert np.max(np.abs(eps)) < 1e-18     # coefficients vanish exactly
        ref = np.cos((params.n + 1 - ks - 0.5) * np.pi / params.n)
        assert np.max(np.abs(x - ref)) < 1e-15

    def test_center_node_exact_zero(self):
        params = JacobiParams(101, 0.7, 0.7)
        node = node_elementary(params, 51)
        assert node.x == 0.0

    def test_against_golden(self):
        g = load_golden(100, "0.1", "-0.3")
        params = JacobiParams(100, 0.1, -0.3)
        ks = np.arange(30, 71)
        theta, th0, eps, x, _ = nodes_elementary(params, ks)
        rel = np.abs(x / g["x"][ks - 1] - 1.0)
        assert np.max(rel) < 1e-14

    def test_band_misuse(self):
        params = JacobiParams(100, 0.0, 0.0)
        with pytest.raises(BranchMisuse):
            node_elementary(params, 100)     # theta0 deep in the endpoint zone

    def test_inversion_residual(self):
        # the oscillatory factor nearly vanishes at every computed node
        params = JacobiParams(100, 0.1, -0.3)
        from fastgj.elementary import _uv_series
        from fastgj.tables import default_table

        bound = default_table().bind(params.alpha, params.beta)
        ks = np.arange(35, 66)
        theta, th0, eps, x, _ = nodes_elementary(params, ks)
        W, _ = eval_W_shifted(params, ks, eps)
        U, V = _uv_series(bound, np.cos(theta), np.sin(theta), params.kappa)
        assert np.max(np.abs(W) / (np.abs(U) + np.abs(V))) < 1e-13

    def test_order_consistency(self):
        # dropping theta_2 changes theta by <= C/kappa^4 with moderate C
        from fastgj.tables import default_table

        params = JacobiParams(100, 0.4, -0.6)
        bound = default_table().bind(params.alpha, params.beta)
        kap = params.kappa
        ks = np.arange(30, 71)
        th0 = np.asarray([float(v) for v in
                          (params.n + 1.0 - ks + 0.2 - 0.25) * np.pi / kap])
        from fastgj.elementary import theta0_elementary

        th0 = theta0_elementary(params, ks)
        c0, s0 = np.cos(th0), np.sin(th0)
        fam = bound.family("elem.th", start=1)
        th2_contrib = np.abs(fam[1](c0, s0)) / kap**4
        assert np.max(th2_contrib * kap**4) < 10.0

    def test_scalar_api(self):
        params = JacobiParams(100, 0.1, -0.3)
        node = node_elementary(params, 50)
        assert node.k == 50
        assert abs(node.theta - (node.theta0 + node.eps)) < 1e-17
        assert abs(node.x - math.cos(node.theta)) < 5e-16
        assert abs(node.eps) * params.kappa**2 < 10.0   # eps ~ theta1/kappa^2