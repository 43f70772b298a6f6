"""Endpoint-uniform expansion: coefficients, values, derivative, zeros."""

import math

import numpy as np
import pytest

from fastgj import (
    JacobiParams,
    bessel_zero,
    coef_A1,
    eval_poly_bessel,
    eval_U_derivative,
    node_bessel,
)
from fastgj.besselexp import nodes_bessel
from fastgj.elementary import nodes_elementary
from fastgj.quadrature import eval_recurrence
from fastgj.tables import SMALL_THETA_CUT, default_table
from tests.conftest import load_golden

# worked reference: n=100, alpha=1/3, beta=1/4 largest zero
THETA0_REF = 0.02879787927325625
THETA1_REF = -0.8416536425087086e-3
X100_FIRST_ORDER = 0.9995853721164185
X100_REF = 0.9995853721163790


class TestA1:
    def test_ultraspherical_half_vanishes(self):
        ts = np.linspace(0.01, 2.5, 40)
        vals = coef_A1(0.5, 0.5, ts)
        assert np.max(np.abs(vals)) < 1e-18

    def test_small_theta_limit(self):
        # leading term A_{0,1} theta with A_{0,1} = (a^2 + 3 b^2 - 1)/24
        a, b = 0.3, -0.2
        t = 1e-4
        lead = (a * a + 3 * b * b - 1.0) / 24.0 * t
        assert coef_A1(a, b, t) == pytest.approx(lead, rel=1e-7)

    def test_worked_value(self):
        val = coef_A1(1 / 3, 1 / 4, THETA0_REF)
        assert val == pytest.approx(THETA1_REF, rel=1e-12)

    def test_closed_series_agreement_window(self):
        # relative agreement above the cut (closed form healthy there) and
        # scale-floored agreement below (closed form starts cancelling)
        bound = default_table().bind(0.7, -0.4)
        closed = bound.get("bess.T.0")
        ser = bound.get("sbess.T.0")
        hi = np.linspace(SMALL_THETA_CUT, 2 * SMALL_THETA_CUT, 15)
        vc = closed(hi, np.sin(hi), np.cos(hi))
        vs = ser(hi, np.sin(hi))
        assert np.max(np.abs(vs - vc)) < 1e-12 * np.max(np.abs(vc))
        lo = np.linspace(SMALL_THETA_CUT / 2, SMALL_THETA_CUT, 15)
        vc = closed(lo, np.sin(lo), np.cos(lo))
        vs = ser(lo, np.sin(lo))
        scale = np.max(np.abs(vc))
        assert np.max(np.abs(vs - vc)) < 1e-11 * scale


class TestSeriesClosedAgreement:
    # the entire series is near-exact through the window; the closed
    # polynomial forms float on a cancellation noise floor in double that
    # grows with the family order (their /kappa^2m contributions keep this
    # invisible downstream; the offline pipeline checks the same identity
    # at 30 digits, so this guards decoding, not derivation)
    @pytest.mark.parametrize("name,sname,tol", [
        ("bess.S.1", "sbess.S.1", 2e-10), ("bess.S.2", "sbess.S.2", 1e-7),
        ("bess.T.1", "sbess.T.1", 2e-10), ("bess.T.2", "sbess.T.2", 1e-7),
        ("bess.Y.1", "sbess.Y.1", 2e-10), ("bess.Z.0", "sbess.Z.0", 1e-12),
        ("bess.Z.1", "sbess.Z.1", 2e-10), ("bess.th.2", "sbess.th.2", 2e-10),
        ("bess.th.3", "sbess.th.3", 1e-7),
    ])
    def test_window(self, name, sname, tol):
        bound = default_table().bind(1.1, -0.6)
        closed = bound.get(name)
        ser = bound.get(sname)
        assert closed is not None and ser is not None
        ts = np.linspace(SMALL_THETA_CUT / 2, 2 * SMALL_THETA_CUT, 21)
        vc = closed(ts, np.sin(ts), np.cos(ts))
        vs = ser(ts, np.sin(ts))
        scale = np.max(np.abs(vc))
        assert np.max(np.abs(vs - vc)) < tol * scale


class TestEvalPoly:
    def test_vs_recurrence_near_endpoint(self):
        params = JacobiParams(100, 0.1, -0.3)
        theta = 0.05
        ref, _ = eval_recurrence(params, math.cos(theta))
        assert eval_poly_bessel(params, theta) == pytest.approx(float(ref),
                                                                rel=1e-13)

    def test_chebyshev_reduction(self):
        n, theta = 100, 0.83
        params = JacobiParams(n, -0.5, -0.5)
        ref = math.gamma(n + 0.5) / (math.sqrt(math.pi) * math.factorial(n)) \
            * math.cos(n * theta)
        assert eval_poly_bessel(params, theta) == pytest.approx(ref, rel=1e-13)

    def test_small_at_node(self):
        params = JacobiParams(100, 0.1, -0.3)
        node = node_bessel(params, 3)
        val = eval_poly_bessel(params, node.theta)
        away = eval_poly_bessel(params, node.theta + 0.3 / params.kappa)
        assert abs(val) < 1e-10 * abs(away)

    def test_domain_guard(self):
        from fastgj import DomainTooCloseToEndpoint

        with pytest.raises(DomainTooCloseToEndpoint):
            eval_poly_bessel(JacobiParams(50, 0.0, 0.0), math.pi - 0.05)


class TestUDerivative:
    def test_finite_difference(self):
        # U(t) = sqrt(t) W(t) reconstructed from the polynomial value by
        # stripping the prefactors: W = P sin^a(t/2) cos^b(t/2) sqrt(s/t)/G
        params = JacobiParams(100, 0.1, -0.3)
        from fastgj.elementary import g_front_factor

        G = g_front_factor(params)

        def U(t):
            P = eval_poly_bessel(params, t)
            W = P * math.sin(t / 2) ** params.alpha \
                * math.cos(t / 2) ** params.beta \
                * math.sqrt(math.sin(t) / t) / G
            return math.sqrt(t) * W

        theta, h = 0.31, 1e-6
        fd = (U(theta + h) - U(theta - h)) / (2 * h)
        val = eval_U_derivative(params, theta)
        scale = abs(val) + params.kappa
        assert abs(val - fd) / scale < 1e-9

    def test_sign_at_largest_node(self):
        params = JacobiParams(100, 1 / 3, 1 / 4)
        node = node_bessel(params, 1)
        val = eval_U_derivative(params, node.theta)
        # J_{a+1} > 0 just left of the first J_a zero, Y ~ 1: U' < 0
        assert val < 0.0
        assert np.isfinite(val)


class TestNodesBessel:
    def test_worked_example_first_order(self):
        params = JacobiParams(100, 1 / 3, 1 / 4)
        kap = params.kappa
        th0 = bessel_zero(params.alpha, 1).j / kap
        assert th0 == pytest.approx(THETA0_REF, rel=1e-14)
        th1 = coef_A1(params.alpha, params.beta, th0)
        x = math.cos(th0 + th1 / kap**2)
        assert x == pytest.approx(X100_FIRST_ORDER, abs=4e-16)
        assert abs(x / X100_REF - 1.0) <= 5e-14

    def test_ultraspherical_half_closed_form(self):
        # alpha = beta = 1/2: nodes are cos(m pi/(n+1)) exactly
        n = 100
        params = JacobiParams(n, 0.5, 0.5)
        ms = np.arange(1, 30)
        theta, th0, eps, x, _, _ = nodes_bessel(params, ms)
        ref = np.cos(ms * np.pi / (n + 1.0))
        assert np.max(np.abs(x / ref - 1.0)) < 5e-15
        assert np.max(np.abs(eps)) < 1e-16

    def test_against_golden(self):
        g = load_golden(100, "0.1", "-0.3")
        params = JacobiParams(100, 0.1, -0.3)
        ms = np.arange(1, 30)
        theta, th0, eps, x, _, _ = nodes_bessel(params, ms)
        rel = np.abs(x / g["x"][100 - ms] - 1.0)
        assert np.max(rel) < 1e-14

    def test_overlap_with_elementary(self):
        # the two independent derivations agree on the overlap band
        for n in (100, 1000):
            params = JacobiParams(n, 0.1, -0.3)
            kap = params.kappa
            lo = int(np.ceil(0.35 * kap / np.pi))
            ms = np.arange(lo, int(0.6 * kap / np.pi))
            theta_b, *_ = nodes_bessel(params, ms)
            ks = params.n + 1 - ms
            theta_e, *_ = nodes_elementary(params, ks)
            assert np.max(np.abs(theta_b / theta_e - 1.0)) < 1e-12

    def test_index_guard(self):
        from fastgj import IndexOutOfRange

        with pytest.raises(IndexOutOfRange):
            node_bessel(JacobiParams(100, 0.0, 0.0), 51)