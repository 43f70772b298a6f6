"""Lobatto/Radau rules and barycentric interpolation weights."""

import math

import numpy as np
import pytest

from fastgj import (
    FixedEnd,
    JacobiParams,
    barycentric_weights,
    gauss_jacobi,
    lobatto_rule,
    log_total_mass,
    radau_rule,
)
from tests.test_quadrature import moments


class TestLobatto:
    def test_legendre_boundary_closed_form(self):
        rule = lobatto_rule(0.0, 0.0, 50)
        assert rule.v_left == pytest.approx(2.0 / (51 * 52), rel=1e-15)
        assert rule.v_right == pytest.approx(2.0 / (51 * 52), rel=1e-15)

    def test_symmetric_boundaries(self):
        rule = lobatto_rule(0.8, 0.8, 12)
        assert rule.v_left == rule.v_right

    def test_interior_positive_finite(self):
        rule = lobatto_rule(0.5, -0.3, 30)
        assert np.all(rule.interior_weights > 0)
        assert np.all(np.isfinite(rule.interior_weights))
        assert np.all(np.abs(rule.interior_nodes) < 1.0)

    def test_exactness(self):
        n = 50
        rule = lobatto_rule(0.5, -0.3, n)
        mu = moments(0.5, -0.3, 60)
        x, w = rule.nodes, rule.weights
        for k in range(0, 61):
            q = float(w @ x**k)
            ref = mu[k]
            scale = abs(ref) if ref != 0 else 1.0
            assert abs(q - ref) / scale < 1e-11, f"k={k}"

    def test_mass_closure(self):
        rule = lobatto_rule(1.3, -0.6, 25)
        mass = math.exp(log_total_mass(1.3, -0.6))
        assert float(rule.weights.sum()) == pytest.approx(mass, rel=1e-12)


class TestRadau:
    def test_two_point_left_classical(self):
        rule = radau_rule(0.0, 0.0, 1, FixedEnd.LEFT)
        assert rule.interior_nodes[0] == pytest.approx(1 / 3, rel=1e-15)
        assert rule.v_boundary == pytest.approx(0.5, rel=1e-14)
        assert rule.interior_weights[0] == pytest.approx(1.5, rel=1e-14)
        mu = moments(0.0, 0.0, 3)
        x, w = rule.nodes, rule.weights
        for k in range(3):
            assert float(w @ x**k) == pytest.approx(float(mu[k]), abs=1e-15)

    @pytest.mark.parametrize("n,alpha,beta", [
        (5, 0.3, -0.4), (20, 2.0, 0.1), (50, -0.6, 1.5),
    ])
    def test_boundary_positive(self, n, alpha, beta):
        for end in (FixedEnd.LEFT, FixedEnd.RIGHT):
            rule = radau_rule(alpha, beta, n, end)
            assert rule.v_boundary > 0

    def test_mass_closure_identity(self):
        rule = radau_rule(0.7, -0.2, 18, FixedEnd.RIGHT)
        mass = math.exp(log_total_mass(0.7, -0.2))
        total = rule.v_boundary + float(rule.interior_weights.sum())
        assert total == pytest.approx(mass, rel=5e-16)

    def test_left_right_duality(self):
        # Right rule of (a, b) is the reflected Left rule of (b, a)
        left = radau_rule(0.9, -0.3, 15, FixedEnd.LEFT)
        right = radau_rule(-0.3, 0.9, 15, FixedEnd.RIGHT)
        assert np.max(np.abs(left.interior_nodes + right.interior_nodes[::-1])) \
            < 5e-15
        assert np.max(np.abs(left.interior_weights
                             / right.interior_weights[::-1] - 1.0)) < 5e-14
        assert left.v_boundary == pytest.approx(right.v_boundary, rel=5e-14)

    def test_exactness_degree(self):
        n = 12
        rule = radau_rule(0.4, 0.2, n, FixedEnd.LEFT)
        mu = moments(0.4, 0.2, 2 * n + 1)
        x, w = rule.nodes, rule.weights
        for k in range(2 * n + 1):
            scale = abs(mu[k]) if mu[k] != 0 else 1.0
            assert abs(float(w @ x**k) - mu[k]) / scale < 1e-12, f"k={k}"


class TestBarycentric:
    def test_sign_alternation(self):
        rule = gauss_jacobi(100, 0.1, -0.3)
        bw = barycentric_weights(rule)
        assert np.all(bw.u[:-1] * bw.u[1:] < 0)
        assert bw.u[0] > 0
        assert np.max(np.abs(bw.u)) == 1.0

    def test_chebyshev_proportionality(self):
        # constant weights: u_i proportional to (-1)^i sin(theta_i)
        rule = gauss_jacobi(50, -0.5, -0.5)
        bw = barycentric_weights(rule)
        signs = np.where(np.arange(50) % 2 == 0, 1.0, -1.0)
        ref = signs * np.sin(rule.theta)
        ref = ref / np.max(np.abs(ref))
        assert np.max(np.abs(bw.u - ref)) < 1e-14

    def test_scaling_invariance(self):
        rule = gauss_jacobi(40, 0.3, 0.7)
        bw = barycentric_weights(rule)
        probes = np.linspace(-0.95, 0.95, 10)
        vals = np.sin(3.0 * bw.nodes)
        base = bw.interpolate(vals, probes)
        for scale in (7.5, -0.03):
            scaled = type(bw)(nodes=bw.nodes, u=bw.u * scale)
            assert np.allclose(scaled.interpolate(vals, probes), base,
                               rtol=1e-13)

    def test_lagrange_cross_check_small_n(self):
        # direct product-form Lagrange interpolation as the oracle
        rule = gauss_jacobi(20, 0.0, 0.0)
        bw = barycentric_weights(rule)
        f = lambda x: 1.0 / (1.0 + 25.0 * x * x)
        vals = f(bw.nodes)
        probes = np.linspace(-0.99, 0.99, 40)
        direct = np.empty_like(probes)
        for i, p in enumerate(probes):
            acc = 0.0
            for j in range(len(bw.nodes)):
                term = vals[j]
                for l in range(len(bw.nodes)):
                    if l != j:
                        term *= (p - bw.nodes[l]) / (bw.nodes[j] - bw.nodes[l])
                acc += term
            direct[i] = acc
        assert np.max(np.abs(bw.interpolate(vals, probes) - direct)) < 1e-10

    def test_runge_convergence_n100(self):
        # interpolation error floor is set by the poles at +-i/5: the
        # Bernstein-ellipse rate gives rho**-100 ~ 2.3e-9 at this degree
        rule = gauss_jacobi(100, 0.0, 0.0)
        bw = barycentric_weights(rule)
        f = lambda x: 1.0 / (1.0 + 25.0 * x * x)
        probes = np.linspace(-1.0, 1.0, 1000)
        err = np.max(np.abs(bw.interpolate(f(bw.nodes), probes) - f(probes)))
        assert err < 5e-9
        # and convergence relative to a coarse rule
        rule20 = gauss_jacobi(20, 0.0, 0.0)
        bw20 = barycentric_weights(rule20)
        err20 = np.max(np.abs(bw20.interpolate(f(bw20.nodes), probes) - f(probes)))
        assert err < 1e-4 * err20

    def test_interpolates_nodes_exactly(self):
        rule = gauss_jacobi(30, 0.5, 0.5)
        bw = barycentric_weights(rule)
        vals = np.cos(bw.nodes)
        out = bw.interpolate(vals, bw.nodes[[3, 17]])
        assert np.array_equal(out, vals[[3, 17]])