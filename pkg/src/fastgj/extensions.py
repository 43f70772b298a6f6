"""Lobatto and Radau rules and barycentric interpolation weights.

Both endpoint-fixed rules reduce to a Gauss rule with shifted exponents:
the interior nodes of the (alpha, beta) Lobatto rule are the Gauss nodes
of (alpha+1, beta+1) and the interior weights divide out (1 - x^2); the
boundary weights have a closed gamma-ratio form (Lobatto) or follow from
exactness on constants (Radau).  Barycentric weights at Gauss nodes are
(-1)^i sin(theta_i) sqrt(w_i) up to one arbitrary constant.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import JacobiParams, QuadratureRule, log_gamma_ratio, log_total_mass
from .quadrature import BranchPolicy, compute_rule


class FixedEnd(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass
class LobattoRule:
    """Endpoints fixed at -1 and +1; interior from the shifted Gauss rule."""

    params: JacobiParams          # the target (alpha, beta) weight
    interior_nodes: np.ndarray
    interior_weights: np.ndarray
    v_left: float
    v_right: float

    @property
    def nodes(self):
        return np.concatenate(([-1.0], self.interior_nodes, [1.0]))

    @property
    def weights(self):
        return np.concatenate(([self.v_left], self.interior_weights,
                               [self.v_right]))


@dataclass
class RadauRule:
    """One endpoint fixed; interior from the single-shift Gauss rule."""

    params: JacobiParams
    fixed_end: FixedEnd
    interior_nodes: np.ndarray
    interior_weights: np.ndarray
    v_boundary: float

    @property
    def nodes(self):
        if self.fixed_end is FixedEnd.LEFT:
            return np.concatenate(([-1.0], self.interior_nodes))
        return np.concatenate((self.interior_nodes, [1.0]))

    @property
    def weights(self):
        if self.fixed_end is FixedEnd.LEFT:
            return np.concatenate(([self.v_boundary], self.interior_weights))
        return np.concatenate((self.interior_weights, [self.v_boundary]))


@dataclass
class BarycentricWeights:
    """Sign-alternating interpolation weights at the rule's nodes."""

    nodes: np.ndarray
    u: np.ndarray

    def interpolate(self, values, at):
        """Barycentric interpolant through (nodes, values) at points `at`."""
        at = np.asarray(at, dtype=np.float64)
        diff = at[..., None] - self.nodes
        exact = diff == 0.0
        diff = np.where(exact, 1.0, diff)
        terms = self.u / diff
        num = np.sum(terms * np.asarray(values), axis=-1)
        den = np.sum(terms, axis=-1)
        out = num / den
        hit = exact.any(axis=-1)
        if np.any(hit):
            idx = exact.argmax(axis=-1)
            out = np.where(hit, np.asarray(values)[idx], out)
        return out


def _lobatto_boundary_log(n: int, alpha: float, beta: float) -> float:
    """log v at x = -1: 2^(a+b+1) (b+1) Gamma(b+1)^2 n! Gamma(n+a+2)
    / (Gamma(n+b+2) Gamma(n+a+b+3)), gamma ratios kept balanced."""
    from scipy.special import gammaln

    return (
        (alpha + beta + 1.0) * math.log(2.0)
        + math.log(beta + 1.0)
        + 2.0 * float(gammaln(beta + 1.0))
        - log_gamma_ratio(n + 1.0, beta + 1.0)
        - log_gamma_ratio(n + alpha + 2.0, beta + 1.0)
    )


def lobatto_rule(alpha: float, beta: float, n_interior: int,
                 policy: BranchPolicy | None = None, table=None) -> LobattoRule:
    """Lobatto rule for (1-x)^alpha (1+x)^beta with n_interior free nodes.

    Exact for polynomials of degree <= 2 n_interior + 1.
    """
    params = JacobiParams(n_interior, alpha, beta)
    inner = compute_rule(JacobiParams(n_interior, alpha + 1.0, beta + 1.0),
                         policy=policy, table=table)
    x = inner.nodes
    v = inner.weights / (1.0 - x * x)
    v_left = math.exp(_lobatto_boundary_log(n_interior, alpha, beta))
    v_right = math.exp(_lobatto_boundary_log(n_interior, beta, alpha))
    return LobattoRule(params=params, interior_nodes=x, interior_weights=v,
                       v_left=v_left, v_right=v_right)


def radau_rule(alpha: float, beta: float, n_interior: int,
               fixed_end: FixedEnd | str = FixedEnd.LEFT,
               policy: BranchPolicy | None = None, table=None) -> RadauRule:
    """Radau rule with one fixed endpoint; exact through degree 2 n_interior.

    The boundary weight closes the zeroth moment exactly (exactness on
    f = 1), which is one subtraction instead of a gamma-ratio product.
    """
    fixed_end = FixedEnd(fixed_end) if isinstance(fixed_end, str) else fixed_end
    params = JacobiParams(n_interior, alpha, beta)
    if fixed_end is FixedEnd.LEFT:
        inner = compute_rule(JacobiParams(n_interior, alpha, beta + 1.0),
                             policy=policy, table=table)
        v = inner.weights / (1.0 + inner.nodes)
    else:
        inner = compute_rule(JacobiParams(n_interior, alpha + 1.0, beta),
                             policy=policy, table=table)
        v = inner.weights / (1.0 - inner.nodes)
    mass = math.exp(log_total_mass(alpha, beta))
    v_boundary = mass - float(np.sum(v))
    return RadauRule(params=params, fixed_end=fixed_end,
                     interior_nodes=inner.nodes, interior_weights=v,
                     v_boundary=v_boundary)


def barycentric_weights(rule: QuadratureRule) -> BarycentricWeights:
    """u_i = (-1)^(i-1) sin(theta_i) sqrt(w_i), normalized to max |u| = 1.

    The global constant is free; the convention here makes u_1 positive.
    """
    n = rule.params.n
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    u = signs * np.sin(rule.theta) * np.sqrt(rule.weights)
    u = u / np.max(np.abs(u))
    return BarycentricWeights(nodes=rule.nodes.copy(), u=u)
