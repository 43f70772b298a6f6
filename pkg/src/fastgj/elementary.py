"""Interior (trigonometric) expansion: polynomial values, the oscillatory
factor and its derivative, and the non-iterative zero formula.

The representation is

    P_n(cos t) = G/sqrt(pi kappa) * [cos(chi) U(x) - sin(chi) V(x)]
                 / (sin(t/2)^(a+1/2) cos(t/2)^(b+1/2)),
    chi = kappa t - (a/2 + 1/4) pi,   x = cos t,

with U, V even/odd series in 1/kappa.  Zeros sit near
theta0 = (n + 1 - k + a/2 - 1/4) pi / kappa, where cos(chi) vanishes; at
theta = theta0 + eps the phase argument reduces to kappa*eps, which is the
numerically stable way to evaluate the oscillatory factor (the direct
cos(chi) loses ~kappa/2^52 absolutely).
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    Branch,
    BranchMisuse,
    DomainTooCloseToEndpoint,
    JacobiParams,
    ThetaNode,
    log_front_factor_direct,
    log_gamma_ratio,
)
from . import tables

#: default exclusion zone of eval_poly_elementary
POLY_DELTA = 0.2

#: kappa above which the front factor uses the w-series
FRONT_FACTOR_SERIES_MIN_KAPPA = 30.0

#: half-width of the near-pi/2 window using the x = -sin(tau + eps) form
CENTER_WINDOW = 0.3


def default_theta_switch(kappa: float) -> float:
    """Interior-branch boundary: distance from the endpoint in theta."""
    return max(0.55, 12.0 / kappa)


def g_front_factor(params: JacobiParams) -> float:
    """Front factor G = Gamma(n+alpha+1)/(n! kappa^alpha).

    For kappa >= 30 the expansion in w = kappa - beta/2,

        G ~ (w/kappa)^alpha * sum_m C_m(rho) (-alpha)_{2m} / w^(2m),
        rho = (alpha+1)/2,

    keeps the evaluation at the few-ulp level (it terminates exactly for
    integer alpha); below that the direct gamma-ratio route is accurate.
    """
    a, b = params.alpha, params.beta
    kap = params.kappa
    if kap < FRONT_FACTOR_SERIES_MIN_KAPPA:
        return math.exp(log_front_factor_direct(params))
    from .core import _C_POLYS

    w = kap - 0.5 * b
    rho = 0.5 * (a + 1.0)
    acc = 0.0
    poch = 1.0
    wpow = 1.0
    w2 = w * w
    for m, cpoly in enumerate(_C_POLYS):
        if m > 0:
            poch *= (-a + 2 * m - 2) * (-a + 2 * m - 1)
            wpow *= w2
            if poch == 0.0:
                break
        acc += cpoly(rho) * poch / wpow
    return math.exp(a * math.log1p(-0.5 * b / kap)) * acc


def theta0_elementary(params: JacobiParams, k):
    """Leading approximation of the k-th zero angle (phase zero of cos chi)."""
    k = np.asarray(k, dtype=np.float64)
    return (params.n + 1.0 - k + 0.5 * params.alpha - 0.25) * np.pi / params.kappa


def _uv_series(bound, c, s, kappa):
    """U(x), V(x) from the bound table at x = cos(theta)."""
    ik2 = 1.0 / (kappa * kappa)
    u_list = bound.family("elem.u", start=1)
    v_list = bound.family("elem.v", start=0)
    U = np.zeros_like(c)
    for fn in reversed(u_list):
        U = (U + fn(c, s)) * ik2
    U = U + 1.0
    V = np.zeros_like(c)
    for fn in reversed(v_list):
        V = (V + fn(c, s)) * ik2
    V = V * kappa                # lowest term v_1/kappa
    return U, V


def _mn_series(bound, c, s, kappa):
    """M(x), N(x) of the derivative factor W' = -kappa (sin chi M + cos chi N)."""
    ik2 = 1.0 / (kappa * kappa)
    m_list = bound.family("elem.M", start=1)
    n_list = bound.family("elem.N", start=0)
    M = np.zeros_like(c)
    for fn in reversed(m_list):
        M = (M + fn(c, s)) * ik2
    M = M + 1.0
    N = np.zeros_like(c)
    for fn in reversed(n_list):
        N = (N + fn(c, s)) * ik2
    N = N * kappa
    return M, N


def eval_W_shifted(params: JacobiParams, k, eps, table=None):
    """(W, dW/dtheta) at theta = theta0(k) + eps via the reduced phase.

    cos(chi) = (-1)^(n-k+1) sin(kappa*eps) and
    sin(chi) = (-1)^(n-k) cos(kappa*eps): the trig arguments stay O(1/kappa)
    instead of O(kappa).  Vectorized over k, eps.
    """
    table = table or tables.default_table()
    bound = table.bind(params.alpha, params.beta)
    kap = params.kappa
    k_arr = np.asarray(k, dtype=np.int64)
    eps_arr = np.asarray(eps, dtype=np.float64)
    theta = theta0_elementary(params, k_arr) + eps_arr
    c, s = np.cos(theta), np.sin(theta)
    U, V = _uv_series(bound, c, s, kap)
    M, N = _mn_series(bound, c, s, kap)
    h = kap * eps_arr
    if np.any(np.abs(h) > np.pi + 0.1):
        raise ValueError("phase argument kappa*eps out of the reduced range")
    sgn = np.where((params.n - k_arr) % 2 == 0, 1.0, -1.0)
    cos_chi = -sgn * np.sin(h)
    sin_chi = sgn * np.cos(h)
    W = cos_chi * U - sin_chi * V
    dW = -kap * (sin_chi * M + cos_chi * N)
    if np.ndim(k) == 0 and np.ndim(eps) == 0:
        return float(W), float(dW)
    return W, dW


def eval_poly_elementary(params: JacobiParams, theta, table=None, delta=POLY_DELTA):
    """P_n(cos theta) for theta in [delta, pi - delta] (direct phase)."""
    table = table or tables.default_table()
    theta_arr = np.asarray(theta, dtype=np.float64)
    if np.any((theta_arr < delta) | (theta_arr > np.pi - delta)):
        raise DomainTooCloseToEndpoint(
            f"theta must lie in [{delta}, pi - {delta}] for the interior expansion"
        )
    bound = table.bind(params.alpha, params.beta)
    kap = params.kappa
    a, b = params.alpha, params.beta
    c, s = np.cos(theta_arr), np.sin(theta_arr)
    U, V = _uv_series(bound, c, s, kap)
    chi = kap * theta_arr - (0.5 * a + 0.25) * np.pi
    pre = (
        g_front_factor(params)
        / np.sqrt(np.pi * kap)
        / (np.sin(theta_arr / 2) ** (a + 0.5) * np.cos(theta_arr / 2) ** (b + 0.5))
    )
    out = pre * (np.cos(chi) * U - np.sin(chi) * V)
    return float(out) if out.ndim == 0 else out


def nodes_elementary(params: JacobiParams, ks, table=None, band=None):
    """Vectorized zero formula for indices `ks` (theta0 inside the band).

    Returns (theta, theta0, eps, x, tau); x uses the reduced form
    x = -sin(tau) near the center, with tau = theta - pi/2 assembled
    without cancellation.
    """
    table = table or tables.default_table()
    bound = table.bind(params.alpha, params.beta)
    kap = params.kappa
    ks = np.asarray(ks, dtype=np.float64)
    th0 = theta0_elementary(params, ks)
    if band is not None:
        lo, hi = band
        if np.any((th0 < lo) | (th0 > hi)):
            raise BranchMisuse("theta0 outside the interior validity band")
    c0, s0 = np.cos(th0), np.sin(th0)
    ik2 = 1.0 / (kap * kap)
    eps = np.zeros_like(th0)
    for fn in reversed(bound.family("elem.th", start=1)):
        eps = (eps + fn(c0, s0)) * ik2
    theta = th0 + eps
    # tau = theta0 - pi/2 assembled from exactly-representable pieces
    tau_num = (params.n + 1.0 - ks - params.n / 2.0) + (
        0.5 * params.alpha - 0.25 - (params.alpha + params.beta + 1.0) / 4.0
    )
    tau = tau_num * np.pi / kap
    x = np.where(
        np.abs(tau) < CENTER_WINDOW,
        -np.sin(tau + eps),
        np.cos(theta),
    )
    tau_full = tau + eps
    if params.alpha == params.beta and params.n % 2 == 1:
        # antisymmetry pins the middle node at the origin exactly
        center = ks == (params.n + 1) // 2
        if np.any(center):
            x = np.where(center, 0.0, x)
            theta = np.where(center, 0.5 * np.pi, theta)
            tau_full = np.where(center, 0.0, tau_full)
    return theta, th0, eps, x, tau_full


def node_elementary(params: JacobiParams, k: int, table=None, band=None) -> ThetaNode:
    """Single-node form of `nodes_elementary` (ascending index k in 1..n)."""
    if int(k) != k or not (1 <= k <= params.n):
        raise BranchMisuse(f"node index {k} outside 1..{params.n}")
    if band is None:
        sw = default_theta_switch(params.kappa)
        band = (sw, np.pi - sw)
    theta, th0, eps, x, _ = nodes_elementary(params, [int(k)], table=table, band=band)
    return ThetaNode(
        k=int(k), theta=float(theta[0]), theta0=float(th0[0]),
        eps=float(eps[0]), x=float(x[0]), branch=Branch.ELEMENTARY,
    )
