"""Endpoint-uniform (Bessel-type) expansion near x = 1.

Representation:

    P_n(cos t) = G/(sin(t/2)^a cos(t/2)^b) * sqrt(t/sin t) * W(t),
    W(t) = J_a(kappa t) S(t) + J_{a+1}(kappa t) T(t)/kappa,

valid uniformly for t in (0, pi - delta].  The k-th node from the right
sits at t = j_m/kappa + eps (j_m the m-th zero of J_a), with eps given by
the same inverse-series structure as the interior branch.  The coefficient
families S, T (value) and Y, Z (derivative) switch from closed forms to
entire small-t series below SMALL_THETA_CUT, where the closed forms start
cancelling.
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    Branch,
    DomainTooCloseToEndpoint,
    DomainTooCloseToLeftEnd,
    IndexOutOfRange,
    JacobiParams,
    ThetaNode,
)
from . import tables
from .besselfun import bessel_j_near_zero, bessel_zeros_parts, jv
from .elementary import g_front_factor
from .tables import SMALL_THETA_CUT


def _eval_switched(bound, closed_name, series_name, t, st, ct):
    """Evaluate one coefficient with the closed/series switch at the cut."""
    closed = bound.get(closed_name)
    ser = bound.get(series_name)
    t = np.asarray(t)
    if ser is None:
        return closed(t, st, ct)
    if closed is None:
        return ser(t, st)
    small = t < SMALL_THETA_CUT
    if not np.any(small):
        return closed(t, st, ct)
    if np.all(small):
        return ser(t, st)
    out = np.empty_like(t)
    out[small] = ser(t[small], st[small])
    big = ~small
    out[big] = closed(t[big], st[big], ct[big])
    return out


def _family_values(bound, prefix, t, st, ct, start, maxidx=None):
    """[F_start(t), F_start+1(t), ...] with the closed/series switch."""
    out = []
    idx = start
    while True:
        if maxidx is not None and idx > maxidx:
            break
        closed_name = f"bess.{prefix}.{idx}"
        series_name = f"sbess.{prefix}.{idx}"
        if (bound.get(closed_name) is None) and (bound.get(series_name) is None):
            break
        out.append(_eval_switched(bound, closed_name, series_name, t, st, ct))
        idx += 1
    return out


def coef_A1(alpha: float, beta: float, theta, table=None):
    """A_1(theta) = T_0(theta), the first endpoint-expansion coefficient.

    Closed form ((4a^2-1)(sin t - t cos t) + 2t(a^2-b^2)(cos t - 1))/(8 t sin t)
    above the cut, entire series below (no cancellation blow-up at small t).
    """
    table = table or tables.default_table()
    bound = table.bind(alpha, beta)
    t = np.asarray(theta, dtype=np.float64)
    out = _eval_switched(bound, "bess.T.0", "sbess.T.0", t, np.sin(t), np.cos(t))
    return float(out) if np.ndim(theta) == 0 else out


def _ST_values(bound, kappa, t, st, ct):
    """S(t), T(t) truncated at the table order."""
    ik2 = 1.0 / (kappa * kappa)
    S_terms = _family_values(bound, "S", t, st, ct, start=1)
    T_terms = _family_values(bound, "T", t, st, ct, start=0)
    S = np.zeros_like(t)
    for val in reversed(S_terms):
        S = (S + val) * ik2
    S = S + 1.0
    T = np.zeros_like(t)
    for val in reversed(T_terms):
        T = T * ik2 + val
    return S, T


def _YZ_values(bound, kappa, t, st, ct):
    """Y(t), Z(t) of the derivative representation."""
    ik2 = 1.0 / (kappa * kappa)
    Y_terms = _family_values(bound, "Y", t, st, ct, start=1)
    Z_terms = _family_values(bound, "Z", t, st, ct, start=0)
    Y = np.zeros_like(t)
    for val in reversed(Y_terms):
        Y = (Y + val) * ik2
    Y = Y + 1.0
    Z = np.zeros_like(t)
    for val in reversed(Z_terms):
        Z = Z * ik2 + val
    return Y, Z


def _near_zero_mask_eval(alpha, kt, j_hint=None):
    """J_alpha(kt) switching to the shifted series within 0.5 of a zero.

    j_hint, when given, is an array of known zeros paired with kt.
    """
    kt = np.asarray(kt, dtype=np.float64)
    if j_hint is None:
        # locate the nearest zero by inverting the leading phase
        m_near = np.maximum(1, np.rint(kt / np.pi - 0.5 * alpha + 0.25).astype(int))
        mmax = int(m_near.max())
        a, corr = bessel_zeros_parts(alpha, mmax)
        zeros = (a + corr)[m_near - 1]
    else:
        zeros = np.asarray(j_hint, dtype=np.float64)
    h = kt - zeros
    near = np.abs(h) <= 0.5
    out = np.empty_like(kt)
    if np.any(near):
        out[near] = np.atleast_1d(
            bessel_j_near_zero(alpha, zeros[near], h[near])
        )
    if np.any(~near):
        out[~near] = jv(alpha, kt[~near])
    return out


def eval_poly_bessel(params: JacobiParams, theta, table=None, delta=0.2):
    """P_n(cos theta) by the endpoint-uniform representation."""
    table = table or tables.default_table()
    t = np.asarray(theta, dtype=np.float64)
    if np.any(t <= 0.0) or np.any(t > np.pi - delta):
        raise DomainTooCloseToLeftEnd(
            "theta must lie in (0, pi - delta]; reflect for the other endpoint"
        )
    bound = table.bind(params.alpha, params.beta)
    kap = params.kappa
    a, b = params.alpha, params.beta
    st, ct = np.sin(t), np.cos(t)
    S, T = _ST_values(bound, kap, t, st, ct)
    kt = kap * t
    W = jv(a, kt) * S + jv(a + 1.0, kt) * T / kap
    pre = (
        g_front_factor(params)
        / (np.sin(t / 2) ** a * np.cos(t / 2) ** b)
        * np.sqrt(t / st)
    )
    out = pre * W
    return float(out) if np.ndim(theta) == 0 else out


def eval_U_derivative(params: JacobiParams, theta, table=None, delta=0.2,
                      j_hint=None):
    """dU/dtheta with U = sqrt(theta) W(theta):

        U' = -kappa sqrt(t) [J_{a+1}(kappa t) Y(t) - J_a(kappa t) Z(t)/(2 t kappa)]

    J_a is evaluated through the shifted near-zero series whenever kappa*t
    lies within 0.5 of one of its zeros (which is exactly the situation at
    a quadrature node).
    """
    table = table or tables.default_table()
    t = np.asarray(theta, dtype=np.float64)
    if np.any(t <= 0.0) or np.any(t > np.pi - delta):
        raise DomainTooCloseToLeftEnd(
            "theta must lie in (0, pi - delta]; reflect for the other endpoint"
        )
    bound = table.bind(params.alpha, params.beta)
    kap = params.kappa
    a = params.alpha
    st, ct = np.sin(t), np.cos(t)
    Y, Z = _YZ_values(bound, kap, t, st, ct)
    kt = kap * t
    Ja = _near_zero_mask_eval(a, kt, j_hint=j_hint)
    out = -kap * np.sqrt(t) * (jv(a + 1.0, kt) * Y - Ja * Z / (2.0 * t * kap))
    return float(out) if np.ndim(theta) == 0 else out


def nodes_bessel(params: JacobiParams, ms, table=None, delta=0.2):
    """Vectorized zero formula for Bessel indices ms (m = 1 is nearest x=1).

    Returns (theta, theta0, eps, x, j, tau): theta0 = j_m/kappa, x stable
    near the center through the split j = a + corr (tau = theta - pi/2 is
    assembled from pieces that are each accurate to rounding).
    """
    table = table or tables.default_table()
    bound = table.bind(params.alpha, params.beta)
    kap = params.kappa
    al, be = params.alpha, params.beta
    ms = np.asarray(ms, dtype=np.int64)
    if np.any(ms < 1) or np.any(ms > params.n):
        raise IndexOutOfRange("bessel node index out of range")
    mmax = int(ms.max())
    a_part, corr_part = bessel_zeros_parts(al, mmax)
    a_part = a_part[ms - 1]
    corr_part = corr_part[ms - 1]
    j = a_part + corr_part
    th0 = j / kap
    if np.any(th0 >= np.pi - delta):
        raise DomainTooCloseToEndpoint("theta0 beyond the uniform validity band")
    st0, ct0 = np.sin(th0), np.cos(th0)
    ik2 = 1.0 / (kap * kap)
    # theta_1 = T_0(theta0); higher corrections from the table
    ths = [_eval_switched(bound, "bess.T.0", "sbess.T.0", th0, st0, ct0)]
    idx = 2
    while True:
        name_c, name_s = f"bess.th.{idx}", f"sbess.th.{idx}"
        if bound.get(name_c) is None and bound.get(name_s) is None:
            break
        ths.append(_eval_switched(bound, name_c, name_s, th0, st0, ct0))
        idx += 1
    eps = np.zeros_like(th0)
    for val in reversed(ths):
        eps = (eps + val) * ik2
    theta = th0 + eps
    # tau = theta - pi/2 from exactly-representable pieces:
    # a_m - kappa pi/2 = pi (m - n/2 + (alpha - beta - 2)/4)
    tau_num = (ms - params.n / 2.0) + (al - be - 2.0) / 4.0
    tau = (tau_num * np.pi + corr_part) / kap + eps
    x = np.where(np.abs(tau) < 0.3, -np.sin(tau), np.cos(theta))
    return theta, th0, eps, x, j, tau


def node_bessel(params: JacobiParams, m: int, table=None) -> ThetaNode:
    """Node x_{n+1-m} (m-th from the right endpoint) as a ThetaNode."""
    if int(m) != m or not (1 <= m <= math.ceil(params.n / 2)):
        raise IndexOutOfRange(f"bessel index m={m} outside 1..ceil(n/2)")
    theta, th0, eps, x, _, _ = nodes_bessel(params, [int(m)], table=table)
    return ThetaNode(
        k=params.n + 1 - int(m), theta=float(theta[0]), theta0=float(th0[0]),
        eps=float(eps[0]), x=float(x[0]), branch=Branch.BESSEL_RIGHT,
    )
