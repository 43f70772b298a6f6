"""Rule assembly: branch selection, weights, refinement, fallback.

Positive-x nodes are computed directly (endpoint-uniform branch below the
switching angle, interior branch above it, with an online truncation-error
estimate that can hand individual nodes to the uniform branch when the
interior series is not pulling its weight); negative-x nodes come from the
reflected (beta, alpha) problem.  Weights go through the scaled form
omega = (du/dtheta)^-2, assembled in log space.

Small degrees and parameter corners where the expansions cannot reach
full precision run through the recurrence + Newton path instead; its
seeds still come from the asymptotic formulas.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import tables
from .besselexp import (
    _family_values,
    _near_zero_mask_eval,
    _YZ_values,
    nodes_bessel,
)
from .besselfun import jv
from .core import (
    Branch,
    JacobiParams,
    QuadratureRule,
    ThetaNodes,
    gauss_mass_constant,
    log_front_factor_direct,
    reflect,
)
from .elementary import (
    _mn_series,
    _uv_series,
    default_theta_switch,
    g_front_factor,
    nodes_elementary,
    theta0_elementary,
)

#: interior-branch truncation-error target when re-routing nodes (relative x)
ELEM_REROUTE_TOL = 2.0e-15

#: the asymptotic path is trusted when kappa >= max(of these two) ...
ASYM_MIN_KAPPA = 20.0
ASYM_PARAM_FACTOR = 10.0 / 3.0     # ... and kappa >= factor * (alpha^2 + beta^2)


@dataclass
class BranchPolicy:
    """Branch boundaries and refinement switches for one rule build.

    `theta_switch_nodes`/`theta_switch_weights` are distances from the
    x = +1 endpoint in theta; None means the degree-dependent default.
    `method` forces a single evaluation path ('elementary', 'bessel',
    'recurrence') instead of 'auto'.
    """

    theta_switch_nodes: float | None = None
    theta_switch_weights: float | None = None
    newton_refine: bool = False
    small_n_cutoff: int = 20
    method: str = "auto"

    def __post_init__(self):
        if self.small_n_cutoff < 2:
            raise ValueError("small_n_cutoff must be >= 2")
        for name in ("theta_switch_nodes", "theta_switch_weights"):
            val = getattr(self, name)
            if val is not None and not (0.0 < val < np.pi / 2):
                raise ValueError(f"{name} must lie in (0, pi/2)")
        if self.method not in ("auto", "elementary", "bessel", "recurrence"):
            raise ValueError(f"unknown method {self.method!r}")

    def node_switch(self, kappa: float) -> float:
        if self.theta_switch_nodes is not None:
            return self.theta_switch_nodes
        return default_theta_switch(kappa)

    def weight_switch(self, kappa: float) -> float:
        if self.theta_switch_weights is not None:
            return self.theta_switch_weights
        if kappa < 60.0:
            # the uniform-branch derivative families carry small degrees
            # whole; the trig families' truncation bias would dominate
            return 2.0
        # pi/4 at kappa ~ 100, shrinking toward a 0.35 floor for larger n
        return max(0.35, min(math.pi / 4, 79.0 / kappa))


def _use_recurrence(params: JacobiParams, policy: BranchPolicy) -> bool:
    if policy.method == "recurrence":
        return True
    if policy.method in ("elementary", "bessel"):
        return False
    if params.n < policy.small_n_cutoff:
        return True
    if max(params.alpha, params.beta) > 6.0:
        return True      # the zero machinery is order-bounded
    a2b2 = params.alpha**2 + params.beta**2
    return params.kappa < max(ASYM_MIN_KAPPA, ASYM_PARAM_FACTOR * a2b2)


#: the fallback path runs the recurrence in extended precision up to this
#: degree (where supported); beyond it the plain double path is accurate
#: enough relative to its own truncation role
RECURRENCE_LONGDOUBLE_MAX_N = 400

#: newton_refine steps on the recurrence value instead of the branch
#: expansions up to this degree (the expansions' own truncation would cap
#: the refined accuracy there)
REFINE_RECURRENCE_MAX_N = 40


def eval_recurrence(params: JacobiParams, x, dtype=np.float64):
    """(P_n, P_{n-1}) at x by the forward three-term recurrence (vectorized)."""
    a, b = dtype(params.alpha), dtype(params.beta)
    one, two = dtype(1), dtype(2)
    x = np.asarray(x, dtype=dtype)
    p_prev = np.ones_like(x)
    p = (a - b) / two + (a + b + two) * x / two
    if params.n == 0:
        return p_prev, np.zeros_like(x)
    for k in range(1, params.n):
        kk = dtype(k)
        den = two * (kk + one) * (kk + a + b + one)
        a_k = (two * kk + a + b + one) * (two * kk + a + b + two) / den
        b_k = (a * a - b * b) * (two * kk + a + b + one) / (den * (two * kk + a + b))
        c_k = (
            (kk + a) * (kk + b) * (two * kk + a + b + two)
            / ((kk + one) * (kk + a + b + one) * (two * kk + a + b))
        )
        p, p_prev = (a_k * x + b_k) * p - c_k * p_prev, p
    return p, p_prev


def recurrence_derivative(params: JacobiParams, x, pn, pnm1):
    """P_n'(x) from (P_n, P_{n-1}): first-derivative relation."""
    n, a, b = params.n, params.alpha, params.beta
    g = 2.0 * n + a + b
    return (n * (a - b - g * x) * pn + 2.0 * (n + a) * (n + b) * pnm1) / (
        g * (1.0 - x * x)
    )


# ----------------------------------------------------------------------
# node assembly
# ----------------------------------------------------------------------

def _khalf(params: JacobiParams) -> int:
    """Smallest direct index: k >= khalf covers theta <= pi/2 + O(1/kappa)."""
    return int(math.ceil(params.n / 2 + 0.25 + (params.alpha - params.beta) / 4))


def _half_nodes(params: JacobiParams, k_lo: int, policy, bound_table):
    """Direct nodes k = k_lo..n of `params` (positive-x half plus margin).

    Returns dict of arrays: k, theta, theta0, eps, x, branch, j (nan where
    the interior branch was used).
    """
    n = params.n
    kap = params.kappa
    ks = np.arange(k_lo, n + 1, dtype=np.int64)
    th_guess = theta0_elementary(params, ks)
    sw = policy.node_switch(kap)
    if policy.method == "elementary":
        elem_mask = np.ones_like(th_guess, dtype=bool)
    elif policy.method == "bessel":
        elem_mask = np.zeros_like(th_guess, dtype=bool)
    else:
        elem_mask = th_guess >= sw

    out_theta = np.empty(ks.size)
    out_th0 = np.empty(ks.size)
    out_eps = np.empty(ks.size)
    out_x = np.empty(ks.size)
    out_tau = np.empty(ks.size)
    out_j = np.full(ks.size, np.nan)
    branch = np.full(ks.size, Branch.BESSEL_RIGHT, dtype=np.int8)

    if np.any(elem_mask):
        ks_e = ks[elem_mask]
        theta, th0, eps, x, tau = nodes_elementary(params, ks_e, table=bound_table)
        can_reroute = bound_table.max_order("bess.th") >= 2 if isinstance(
            bound_table, tables.CoefficientTable) else True
        if policy.method == "auto" and can_reroute:
            # online truncation estimate: geometric extrapolation of the
            # last two correction terms, amplified to relative-x units
            bad = _elementary_overreach(params, bound_table, th0, eps, x)
            if np.any(bad):
                idx = np.flatnonzero(elem_mask)[bad]
                elem_mask[idx] = False
                keep = ~bad
                theta, th0, eps = theta[keep], th0[keep], eps[keep]
                x, tau = x[keep], tau[keep]
        sel = elem_mask
        out_theta[sel] = theta
        out_th0[sel] = th0
        out_eps[sel] = eps
        out_x[sel] = x
        out_tau[sel] = tau
        branch[sel] = Branch.ELEMENTARY

    bess_mask = ~elem_mask
    if np.any(bess_mask):
        ms = (n + 1 - ks[bess_mask]).astype(np.int64)
        theta, th0, eps, x, j, tau = nodes_bessel(params, ms, table=bound_table)
        out_theta[bess_mask] = theta
        out_th0[bess_mask] = th0
        out_eps[bess_mask] = eps
        out_x[bess_mask] = x
        out_tau[bess_mask] = tau
        out_j[bess_mask] = j

    return {
        "k": ks, "theta": out_theta, "theta0": out_th0, "eps": out_eps,
        "x": out_x, "branch": branch, "j": out_j, "tau": out_tau,
    }


#: never hand nodes closer to the center than this to the uniform branch:
#: its zeros carry O(ulp(j)) location noise that tiny |x| would amplify,
#: while the interior theta0 is exact there
BESSEL_REROUTE_MAX_THETA = 1.2


def _elementary_overreach(params, table, th0, eps, x):
    """Mask of nodes whose interior-series truncation exceeds the target."""
    bound = table.bind(params.alpha, params.beta) if isinstance(
        table, tables.CoefficientTable
    ) else table
    kap = params.kappa
    c0, s0 = np.cos(th0), np.sin(th0)
    fam = bound.family("elem.th", start=1)
    if len(fam) < 2:
        return np.zeros_like(th0, dtype=bool)
    t_last = fam[-1](c0, s0) / kap ** (2 * len(fam))
    t_prev = fam[-2](c0, s0) / kap ** (2 * (len(fam) - 1))
    ratio = np.abs(t_last) / np.maximum(np.abs(t_prev), 1e-300)
    est_next = np.abs(t_last) * np.minimum(ratio, 4.0)
    rel_x = est_next * s0 / np.maximum(np.abs(x), 1e-30)
    bad = (rel_x > ELEM_REROUTE_TOL) | (ratio > 1.0)
    return bad & (th0 < BESSEL_REROUTE_MAX_THETA)


def compute_nodes(params: JacobiParams, policy: BranchPolicy | None = None,
                  table=None) -> ThetaNodes:
    """All n nodes ascending in x, with branch provenance."""
    policy = policy or BranchPolicy()
    table = table or tables.default_table()
    if _use_recurrence(params, policy):
        return _recurrence_nodes(params, policy, table)
    khalf = _khalf(params)
    direct = _half_nodes(params, khalf, policy, table)

    swapped = params.swapped()
    k_lo_sw = params.n + 2 - khalf
    mirrored = _half_nodes(swapped, k_lo_sw, policy, table)
    mirror_nodes = ThetaNodes(
        params=swapped, k=mirrored["k"], theta=mirrored["theta"],
        theta0=mirrored["theta0"], eps=mirrored["eps"], x=mirrored["x"],
        branch=mirrored["branch"],
    )
    mirror_nodes.tau = mirrored["tau"]
    left = reflect(params, mirror_nodes)

    nodes = ThetaNodes(
        params=params,
        k=np.concatenate([left.k, direct["k"]]),
        theta=np.concatenate([left.theta, direct["theta"]]),
        theta0=np.concatenate([left.theta0, direct["theta0"]]),
        eps=np.concatenate([left.eps, direct["eps"]]),
        x=np.concatenate([left.x, direct["x"]]),
        branch=np.concatenate([left.branch, direct["branch"]]),
    )
    nodes.j = np.concatenate([mirrored["j"][::-1], direct["j"]])
    nodes.tau = np.concatenate([left.tau, direct["tau"]])
    if nodes.k.size != params.n or not np.all(np.diff(nodes.k) == 1):
        raise RuntimeError("node index assembly is inconsistent")
    if policy.newton_refine:
        nodes = newton_refine(params, nodes, policy=policy, table=table)
    return nodes


# ----------------------------------------------------------------------
# weights
# ----------------------------------------------------------------------

def _weights_elementary_frame(params, bound, k, eps, theta, logM):
    """omega for nodes in their own (unreflected) frame, interior branch.

    The reduced phase needs the offset from the interior-branch theta0, so
    it is recomputed from theta here (nodes may carry the other branch's
    eps); the O(ulp) loss in the subtraction is harmless at W' scale.
    """
    kap = params.kappa
    c, s = np.cos(theta), np.sin(theta)
    M, N = _mn_series(bound, c, s, kap)
    h = kap * (theta - theta0_elementary(params, k))
    sgn = np.where((params.n - k) % 2 == 0, 1.0, -1.0)
    cos_chi = -sgn * np.sin(h)
    sin_chi = sgn * np.cos(h)
    # W' = -kappa (sin(chi) M + cos(chi) N); omega = pi kappa M_c / (G^2 W'^2)
    d = sin_chi * M + cos_chi * N
    log_pre = (
        math.log(math.pi) + logM - math.log(kap)
        - 2.0 * _log_G(params)
    )
    return np.exp(log_pre) / (d * d)


def _log_G(params):
    kap = params.kappa
    if kap >= 30.0:
        return math.log(g_front_factor(params))
    return log_front_factor_direct(params)


def _weights_bessel_frame(params, bound, theta, j, logM):
    """omega for nodes in their own frame, endpoint-uniform branch."""
    kap = params.kappa
    a = params.alpha
    t = theta
    st, ct = np.sin(t), np.cos(t)
    Y, Z = _YZ_values(bound, kap, t, st, ct)
    kt = kap * t
    Ja = _near_zero_mask_eval(a, kt, j_hint=j)
    Up = -kap * np.sqrt(t) * (jv(a + 1.0, kt) * Y - Ja * Z / (2.0 * t * kap))
    log_pre = math.log(2.0) + logM - 2.0 * _log_G(params)
    return np.exp(log_pre) / (Up * Up)


def compute_weights(params: JacobiParams, nodes: ThetaNodes,
                    policy: BranchPolicy | None = None, table=None):
    """(weights, scaled_weights) for a computed node set.

    The scaled weight omega = (du/dtheta)^-2 comes from the derivative
    expansion of the branch selected by theta_switch_weights (evaluated in
    the node's own frame); w recovers from omega through the half-angle
    power factors, combined in log space.
    """
    policy = policy or BranchPolicy()
    table = table or tables.default_table()
    if np.any(nodes.branch == Branch.RECURRENCE):
        return _recurrence_weights(params, nodes)
    kap = params.kappa
    n = params.n
    logM = gauss_mass_constant(params)
    sw_w = policy.weight_switch(kap)

    omega = np.empty(n)
    reflected = (nodes.branch == Branch.REFLECTED_ELEMENTARY) | (
        nodes.branch == Branch.REFLECTED_BESSEL
    )
    swapped = params.swapped()
    bound_d = table.bind(params.alpha, params.beta)
    bound_r = table.bind(swapped.alpha, swapped.beta)

    j_all = nodes.j if nodes.j is not None else np.full(n, np.nan)
    for frame_params, bound, mask in (
        (params, bound_d, ~reflected),
        (swapped, bound_r, reflected),
    ):
        if not np.any(mask):
            continue
        theta_f = np.where(reflected, np.pi - nodes.theta, nodes.theta)[mask]
        eps_f = np.where(reflected, -nodes.eps, nodes.eps)[mask]
        k_f = np.where(reflected, n + 1 - nodes.k, nodes.k)[mask]
        j_f = j_all[mask]
        use_elem = theta_f >= sw_w
        om = np.empty(theta_f.size)
        if np.any(use_elem):
            om[use_elem] = _weights_elementary_frame(
                frame_params, bound, k_f[use_elem], eps_f[use_elem],
                theta_f[use_elem], logM,
            )
        if np.any(~use_elem):
            om[~use_elem] = _weights_bessel_frame(
                frame_params, bound, theta_f[~use_elem],
                j_f[~use_elem], logM,
            )
        omega[mask] = om

    a, b = params.alpha, params.beta
    half = 0.5 * nodes.theta
    logw = (
        np.log(omega)
        + (2.0 * a + 1.0) * np.log(np.sin(half))
        + (2.0 * b + 1.0) * np.log(np.cos(half))
    )
    return np.exp(logw), omega


# ----------------------------------------------------------------------
# Newton refinement and the recurrence path
# ----------------------------------------------------------------------

def newton_refine(params: JacobiParams, nodes: ThetaNodes,
                  policy: BranchPolicy | None = None, table=None) -> ThetaNodes:
    """One Newton step in theta on each node's own oscillatory function.

    For n below the small-n cutoff the recurrence value/derivative is used
    instead of the branch expansions.  Steps larger than half the local
    node gap are clamped and flagged (`refine_risk` on the result).
    """
    policy = policy or BranchPolicy()
    table = table or tables.default_table()
    n = params.n
    theta = nodes.theta.copy()

    # small degrees step on the recurrence: it is both cheaper there and
    # free of the expansions' own truncation, so one step lands at the
    # rounding level
    if n <= REFINE_RECURRENCE_MAX_N or np.any(nodes.branch == Branch.RECURRENCE):
        step = _recurrence_newton_step(params, theta, x=nodes.x)
    else:
        step = np.zeros(n)
        reflected = (nodes.branch == Branch.REFLECTED_ELEMENTARY) | (
            nodes.branch == Branch.REFLECTED_BESSEL
        )
        swapped = params.swapped()
        for frame_params, mask in ((params, ~reflected), (swapped, reflected)):
            if not np.any(mask):
                continue
            bound = table.bind(frame_params.alpha, frame_params.beta)
            theta_f = np.where(reflected, np.pi - theta, theta)[mask]
            eps_f = np.where(reflected, -nodes.eps, nodes.eps)[mask]
            k_f = np.where(reflected, n + 1 - nodes.k, nodes.k)[mask]
            elem = (nodes.branch[mask] == Branch.ELEMENTARY) | (
                nodes.branch[mask] == Branch.REFLECTED_ELEMENTARY
            )
            sub = np.zeros(theta_f.size)
            if np.any(elem):
                sub[elem] = _elementary_newton_step(
                    frame_params, bound, k_f[elem], eps_f[elem])
            if np.any(~elem):
                j_all = nodes.j if nodes.j is not None else np.full(n, np.nan)
                j_f = j_all[mask]
                sub[~elem] = _bessel_newton_step(
                    frame_params, bound, theta_f[~elem], j_f[~elem])
            # frame step maps to -step under reflection
            step[mask] = np.where(reflected[mask], -sub, sub)

    gaps = np.empty(n)
    dif = np.abs(np.diff(theta))
    gaps[:-1] = dif
    gaps[-1] = dif[-1] if n > 1 else np.pi
    gaps[1:] = np.minimum(gaps[1:], dif)
    limit = 0.5 * gaps
    risk = np.abs(step) > limit
    if np.any(risk):
        step = np.clip(step, -limit, limit)
        warnings.warn("newton_refine clamped steps: bad seeds", RuntimeWarning)

    out = ThetaNodes(
        params=params, k=nodes.k, theta=theta + step,
        theta0=nodes.theta0, eps=nodes.eps + np.where(
            (nodes.branch == Branch.REFLECTED_ELEMENTARY)
            | (nodes.branch == Branch.REFLECTED_BESSEL), -step, step),
        x=_stable_x_update(nodes, step),
        branch=nodes.branch,
    )
    out.j = nodes.j
    if nodes.tau is not None:
        out.tau = nodes.tau + step
    out.refine_risk = risk
    return out


def _stable_x_update(nodes, step):
    """x after a small theta step, avoiding cancellation near x = 0."""
    if nodes.tau is not None:
        tau_new = nodes.tau + step
        return np.where(
            np.abs(tau_new) < 0.3,
            -np.sin(tau_new),
            nodes.x * np.cos(step) - np.sin(nodes.theta) * np.sin(step),
        )
    # cos(theta + d) = x cos d - sin(theta) sin d; for small d this is
    # accurate as an update (d is at most a node-gap fraction)
    return nodes.x * np.cos(step) - np.sin(nodes.theta) * np.sin(step)


def _elementary_newton_step(params, bound, k, eps):
    kap = params.kappa
    theta = theta0_elementary(params, k) + eps
    c, s = np.cos(theta), np.sin(theta)
    U, V = _uv_series(bound, c, s, kap)
    M, N = _mn_series(bound, c, s, kap)
    h = kap * eps
    sgn = np.where((params.n - k) % 2 == 0, 1.0, -1.0)
    cos_chi = -sgn * np.sin(h)
    sin_chi = sgn * np.cos(h)
    W = cos_chi * U - sin_chi * V
    dW = -kap * (sin_chi * M + cos_chi * N)
    return -W / dW


def _bessel_newton_step(params, bound, theta, j):
    kap = params.kappa
    a = params.alpha
    t = theta
    st, ct = np.sin(t), np.cos(t)
    from .besselexp import _ST_values

    S, T = _ST_values(bound, kap, t, st, ct)
    Y, Z = _YZ_values(bound, kap, t, st, ct)
    kt = kap * t
    Ja = _near_zero_mask_eval(a, kt, j_hint=j)
    J1 = jv(a + 1.0, kt)
    U = np.sqrt(t) * (Ja * S + J1 * T / kap)
    Up = -kap * np.sqrt(t) * (J1 * Y - Ja * Z / (2.0 * t * kap))
    return -U / Up


def _recurrence_newton_step(params, theta, x=None):
    """Newton increment in theta; when the caller supplies the (stably
    computed) node abscissae the step is measured from exactly those."""
    dtype = np.longdouble if params.n <= RECURRENCE_LONGDOUBLE_MAX_N else np.float64
    x = np.cos(theta.astype(dtype)) if x is None else x.astype(dtype)
    pn, pnm1 = eval_recurrence(params, x, dtype=dtype)
    dp = recurrence_derivative(params, x, pn, pnm1)
    return (pn / (np.sin(theta.astype(dtype)) * dp)).astype(np.float64)


def _seed_thetas(params: JacobiParams, policy, table):
    """Ordered theta seeds for the recurrence path.

    Inside the zero machinery's order bound the asymptotic node formulas
    seed directly; for larger exponents the raw large-index zero estimates
    stand in near the endpoints (clamped Newton absorbs their error).
    """
    n = params.n
    if max(params.alpha, params.beta) <= 6.0:
        seed_policy = BranchPolicy(
            theta_switch_nodes=policy.theta_switch_nodes,
            theta_switch_weights=policy.theta_switch_weights,
            newton_refine=False,
            small_n_cutoff=policy.small_n_cutoff,
            method="auto",
        )
        khalf = _khalf(params)
        direct = _half_nodes(params, khalf, seed_policy, table)
        mirrored = _half_nodes(params.swapped(), n + 2 - khalf, seed_policy,
                               table)
        return np.concatenate([(np.pi - mirrored["theta"])[::-1],
                               direct["theta"]])
    from .besselfun import bessel_zero_seeds

    kap = params.kappa
    khalf = _khalf(params)
    theta = theta0_elementary(params, np.arange(1, n + 1))
    mmax_r = n + 1 - khalf
    right = bessel_zero_seeds(params.alpha, mmax_r) / kap
    theta[n - mmax_r:] = right[::-1]
    left = np.pi - bessel_zero_seeds(params.beta, khalf - 1) / kap
    theta[: khalf - 1] = left
    return np.sort(theta)[::-1]


def _recurrence_nodes(params: JacobiParams, policy, table) -> ThetaNodes:
    """Safeguarded Newton on the recurrence from asymptotic seeds."""
    theta = _seed_thetas(params, policy, table)
    n = params.n
    for it in range(24):
        step = _recurrence_newton_step(params, theta)
        # clamp to a fraction of the local gap: ordered seeds stay ordered
        gaps = np.empty(n)
        if n > 1:
            dif = np.abs(np.diff(theta))
            gaps[:-1] = dif
            gaps[-1] = dif[-1]
            gaps[1:] = np.minimum(gaps[1:], dif)
        else:
            gaps[:] = np.pi / 2
        limit = 0.4 * gaps
        step = np.clip(step, -limit, limit)
        theta = theta + step
        if np.max(np.abs(step)) < 1e-15:
            break
    # one more plain step to settle rounding
    step = _recurrence_newton_step(params, theta)
    theta = theta + step
    x = np.cos(theta)
    return ThetaNodes(
        params=params,
        k=np.arange(1, n + 1, dtype=np.int64),
        theta=theta,
        theta0=theta,
        eps=np.zeros(n),
        x=x,
        branch=np.full(n, Branch.RECURRENCE, dtype=np.int8),
    )


def _recurrence_weights(params: JacobiParams, nodes: ThetaNodes):
    logM = gauss_mass_constant(params)
    x = nodes.x
    dtype = np.longdouble if params.n <= RECURRENCE_LONGDOUBLE_MAX_N else np.float64
    pn, pnm1 = eval_recurrence(params, x, dtype=dtype)
    dp = recurrence_derivative(params, x.astype(dtype), pn, pnm1).astype(np.float64)
    logw = logM - np.log1p(-x * x) - 2.0 * np.log(np.abs(dp))
    a, b = params.alpha, params.beta
    half = 0.5 * nodes.theta
    logom = logw - (2.0 * a + 1.0) * np.log(np.sin(half)) \
        - (2.0 * b + 1.0) * np.log(np.cos(half))
    return np.exp(logw), np.exp(logom)


def compute_rule(params: JacobiParams, policy: BranchPolicy | None = None,
                 table=None) -> QuadratureRule:
    """Complete quadrature rule under the given policy."""
    policy = policy or BranchPolicy()
    table = table or tables.default_table()
    nodes = compute_nodes(params, policy=policy, table=table)
    w, om = compute_weights(params, nodes, policy=policy, table=table)
    return QuadratureRule(
        params=params, nodes=nodes.x.copy(), weights=w, scaled_weights=om,
        theta=nodes.theta.copy(), branch_log=nodes.branch.copy(),
    )


def gauss_jacobi(n: int, alpha: float, beta: float, **kwargs) -> QuadratureRule:
    """Convenience front door: rule for the weight (1-x)^alpha (1+x)^beta."""
    return compute_rule(JacobiParams(n, alpha, beta), **kwargs)
