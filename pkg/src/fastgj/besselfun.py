"""Bessel J evaluation, its zeros, and stable evaluation near a zero.

The quadrature weights need J_nu(kappa * theta) at arguments that sit a
distance O(1/kappa) from a zero j of J_nu.  Standard routines lose relative
accuracy there; the shifted series

    J_nu(u + h) = lam^nu * sum_m f_m,   lam = 1 + h/u,
    w = -h (2u + h)/(2u),  f_0 = J_nu(u) (= 0 at a zero),
    f_1 = w J_{nu+1}(u),
    m (m+1) f_{m+1} = (2 m (nu+m) w / u) f_m - w^2 f_{m-1},

recovers it to full precision because the vanishing leading term removes
the cancellation.  Zeros come from the large-index expansion with
mu = 4 nu^2, a = (m + nu/2 - 1/4) pi,

    j ~ a - (mu-1)/(8a) - 4(mu-1)(7mu-31)/(3(8a)^3)
          - 32(mu-1)(83mu^2 - 982mu + 3779)/(15(8a)^5),

Newton-polished for the first few indices where the expansion alone is not
at the 1e-14 level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import jv

from .core import IndexOutOfRange, NotAZero

#: zeros with index above this use the large-index expansion unpolished
FIRST_ZEROS_POLISHED = 10

#: default truncation bound of the near-zero series
NEAR_ZERO_MAX_TERMS = 30


@dataclass(frozen=True)
class BesselZero:
    """One positive zero j_{nu,m} of J_nu."""

    nu: float
    m: int
    j: float


#: scalar arguments below this go through the backward-recurrence route;
#: its noise grows like z ulps, so it beats the library only at moderate z
MILLER_MAX_Z = 50.0


def _miller_jv(nu, z):
    """J_nu(z) by backward recurrence with the fractional-order sum

        (z/2)^b = sum_k (b + 2k) Gamma(b + k)/k! J_{b+2k}(z),  b = frac(nu),

    normalizing the downward-recursed sequence.  Scalar, z > 0, nu > -1.
    """
    from scipy.special import gammaln as _gln

    base = nu - math.floor(nu)           # in [0, 1)
    if nu < 0.0:
        base = nu                        # single step, base in (-1, 0)
    offset = int(round(nu - base))
    K = int(z + 1.5 * (abs(nu) + 1) + 40 + 10.0 * z ** 0.4)
    if K % 2:
        K += 1
    f_hi = 0.0
    f_lo = 1e-300
    norm = 0.0
    target = 0.0
    for m in range(K - 2, -1, -1):       # compute f_m = c * J_{base+m}(z)
        f_cur = (2.0 * (base + m + 1) / z) * f_lo - f_hi
        f_hi, f_lo = f_lo, f_cur
        if abs(f_cur) > 1e250:           # rescale to avoid overflow
            f_hi *= 1e-250
            f_lo *= 1e-250
            norm *= 1e-250
            target *= 1e-250
        if m % 2 == 0:
            k = m // 2
            if k == 0:
                coef = math.exp(float(_gln(base + 1.0)))    # b Gamma(b)
            else:
                coef = (base + 2 * k) * math.exp(
                    float(_gln(base + k) - _gln(k + 1.0)))
            norm += coef * f_cur
        if m == offset:
            target = f_cur
    scale = (0.5 * z) ** base / norm
    return target * scale


def bessel_j(nu, z):
    """J_nu(z) for nu >= -1, z >= 0 (vectorized).

    Full relative accuracy away from zeros of J_nu; near a zero the error
    is absolute at the local-amplitude level, so callers that need relative
    accuracy there must use `bessel_j_near_zero`.  Scalar calls with
    moderate argument run through a normalized backward recurrence (about
    1 ulp); array calls use the library routine.
    """
    nu = float(nu)
    if nu < -1.0:
        raise ValueError(f"order must be >= -1, got {nu}")
    if np.ndim(z) == 0:
        z = float(z)
        if z < 0.0:
            raise ValueError("argument must be >= 0")
        if 0.0 < z <= MILLER_MAX_Z:
            return _miller_jv(nu, z)
        return float(jv(nu, z))
    z = np.asarray(z, dtype=np.float64)
    if np.any(z < 0.0):
        raise ValueError("argument must be >= 0")
    return jv(nu, z)


def _mcmahon_split(nu, m):
    """Large-index expansion for j_{nu,m} as (a, correction), vectorized.

    Keeping the O(1/a) correction separate from a = (m + nu/2 - 1/4) pi lets
    callers assemble shifted quantities like j - kappa*pi/2 without losing
    significance.  Also returns an estimate of the truncation error.
    """
    mu = 4.0 * nu * nu
    a = (np.asarray(m, dtype=np.float64) + 0.5 * nu - 0.25) * np.pi
    a8 = 8.0 * a
    t1 = -(mu - 1.0) / a8
    t3 = -4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * a8**3)
    t5 = -32.0 * (mu - 1.0) * (83.0 * mu**2 - 982.0 * mu + 3779.0) / (15.0 * a8**5)
    # next term scales like the last one times ~mu/(8a)^2
    err = np.abs(t5) * (np.abs(mu) + 32.0) / a8**2 * 40.0
    return a, t1 + t3 + t5, err


def _polish_delta(nu, z):
    """Accumulated Newton correction moving z onto the zero (vectorized)."""
    z = np.atleast_1d(np.asarray(z, dtype=np.float64)).copy()
    delta = np.zeros_like(z)
    for _ in range(8):
        f = jv(nu, z)
        fp = jv(nu - 1.0, z) - (nu / z) * jv(nu, z)
        step = f / fp
        z -= step
        delta -= step
        if np.all(np.abs(step) <= 4e-17 * z):
            break
    return delta


def bessel_zeros_parts(nu, m_max):
    """(a, corr) arrays with j_{nu,m} = a_m + corr_m for m = 1..m_max.

    The first FIRST_ZEROS_POLISHED zeros, and any index whose large-index
    truncation estimate exceeds ~1 ulp of j, are Newton-polished; the polish
    is folded into corr so the split stays cancellation-free.
    """
    nu = float(nu)
    if not (-1.0 < nu <= 6.0):
        raise ValueError(f"order must lie in (-1, 6], got {nu}")
    if m_max < 1:
        raise IndexOutOfRange("zero index must be >= 1")
    ms = np.arange(1, m_max + 1)
    a, corr, err = _mcmahon_split(nu, ms)
    j = a + corr
    need = err > 1e-16 * j
    need[: min(FIRST_ZEROS_POLISHED, m_max)] = True
    if np.any(need):
        corr = corr.copy()
        corr[need] += _polish_delta(nu, j[need])
    return a, corr


def bessel_zeros(nu, m_max):
    """Array of j_{nu,1..m_max}, accurate to ~1e-15 relative throughout."""
    a, corr = bessel_zeros_parts(nu, m_max)
    return a + corr


def bessel_zero_seeds(nu, m_max):
    """Unpolished large-index zero estimates without the order bound.

    Only meant as root-finder seeds (the expansion degrades at low index
    for large order); accurate zeros must go through `bessel_zeros`.
    """
    a, corr, _ = _mcmahon_split(float(nu), np.arange(1, m_max + 1))
    return a + corr


def bessel_zero(nu, m):
    """m-th positive zero of J_nu for nu in (-1, 6]."""
    nu = float(nu)
    if not (-1.0 < nu <= 6.0):
        raise ValueError(f"order must lie in (-1, 6], got {nu}")
    if int(m) != m or m < 1:
        raise IndexOutOfRange(f"zero index must be a positive integer, got {m}")
    m = int(m)
    a, corr, err = _mcmahon_split(nu, m)
    j = float(a + corr)
    if m <= FIRST_ZEROS_POLISHED or err > 1e-16 * j:
        j = j + float(_polish_delta(nu, j)[0])
    return BesselZero(nu=nu, m=m, j=j)


def _near_zero_terms(alpha, u, h, nterms, j1=None):
    """Partial sums of the shifted series (vectorized over u, h)."""
    u = np.asarray(u, dtype=np.float64)
    h = np.asarray(h, dtype=np.float64)
    w = -h * (2.0 * u + h) / (2.0 * u)
    if j1 is None:
        j1 = jv(alpha + 1.0, u)
    f_prev = np.zeros_like(w)           # f_0 = 0 at a zero
    f_cur = w * j1
    total = f_cur.copy()
    # `nterms` counts recurrence applications: the sum runs f_1..f_{nterms+1}
    for m in range(1, nterms + 1):
        f_next = ((2.0 * m * (alpha + m) * w / u) * f_cur - w * w * f_prev) / (
            m * (m + 1.0)
        )
        total += f_next
        f_prev, f_cur = f_cur, f_next
        if np.all(np.abs(f_next) <= 1e-18 * np.abs(total)):
            break
    lam = 1.0 + h / u
    return lam**alpha * total


def bessel_j_near_zero(alpha, u, h, terms=None):
    """J_alpha(u + h) when u is a zero of J_alpha and |h| <= 0.5.

    `terms` overrides the adaptive truncation with a fixed term count.
    Raises NotAZero when u fails the residual test.
    """
    alpha = float(alpha)
    u_arr = np.atleast_1d(np.asarray(u, dtype=np.float64))
    resid = np.abs(jv(alpha, u_arr))
    amp = np.abs(jv(alpha + 1.0, u_arr))
    if np.any(resid > 1e-10 * np.maximum(amp, 1e-30)):
        raise NotAZero(f"u = {u} is not a zero of J_{alpha} to tolerance")
    if np.any(np.abs(np.asarray(h, dtype=np.float64)) > 0.5):
        raise ValueError("|h| must be <= 0.5")
    nterms = NEAR_ZERO_MAX_TERMS if terms is None else int(terms)
    j1 = None
    if np.ndim(u) == 0 and float(u) <= MILLER_MAX_Z:
        j1 = _miller_jv(alpha + 1.0, float(u))   # anchor at full precision
    out = _near_zero_terms(alpha, u, h, nterms, j1=j1)
    if np.ndim(u) == 0 and np.ndim(h) == 0:
        return float(out)
    return out
