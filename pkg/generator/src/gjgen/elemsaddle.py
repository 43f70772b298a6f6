"""Saddle-point derivation of the trigonometric (interior) expansion.

The Jacobi polynomial on the unit circle contour has two conjugate saddle
points z = exp(+-i*theta).  Substituting phi(z) - phi(z+) = s**2/2 and
expanding the remaining factor of the integrand in powers of s yields the
coefficients of the compound large-degree expansion

    P_n(cos t) ~ prefactor * (cos(chi) P(x) - sin(chi) Q(x)),
    P(x) = sum p_m(x)/kappa^m,   Q(x) = sum q_m(x)/kappa^m,

with x = cos t and chi = kappa*t - (alpha/2 + 1/4)*pi.  Everything here is
exact rational arithmetic; alpha and beta may be sympy symbols or exact
rationals.

All series bookkeeping is done in the variable sigma = d1*s where
d1 = dz/ds at the saddle, so that no square roots ever appear: the even
coefficients of the integrand ratio carry d1**(2m) = (-i*sin(t)*E)**m,
which is rational in E = exp(i*t).
"""

from __future__ import annotations

import sympy as sp

E = sp.Symbol("E")          # exp(i*theta), kept opaque during the derivation
C = sp.Symbol("c", real=True)   # cos(theta)
S = sp.Symbol("s", real=True, positive=True)  # sin(theta)
ALPHA = sp.Symbol("alpha", real=True)
BETA = sp.Symbol("beta", real=True)

_X = (E + 1 / E) / 2        # cos(theta) as a function of E


_OME = sp.expand(1 - E**2)      # 1 - E^2: the only denominator of the pipeline


class _Frac:
    """poly / (1 - E^2)**d with exact-division reduction; poly in E (and a, b)."""

    __slots__ = ("p", "d")

    def __init__(self, p, d=0, reduce=False):
        self.p = p
        self.d = d
        if reduce and d > 0:
            self._reduce()

    def _reduce(self):
        while self.d > 0:
            quo, rem = sp.div(self.p, _OME, E)
            if rem != 0:
                return
            self.p = sp.expand(quo)
            self.d -= 1

    def __mul__(self, other):
        if isinstance(other, _Frac):
            return _Frac(sp.expand(self.p * other.p), self.d + other.d)
        return _Frac(sp.expand(self.p * other), self.d)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, _Frac):
            other = _Frac(sp.sympify(other))
        d = max(self.d, other.d)
        p = sp.expand(self.p * _OME ** (d - self.d) + other.p * _OME ** (d - other.d))
        return _Frac(p, d)

    def __neg__(self):
        return _Frac(-self.p, self.d)

    def div_ome(self):
        """Divide by (1 - E^2), reducing when exact."""
        return _Frac(self.p, self.d + 1, reduce=True)

    def is_zero(self):
        return self.p == 0

    def to_expr(self):
        return self.p / _OME**self.d


_F0 = _Frac(sp.Integer(0))
_F1 = _Frac(sp.Integer(1))


def _fmul_lists(a, b, order):
    """Convolution of _Frac coefficient lists, truncated at sigma^order."""
    out = [_F0] * (order + 1)
    for i, ai in enumerate(a):
        if i > order or ai.is_zero():
            continue
        for j in range(order + 1 - i):
            bj = b[j] if j < len(b) else _F0
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def _phi_hat(max_k):
    """phi_k * (E^2-1)^k: polynomial Taylor data of the saddle phase.

    phi(z) = log(z - x) - log(1 - z^2); partial fractions give
    phi^(k)/k! = [(-1)^(k-1)/(E-x)^k + 1/(1-E)^k - (-1)^(k-1)/(1+E)^k]/k
    and multiplying by (E^2-1)^k (with E - x = (E^2-1)/(2E)) leaves
    [(-1)^(k-1) (2E)^k + (-1)^k (E+1)^k - (-1)^(k-1) (E-1)^k]/k.
    """
    out = {}
    for k in range(2, max_k + 1):
        sgn = (-1) ** (k - 1)
        p = sgn * (2 * E) ** k + (-1) ** k * (E + 1) ** k - sgn * (E - 1) ** k
        out[k] = _Frac(sp.expand(p / k))
    return out


def _revert_saddle(phi_hat, order):
    """U(s) = s + sum rho_j s^j solving sum phi_hat_k U^k = phi_hat_2 s^2.

    This is the saddle reversion in the scaled variables t = (E^2-1) u,
    sigma = (E^2-1) varsigma; coefficients are _Frac instances.
    """
    phi2 = phi_hat[2]           # = 1 - E^2 (exactly)
    rho = [_F1]
    powers = {}                 # U^k coefficient lists, updated per step
    for n in range(3, order + 2):
        t = [_F0, *rho, _F0]
        total = _F0
        power = _fmul_lists(t, t, n)
        k = 2
        while k <= n:
            if k in phi_hat and not power[n].is_zero():
                total = total + phi_hat[k] * power[n]
            k += 1
            if k <= n:
                power = _fmul_lists(power, t, n)
        val = (-total) * _Frac(sp.Rational(1, 2))
        # divide by phi2 = 1 - E^2
        rho.append(val.div_ome())
    return rho


def _binom_series(u, p, order):
    """(1 + u(s))^p as a _Frac coefficient list; u has no constant term."""
    out = [_F1] + [_F0] * order
    term = [_F1] + [_F0] * order
    coef = sp.Integer(1)
    for k in range(1, order + 1):
        term = _fmul_lists(term, u, order)
        coef = coef * (p - (k - 1)) / k
        if all(v.is_zero() for v in term):
            break
        for j in range(order + 1):
            if not term[j].is_zero():
                out[j] = out[j] + sp.expand(coef) * term[j]
    return out


def integrand_ratio_frac(alpha, beta, order):
    """Series f+(s)/f+(0): list of (P_k, D_k) with g_k = P_k/(1-E^2)^D_k."""
    gam = (alpha + beta + 1) / 2
    phi_hat = _phi_hat(order + 3)
    rho = _revert_saddle(phi_hat, order + 1)           # one extra for U'
    T = [_F0, *rho[:order]]                            # U(varsigma)
    Tp = [(j + 1) * rho[j] for j in range(order + 1)]  # dU/dvarsigma

    def scaled(tlist, fac):
        return [_F0, *[fac * v for v in tlist[1:]]]

    # in scaled variables: (1-z)/(1-E) = 1 + (E+1) u, (1+z)/(1+E) = 1 + (E-1) u,
    # (z-x)/(E-x) = 1 + 2E u, (1-z^2)/(1-E^2) = 1 - 2E u - (E^2-1) u^2
    u1 = scaled(T, sp.expand(E + 1))
    u2 = scaled(T, sp.expand(E - 1))
    u3 = scaled(T, 2 * E)
    t2 = _fmul_lists(T, T, order)
    u4 = [2 * E * a + _Frac(sp.expand(E**2 - 1)) * b for a, b in zip(T, t2)]

    f = _binom_series(u1, alpha, order)
    f = _fmul_lists(f, _binom_series(u2, beta, order), order)
    f = _fmul_lists(f, _binom_series(u3, gam - 1, order), order)
    f = _fmul_lists(f, _binom_series(u4, -gam, order), order)
    f = _fmul_lists(f, Tp, order)
    out = []
    for k, v in enumerate(f):
        v = _Frac(v.p, v.d, reduce=True)
        out.append((sp.expand((-1) ** k * v.p), v.d + k))
    return out


def integrand_ratio_series(alpha, beta, order):
    """Series f+(s)/f+(0) = sum g_k sigma^k; entries as sympy expressions."""
    return [p / _OME**d for p, d in integrand_ratio_frac(alpha, beta, order)]


def _cheb_tables(nmax):
    """First/second-kind Chebyshev polynomials in c, T_0..T_nmax, U_-1..U_nmax."""
    Tch = [sp.S.One, C]
    Uch = [sp.S.Zero, sp.S.One]          # U_{-1}, U_0
    for k in range(2, nmax + 2):
        Tch.append(sp.expand(2 * C * Tch[-1] - Tch[-2]))
        Uch.append(sp.expand(2 * C * Uch[-1] - Uch[-2]))
    return Tch, Uch


def _reduce_s(expr):
    """Reduce powers of S via S**2 = 1 - C**2: result has S-degree <= 1."""
    expr = sp.expand(expr)
    if not expr.has(S):
        return expr
    out = sp.Integer(0)
    for k, coeff in enumerate(sp.Poly(expr, S).all_coeffs()[::-1]):
        if coeff == 0:
            continue
        out += sp.expand(coeff * (1 - C**2) ** (k // 2)) * S ** (k % 2)
    return sp.expand(out)


def canonical_over_s(expr):
    """Rewrite a rational function of (c, s) as poly(c)/s**j exactly.

    Uses s**2 = 1 - c**2 to clear s from the denominator and to pull
    (1 - c**2)-factors of the denominator back into powers of s.  Raises
    if the result is not a plain c-polynomial over a power of s.
    """
    expr = sp.cancel(sp.together(expr))
    num, den = sp.fraction(expr)
    num = _reduce_s(sp.expand(num))
    den = _reduce_s(sp.expand(den))
    # den = d0(c) + s*d1(c); rationalize the single residual s power
    d1 = sp.expand(sp.diff(den, S))
    if d1 != 0:
        conj = sp.expand(den - 2 * S * d1)
        num = _reduce_s(sp.expand(num * conj))
        den = _reduce_s(sp.expand(den * conj))
    if den.has(S):
        raise ValueError("could not clear s from denominator")
    num = sp.expand(num)
    # num = n0(c) + s*n1(c); reduce each piece against the denominator
    n1 = sp.expand(sp.diff(num, S))
    n0 = sp.expand(num - S * n1)
    out = sp.Integer(0)
    for part, extra in ((n0, 0), (n1, 1)):
        if part == 0:
            continue
        quo = sp.cancel(part / den)
        pn, pd = sp.fraction(sp.together(quo))
        # residual denominator must be const * (1-c**2)**k -> s**(2k)
        spow = 0
        if pd.has(C):
            const, facs = sp.factor_list(pd)
            nminus = nplus = 0      # multiplicities of (1-c), (1+c)
            rest = sp.Integer(1)
            for fac, mult in facs:
                base = sp.expand(fac)
                if base in (1 - C**2, C**2 - 1):
                    spow += 2 * mult
                    if base == C**2 - 1:
                        const = const * (-1) ** mult
                elif base in (1 - C, C - 1):
                    nminus += mult
                    if base == C - 1:
                        const = const * (-1) ** mult
                elif base in (1 + C, -1 - C):
                    nplus += mult
                    if base == -1 - C:
                        const = const * (-1) ** mult
                else:
                    rest *= base**mult
            if nminus != nplus:
                raise ValueError("unpaired endpoint factor in denominator")
            spow += 2 * nminus
            if rest.has(C):
                raise ValueError(f"non-trigonometric denominator factor: {rest}")
            pd = const * rest
        j = spow - extra
        piece = sp.expand(sp.cancel(pn / pd))
        if j >= 0:
            out += piece / S**j
        else:
            out += sp.expand(piece * S**(-j))
    return out


def pq_coefficients(alpha, beta, max_m):
    """Coefficients p_m(x), q_m(x) for m = 0..max_m.

    p_m + i q_m = 2^m (1/2)_m c_{2m}^+ with c_{2m}^+ the even series
    coefficients of the integrand ratio times d1^(2m) = (-i s E)^m.  The
    split into real and imaginary parts uses E^k = T_k(c) + i s U_{k-1}(c)
    on the Laurent polynomial P(E) E^(m-D), with
    (1-E^2)^(-D) = (i/2)^D E^(-D) s^(-D).
    """
    fracs = integrand_ratio_frac(alpha, beta, 2 * max_m)
    degmax = max(sp.degree(p, E) for p, _ in fracs if p != 0)
    dmax = max(d for _, d in fracs)
    Tch, Uch = _cheb_tables(degmax + dmax + 2 * max_m + 2)
    ps, qs = [], []
    for m in range(max_m + 1):
        P, D = fracs[2 * m]
        poch = sp.factorial(2 * m) / (2**m * sp.factorial(m))
        lam = sp.expand(poch * (-sp.I) ** m * (sp.I / 2) ** D)
        lam_re, lam_im = lam.as_real_imag()
        re_sum = sp.S.Zero      # sum a_k T_|k'|
        im_sum = sp.S.Zero      # sum a_k sgn(k') U_(|k'|-1), times s
        if P != 0:
            pp = sp.Poly(P, E)
            for (kk,), a_k in pp.terms():
                kp = kk + m - D
                re_sum += a_k * Tch[abs(kp)]
                if kp > 0:
                    im_sum += a_k * Uch[kp]          # U_{kp-1} at index kp
                elif kp < 0:
                    im_sum -= a_k * Uch[-kp]
        spow = m - D
        re_cm = lam_re * re_sum * S**spow - lam_im * im_sum * S ** (spow + 1)
        im_cm = lam_im * re_sum * S**spow + lam_re * im_sum * S ** (spow + 1)
        ps.append(canonical_over_s(re_cm))
        qs.append(canonical_over_s(im_cm))
    return ps, qs


if __name__ == "__main__":
    import time

    t0 = time.time()
    ps, qs = pq_coefficients(ALPHA, BETA, 2)
    print("elapsed", time.time() - t0)
    a, b = ALPHA, BETA
    q1_paper = (2 * a**2 - 2 * b**2 + (2 * a**2 + 2 * b**2 - 1) * C) / (8 * S)
    p1_paper = -a * b / 2
    p2_paper = -(
        4 * a**4 + 4 * b**4 - 16 * b**2 - 16 * a**2 - 24 * a**2 * b**2 + 8
        + 4 * (2 * a**2 + 2 * b**2 - 5) * (a**2 - b**2) * C
        + (4 * a**4 + 4 * b**4 + 24 * a**2 * b**2 - 4 * a**2 - 4 * b**2 + 1) * C**2
    ) / (128 * S**2)
    print("p0:", sp.simplify(ps[0]))
    print("q0:", sp.simplify(qs[0]))
    print("p1 ok:", sp.simplify(ps[1] - p1_paper) == 0)
    print("q1 ok:", sp.simplify(qs[1] - q1_paper) == 0)
    print("p2 ok:", sp.simplify(_reduce_s(sp.expand((ps[2] - p2_paper) * S**2))) == 0)
    print("q2 ok:", sp.simplify(_reduce_s(sp.expand((qs[2] - (-a * b / 2) * q1_paper) * S**2))) == 0)
