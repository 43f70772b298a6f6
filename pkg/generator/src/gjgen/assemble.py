"""Assembly of runtime coefficient functions from the derivation layers.

Produces, for symbolic or exact-rational (alpha, beta):
  * trig-expansion families u_{2m}(x), v_{2m+1}(x) (saddle output divided by
    the front-factor series), W'-families m_{2l}, n_{2l+1};
  * their zero-inversion corrections theta_m as closed forms in (c, s);
  * Bessel families A_m, S_m, T_m, Y_m, Z_m closed in (t, st, ct) and their
    entire small-theta series;
  * Bessel zero corrections theta_m closed and as series.
"""

from __future__ import annotations

import sympy as sp

from . import besselside as bs
from . import elemsaddle as es
from . import inversion as inv
from .series import PSeries, sin_over_theta

C, S = es.C, es.S
T, ST, CT = bs.T, bs.ST, bs.CT
ALPHA, BETA = es.ALPHA, es.BETA


# ----------------------------------------------------------------------
# front factor G_kappa(alpha, beta): 1/kappa series
# ----------------------------------------------------------------------

def g_series(alpha, beta, nterms):
    """G_kappa ~ sum g_r / kappa^r as a PSeries in 1/kappa.

    log G = sum_{r>=1} (-1)^(r+1) [B_{r+1}(A) - B_{r+1}(B)] / (r (r+1) kappa^r)
    with A = (alpha - beta + 1)/2, B = (1 - alpha - beta)/2 (B_k = Bernoulli
    polynomials); exponentiate the log series.
    """
    A = (alpha - beta + 1) / 2
    B = (1 - alpha - beta) / 2
    logc = [sp.S.Zero]
    for r in range(1, nterms):
        term = (-1) ** (r + 1) * (sp.bernoulli(r + 1, A) - sp.bernoulli(r + 1, B)) / (
            sp.Integer(r) * (r + 1)
        )
        logc.append(sp.expand(term))
    logser = PSeries(logc)
    out = PSeries.const(1, nterms)
    term = PSeries.const(1, nterms)
    for k in range(1, nterms):
        term = term * logser * sp.Rational(1, k)
        out = out + term
    return out


def uv_coeffs(alpha, beta, max_order):
    """u_{2m}, v_{2m+1} closed forms in (c, s) up to total order max_order.

    Divides the saddle (p, q) series by the front-factor series and checks
    the parity structure (odd u's and even v's cancel identically).
    """
    from .series import as_expr_coef

    if max_order > 12:
        raise ValueError("symbolic budget exceeded (max_order <= 12)")
    ps, qs = es.pq_coefficients(alpha, beta, max_order)
    ginv = g_series(alpha, beta, max_order + 1).inv()
    u = []
    v = []
    for m in range(max_order + 1):
        acc_p = sp.S.Zero
        acc_q = sp.S.Zero
        for r in range(m + 1):
            g = as_expr_coef(ginv.c[r])
            if g == 0:
                continue
            acc_p += g * ps[m - r]
            acc_q += g * qs[m - r]
        acc_p = es.canonical_over_s(acc_p)
        acc_q = es.canonical_over_s(acc_q)
        if m % 2 == 0:
            if sp.simplify(acc_q) != 0:
                raise RuntimeError(f"v_{m} did not cancel: {acc_q}")
            u.append(acc_p)
        else:
            if sp.simplify(acc_p) != 0:
                raise RuntimeError(f"u_{m} did not cancel: {acc_p}")
            v.append(acc_q)
    return u, v     # u[m] = u_{2m}, v[m] = v_{2m+1}


def dtheta_cs(expr):
    """d/dtheta for expressions in c = cos(theta), s = sin(theta)."""
    return sp.expand(-S * sp.diff(expr, C) + C * sp.diff(expr, S))


def ddx_cs(expr):
    """d/dx for expressions in (c, s) with x = c, s = sqrt(1-x^2)."""
    return sp.expand(sp.diff(expr, C) - (C / S) * sp.diff(expr, S))


def mn_coeffs(u, v):
    """m_{2l} = u_{2l} - s * d/dx v_{2l-1};  n_{2l+1} = v_{2l+1} + s * d/dx u_{2l}."""
    m_list = [sp.S.One]
    n_list = []
    for ell in range(len(v)):
        n_list.append(es.canonical_over_s(v[ell] + S * ddx_cs(u[ell])))
    for ell in range(1, len(u)):
        if ell - 1 < len(v):
            m_list.append(es.canonical_over_s(u[ell] - S * ddx_cs(v[ell - 1])))
    return m_list, n_list


def elementary_theta_closed(count, u, v):
    """theta_1..theta_count as closed forms in (c, s)."""
    abstract = inv.solve_elementary_thetas(count)
    sub = {}
    for (k, r), symb in inv.U_SYMS.items():
        idx = k // 2
        if idx < len(u):
            f = u[idx]
            for _ in range(r):
                f = dtheta_cs(f)
            sub[symb] = f
    for (k, r), symb in inv.V_SYMS.items():
        idx = (k - 1) // 2
        if idx < len(v):
            f = v[idx]
            for _ in range(r):
                f = dtheta_cs(f)
            sub[symb] = f
    out = []
    for expr in abstract:
        missing = [s for s in expr.free_symbols if s in sub and sub[s] is None]
        if missing:
            raise RuntimeError(f"missing substitutions: {missing}")
        out.append(es.canonical_over_s(expr.subs(sub)))
    return out


# ----------------------------------------------------------------------
# Bessel side
# ----------------------------------------------------------------------

def bessel_closed_families(max_m, alpha=ALPHA, beta=BETA):
    """Closed A, S, T, Y, Z lists; S/T reach index max_m (A reaches 2*max_m+1)."""
    if max_m > 5:
        raise ValueError("symbolic budget exceeded (max_m <= 5)")
    A = bs.A_closed_list(2 * max_m + 1, alpha, beta)
    S_list, T_list = bs.ST_from_A(A, max_m, alpha)
    Y_list, Z_list = bs.YZ_from_ST(S_list, T_list, alpha)
    return A, S_list, T_list, Y_list, Z_list


def bessel_series_families(max_m, nterms, alpha=ALPHA, beta=BETA):
    A = bs.A_series_list(2 * max_m + 1, nterms, alpha, beta)
    S_list, T_list = bs.ST_from_A(A, max_m, alpha, series=True)
    Y_list, Z_list = bs.YZ_from_ST(S_list, T_list, alpha, series=True)
    return A, S_list, T_list, Y_list, Z_list


def eval_in_tfrac(expr, env):
    """Evaluate a sympy expression tree with TFrac-valued symbols."""
    if expr.is_Number:
        return bs.TFrac(expr)
    if expr.is_Symbol:
        if expr in env:
            val = env[expr]
            return val if isinstance(val, bs.TFrac) else bs.TFrac(sp.sympify(val))
        return bs.TFrac(expr)
    if expr.is_Add:
        acc = bs.TFrac(sp.S.Zero)
        for arg in expr.args:
            acc = acc + eval_in_tfrac(arg, env)
        return acc
    if expr.is_Mul:
        acc = bs.TFrac(sp.S.One)
        for arg in expr.args:
            acc = acc * eval_in_tfrac(arg, env)
        return acc
    if expr.is_Pow:
        base, expo = expr.args
        if not expo.is_Integer:
            raise ValueError(f"non-integer power: {expr}")
        k = int(expo)
        if k >= 0:
            return eval_in_tfrac(base, env) ** k
        if base == inv.TH:
            return bs.TFrac(sp.S.One, p=-k)
        val = eval_in_tfrac(base, env)
        if not val.num.free_symbols:   # plain rational
            return bs.TFrac(sp.S.One / val.to_expr() ** (-k))
        raise ValueError(f"negative power of composite base: {expr}")
    raise ValueError(f"unsupported node: {expr}")


def bessel_theta_closed(count, S_list, T_list, alpha=ALPHA):
    """theta_1..theta_count as TFrac fractions in (t, st, ct)."""
    abstract = inv.solve_bessel_thetas(count)
    env = {inv.ALPHA: alpha, inv.TH: bs.TFrac(T, reduce=False)}
    for (m, r), symb in inv.S_SYMS.items():
        if isinstance(symb, sp.Symbol) and m < len(S_list):
            f = S_list[m]
            for _ in range(r):
                f = f.dtheta()
            env[symb] = f
    for (m, r), symb in inv.T_SYMS.items():
        if m < len(T_list):
            f = T_list[m]
            for _ in range(r):
                f = f.dtheta()
            env[symb] = f
    return [eval_in_tfrac(expr, env) for expr in abstract]


def bessel_theta_series(count, S_ser, T_ser, alpha=ALPHA):
    """theta_1..theta_count as PSeries in theta0."""
    abstract = inv.solve_bessel_thetas(count)
    nterms = T_ser[0].n
    tser = PSeries.var(nterms)          # theta as a series
    sub_funcs = {}
    for (m, r), symb in inv.S_SYMS.items():
        if isinstance(symb, sp.Symbol) and m < len(S_ser):
            f = S_ser[m]
            for _ in range(r):
                f = f.diff()
            sub_funcs[symb] = f
    for (m, r), symb in inv.T_SYMS.items():
        if m < len(T_ser):
            f = T_ser[m]
            for _ in range(r):
                f = f.diff()
            sub_funcs[symb] = f

    out = []
    for expr in abstract:
        expr = sp.expand(sp.together(expr.subs({inv.ALPHA: alpha})))
        num, den = sp.fraction(expr)
        # den is a pure power of theta0 (symbol TH) times a rational
        dpoly = sp.Poly(den, inv.TH)
        if len(dpoly.terms()) != 1:
            raise RuntimeError(f"unexpected denominator: {den}")
        (dk,), dcoef = dpoly.terms()[0]
        ser = _poly_to_series(num, sub_funcs, tser, nterms)
        out.append(ser.shift(-dk) * (sp.S.One / dcoef))
    return out


def _poly_to_series(expr, sub_funcs, tser, nterms):
    """Evaluate a polynomial in (TH, func symbols) as a PSeries."""
    expr = sp.expand(expr)
    terms = expr.as_ordered_terms()
    acc = PSeries.const(0, nterms)
    for term in terms:
        coef = sp.S.One
        ser = PSeries.const(1, nterms)
        for fac in sp.Mul.make_args(term):
            base, exp = fac.as_base_exp()
            if base == inv.TH:
                ser = ser.shift(int(exp))
            elif base in sub_funcs:
                ser = ser * sub_funcs[base].powi(int(exp))
            else:
                coef *= fac
        acc = acc + ser * coef
    return acc


if __name__ == "__main__":
    a, b = sp.Rational(1, 10), sp.Rational(-3, 10)
    u, v = uv_coeffs(a, b, 5)
    print("u orders:", len(u), " v orders:", len(v))
    th = elementary_theta_closed(2, u, v)
    # cross-check theta1/theta2 against printed closed displays
    th1_paper = -(2 * b**2 * C + 2 * a**2 * C - C - 2 * b**2 + 2 * a**2) / (8 * S)
    print("theta1 closed ok:", sp.simplify(th[0] - th1_paper) == 0)
    th2_paper = (
        -33 * C - 36 * b**2 * C**2 + 36 * a**2 * C**2 + 24 * b**4 * C**2 - 24 * a**4 * C**2
        + 2 * C**3 + 84 * b**2 * C - 60 * a**4 * C - 60 * b**4 * C + 84 * a**2 * C
        + 4 * b**4 * C**3 + 4 * a**4 * C**3 - 8 * b**2 * C**3 + 40 * a**2 - 8 * a**2 * C**3
        - 40 * b**2 + 32 * b**4 - 32 * a**4 + 24 * a**2 * b**2 * C**3 - 24 * a**2 * b**2 * C
    ) / (384 * S**3)
    print("theta2 closed ok:", sp.simplify(th[1] - th2_paper) == 0)
