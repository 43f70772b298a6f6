"""Inversion of the oscillatory equations: theta-corrections for the zeros.

Both expansions locate a zero as theta = theta0 + eps with
eps = theta_1/kappa^2 + theta_2/kappa^4 + ...; the theta_m are derived here
once, in terms of abstract coefficient-function symbols, by expanding the
oscillatory part of each representation around theta0 and collecting powers
of delta = 1/kappa.  Substituting closed forms or small-theta series into
the abstract solutions then yields both runtime evaluation routes.

Elementary route: sin(kappa*eps) U(theta) + cos(kappa*eps) V(theta) = 0
  (theta0 puts the phase at a zero of cos(chi); the sign factors cancel).

Bessel route: J_a(kappa*theta) S(theta) + J_{a+1}(kappa*theta) T(theta)/kappa
  = 0 with kappa*theta0 = j (a zero of J_a); the Bessel Taylor coefficients
  around j reduce to multiples of J_{a+1}(j) through the defining ODE, and
  1/j = delta/theta0 feeds extra delta powers into the expansion.
"""

from __future__ import annotations

import sympy as sp

from .series import PSeries

DELTA = sp.Symbol("delta_")          # 1/kappa
TH = sp.Symbol("t", positive=True)   # theta0 at evaluation time
ALPHA = sp.Symbol("alpha", real=True)

# abstract coefficient-function values at theta0; trailing p's = d/dtheta
U_SYMS = {
    (2, 0): sp.Symbol("u2"), (2, 1): sp.Symbol("u2p"), (2, 2): sp.Symbol("u2pp"),
    (2, 3): sp.Symbol("u2ppp"), (2, 4): sp.Symbol("u2pppp"),
    (4, 0): sp.Symbol("u4"), (4, 1): sp.Symbol("u4p"), (4, 2): sp.Symbol("u4pp"),
    (6, 0): sp.Symbol("u6"), (6, 1): sp.Symbol("u6p"),
    (8, 0): sp.Symbol("u8"),
}
V_SYMS = {
    (1, 0): sp.Symbol("v1"), (1, 1): sp.Symbol("v1p"), (1, 2): sp.Symbol("v1pp"),
    (1, 3): sp.Symbol("v1ppp"), (1, 4): sp.Symbol("v1pppp"),
    (1, 5): sp.Symbol("v1ppppp"), (1, 6): sp.Symbol("v1pppppp"),
    (3, 0): sp.Symbol("v3"), (3, 1): sp.Symbol("v3p"), (3, 2): sp.Symbol("v3pp"),
    (3, 3): sp.Symbol("v3ppp"), (3, 4): sp.Symbol("v3pppp"),
    (5, 0): sp.Symbol("v5"), (5, 1): sp.Symbol("v5p"), (5, 2): sp.Symbol("v5pp"),
    (7, 0): sp.Symbol("v7"), (7, 1): sp.Symbol("v7p"),
    (9, 0): sp.Symbol("v9"),
}
S_SYMS = {
    (1, 0): sp.Symbol("S1"), (1, 1): sp.Symbol("S1p"), (1, 2): sp.Symbol("S1pp"),
    (1, 3): sp.Symbol("S1ppp"), (1, 4): sp.Symbol("S1pppp"),
    (2, 0): sp.Symbol("S2"), (2, 1): sp.Symbol("S2p"), (2, 2): sp.Symbol("S2pp"),
    (3, 0): sp.Symbol("S3"), (3, 1): sp.Symbol("S3p"),
    (4, 0): sp.Symbol("S4"),
}
T_SYMS = {
    (0, 0): sp.Symbol("T0"), (0, 1): sp.Symbol("T0p"), (0, 2): sp.Symbol("T0pp"),
    (0, 3): sp.Symbol("T0ppp"), (0, 4): sp.Symbol("T0pppp"),
    (0, 5): sp.Symbol("T0ppppp"), (0, 6): sp.Symbol("T0pppppp"),
    (1, 0): sp.Symbol("T1"), (1, 1): sp.Symbol("T1p"), (1, 2): sp.Symbol("T1pp"),
    (1, 3): sp.Symbol("T1ppp"), (1, 4): sp.Symbol("T1pppp"),
    (2, 0): sp.Symbol("T2"), (2, 1): sp.Symbol("T2p"), (2, 2): sp.Symbol("T2pp"),
    (3, 0): sp.Symbol("T3"), (3, 1): sp.Symbol("T3p"),
    (4, 0): sp.Symbol("T4"),
}


def _eps_series(thetas, nterms):
    """eps = sum theta_m delta^(2m) as a PSeries in delta."""
    c = [sp.S.Zero] * nterms
    for m, t in enumerate(thetas, start=1):
        if 2 * m < nterms:
            c[2 * m] = t
    return PSeries(c)


def _eps_powers(eps, maxpow):
    out = [PSeries.const(1, eps.n), eps]
    for _ in range(2, maxpow + 1):
        out.append(out[-1] * eps)
    return out


def _family_series(syms, eps_pows, nterms, key_scale=2):
    """sum sym_{idx,r} delta^(key_scale*idx) eps^r / r! over the table.

    key_scale=2 suits S_m/T_m (entering as 1/kappa^(2m)); the u/v tables
    key by the full power index already, so they pass key_scale=1.
    """
    total = PSeries.const(0, nterms)
    for (idx, r), symb in syms.items():
        shift = key_scale * idx
        if shift + 2 * r >= nterms:
            continue
        term = eps_pows[r] * (symb / sp.factorial(r))
        total = total + term.shift(shift)
    return total


def solve_elementary_thetas(count):
    """theta_1..theta_count in terms of u/v symbols (derivative = d/dtheta)."""
    nterms = 2 * count + 1
    thetas = [sp.Symbol(f"th{m}") for m in range(1, count + 1)]
    eps = _eps_series(thetas, nterms + 1)
    eps_pows = _eps_powers(eps, (nterms + 1) // 2 + 1)
    w = eps.shift(-1)                       # kappa * eps
    # sin(w), cos(w) by odd/even Taylor composition
    sin_w = PSeries.const(0, nterms + 1)
    cos_w = PSeries.const(1, nterms + 1)
    wp = w
    fact = 1
    k = 1
    while k <= nterms:
        if k % 2:
            sin_w = sin_w + wp * sp.Rational((-1) ** (k // 2), fact)
        else:
            cos_w = cos_w + wp * sp.Rational((-1) ** (k // 2), fact)
        k += 1
        fact *= k
        wp = wp * w
    U = _family_series(U_SYMS, eps_pows, nterms + 1, key_scale=1) \
        + PSeries.const(1, nterms + 1)
    V = _family_series(V_SYMS, eps_pows, nterms + 1, key_scale=1)
    eq = sin_w * U + cos_w * V
    return _solve_sequential(eq, thetas)


def _solve_sequential(eq, thetas):
    from .series import as_expr_coef

    sols = {}
    for m in range(1, len(thetas) + 1):
        coef = sp.expand(as_expr_coef(eq.c[2 * m - 1]).subs(sols))
        sol = sp.solve(coef, thetas[m - 1])
        if len(sol) != 1:
            raise RuntimeError(f"inversion order {m} not linear")
        sols[thetas[m - 1]] = sp.expand(sol[0])
    return [sols[t] for t in thetas]


def _bessel_derivs(nu, count):
    """J_nu^{(k)}(j) in the basis (J_nu(j), J_nu'(j)) via the Bessel ODE.

    Returns (a, b, JZ): J^{(k)} = a_k J + b_k J', entries rational in the
    symbol JZ (= j) and nu.
    """
    JZ = sp.Symbol("j_")
    a = [sp.Integer(1), sp.Integer(0)]
    b = [sp.Integer(0), sp.Integer(1)]
    for k in range(0, count - 1):
        terms_a = (2 * k + 1) * JZ * a[k + 1] + (k**2 + JZ**2 - nu**2) * a[k]
        terms_b = (2 * k + 1) * JZ * b[k + 1] + (k**2 + JZ**2 - nu**2) * b[k]
        if k >= 1:
            terms_a += 2 * k * JZ * a[k - 1]
            terms_b += 2 * k * JZ * b[k - 1]
        if k >= 2:
            terms_a += k * (k - 1) * a[k - 2]
            terms_b += k * (k - 1) * b[k - 2]
        a.append(sp.cancel(-terms_a / JZ**2))
        b.append(sp.cancel(-terms_b / JZ**2))
    return a, b, JZ


def _laurent_in(expr, sym):
    """{i: coeff} with expr = sum coeff / sym^i (finite Laurent)."""
    expr = sp.together(sp.expand(expr))
    num, den = sp.fraction(expr)
    dpoly = sp.Poly(den, sym)
    if len(dpoly.terms()) != 1:
        raise ValueError(f"denominator not a monomial in {sym}: {den}")
    (dk,), dc = dpoly.terms()[0]
    out = {}
    for (nk,), nc in sp.Poly(num, sym).terms():
        out[dk - nk] = out.get(dk - nk, sp.S.Zero) + nc / dc
    return out


def solve_bessel_thetas(count):
    """theta_1..theta_count in terms of S/T symbols, theta0 = t, alpha."""
    nterms = 2 * count + 1
    thetas = [sp.Symbol(f"th{m}") for m in range(1, count + 1)]
    eps = _eps_series(thetas, nterms + 1)
    eps_pows = _eps_powers(eps, (nterms + 1) // 2 + 1)
    h = eps.shift(-1)                        # kappa*eps = delta^1, delta^3, ...
    hmax = nterms
    hpow = [PSeries.const(1, nterms + 1), h]
    for _ in range(2, hmax + 1):
        hpow.append(hpow[-1] * h)

    # R(h) = J_alpha(j+h)/J_{alpha+1}(j); R1(h) = J_{alpha+1}(j+h)/J_{alpha+1}(j)
    a_, b_, JZ = _bessel_derivs(ALPHA, hmax + 2)
    a1, b1, _ = _bessel_derivs(ALPHA + 1, hmax + 2)

    def assemble(coeff_of_k):
        total = PSeries.const(0, nterms + 1)
        for k in range(0, hmax + 1):
            ck = coeff_of_k(k)
            if ck == 0:
                continue
            for i, ci in _laurent_in(ck, JZ).items():
                if i < 0:
                    raise ValueError("positive powers of j cannot appear")
                if k + i <= nterms:
                    total = total + hpow[k].shift(i) * sp.expand(ci / TH**i)
        return total

    # J_alpha: value 0, derivative -J_{alpha+1} at the zero
    R = assemble(lambda k: sp.expand(-b_[k] / sp.factorial(k)))
    R1 = assemble(
        lambda k: sp.expand((a1[k] - b1[k] * (ALPHA + 1) / JZ) / sp.factorial(k))
    )

    S_f = _family_series(S_SYMS, eps_pows, nterms + 1) + PSeries.const(1, nterms + 1)
    T_f = _family_series(T_SYMS, eps_pows, nterms + 1)
    eq = R * S_f + (R1 * T_f).shift(1)
    return _solve_sequential(eq, thetas)


if __name__ == "__main__":
    import time

    t0 = time.time()
    th = solve_elementary_thetas(4)
    print("elem solve:", round(time.time() - t0, 1))
    v1, v3, v5 = V_SYMS[(1, 0)], V_SYMS[(3, 0)], V_SYMS[(5, 0)]
    v1p, v1pp = V_SYMS[(1, 1)], V_SYMS[(1, 2)]
    v3p = V_SYMS[(3, 1)]
    u2, u2p, u4 = U_SYMS[(2, 0)], U_SYMS[(2, 1)], U_SYMS[(4, 0)]
    print("theta1 ok:", sp.simplify(th[0] + v1) == 0)
    th2_ref = u2 * v1 + v1p * v1 + v1**3 / 3 - v3
    print("theta2 ok:", sp.simplify(th[1] - th2_ref) == 0)
    th3_ref = (-sp.Rational(4, 3) * v1p * v1**3 - v1**5 / 5 - v5 + v3 * v1**2
               - v1pp * v1**2 / 2 - 2 * v1p * u2 * v1 - v1p**2 * v1
               + v1p * v3 - u2**2 * v1 - u2p * v1**2 + u4 * v1 - u2 * v1**3
               + u2 * v3 + v3p * v1)
    print("theta3 ok:", sp.simplify(th[2] - th3_ref) == 0)

    t0 = time.time()
    bth = solve_bessel_thetas(4)
    print("bessel solve:", round(time.time() - t0, 1))
    T0, T0p, T1, S1 = (T_SYMS[(0, 0)], T_SYMS[(0, 1)], T_SYMS[(1, 0)], S_SYMS[(1, 0)])
    print("bessel theta1 ok:", sp.simplify(bth[0] - T0) == 0)
    th2b_ref = T1 + (T0p - S1) * T0 - (1 + 2 * ALPHA) * T0**2 / (2 * TH) - T0**3 / 3
    print("bessel theta2 ok:", sp.simplify(bth[1] - th2b_ref) == 0)
