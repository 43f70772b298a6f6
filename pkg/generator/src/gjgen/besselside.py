"""Coefficients of the Bessel-type (endpoint-uniform) expansion.

Closed forms are sympy expressions in the symbols t (theta), st (sin theta),
ct (cos theta), alpha, beta.  Small-theta series are PSeries in theta whose
coefficients are polynomials in alpha, beta; each carries the natural
prefactor chi**a * theta**b with chi = theta/sin(theta), so that the
bracketed series represent entire functions.

Derivation route: the kernel ratio 2*theta*(cos(phi)-cos(theta)) /
(sin(theta)*(theta**2-phi**2)) expands in powers of w = theta**2 - phi**2
with coefficients chi_j built from half-integer Bessel functions; symbolic
powers of that series give psi_{j,m}, which assemble into A_m, and the
companion families S_m, T_m (value side) and Y_m, Z_m (derivative side).
"""

from __future__ import annotations

import sympy as sp

from .series import PSeries, sin_over_theta, cos_series, hyp0f1_reg_series

T = sp.Symbol("t", positive=True)        # theta
ST = sp.Symbol("st", positive=True)      # sin(theta)
CT = sp.Symbol("ct", real=True)          # cos(theta)
ALPHA = sp.Symbol("alpha", real=True)
BETA = sp.Symbol("beta", real=True)


def dtheta(expr):
    """d/dtheta for expressions in (t, st, ct)."""
    return sp.expand(
        sp.diff(expr, T) + CT * sp.diff(expr, ST) - ST * sp.diff(expr, CT)
    )


def simplify_tsc(expr):
    """Cancel/normalize a rational expression in (t, st, ct, alpha, beta)."""
    return sp.cancel(sp.together(sp.expand(expr)))


_GENS = (T, ST, CT, ALPHA, BETA)
_OPC = sp.expand(1 + CT)     # the only non-monomial denominator factor


def _to_poly(expr):
    if isinstance(expr, sp.Poly):
        return expr
    return sp.Poly(expr, *_GENS, domain="QQ")


_P_T = _to_poly(T)
_P_ST = _to_poly(ST)
_P_CT = _to_poly(CT)
_P_OPC = _to_poly(1 + CT)
_P_EXTRA_R = _to_poly(-T * ST**2)
_P_TSO = _to_poly(T * ST * (1 + CT))


class TFrac:
    """num / (t^p st^q (1+ct)^r), num a sparse Poly in (t, st, ct, alpha, beta).

    Keeps the endpoint-expansion pipeline polynomial: no sympy `cancel` on
    large trig rationals, only exact divisions during reduction; sparse
    Poly arithmetic keeps large products fast.
    """

    __slots__ = ("num", "p", "q", "r")

    def __init__(self, num, p=0, q=0, r=0, reduce=False):
        self.num = _to_poly(num)
        self.p = p
        self.q = q
        self.r = r
        if reduce:
            self._reduce()

    def _reduce(self):
        num = self.num
        for gen_poly, attr in ((_P_T, "p"), (_P_ST, "q"), (_P_OPC, "r")):
            while getattr(self, attr) > 0:
                quo, rem = num.div(gen_poly)
                if not rem.is_zero:
                    break
                num = quo
                setattr(self, attr, getattr(self, attr) - 1)
        self.num = num

    @classmethod
    def lift(cls, v):
        return v if isinstance(v, cls) else cls(sp.sympify(v))

    def __mul__(self, other):
        other = TFrac.lift(other)
        return TFrac(
            self.num * other.num,
            self.p + other.p, self.q + other.q, self.r + other.r,
        )

    __rmul__ = __mul__

    def __add__(self, other):
        other = TFrac.lift(other)
        p = max(self.p, other.p)
        q = max(self.q, other.q)
        r = max(self.r, other.r)

        def raise_to(f):
            num = f.num
            if p - f.p:
                num = num * _P_T ** (p - f.p)
            if q - f.q:
                num = num * _P_ST ** (q - f.q)
            if r - f.r:
                num = num * _P_OPC ** (r - f.r)
            return num

        return TFrac(raise_to(self) + raise_to(other), p, q, r)

    __radd__ = __add__

    def __neg__(self):
        return TFrac(-self.num, self.p, self.q, self.r)

    def __sub__(self, other):
        return self + (-TFrac.lift(other))

    def __rsub__(self, other):
        return (-self) + TFrac.lift(other)

    def __pow__(self, k):
        if k == 0:
            return TFrac(sp.S.One)
        if k < 0:
            raise ValueError("negative powers only via explicit denominators")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def shift_theta(self, k):
        """Multiply by t**k (k may be negative)."""
        if k >= 0:
            return TFrac(self.num * _P_T**k, self.p, self.q, self.r, reduce=True)
        return TFrac(self.num, self.p - k, self.q, self.r, reduce=True)

    def dtheta(self):
        """d/dtheta with the denominator chain rule."""
        dn = (
            self.num.diff(T)
            + _P_CT * self.num.diff(ST)
            - _P_ST * self.num.diff(CT)
        )
        extra = (
            self.p * (_P_ST * _P_OPC)
            + self.q * (_P_CT * _P_T * _P_OPC)
            + self.r * _P_EXTRA_R
        ) if (self.p or self.q or self.r) else None
        num = dn * _P_TSO
        if extra is not None:
            num = num - self.num * extra
        return TFrac(num, self.p + 1, self.q + 1, self.r + 1, reduce=True)

    def to_expr(self):
        return self.num.as_expr() / (T**self.p * ST**self.q * _OPC**self.r)

    def is_zero(self):
        return self.num.is_zero


# ----------------------------------------------------------------------
# chi_j: kernel-ratio expansion coefficients (half-integer Bessel ratios)
# ----------------------------------------------------------------------

def chi_closed(j):
    """chi_j(theta) = J_{j+1/2}(theta)/((j+1)! (2 theta)^j J_{1/2}(theta)).

    Half-integer Bessel functions reduce to R(1/t) sin t + Q(1/t) cos t, so
    chi_j is returned as a TFrac with denominator t^(2j) st.
    """
    x = sp.Symbol("x", positive=True)
    num = sp.expand_func(sp.besselj(sp.Rational(2 * j + 1, 2), x))
    # strip the common sqrt(2/(pi x)) prefactor by dividing by J_{1/2}
    ratio = sp.simplify(num / sp.sqrt(2 / (sp.pi * x)))
    ratio = sp.expand(sp.expand_trig(ratio))
    poly = sp.expand(ratio.subs({sp.sin(x): ST, sp.cos(x): CT}))
    poly = sp.expand(poly.subs(x, T) * T**j)        # clear 1/t^j from the reduction
    if poly.has(x) or poly.atoms(sp.sin, sp.cos, sp.tan):
        raise ValueError(f"untranslated functions in chi_{j}: {poly}")
    scale = sp.factorial(j + 1) * 2**j
    return TFrac(sp.expand(poly / scale), p=2 * j, q=1, r=0, reduce=True)


def chi_series(j, nterms):
    """Small-theta series of chi_j; even series in theta, rational coeffs."""
    pre = 1 / (sp.factorial(j + 1) * 4**j * sp.RisingFactorial(sp.Rational(3, 2), j))
    F_num = hyp0f1_reg_series(sp.Rational(2 * j + 3, 2), nterms)
    F_den = hyp0f1_reg_series(sp.Rational(3, 2), nterms)
    return (F_num / F_den) * pre


# ----------------------------------------------------------------------
# psi_{j,m}: symbolic powers of the chi series in w = theta^2 - phi^2
# ----------------------------------------------------------------------

def _wlist_mul(A, B, order):
    out = [0] * (order + 1)
    for i, ai in enumerate(A):
        if i > order or _is_zero(ai):
            continue
        for jj, bj in enumerate(B):
            if i + jj > order:
                break
            if _is_zero(bj):
                continue
            out[i + jj] = out[i + jj] + ai * bj
    return out


def _is_zero(v):
    if isinstance(v, PSeries):
        return all(x == 0 for x in v.c)
    return v == 0


def chi_upowers(chis, order):
    """(chi-series minus 1)^k coefficient lists for k = 0..order (shared)."""
    u = [0 * chis[1]] + [chis[i] for i in range(1, order + 1)]
    powers = [[chis[0]] + [0 * chis[1]] * order]
    term = powers[0]
    for _ in range(1, order + 1):
        term = _wlist_mul(term, u, order)
        powers.append(term)
    return powers


def psi_list(mu, order, chis, upowers=None):
    """psi_{0..order} where (sum_i chi_i w^i)^mu = sum_j psi_j w^j.

    chis[i] may be sympy expressions/TFrac (closed) or PSeries (series);
    chis[0] must be exactly 1.  mu may be symbolic.  `upowers` allows the
    (mu-independent) power lists to be shared between exponents.
    """
    if upowers is None:
        upowers = chi_upowers(chis, order)
    out = [chis[0]] + [0 * chis[1]] * order
    coef = sp.S.One
    for k in range(1, order + 1):
        coef = coef * (mu - (k - 1)) / k
        term = upowers[k]
        if all(_is_zero(v) for v in term):
            break
        for jj in range(order + 1):
            if not _is_zero(term[jj]):
                out[jj] = out[jj] + sp.expand(coef) * term[jj]
    return out


# ----------------------------------------------------------------------
# A_m(theta)
# ----------------------------------------------------------------------

def _b_scalar(j, alpha, beta):
    return (
        sp.Integer(-1) ** j
        * sp.RisingFactorial((alpha + beta) / 2, j)
        * sp.RisingFactorial((alpha - beta) / 2, j)
        / (sp.factorial(j) * sp.RisingFactorial(alpha + sp.S.Half, j))
    )


def A_closed_list(max_m, alpha=ALPHA, beta=BETA):
    """Closed forms A_0..A_max_m as TFrac fractions over t^p st^q (1+ct)^r."""
    chis = [TFrac(sp.S.One)] + [chi_closed(i) for i in range(1, max_m + 1)]
    upow = chi_upowers(chis, max_m)
    psis = {}
    for m in range(max_m + 1):
        psis[m] = psi_list(sp.expand(m + alpha - sp.S.Half), max_m, chis, upow)
    out = [TFrac(sp.S.One)]
    st_over_2t = TFrac(ST, p=1) * sp.Rational(1, 2)
    for m in range(1, max_m + 1):
        acc = TFrac(sp.S.Zero)
        for j in range(m + 1):
            # b_j * (alpha+1/2)_m folds to a pure polynomial in alpha, beta
            scal = (
                sp.Integer(-1) ** j
                * sp.RisingFactorial((alpha + beta) / 2, j)
                * sp.RisingFactorial((alpha - beta) / 2, j)
                * sp.RisingFactorial(alpha + sp.S.Half + j, m - j)
                * sp.Integer(2) ** m
                / sp.factorial(j)
            )
            piece = psis[j][m - j] * (st_over_2t**j)
            piece = piece * TFrac(sp.expand(scal), r=j)
            acc = acc + piece
        out.append(acc.shift_theta(m))
    return out


def A_series_list(max_m, nterms, alpha=ALPHA, beta=BETA):
    """Taylor series (PSeries in theta) of A_0..A_max_m."""
    chis_s = [PSeries.const(1, nterms)] + [
        chi_series(i, nterms) for i in range(1, max_m + 1)
    ]
    upow = chi_upowers(chis_s, max_m)
    psis = {}
    for m in range(max_m + 1):
        psis[m] = psi_list(m + alpha - sp.S.Half, max_m, chis_s, upow)
    sot = sin_over_theta(nterms)      # sin(theta)/theta
    opc_inv = (cos_series(nterms) + 1).inv()   # 1/(1 + cos(theta))
    out = [PSeries.const(1, nterms)]
    for m in range(1, max_m + 1):
        acc = PSeries.const(0, nterms)
        for j in range(m + 1):
            # b_j * (alpha+1/2)_m folds to a pure polynomial in alpha, beta
            scal = sp.expand(
                sp.Integer(-1) ** j
                * sp.RisingFactorial((alpha + beta) / 2, j)
                * sp.RisingFactorial((alpha - beta) / 2, j)
                * sp.RisingFactorial(alpha + sp.S.Half + j, m - j)
                * sp.Integer(2) ** m
                / sp.factorial(j)
            )
            factor = (sot * sp.S.Half).powi(j) * opc_inv.powi(j)
            acc = acc + scal * factor * psis[j][m - j]
        out.append(acc.shift(m))
    return out


# ----------------------------------------------------------------------
# S_m, T_m (value side) and Y_m, Z_m (derivative side)
# ----------------------------------------------------------------------

def ST_from_A(A, max_m, alpha=ALPHA, series=False):
    """Families S_0..S_max_m, T_0..T_max_m from the A list.

    S_0 = 1, T_0 = A_1; for m >= 1 the combinations involve A_{m+1}..A_{2m+1}
    with binomial/Pochhammer weights and powers of 1/theta.  `A` must reach
    index 2*max_m + 1.  A entries are PSeries (series=True) or TFrac.
    """
    one = PSeries.const(1, A[1].n) if series else TFrac(sp.S.One)

    def theta_pow(expr, k):
        return expr.shift(k) if series else expr.shift_theta(k)

    S_list = [one]
    T_list = [A[1]]
    for m in range(1, max_m + 1):
        s_acc = None
        for j in range(m):
            w = (
                sp.binomial(m - 1, j)
                * sp.Integer(-1) ** j
                * sp.Integer(2) ** (m - 1 - j)
                * sp.expand(sp.RisingFactorial(alpha + 2 + j, m - j - 1))
            )
            piece = theta_pow(A[j + m + 1], j) * w
            s_acc = piece if s_acc is None else s_acc + piece
        S_list.append(theta_pow(-s_acc, -(m - 1)))
        t_acc = None
        for j in range(m + 1):
            w = (
                sp.binomial(m, j)
                * sp.Integer(-1) ** j
                * sp.Integer(2) ** (m - j)
                * sp.expand(sp.RisingFactorial(alpha + 1 + j, m - j))
            )
            piece = theta_pow(A[j + m + 1], j) * w
            t_acc = piece if t_acc is None else t_acc + piece
        T_list.append(theta_pow(t_acc, -m))
    return S_list, T_list


def YZ_from_ST(S_list, T_list, alpha=ALPHA, series=False):
    """Y_m, Z_m from S_m, T_m: derivative-side families."""
    n_have = len(T_list)
    one = PSeries.const(1, T_list[0].n) if series else TFrac(sp.S.One)

    def ddt(expr):
        return expr.diff() if series else expr.dtheta()

    def theta_mul(expr, k=1):
        return expr.shift(k) if series else expr.shift_theta(k)

    Y_list = [one]
    Z_list = [(2 * alpha + 1) * one + theta_mul(T_list[0]) * 2]
    for m in range(1, n_have):
        Ym = S_list[m] + ((2 * alpha + 1) * sp.S.Half) * theta_mul(T_list[m - 1], -1) \
            - ddt(T_list[m - 1])
        Zm = (2 * alpha + 1) * S_list[m] + 2 * theta_mul(T_list[m]) \
            + 2 * theta_mul(ddt(S_list[m]))
        Y_list.append(Ym)
        Z_list.append(Zm)
    return Y_list, Z_list


# ----------------------------------------------------------------------
# validation helpers
# ----------------------------------------------------------------------

def bracket_coeffs(ser, a_chi, b_theta, count):
    """Extract even coefficients of ser / (chi^a_chi * theta^b_theta).

    chi = theta/sin(theta).  Returns [c_0, c_1, ...] with
    ser = chi^a * theta^b * sum_j c_j theta^(2j).
    """
    from .series import as_expr_coef

    nterms = ser.n
    chi = sin_over_theta(nterms).inv()
    bracket = ser / chi.powi(a_chi) if a_chi >= 0 else ser * chi.powi(-a_chi)
    bracket = bracket.shift(-b_theta)
    for j, v in enumerate(bracket.c):
        if j % 2 == 1 and sp.cancel(as_expr_coef(v)) != 0:
            raise ValueError(f"odd-power residue at theta^{j}: {v}")
    return [sp.expand(sp.cancel(as_expr_coef(bracket.c[2 * j])))
            for j in range(count)]


def to_theta(expr):
    """Map (t, st, ct) expressions onto genuine trig functions of theta."""
    w = sp.Symbol("theta_", positive=True)
    return expr.subs({ST: sp.sin(w), CT: sp.cos(w), T: w})


def closed_equal(e1, e2):
    """Symbolic equality of two (t, st, ct) expressions as functions."""
    return sp.simplify(to_theta(sp.together(e1 - e2))) == 0


if __name__ == "__main__":
    import time

    a, b = ALPHA, BETA
    t0 = time.time()
    A1_paper = ((4 * a**2 - 1) * (ST - T * CT) + 2 * T * (a**2 - b**2) * (CT - 1)) / (8 * T * ST)
    A = A_closed_list(3)
    print("A1 ok:", closed_equal(A[1].to_expr(), A1_paper))
    # psi_{1,m}: derived mu*(1 - theta*cot)/(4 theta^2); the printed display
    # carries sin^2 in place of theta^2 (inconsistent with its own kernel).
    # psi_1 is linear in mu, so two integer m values pin it down.
    chis = [TFrac(sp.S.One), chi_closed(1), chi_closed(2)]
    ok = True
    for m_val in (2, 3):
        mu = m_val + a - sp.S.Half
        psis = psi_list(mu, 2, chis)
        psi1_expect = sp.Rational(1, 4) * mu * (1 - T * CT / ST) / T**2
        ok = ok and closed_equal(psis[1].to_expr(), psi1_expect)
    print("psi1 ok:", ok)

    As = A_series_list(3, 12)
    A1c = bracket_coeffs(As[1], 1, 1, 3)
    print("A01:", sp.factor(A1c[0]), " expect (a^2+3b^2-1)/24")
    print("A11:", sp.factor(A1c[1]), " expect (-3a^2-5b^2+2)/480")
    A2c = bracket_coeffs(As[2], 2, 2, 2)
    A02_paper = (-16*a - 14*a**2 - 90*b**2 + 5*a**4 + 4*a**3 + 45*b**4
                 + 30*b**2*a**2 + 60*b**2*a + 21) / 5760
    print("A02 ok:", sp.simplify(A2c[0] - A02_paper) == 0)
    # S, T, Y, Z structural identities
    Sl, Tl = ST_from_A(A, 1)
    print("S0 == 1:", Sl[0].to_expr() == 1, " T0 == A1:", closed_equal(Tl[0].to_expr(), A[1].to_expr()))
    Yl, Zl = YZ_from_ST(Sl, Tl)
    print("Y0 == 1:", Yl[0].to_expr() == 1,
          " Z0 ok:", closed_equal(Zl[0].to_expr(), (2*a + 1) + 2*T*A1_paper))
    print("elapsed:", round(time.time() - t0, 1))
