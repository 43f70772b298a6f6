"""Dense truncated power series with exact sympy coefficients.

Minimal arithmetic needed by the coefficient derivations: +, -, *, /,
integer and symbolic-exponent powers, differentiation, coefficient
extraction.  Coefficients are sympy expressions (typically polynomials in
alpha, beta over Q); the series variable is implicit.
"""

from __future__ import annotations

import sympy as sp

_A = sp.Symbol("alpha", real=True)
_B = sp.Symbol("beta", real=True)


def _canon(v):
    """Canonical coefficient: Rational, Poly in (alpha, beta), or Expr."""
    if isinstance(v, sp.Poly):
        return v
    v = sp.sympify(v)
    if v.is_Number:
        return v
    if v.free_symbols <= {_A, _B}:
        return sp.Poly(v, _A, _B, domain="QQ")
    return sp.expand(v)


def _mul2(a, b):
    """Product of two canonical coefficients."""
    pa, pb = isinstance(a, sp.Poly), isinstance(b, sp.Poly)
    if pa and pb:
        return a * b
    if pa:
        return a * b if getattr(b, "is_Number", False) else a.as_expr() * b
    if pb:
        return b * a if getattr(a, "is_Number", False) else a * b.as_expr()
    return a * b


def _add2(a, b):
    """Sum of two canonical coefficients (0 is the neutral int)."""
    if isinstance(a, int) and a == 0:
        return b
    if isinstance(b, int) and b == 0:
        return a
    pa, pb = isinstance(a, sp.Poly), isinstance(b, sp.Poly)
    if pa and pb:
        return a + b
    if pa:
        return a + b if getattr(b, "is_Number", False) else a.as_expr() + b
    if pb:
        return b + a if getattr(a, "is_Number", False) else a + b.as_expr()
    return a + b


def _is_zero_coef(v):
    if isinstance(v, sp.Poly):
        return v.is_zero
    if isinstance(v, int):
        return v == 0
    return v == 0


def as_expr_coef(v):
    return v.as_expr() if isinstance(v, sp.Poly) else sp.sympify(v)


def _simp(v):
    return _canon(v)


class PSeries:
    """sum c[j] * var**j, truncated beyond var**(n-1) where n = len(c).

    Coefficients are kept as Rationals, sparse Polys in (alpha, beta), or
    generic expressions when other symbols are present; arithmetic
    dispatches so that the polynomial fast path dominates.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs, canonical=False):
        if canonical:
            self.c = list(coeffs)
        else:
            self.c = [_canon(v) for v in coeffs]

    @classmethod
    def const(cls, value, nterms):
        return cls([_canon(value)] + [sp.S.Zero] * (nterms - 1), canonical=True)

    @classmethod
    def var(cls, nterms, power=1):
        c = [sp.S.Zero] * nterms
        if power < nterms:
            c[power] = sp.S.One
        return cls(c, canonical=True)

    @property
    def n(self):
        return len(self.c)

    def __add__(self, other):
        if not isinstance(other, PSeries):
            out = list(self.c)
            out[0] = _canon(_add2(out[0], _canon(other)))
            return PSeries(out, canonical=True)
        n = min(self.n, other.n)
        return PSeries(
            [_canon(_add2(a, b)) for a, b in zip(self.c[:n], other.c[:n])],
            canonical=True,
        )

    __radd__ = __add__

    def __neg__(self):
        return PSeries([_mul2(v, sp.Integer(-1)) for v in self.c], canonical=True)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PSeries) else -sp.S(other))

    def __rsub__(self, other):
        return (-self) + sp.S(other)

    def __mul__(self, other):
        if not isinstance(other, PSeries):
            k = _canon(other)
            return PSeries([_canon(_mul2(v, k)) for v in self.c], canonical=True)
        n = min(self.n, other.n)
        out = [0] * n
        for i, ai in enumerate(self.c[:n]):
            if _is_zero_coef(ai):
                continue
            for j in range(n - i):
                bj = other.c[j]
                if _is_zero_coef(bj):
                    continue
                out[i + j] = _add2(out[i + j], _mul2(ai, bj))
        return PSeries([_canon(v) if not isinstance(v, (int, sp.Poly)) else v
                        for v in out], canonical=True)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse; constant term must be a nonzero number."""
        n = self.n
        a0 = as_expr_coef(self.c[0])
        if a0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv_a0 = _canon(1 / a0)
        out = [sp.S.Zero] * n
        out[0] = inv_a0
        for k in range(1, n):
            acc = 0
            for i in range(1, k + 1):
                if not _is_zero_coef(self.c[i]) and not _is_zero_coef(out[k - i]):
                    acc = _add2(acc, _mul2(self.c[i], out[k - i]))
            out[k] = _canon(_mul2(_mul2(acc, sp.Integer(-1)), inv_a0))
        return PSeries(out, canonical=True)

    def __truediv__(self, other):
        if not isinstance(other, PSeries):
            return self * _canon(sp.S(1) / sp.S(other))
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * _canon(other)

    def shift(self, k):
        """Multiply by var**k (k may be negative; low-order terms must vanish)."""
        n = self.n
        if k >= 0:
            return PSeries([sp.S.Zero] * k + self.c[: n - k], canonical=True)
        if any(not _is_zero_coef(v) for v in self.c[:-k]):
            raise ValueError("negative shift would drop nonzero terms")
        return PSeries(self.c[-k:] + [sp.S.Zero] * (-k), canonical=True)

    def powi(self, k):
        out = PSeries.const(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def pow_sym(self, mu):
        """self**mu for symbolic mu; constant term must be exactly 1."""
        if as_expr_coef(self.c[0]) != 1:
            raise ValueError("pow_sym requires unit constant term")
        u = PSeries([sp.S.Zero] + self.c[1:], canonical=True)
        out = PSeries.const(1, self.n)
        term = PSeries.const(1, self.n)
        coef = sp.S.One
        for k in range(1, self.n):
            term = term * u
            coef = coef * (mu - (k - 1)) / k
            if all(_is_zero_coef(v) for v in term.c):
                break
            out = out + term * _canon(coef)
        return out

    def diff(self):
        """d/dvar, same truncation length (top coefficient set to 0)."""
        out = [_canon(_mul2(v, sp.Integer(j + 1)))
               for j, v in enumerate(self.c[1:])]
        return PSeries(out + [sp.S.Zero], canonical=True)

    def subs(self, mapping):
        return PSeries([as_expr_coef(v).subs(mapping) for v in self.c])

    def eval_at(self, x, nterms=None):
        """Evaluate numerically/symbolically at var = x (Horner)."""
        cs = self.c if nterms is None else self.c[:nterms]
        acc = sp.S.Zero
        for v in reversed(cs):
            acc = acc * x + as_expr_coef(v)
        return acc

    def __repr__(self):
        head = ", ".join(str(v) for v in self.c[:6])
        return f"PSeries[{head}{', ...' if self.n > 6 else ''}]"


def sin_over_theta(nterms):
    """sin(t)/t as a PSeries in t."""
    c = [sp.S.Zero] * nterms
    for j in range(0, nterms, 2):
        c[j] = sp.Rational((-1) ** (j // 2), sp.factorial(j + 1))
    return PSeries(c)


def cos_series(nterms):
    c = [sp.S.Zero] * nterms
    for j in range(0, nterms, 2):
        c[j] = sp.Rational((-1) ** (j // 2), sp.factorial(j))
    return PSeries(c)


def hyp0f1_reg_series(nu, nterms):
    """F(t) = sum_k (-t^2/4)^k / (k! (nu)_k); J_v(t) = (t/2)^v F_{v+1}/Gamma(v+1)."""
    c = [sp.S.Zero] * nterms
    for j in range(0, nterms, 2):
        k = j // 2
        c[j] = sp.Rational(-1, 4) ** k / (sp.factorial(k) * sp.RisingFactorial(nu, k))
    return PSeries([sp.nsimplify(v) for v in c])
