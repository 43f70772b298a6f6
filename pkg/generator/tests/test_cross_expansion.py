"""Cross-validation of the two zero expansions at 50 digits.

The trigonometric and Bessel-type series are independent derivations of
the same zeros; evaluated with exact rational coefficients at 50 digits on
the overlap band they must agree to the truncation-order-predicted level
(far below 1e-20 at n = 1000).  This exercises both symbolic pipelines
end to end.
"""

import mpmath as mp
import pytest
import sympy as sp

from gjgen import assemble as asm
from gjgen import besselside as bs
from gjgen import elemsaddle as es
from gjgen import golden

mp.mp.dps = 50


@pytest.fixture(scope="module")
def pipelines():
    a, b = sp.Rational(1, 10), sp.Rational(-3, 10)
    u, v = asm.uv_coeffs(a, b, 9)
    th_e = asm.elementary_theta_closed(4, u, v)
    th_e_f = [sp.lambdify((es.C, es.S), e, "mpmath") for e in th_e]
    A, S_l, T_l, _, _ = asm.bessel_closed_families(3, a, b)
    th_b = asm.bessel_theta_closed(4, S_l, T_l, a)

    def make(tf):
        fn = sp.lambdify((bs.T, bs.ST, bs.CT), tf.num.as_expr(), "mpmath")
        p, q, r = tf.p, tf.q, tf.r
        return lambda t, s, c: fn(t, s, c) / (t**p * s**q * (1 + c) ** r)

    return th_e_f, [make(tf) for tf in th_b]


def test_overlap_band_n1000(pipelines):
    th_e_f, th_b_f = pipelines
    n = 1000
    am, bm = mp.mpf(1) / 10, mp.mpf(-3) / 10
    kap = n + (am + bm + 1) / 2
    worst = mp.mpf(0)
    for k in range(780, 840, 10):        # theta ~ 0.52..0.7: both valid
        th0e = (n + 1 - k + am / 2 - mp.mpf(1) / 4) * mp.pi / kap
        theta_e = th0e
        c0, s0 = mp.cos(th0e), mp.sin(th0e)
        for i, f in enumerate(th_e_f, start=1):
            theta_e += f(c0, s0) / kap ** (2 * i)
        m = n + 1 - k
        j = golden.bessel_first_zero(am, m)
        th0b = j / kap
        theta_b = th0b
        tb, stb, ctb = th0b, mp.sin(th0b), mp.cos(th0b)
        for i, f in enumerate(th_b_f, start=1):
            theta_b += f(tb, stb, ctb) / kap ** (2 * i)
        worst = max(worst, abs(theta_e - theta_b))
    assert worst < mp.mpf("1e-20"), f"overlap disagreement {mp.nstr(worst, 3)}"