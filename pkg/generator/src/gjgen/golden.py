"""High-precision reference rules ("golden" tables) via mpmath.

Zeros are found by Newton iteration in theta on the recurrence-evaluated
polynomial, seeded with the leading asymptotic approximations and
safeguarded by interlacing brackets; weights come from the derivative
identity.  Working precision 50 digits, emission 30 significant digits.
"""

from __future__ import annotations

import csv
import io

import mpmath as mp

WORK_DPS = 50
EMIT_DIGITS = 30


def jacobi_rec(n, a, b, x):
    """(P_n, P_{n-1}) at x by the forward three-term recurrence."""
    p_prev = mp.mpf(1)
    p = (a - b) / 2 + (a + b + 2) * x / 2
    if n == 0:
        return p_prev, mp.mpf(0)
    for k in range(1, n):
        k = mp.mpf(k)
        a_k = (2 * k + a + b + 1) * (2 * k + a + b + 2) / (2 * (k + 1) * (k + a + b + 1))
        b_k = (a**2 - b**2) * (2 * k + a + b + 1) / (
            2 * (k + 1) * (k + a + b + 1) * (2 * k + a + b)
        )
        c_k = (k + a) * (k + b) * (2 * k + a + b + 2) / (
            (k + 1) * (k + a + b + 1) * (2 * k + a + b)
        )
        p, p_prev = (a_k * x + b_k) * p - c_k * p_prev, p
    return p, p_prev


def jacobi_deriv(n, a, b, x, pn, pnm1):
    """P_n'(x) from (P_n, P_{n-1}) by the first-derivative relation."""
    g = 2 * n + a + b
    return (n * (a - b - g * x) * pn + 2 * (n + a) * (n + b) * pnm1) / (g * (1 - x**2))


def bessel_first_zero(nu, m):
    """j_{nu,m} at working precision, nu > -1 (McMahon seed + safeguards)."""
    nu = mp.mpf(nu)
    mu = 4 * nu**2
    aa = (m + nu / 2 - mp.mpf(1) / 4) * mp.pi
    seed = aa - (mu - 1) / (8 * aa) \
        - 4 * (mu - 1) * (7 * mu - 31) / (3 * (8 * aa) ** 3) \
        - 32 * (mu - 1) * (83 * mu**2 - 982 * mu + 3779) / (15 * (8 * aa) ** 5)

    def f(z):
        return mp.besselj(nu, z)

    def fp(z):
        return mp.besselj(nu - 1, z) - nu / z * mp.besselj(nu, z)

    z = seed
    # bracket safeguard for the lowest zeros
    lo, hi = None, None
    if m <= 3:
        step = mp.mpf("0.05")
        zl = max(seed - 1, mp.mpf("1e-3"))
        prev, zprev = f(zl), zl
        zz = zl + step
        while zz < seed + 2:
            cur = f(zz)
            if prev * cur <= 0:
                lo, hi = zprev, zz
                break
            prev, zprev = cur, zz
            zz += step
        if lo is not None:
            z = (lo + hi) / 2
    for _ in range(80):
        dz = f(z) / fp(z)
        z_new = z - dz
        if lo is not None and not (lo <= z_new <= hi):
            z_new = (lo + hi) / 2
        if lo is not None:
            if f(z_new) * f(lo) <= 0:
                hi = z_new
            else:
                lo = z_new
        if abs(z_new - z) < mp.mpf(10) ** (-WORK_DPS + 2):
            z = z_new
            break
        z = z_new
    return z


def reference_rule(n, alpha, beta, dps=WORK_DPS):
    """Nodes/weights of the n-point rule at `dps` digits.

    Returns lists (theta, x, w, omega) indexed by k = 1..n ascending in x.
    """
    with mp.workdps(dps):
        a, b = mp.mpf(alpha), mp.mpf(beta)
        kap = n + (a + b + 1) / 2
        thetas = []
        # seeds: elementary phase guess; Bessel-zero guess near both ends
        edge = max(10, n // 10)
        for k in range(1, n + 1):
            th0 = (n + 1 - k + a / 2 - mp.mpf(1) / 4) * mp.pi / kap
            if k > n - edge:                     # near x = +1
                th0 = bessel_first_zero(a, n + 1 - k) / kap
            elif k <= edge:                      # near x = -1
                th0 = mp.pi - bessel_first_zero(b, k) / kap
            thetas.append(th0)

        # interlacing brackets from midpoints of the seeds
        def newton(th, lo, hi):
            for _ in range(120):
                x = mp.cos(th)
                pn, pnm1 = jacobi_rec(n, a, b, x)
                dp = jacobi_deriv(n, a, b, x, pn, pnm1)
                dth = pn / (mp.sin(th) * dp)     # f' = -sin(theta) P'
                th_new = th + dth
                if not (lo < th_new < hi):
                    th_new = (lo + hi) / 2
                    xl = mp.cos(hi)              # note: theta hi -> x lo
                    pl, plm1 = jacobi_rec(n, a, b, xl)
                    if pl * pn <= 0:
                        lo = th_new if False else lo
                if abs(th_new - th) < mp.mpf(10) ** (-dps + 3):
                    return th_new
                th = th_new
            raise RuntimeError("Newton did not converge")

        out_theta = []
        for k in range(1, n + 1):
            th = thetas[k - 1]
            hi = (thetas[k - 2] + th) / 2 if k >= 2 else min(th * 2, mp.pi * (1 - mp.mpf(10) ** -10))
            lo = (thetas[k] + th) / 2 if k <= n - 1 else th / 2
            out_theta.append(newton(th, lo, hi))

        logM = (a + b + 1) * mp.log(2) + mp.loggamma(n + a + 1) + mp.loggamma(n + b + 1) \
            - mp.loggamma(n + 1) - mp.loggamma(n + a + b + 1)
        xs, ws, oms = [], [], []
        for th in out_theta:
            x = mp.cos(th)
            pn, pnm1 = jacobi_rec(n, a, b, x)
            dp = jacobi_deriv(n, a, b, x, pn, pnm1)
            logw = logM - mp.log(1 - x**2) - 2 * mp.log(abs(dp))
            w = mp.e**logw
            logom = logw - (2 * a + 1) * mp.log(mp.sin(th / 2)) \
                - (2 * b + 1) * mp.log(mp.cos(th / 2))
            xs.append(x)
            ws.append(w)
            oms.append(mp.e**logom)
        return out_theta, xs, ws, oms


def emit_csv(n, alpha, beta, path=None, dps=WORK_DPS):
    """Write the golden CSV (header n,alpha,beta,k,theta,x,w,omega)."""
    theta, xs, ws, oms = reference_rule(n, alpha, beta, dps=dps)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "alpha", "beta", "k", "theta", "x", "w", "omega"])
    with mp.workdps(dps):
        a_s = mp.nstr(mp.mpf(alpha), EMIT_DIGITS)
        b_s = mp.nstr(mp.mpf(beta), EMIT_DIGITS)
        for k in range(1, n + 1):
            writer.writerow(
                [
                    n,
                    a_s,
                    b_s,
                    k,
                    mp.nstr(theta[k - 1], EMIT_DIGITS),
                    mp.nstr(xs[k - 1], EMIT_DIGITS),
                    mp.nstr(ws[k - 1], EMIT_DIGITS),
                    mp.nstr(oms[k - 1], EMIT_DIGITS),
                ]
            )
    data = buf.getvalue()
    if path is not None:
        with open(path, "w") as fh:
            fh.write(data)
    return data


if __name__ == "__main__":
    import time

    t0 = time.time()
    theta, xs, ws, oms = reference_rule(100, mp.mpf(1) / 3, mp.mpf(1) / 4)
    print("largest zero:", mp.nstr(xs[-1], 20), " (expect 0.9995853721163790)")
    print("sum w:", mp.nstr(mp.fsum(ws), 25))
    a, b = mp.mpf(1) / 3, mp.mpf(1) / 4
    mass = 2 ** (a + b + 1) * mp.gamma(a + 1) * mp.gamma(b + 1) / mp.gamma(a + b + 2)
    print("mass :", mp.nstr(mass, 25))
    print("elapsed", time.time() - t0)
