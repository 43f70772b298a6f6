"""Emission of the committed coefficient artifact and source stubs.

Runs the full symbolic derivations (exact alpha, beta symbols), converts
every coefficient into the plain-text table grammar understood by the
runtime package, and writes:

  * the artifact `coefficients_v1.txt` (version line + content hash);
  * a generated module `_coeffs_stubs.py` of scalar Horner evaluators used
    by the runtime test-suite as an independent decoding of the same data.

Deterministic: monomials are emitted in sorted order, so regeneration is
byte-identical.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

import sympy as sp

from . import assemble as asm
from . import besselside as bs
from . import elemsaddle as es
from . import inversion as inv

ALPHA, BETA = es.ALPHA, es.BETA

# committed orders: the trig side carries theta_1..theta_3 (u_4, v_5 are
# the deepest coefficients it needs); the uniform side goes one order
# further (theta_4, Y/Z through index 3) because it has to carry the whole
# node range when alpha or beta is large.
ELEM_MAX_ORDER = 9       # saddle series order: u_2..u_8, v_1..v_9
ELEM_TH_COUNT = 5        # theta_1..theta_5 (trig side)
ELEM_MN_MAX = 4          # m_2..m_8 and n_1..n_7
BESS_ST_MAX = 5          # S_1..S_5, T_0..T_5 (needs A_1..A_11)
BESS_TH_COUNT = 4        # theta_1..theta_4 (Bessel side; theta_1 = T_0)
SERIES_NTERMS = 32       # working series length in theta
SERIES_JCOUNT = 13       # emitted coefficients per entire series
SMALL_THETA_CUT = "0.25"
# series forms only matter below the cut, where corrections beyond these
# orders contribute < 1e-16; the closed forms stand in above
SERIES_ST_MAX = 2        # S_1..S_2, T_0..T_2 series
SERIES_TH_COUNT = 3      # t_{j,1..3} series


def _rat(x) -> str:
    fr = Fraction(sp.Rational(x).p, sp.Rational(x).q)
    return str(fr)


def _poly_monomials(expr, gens):
    """Sorted monomial list [(exps..., coeff)] of a polynomial expression."""
    if isinstance(expr, sp.Poly):
        poly = expr
        if poly.gens != tuple(gens):
            poly = sp.Poly(poly.as_expr(), *gens)
        if poly.is_zero:
            return []
    else:
        expr = sp.expand(expr)
        if expr == 0:
            return []
        poly = sp.Poly(expr, *gens)
    terms = []
    for exps, coeff in poly.terms():
        if not coeff.is_Rational:
            raise ValueError(f"non-rational coefficient {coeff} in {expr}")
        terms.append((tuple(int(e) for e in exps), sp.Rational(coeff)))
    terms.sort(key=lambda t: t[0])
    return terms


def xpoly_lines(name, expr):
    """Emit an elementary closed form sum_j poly_j(c; a, b)/s^j."""
    pieces = {}
    for term in sp.Add.make_args(sp.expand(expr)):
        spow = 0
        rest = sp.S.One
        for fac in sp.Mul.make_args(term):
            base, expo = fac.as_base_exp()
            if base == es.S:
                spow -= int(expo)
            else:
                rest *= fac
        pieces.setdefault(spow, sp.S.Zero)
        pieces[spow] += rest
    out = [f"begin {name}", "xpoly"]
    for spow in sorted(pieces):
        monos = _poly_monomials(pieces[spow], (es.C, ALPHA, BETA))
        if not monos:
            continue
        out.append(f"piece {spow}")
        for (cp, ap, bp), q in monos:
            out.append(f"m {cp} {ap} {bp} {_rat(q)}")
    out.append("end")
    return out


def tfrac_lines(name, tf):
    """Emit an endpoint closed form num/(t^p st^q (1+ct)^r)."""
    out = [f"begin {name}", f"tfrac {tf.p} {tf.q} {tf.r}"]
    for (tp, sp_, cp, ap, bp), q in _poly_monomials(
        tf.num, (bs.T, bs.ST, bs.CT, ALPHA, BETA)
    ):
        out.append(f"m {tp} {sp_} {cp} {ap} {bp} {_rat(q)}")
    out.append("end")
    return out


def series_lines(name, pser, chipow, thpow, jcount=SERIES_JCOUNT):
    """Emit an entire series chi^a t^b sum_j c_j t^(2j)."""
    coeffs = bs.bracket_coeffs(pser, chipow, thpow, jcount)
    out = [f"begin {name}", f"series {chipow} {thpow}"]
    for j, cj in enumerate(coeffs):
        for (ap, bp), q in _poly_monomials(cj, (ALPHA, BETA)):
            out.append(f"s {j} {ap} {bp} {_rat(q)}")
    out.append("end")
    return out


def build_elementary(log=lambda *a: None):
    """u, v, M, N, theta closed forms (symbolic alpha, beta)."""
    import time

    t0 = time.time()
    u, v = asm.uv_coeffs(ALPHA, BETA, ELEM_MAX_ORDER)
    log(f"uv_coeffs({ELEM_MAX_ORDER}): {time.time()-t0:.0f}s")
    t0 = time.time()
    m_list, n_list = asm.mn_coeffs(u, v)
    log(f"mn_coeffs: {time.time()-t0:.0f}s")
    t0 = time.time()
    th = asm.elementary_theta_closed(ELEM_TH_COUNT, u, v)
    log(f"theta closed: {time.time()-t0:.0f}s")
    lines = []
    for i in range(1, len(u)):
        lines += xpoly_lines(f"elem.u.{i}", u[i])
    for i in range(len(v)):
        lines += xpoly_lines(f"elem.v.{i}", v[i])
    for i in range(1, min(len(m_list), ELEM_MN_MAX + 1)):
        lines += xpoly_lines(f"elem.M.{i}", m_list[i])
    for i in range(min(len(n_list), ELEM_MN_MAX)):
        lines += xpoly_lines(f"elem.N.{i}", n_list[i])
    for i, expr in enumerate(th, start=1):
        lines += xpoly_lines(f"elem.th.{i}", expr)
    log("elementary lines done")
    return lines


def build_bessel(log=lambda *a: None):
    """S, T, Y, Z, theta closed + series (symbolic alpha, beta)."""
    import time

    t0 = time.time()
    A, S_l, T_l, Y_l, Z_l = asm.bessel_closed_families(BESS_ST_MAX, ALPHA, BETA)
    log(f"bessel closed families: {time.time()-t0:.0f}s")
    t0 = time.time()
    th = asm.bessel_theta_closed(BESS_TH_COUNT, S_l, T_l, ALPHA)
    log(f"bessel theta closed: {time.time()-t0:.0f}s")
    lines = []
    for i in range(1, len(S_l)):
        lines += tfrac_lines(f"bess.S.{i}", S_l[i])
    for i in range(len(T_l)):
        lines += tfrac_lines(f"bess.T.{i}", T_l[i])
    for i in range(1, len(Y_l)):
        lines += tfrac_lines(f"bess.Y.{i}", Y_l[i])
    for i in range(len(Z_l)):
        lines += tfrac_lines(f"bess.Z.{i}", Z_l[i])
    for i, tf in enumerate(th, start=1):
        if i == 1:
            continue                      # theta_1 = T_0, already present
        lines += tfrac_lines(f"bess.th.{i}", tf)

    t0 = time.time()
    As, S_s, T_s, Y_s, Z_s = asm.bessel_series_families(
        SERIES_ST_MAX, SERIES_NTERMS, ALPHA, BETA
    )
    log(f"bessel series families: {time.time()-t0:.0f}s")
    t0 = time.time()
    th_s = asm.bessel_theta_series(SERIES_TH_COUNT, S_s, T_s, ALPHA)
    log(f"bessel theta series: {time.time()-t0:.0f}s")
    for i in range(1, len(S_s)):
        lines += series_lines(f"sbess.S.{i}", S_s[i], 2 * i, 2)
    for i in range(len(T_s)):
        lines += series_lines(f"sbess.T.{i}", T_s[i], 2 * i + 1, 1)
    for i in range(1, len(Y_s)):
        lines += series_lines(f"sbess.Y.{i}", Y_s[i], 2 * i, 0)
    lines += series_lines("sbess.Z.0", Z_s[0], 0, 0)
    for i in range(1, len(Z_s)):
        lines += series_lines(f"sbess.Z.{i}", Z_s[i], 2 * i + 1, 2)
    for i, ser in enumerate(th_s, start=1):
        lines += series_lines(f"sbess.th.{i}", ser, 2 * i - 1, 1)
    return lines


def build_table_text(log=lambda *a: None):
    meta = [
        f"meta elem_u_max {(ELEM_MAX_ORDER - 1) // 2}",
        f"meta elem_v_max {(ELEM_MAX_ORDER - 1) // 2}",
        f"meta elem_M_max {ELEM_MN_MAX}",
        f"meta elem_N_max {ELEM_MN_MAX - 1}",
        f"meta elem_th_max {ELEM_TH_COUNT}",
        f"meta bess_ST_max {BESS_ST_MAX}",
        f"meta bess_th_max {BESS_TH_COUNT}",
        f"meta series_jcount {SERIES_JCOUNT}",
        f"meta small_theta_cut {SMALL_THETA_CUT}",
    ]
    lines = meta + build_elementary(log) + build_bessel(log)
    payload = "\n".join(lines) + "\n"
    digest = hashlib.sha256(payload.encode()).hexdigest()
    return f"fastgj-tables 1\nhash {digest}\n" + payload, digest


STUB_HEADER = '''"""Scalar Horner evaluators generated from the coefficient artifact.

Independent decoding of the committed table, used by the cross-validation
tests; the runtime itself binds the parsed artifact directly.  Generated
file: do not edit by hand.
"""

import math

ARTIFACT_HASH = "%s"

'''


def _mono_src(coeffmap, var):
    """Horner source string for sum coeffmap[p] * var**p."""
    deg = max(coeffmap)
    body = None
    for p in range(deg, -1, -1):
        cstr = coeffmap.get(p)
        if body is None:
            body = cstr if cstr else "0"
        else:
            body = f"({body})*{var}" + (f" + {cstr}" if cstr else "")
    return f"({body})"


def _abpoly_src(terms):
    """Source for sum q * alpha**ja * beta**jb from [(ja, jb, Fraction)]."""
    parts = []
    for ja, jb, q in terms:
        frag = f"({q.numerator}/{q.denominator})"
        if ja:
            frag += f"*alpha**{ja}" if ja > 1 else "*alpha"
        if jb:
            frag += f"*beta**{jb}" if jb > 1 else "*beta"
        parts.append(frag)
    return "(" + " + ".join(parts) + ")"


def write_stubs(artifact_text, path):
    """Generate the scalar-evaluator module from the artifact text."""
    from fractions import Fraction

    lines = artifact_text.split("\n")
    digest = lines[1].split()[1]
    out = [STUB_HEADER % digest]
    name = None
    kind = None
    data = None

    def flush():
        if name is None:
            return
        fname = name.replace(".", "_")
        if kind == "xpoly":
            pieces = []
            for spow in sorted(data):
                cmap = {}
                for cp, terms in data[spow].items():
                    cmap[cp] = _abpoly_src(terms)
                frag = _mono_src(cmap, "c")
                if spow > 0:
                    frag += f"/s**{spow}" if spow > 1 else "/s"
                elif spow < 0:
                    frag += f"*s**{-spow}" if spow < -1 else "*s"
                pieces.append(frag)
            body = " + ".join(pieces)
            out.append(f"def {fname}(c, s, alpha, beta):\n    return {body}\n\n")
        elif kind == "tfrac":
            p, q, r, groups = data
            pieces = []
            for (tp, sp_), cmap in sorted(groups.items()):
                cm = {cp: _abpoly_src(terms) for cp, terms in cmap.items()}
                frag = _mono_src(cm, "ct")
                if tp:
                    frag += f"*t**{tp}" if tp > 1 else "*t"
                if sp_:
                    frag += f"*st**{sp_}" if sp_ > 1 else "*st"
                pieces.append(frag)
            den = []
            if p:
                den.append(f"t**{p}" if p > 1 else "t")
            if q:
                den.append(f"st**{q}" if q > 1 else "st")
            if r:
                den.append(f"(1+ct)**{r}" if r > 1 else "(1+ct)")
            body = "(" + " + ".join(pieces) + ")"
            if den:
                body += "/(" + "*".join(den) + ")"
            out.append(f"def {fname}(t, st, ct, alpha, beta):\n    return {body}\n\n")
        else:
            chipow, thpow, cmap = data
            cm = {j: _abpoly_src(terms) for j, terms in cmap.items()}
            body = _mono_src(cm, "t2")
            out.append(
                f"def {fname}(t, alpha, beta):\n"
                f"    t2 = t*t\n"
                f"    val = {body}\n"
                + (f"    val = val * (t/math.sin(t))**{chipow}\n" if chipow else "")
                + (f"    val = val * t**{thpow}\n" if thpow else "")
                + "    return val\n\n"
            )

    for line in lines[2:]:
        tok = line.split()
        if not tok or tok[0] == "meta":
            continue
        if tok[0] == "begin":
            flush()
            name = tok[1]
            kind = None
        elif tok[0] == "xpoly":
            kind = "xpoly"
            data = {}
        elif tok[0] == "piece":
            data.setdefault(int(tok[1]), {})
            cur_piece = int(tok[1])
        elif tok[0] == "tfrac":
            kind = "tfrac"
            data = (int(tok[1]), int(tok[2]), int(tok[3]), {})
        elif tok[0] == "series":
            kind = "series"
            data = (int(tok[1]), int(tok[2]), {})
        elif tok[0] == "m":
            if kind == "xpoly":
                data[cur_piece].setdefault(int(tok[1]), []).append(
                    (int(tok[2]), int(tok[3]), Fraction(tok[4]))
                )
            else:
                groups = data[3]
                key = (int(tok[1]), int(tok[2]))
                groups.setdefault(key, {}).setdefault(int(tok[3]), []).append(
                    (int(tok[4]), int(tok[5]), Fraction(tok[6]))
                )
        elif tok[0] == "s":
            data[2].setdefault(int(tok[1]), []).append(
                (int(tok[2]), int(tok[3]), Fraction(tok[4]))
            )
        elif tok[0] == "end":
            flush()
            name = None
    flush()
    src = "".join(out)
    with open(path, "w") as fh:
        fh.write(src)
    return path


def main(out_dir):
    import os
    import time

    t0 = time.time()

    def log(msg):
        print(f"[{time.time()-t0:7.0f}s] {msg}", flush=True)

    text, digest = build_table_text(log)
    path = os.path.join(out_dir, "coefficients_v1.txt")
    with open(path, "w") as fh:
        fh.write(text)
    stub_path = os.path.join(os.path.dirname(out_dir), "_coeffs_stubs.py")
    write_stubs(text, stub_path)
    print(f"wrote {path} ({len(text)} bytes, hash {digest[:12]}...) "
          f"and {stub_path} in {time.time() - t0:.0f}s")
    return path


if __name__ == "__main__":
    import sys

    main(sys.argv[1] if len(sys.argv) > 1 else ".")
