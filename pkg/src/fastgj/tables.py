"""Committed expansion-coefficient tables: parsing and parameter binding.

The table artifact is a plain-text file (see `data/coefficients_v1.txt`)
produced offline by the companion generator package.  Grammar (line based,
LF, exact rationals `p/q` or integers):

    fastgj-tables 1
    hash <sha256 of every line below this one>
    meta <key> <value>
    begin <name>
    xpoly                      elementary closed form, value = sum of pieces
    piece <spow>                 piece = poly(c, alpha, beta) / sin^spow
    m <cpow> <apow> <bpow> <q>     one monomial of the piece polynomial
    ...
    end
    begin <name>
    tfrac <p> <q> <r>          endpoint closed form over t^p st^q (1+ct)^r
    m <tpow> <stpow> <ctpow> <apow> <bpow> <q>
    end
    begin <name>
    series <chipow> <thpow>    entire series: chi^a t^b sum_j c_j t^(2j)
    s <j> <apow> <bpow> <q>
    end

Loaded coefficients are bound to numeric (alpha, beta) once per rule; the
bound forms evaluate vectorized over numpy arrays of theta (and cos/sin).
"""

from __future__ import annotations

import functools
import hashlib
import importlib.resources
from dataclasses import dataclass, field

import numpy as np

DATA_PACKAGE = "fastgj.data"
DATA_FILE = "coefficients_v1.txt"

#: below this angle the Bessel-side closed forms switch to their series
SMALL_THETA_CUT = 0.25


class TableFormatError(ValueError):
    """Malformed coefficient-table artifact."""


# ----------------------------------------------------------------------
# raw (exact) records
# ----------------------------------------------------------------------

def _ab_powers(alpha, beta, ap, bp):
    """alpha**ap * beta**bp over integer exponent arrays (vectorized)."""
    return np.power(alpha, ap) * np.power(beta, bp)


@dataclass
class XPolyData:
    """Elementary closed form: sum over pieces poly(c; a, b)/s^spow."""

    pieces: dict = field(default_factory=dict)   # spow -> [(cpow, apow, bpow, coeff)]
    _packed: list = None

    def _pack(self):
        packed = []
        for spow, monoms in sorted(self.pieces.items()):
            arr = np.array([(m[0], m[1], m[2], float(m[3])) for m in monoms])
            packed.append((spow, arr[:, 0].astype(int), arr[:, 1],
                           arr[:, 2], arr[:, 3]))
        self._packed = packed

    def bind(self, alpha, beta):
        if self._packed is None:
            self._pack()
        out = []
        for spow, cpow, ap, bp, q in self._packed:
            vals = q * _ab_powers(alpha, beta, ap, bp)
            cvec = np.zeros(int(cpow.max()) + 1)
            np.add.at(cvec, cpow, vals)
            out.append((spow, cvec[::-1]))       # np.polyval order
        return BoundXPoly(out)


@dataclass
class TFracData:
    """Endpoint closed form: poly(t, st, ct; a, b)/(t^p st^q (1+ct)^r)."""

    p: int
    q: int
    r: int
    monoms: list = field(default_factory=list)   # (tp, sp, cp, ap, bp, coeff)
    _packed: list = None

    def _pack(self):
        groups = {}
        for tp, sp_, cp, ap, bp, q in self.monoms:
            groups.setdefault((tp, sp_), []).append((cp, ap, bp, float(q)))
        packed = []
        for (tp, sp_), rows in sorted(groups.items()):
            arr = np.array(rows)
            packed.append((tp, sp_, arr[:, 0].astype(int), arr[:, 1],
                           arr[:, 2], arr[:, 3]))
        self._packed = packed

    def bind(self, alpha, beta):
        if self._packed is None:
            self._pack()
        ngroups = len(self._packed)
        degmax = max(int(cp.max()) for _, _, cp, *_ in self._packed)
        cmat = np.zeros((ngroups, degmax + 1))
        tp_arr = np.empty(ngroups, dtype=np.int64)
        sp_arr = np.empty(ngroups, dtype=np.int64)
        for g, (tp, sp_, cp, ap, bp, q) in enumerate(self._packed):
            vals = q * _ab_powers(alpha, beta, ap, bp)
            np.add.at(cmat[g], degmax - cp, vals)    # Horner order
            tp_arr[g] = tp
            sp_arr[g] = sp_
        return BoundTFrac(self.p, self.q, self.r, cmat, tp_arr, sp_arr)


@dataclass
class SeriesData:
    """Entire small-theta series chi^a t^b sum_j c_j t^(2j)."""

    chipow: int
    thpow: int
    coeffs: list = field(default_factory=list)   # (j, apow, bpow, coeff)
    _packed: tuple = None

    def bind(self, alpha, beta):
        if self._packed is None:
            arr = np.array([(c[0], c[1], c[2], float(c[3]))
                            for c in self.coeffs])
            self._packed = (arr[:, 0].astype(int), arr[:, 1], arr[:, 2],
                            arr[:, 3])
        jj, ap, bp, q = self._packed
        vec = np.zeros(int(jj.max()) + 1)
        np.add.at(vec, jj, q * _ab_powers(alpha, beta, ap, bp))
        return BoundSeries(self.chipow, self.thpow, vec[::-1])


# ----------------------------------------------------------------------
# bound (numeric) evaluators
# ----------------------------------------------------------------------

class BoundXPoly:
    __slots__ = ("pieces",)

    def __init__(self, pieces):
        self.pieces = pieces

    def __call__(self, c, s):
        total = None
        for spow, cvec in self.pieces:
            val = np.polyval(cvec, c)
            if spow:
                val = val / s**spow
            total = val if total is None else total + val
        return total


class BoundTFrac:
    __slots__ = ("p", "q", "r", "cmat", "tp", "sp", "_live")

    def __init__(self, p, q, r, cmat, tp, sp):
        self.p = p
        self.q = q
        self.r = r
        self.cmat = cmat            # (ngroups, deg+1), Horner order in ct
        self.tp = tp
        self.sp = sp
        self._live = [bool(np.any(cmat[:, d])) for d in range(cmat.shape[1])]

    def __call__(self, t, st, ct):
        t = np.atleast_1d(np.asarray(t, dtype=np.float64))
        st = np.atleast_1d(np.asarray(st, dtype=np.float64))
        ct = np.atleast_1d(np.asarray(ct, dtype=np.float64))
        # all groups at once: Horner across the coefficient matrix ...
        acc = np.broadcast_to(self.cmat[:, 0][:, None],
                              (self.cmat.shape[0], t.size)).copy()
        for d in range(1, self.cmat.shape[1]):
            acc *= ct[None, :]
            if self._live[d]:
                acc += self.cmat[:, d][:, None]
        # ... times the t/st monomial of each group, via power tables
        tpow = _power_table(t, int(self.tp.max()))
        spow = _power_table(st, int(self.sp.max()))
        acc *= tpow[self.tp]
        acc *= spow[self.sp]
        num = acc.sum(axis=0)
        den = 1.0
        if self.p:
            den = den * t**self.p
        if self.q:
            den = den * st**self.q
        if self.r:
            den = den * (1.0 + ct) ** self.r
        out = num / den
        return out if out.size > 1 else out[0]


def _power_table(x, maxpow):
    """[x^0, x^1, ..., x^maxpow] stacked as rows."""
    out = np.empty((maxpow + 1, x.size))
    out[0] = 1.0
    for k in range(1, maxpow + 1):
        out[k] = out[k - 1] * x
    return out


class BoundSeries:
    __slots__ = ("chipow", "thpow", "vec")

    def __init__(self, chipow, thpow, vec):
        self.chipow = chipow
        self.thpow = thpow
        self.vec = vec

    def __call__(self, t, st=None):
        val = np.polyval(self.vec, t * t)
        if self.chipow:
            st = np.sin(t) if st is None else st
            val = val * (t / st) ** self.chipow
        if self.thpow:
            val = val * t**self.thpow
        return val


# ----------------------------------------------------------------------
# table container
# ----------------------------------------------------------------------

@dataclass
class CoefficientTable:
    """All expansion coefficients with their maximum available orders."""

    records: dict
    meta: dict
    content_hash: str

    def __post_init__(self):
        self._bind_cache = {}

    def max_order(self, family: str) -> int:
        """Largest index present for e.g. 'elem.u', 'bess.th'."""
        best = -1
        for name in self.records:
            fam, _, idx = name.rpartition(".")
            if fam == family:
                best = max(best, int(idx))
        return best

    def restricted(self, limits: dict) -> "CoefficientTable":
        """Sub-table keeping only entries within per-family index limits.

        Used for the printed-orders baseline configuration; families not
        named in `limits` are kept whole.
        """
        keep = {}
        for name, rec in self.records.items():
            fam, _, idx = name.rpartition(".")
            base = fam[1:] if fam.startswith("s") and fam[1:].startswith("bess") else fam
            lim = limits.get(base, limits.get(fam))
            if lim is None or int(idx) <= lim:
                keep[name] = rec
        return CoefficientTable(records=keep, meta=dict(self.meta),
                                content_hash=self.content_hash + ":restricted")

    def bind(self, alpha: float, beta: float) -> "BoundTable":
        key = (float(alpha), float(beta))
        cached = self._bind_cache.get(key)
        if cached is None:
            cached = BoundTable(self, *key)
            if len(self._bind_cache) > 64:
                self._bind_cache.clear()
            self._bind_cache[key] = cached
        return cached


class BoundTable:
    """Coefficient evaluators bound to one (alpha, beta)."""

    def __init__(self, table: CoefficientTable, alpha: float, beta: float):
        self.table = table
        self.alpha = alpha
        self.beta = beta
        self._bound = {}

    def get(self, name: str):
        fn = self._bound.get(name)
        if fn is None:
            rec = self.table.records.get(name)
            if rec is None:
                return None
            fn = rec.bind(self.alpha, self.beta)
            self._bound[name] = fn
        return fn

    def family(self, prefix: str, start: int = 0):
        """Bound evaluators [prefix.<start>, prefix.<start+1>, ...]."""
        out = []
        idx = start
        while True:
            fn = self.get(f"{prefix}.{idx}")
            if fn is None:
                break
            out.append(fn)
            idx += 1
        return out


def _parse_rational(tok: str) -> float:
    """Exact rational -> correctly-rounded double (big-int division)."""
    if "/" in tok:
        num, den = tok.split("/")
        return int(num) / int(den)
    return float(int(tok))


def parse_table(text: str) -> CoefficientTable:
    lines = text.split("\n")
    if not lines[0].startswith("fastgj-tables 1"):
        raise TableFormatError("bad magic line")
    if not lines[1].startswith("hash "):
        raise TableFormatError("missing hash line")
    stated = lines[1].split()[1]
    payload = "\n".join(lines[2:])
    digest = hashlib.sha256(payload.encode()).hexdigest()
    if digest != stated:
        raise TableFormatError("content hash mismatch")

    records = {}
    meta = {}
    cur_name = None
    cur = None
    cur_piece = None
    for ln, line in enumerate(lines[2:], start=3):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "meta":
            meta[tok[1]] = tok[2]
        elif tok[0] == "begin":
            cur_name = tok[1]
            cur = None
        elif tok[0] == "xpoly":
            cur = XPolyData()
            records[cur_name] = cur
        elif tok[0] == "piece":
            cur_piece = int(tok[1])
            cur.pieces.setdefault(cur_piece, [])
        elif tok[0] == "tfrac":
            cur = TFracData(p=int(tok[1]), q=int(tok[2]), r=int(tok[3]))
            records[cur_name] = cur
        elif tok[0] == "series":
            cur = SeriesData(chipow=int(tok[1]), thpow=int(tok[2]))
            records[cur_name] = cur
        elif tok[0] == "m":
            if isinstance(cur, XPolyData):
                cur.pieces[cur_piece].append(
                    (int(tok[1]), int(tok[2]), int(tok[3]), _parse_rational(tok[4]))
                )
            elif isinstance(cur, TFracData):
                cur.monoms.append(
                    (int(tok[1]), int(tok[2]), int(tok[3]), int(tok[4]),
                     int(tok[5]), _parse_rational(tok[6]))
                )
            else:
                raise TableFormatError(f"line {ln}: m outside xpoly/tfrac")
        elif tok[0] == "s":
            if not isinstance(cur, SeriesData):
                raise TableFormatError(f"line {ln}: s outside series")
            cur.coeffs.append(
                (int(tok[1]), int(tok[2]), int(tok[3]), _parse_rational(tok[4]))
            )
        elif tok[0] == "end":
            cur = None
        else:
            raise TableFormatError(f"line {ln}: unknown directive {tok[0]}")
    return CoefficientTable(records=records, meta=meta, content_hash=stated)


@functools.lru_cache(maxsize=1)
def default_table() -> CoefficientTable:
    """The committed table shipped with the package."""
    text = (
        importlib.resources.files(DATA_PACKAGE).joinpath(DATA_FILE).read_text()
    )
    return parse_table(text)


#: printed-orders restriction: the coefficients that appear in closed form
#: in the standard references (theta1/theta2 + u2/v1 + M/N leading terms on
#: the trig side; A1-level data on the Bessel side)
BASELINE_LIMITS = {
    "elem.u": 1, "elem.v": 0, "elem.M": 1, "elem.N": 0, "elem.th": 2,
    "bess.S": 0, "bess.T": 0, "bess.Y": 0, "bess.Z": 0, "bess.th": 1,
}


@functools.lru_cache(maxsize=1)
def baseline_table() -> CoefficientTable:
    return default_table().restricted(BASELINE_LIMITS)
