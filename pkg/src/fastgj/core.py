"""Problem parameters, gamma-ratio machinery, mass constants, reflection.

Everything in the package works in the angular variable theta with
x = cos(theta); nodes are indexed k = 1..n with x_1 < x_2 < ... < x_n.
Large-argument gamma ratios are evaluated through a symmetric-point
asymptotic series so that mass constants and front factors keep full
relative precision for degrees up to 10^6 and beyond.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln


class Branch(enum.IntEnum):
    """Provenance tag of a computed node."""

    ELEMENTARY = 0
    BESSEL_RIGHT = 1
    REFLECTED_ELEMENTARY = 2
    REFLECTED_BESSEL = 3
    RECURRENCE = 4


class DomainTooCloseToEndpoint(ValueError):
    """theta fell outside the validity band of the requested expansion."""


class DomainTooCloseToLeftEnd(DomainTooCloseToEndpoint):
    """theta approached pi: the x = -1 endpoint is served by reflection."""


class BranchMisuse(ValueError):
    """A node index was routed to an expansion outside its validity band."""


class NotAZero(ValueError):
    """The reference point passed as a Bessel zero is not one."""


class IndexOutOfRange(ValueError):
    """Node index outside 1..n (or Bessel zero index outside its range)."""


@dataclass(frozen=True)
class JacobiParams:
    """Degree and exponents of the weight (1-x)^alpha (1+x)^beta.

    Requires n >= 1 and alpha, beta > -1.  `accuracy_guaranteed` reports
    whether (n, alpha, beta) lies in the regime where the asymptotic
    expansions were validated to near double precision; outside it the
    rule is still computed but may carry fewer correct digits.
    """

    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not (self.alpha > -1.0):
            raise ValueError(f"alpha must be > -1, got {self.alpha}")
        if not (self.beta > -1.0):
            raise ValueError(f"beta must be > -1, got {self.beta}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    @property
    def kappa(self) -> float:
        return self.n + 0.5 * (self.alpha + self.beta + 1.0)

    @property
    def accuracy_guaranteed(self) -> bool:
        return self.n >= 20 and -1.0 < self.alpha <= 5.0 and -1.0 < self.beta <= 5.0

    def swapped(self) -> "JacobiParams":
        """The (beta, alpha) problem, whose positive nodes reflect onto ours."""
        return JacobiParams(self.n, self.beta, self.alpha)


@dataclass(frozen=True)
class ThetaNode:
    """One node in angle form: theta = theta0 + eps, x = cos(theta)."""

    k: int
    theta: float
    theta0: float
    eps: float
    x: float
    branch: Branch


class ThetaNodes:
    """Node set of one rule as arrays; indexable to ThetaNode views.

    Per-node state is kept as parallel numpy arrays (the per-node object
    API would dominate the runtime at n ~ 10^6); `nodes[i]` materializes a
    ThetaNode for inspection.
    """

    __slots__ = ("params", "k", "theta", "theta0", "eps", "x", "branch",
                 "j", "tau", "refine_risk")

    def __init__(self, params, k, theta, theta0, eps, x, branch):
        self.params = params
        self.k = np.asarray(k, dtype=np.int64)
        self.theta = np.asarray(theta, dtype=np.float64)
        self.theta0 = np.asarray(theta0, dtype=np.float64)
        self.eps = np.asarray(eps, dtype=np.float64)
        self.x = np.asarray(x, dtype=np.float64)
        self.branch = np.asarray(branch, dtype=np.int8)
        self.j = None            # per-node Bessel zero where applicable
        self.tau = None          # theta - pi/2, cancellation-free
        self.refine_risk = None  # set by newton_refine when steps clamp

    def __len__(self):
        return self.k.size

    def __getitem__(self, i) -> ThetaNode:
        return ThetaNode(
            k=int(self.k[i]),
            theta=float(self.theta[i]),
            theta0=float(self.theta0[i]),
            eps=float(self.eps[i]),
            x=float(self.x[i]),
            branch=Branch(int(self.branch[i])),
        )

    def __iter__(self):
        return (self[i] for i in range(len(self)))


@dataclass
class QuadratureRule:
    """Complete rule: ascending nodes, weights, scaled weights, provenance."""

    params: JacobiParams
    nodes: np.ndarray
    weights: np.ndarray
    scaled_weights: np.ndarray
    theta: np.ndarray
    branch_log: np.ndarray

    def __post_init__(self):
        n = self.params.n
        for name in ("nodes", "weights", "scaled_weights", "theta", "branch_log"):
            arr = getattr(self, name)
            if arr.shape != (n,):
                raise ValueError(f"{name} must have shape ({n},)")


def kappa(params: JacobiParams) -> float:
    """Large asymptotic parameter n + (alpha + beta + 1)/2."""
    return params.kappa


# ----------------------------------------------------------------------
# gamma-ratio series: Gamma(z + d)/Gamma(z) without large-argument
# cancellation.  With w = z + (d-1)/2 and rho = (d+1)/2,
#   Gamma(z+d)/Gamma(z) = w^d * sum_m C_m(rho) (-d)_{2m} / w^(2m),
# the series terminating exactly for integer d.
# ----------------------------------------------------------------------

_C_POLYS = (
    lambda r: 1.0,
    lambda r: -r / 12.0,
    lambda r: r * (5.0 * r + 1.0) / 1440.0,
    lambda r: -r * (35.0 * r**2 + 21.0 * r + 4.0) / 362880.0,
    lambda r: r * (5.0 * r + 2.0) * (35.0 * r**2 + 28.0 * r + 9.0) / 87091200.0,
    lambda r: -r * (385.0 * r**4 + 770.0 * r**3 + 671.0 * r**2 + 286.0 * r + 48.0)
    / 11496038400.0,
    lambda r: r
    * (
        175175.0 * r**5 + 525525.0 * r**4 + 715715.0 * r**3
        + 531531.0 * r**2 + 207974.0 * r + 33168.0
    )
    / 376610217984000.0,
)

_GAMMA_RATIO_MIN_W = 25.0


def log_gamma_ratio(z: float, d: float) -> float:
    """log(Gamma(z + d)/Gamma(z)), accurate to a few ulps for all z >= 1.

    Uses the symmetric-point series when w = z + (d-1)/2 is large enough,
    else falls back to gammaln differences (safe there: both arguments are
    small, so no significance is lost).
    """
    w = z + 0.5 * (d - 1.0)
    if w < _GAMMA_RATIO_MIN_W or abs(d) > 10.0:
        return float(gammaln(z + d) - gammaln(z))
    rho = 0.5 * (d + 1.0)
    acc = 0.0
    poch = 1.0          # (-d)_{2m}
    w2 = w * w
    wpow = 1.0
    for m, cpoly in enumerate(_C_POLYS):
        if m > 0:
            poch *= (-d + 2 * m - 2) * (-d + 2 * m - 1)
            wpow *= w2
            if poch == 0.0:
                break
        acc += cpoly(rho) * poch / wpow
    return d * math.log(w) + math.log(acc)


def log_total_mass(alpha: float, beta: float) -> float:
    """log of the zeroth moment 2^(a+b+1) B(a+1, b+1) of the weight."""
    if not (alpha > -1.0 and beta > -1.0):
        raise ValueError("alpha and beta must be > -1")
    return (
        (alpha + beta + 1.0) * math.log(2.0)
        + float(gammaln(alpha + 1.0))
        + float(gammaln(beta + 1.0))
        - float(gammaln(alpha + beta + 2.0))
    )


def gauss_mass_constant(params: JacobiParams) -> float:
    """log of M = 2^(a+b+1) Gamma(n+a+1) Gamma(n+b+1) / (n! Gamma(n+a+b+1)).

    Evaluated as a pair of balanced gamma ratios so that no significance is
    lost for large n (the direct gammaln difference loses ~ log10(n) digits).
    """
    n, a, b = params.n, params.alpha, params.beta
    return (
        (a + b + 1.0) * math.log(2.0)
        + log_gamma_ratio(n + 1.0, a)
        - log_gamma_ratio(n + b + 1.0, a)
    )


def log_front_factor_direct(params: JacobiParams) -> float:
    """log G = log(Gamma(n+alpha+1)/n!) - alpha log kappa, ratio route."""
    n, a = params.n, params.alpha
    return log_gamma_ratio(n + 1.0, a) - a * math.log(params.kappa)


def reflect(params: JacobiParams, nodes: ThetaNodes) -> ThetaNodes:
    """Map the positive-x node set of the (beta, alpha) problem onto ours.

    P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x): the k-th smallest node of the
    (a, b) problem is the negated (n+1-k)-th node of the swapped problem.
    Weights and scaled weights transport unchanged (the mass constant is
    symmetric in alpha, beta), so only the node set is handled here.
    """
    if nodes.params.alpha != params.beta or nodes.params.beta != params.alpha:
        raise ValueError("reflect expects the node set of the swapped problem")
    order = slice(None, None, -1)
    branch = nodes.branch[order].copy()
    branch[branch == Branch.ELEMENTARY] = Branch.REFLECTED_ELEMENTARY
    branch[branch == Branch.BESSEL_RIGHT] = Branch.REFLECTED_BESSEL
    out = ThetaNodes(
        params=params,
        k=params.n + 1 - nodes.k[order],
        theta=np.pi - nodes.theta[order],
        theta0=np.pi - nodes.theta0[order],
        eps=-nodes.eps[order],
        x=-nodes.x[order],
        branch=branch,
    )
    if nodes.tau is not None:
        out.tau = -nodes.tau[order]
    return out
