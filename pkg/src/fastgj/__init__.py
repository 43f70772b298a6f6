"""Gauss-Jacobi quadrature by non-iterative large-degree asymptotics.

Nodes and weights of the n-point rule for the weight
(1-x)^alpha (1+x)^beta on [-1, 1] are computed directly from asymptotic
expansions (an interior trigonometric form and an endpoint-uniform Bessel
form), reaching near double precision relative accuracy for n >= 100 and
-1 < alpha, beta <= 5 without any iteration; small degrees fall back to a
recurrence + Newton path seeded by the same formulas.  Lobatto and Radau
variants and barycentric interpolation weights build on the core rule.

>>> from fastgj import gauss_jacobi
>>> rule = gauss_jacobi(200, 0.5, -0.25)
>>> float(rule.weights @ rule.nodes**4)   # integrates x^4 exactly
0.43586...
"""

from .core import (
    Branch,
    BranchMisuse,
    DomainTooCloseToEndpoint,
    DomainTooCloseToLeftEnd,
    IndexOutOfRange,
    JacobiParams,
    NotAZero,
    QuadratureRule,
    ThetaNode,
    ThetaNodes,
    gauss_mass_constant,
    kappa,
    log_total_mass,
    reflect,
)
from .besselfun import BesselZero, bessel_j, bessel_j_near_zero, bessel_zero, bessel_zeros
from .besselexp import coef_A1, eval_poly_bessel, eval_U_derivative, node_bessel
from .elementary import (
    eval_poly_elementary,
    eval_W_shifted,
    g_front_factor,
    node_elementary,
)
from .quadrature import (
    BranchPolicy,
    compute_nodes,
    compute_rule,
    compute_weights,
    eval_recurrence,
    gauss_jacobi,
    newton_refine,
)
from .extensions import (
    BarycentricWeights,
    FixedEnd,
    LobattoRule,
    RadauRule,
    barycentric_weights,
    lobatto_rule,
    radau_rule,
)
from .tables import CoefficientTable, baseline_table, default_table

__version__ = "1.0.0"

__all__ = [
    "Branch", "BranchMisuse", "BranchPolicy", "BesselZero",
    "BarycentricWeights", "CoefficientTable", "DomainTooCloseToEndpoint",
    "DomainTooCloseToLeftEnd",
    "FixedEnd", "IndexOutOfRange", "JacobiParams", "LobattoRule", "NotAZero",
    "QuadratureRule", "RadauRule", "ThetaNode", "ThetaNodes",
    "barycentric_weights", "baseline_table", "bessel_j", "bessel_j_near_zero",
    "bessel_zero", "bessel_zeros", "coef_A1", "compute_nodes", "compute_rule",
    "compute_weights", "default_table", "eval_poly_bessel",
    "eval_poly_elementary", "eval_recurrence", "eval_U_derivative",
    "eval_W_shifted", "g_front_factor", "gauss_jacobi", "gauss_mass_constant",
    "kappa", "log_total_mass", "lobatto_rule", "newton_refine",
    "node_bessel", "node_elementary", "radau_rule", "reflect",
]
