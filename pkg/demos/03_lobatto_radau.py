"""Endpoint-fixed rules: Lobatto (both ends) and Radau (one end).

Both reduce to Gauss rules with shifted exponents for the interior nodes;
fixing endpoints costs one degree of exactness per fixed node but gives
collocation points at the boundary, which spectral discretizations want.
"""

import math

import numpy as np

import fastgj

alpha, beta = 0.5, -0.25

lob = fastgj.lobatto_rule(alpha, beta, 30)
print(f"Lobatto: {len(lob.nodes)} nodes, endpoints "
      f"{lob.nodes[0]:+.1f}, {lob.nodes[-1]:+.1f}")
print(f"  boundary weights {lob.v_left:.6e}, {lob.v_right:.6e}")

# exact through degree 2*30 + 1
mass = math.exp(fastgj.log_total_mass(alpha, beta))
print(f"  mass closure: {abs(lob.weights.sum() / mass - 1):.2e}")

rad = fastgj.radau_rule(alpha, beta, 30, fastgj.FixedEnd.LEFT)
print(f"\nRadau(left): boundary weight {rad.v_boundary:.6e}")

# integrate x^k exactly for k <= 2n with one fixed node
x, w = rad.nodes, rad.weights
mu0, mu1 = mass, (beta - alpha) / (alpha + beta + 2) * mass
mus = [mu0, mu1]
for k in range(1, 60):
    mus.append(((beta - alpha) * mus[k] + k * mus[k - 1])
               / (k + alpha + beta + 2))
worst = max(abs(float(w @ x**k) - mus[k]) / abs(mus[k]) for k in range(60))
print(f"  worst moment error (k < 60): {worst:.2e}")

# duality: the right-fixed rule of the swapped weight mirrors it
rad_r = fastgj.radau_rule(beta, alpha, 30, fastgj.FixedEnd.RIGHT)
print(f"  left/right duality: "
      f"{np.max(np.abs(rad.interior_nodes + rad_r.interior_nodes[::-1])):.2e}")
