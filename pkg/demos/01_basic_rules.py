"""First steps: build a rule, integrate, inspect the pieces.

The weight is (1-x)^alpha (1+x)^beta on [-1, 1]; an n-point rule is exact
for polynomials of degree < 2n.  Nodes come out ascending with positive
weights; scaled weights are the flat, overflow-free representation the
weights are assembled from.
"""

import math

import numpy as np

import fastgj

# a 200-point rule for an endpoint-singular weight
rule = fastgj.gauss_jacobi(200, -0.5, 0.25)
print(f"n = {rule.params.n}, first node {rule.nodes[0]:.15f}, "
      f"last {rule.nodes[-1]:.15f}")

# exactness: the zeroth moment is 2^(a+b+1) B(a+1, b+1)
mass = math.exp(fastgj.log_total_mass(-0.5, 0.25))
print(f"sum of weights      {rule.weights.sum():.16e}")
print(f"total mass          {mass:.16e}")

# integrate something smooth: cos(3x) against the weight
approx = rule.weights @ np.cos(3.0 * rule.nodes)
print(f"integral of cos(3x) {approx:.16e}")

# convergence is fast: a 20-point rule already agrees to ~1e-15
small = fastgj.gauss_jacobi(20, -0.5, 0.25)
print(f"20-point rule       {small.weights @ np.cos(3.0 * small.nodes):.16e}")

# the branch log records which expansion produced each node
import collections

print("branches:", {fastgj.Branch(k).name: v for k, v in
                    collections.Counter(rule.branch_log.tolist()).items()})
