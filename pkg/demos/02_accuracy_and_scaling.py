"""Accuracy against an independent route, and cost scaling with degree.

The recurrence + Newton path shares no code with the asymptotic branches,
so agreement between the two is a strong end-to-end check; timing shows
the O(n) character of the direct evaluation.
"""

import time

import numpy as np

import fastgj
from fastgj import BranchPolicy, JacobiParams
from fastgj.quadrature import compute_rule

alpha, beta = 0.3, -0.6

print("agreement of the two independent evaluation paths")
for n in (50, 200, 1000):
    fast = fastgj.gauss_jacobi(n, alpha, beta)
    slow = compute_rule(JacobiParams(n, alpha, beta),
                        policy=BranchPolicy(method="recurrence"))
    node_err = np.max(np.abs(fast.nodes - slow.nodes))
    w_err = np.max(np.abs(fast.weights / slow.weights - 1.0))
    print(f"  n={n:5d}: max node diff {node_err:.2e}, "
          f"max weight rel diff {w_err:.2e}")

print("\ncost per node (nodes + weights, direct path)")
fastgj.gauss_jacobi(100, alpha, beta)          # warm the tables
for n in (100, 1000, 10_000, 100_000):
    best = np.inf
    for _ in range(3):
        t0 = time.perf_counter()
        fastgj.gauss_jacobi(n, alpha, beta)
        best = min(best, time.perf_counter() - t0)
    print(f"  n={n:6d}: {best / n * 1e9:7.0f} ns/node")
