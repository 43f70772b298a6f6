"""Barycentric interpolation at Gauss-Jacobi nodes.

Interpolation at orthogonal-polynomial nodes converges geometrically for
analytic functions and sidesteps the equispaced-node oscillation problem;
the barycentric weights come almost for free from the quadrature weights:
u_i is proportional to (-1)^i sin(theta_i) sqrt(w_i).
"""

import numpy as np

import fastgj


def runge(x):
    return 1.0 / (1.0 + 25.0 * x * x)


probes = np.linspace(-1.0, 1.0, 2001)
print("max interpolation error of 1/(1+25x^2) at Gauss-Legendre nodes")
for n in (10, 20, 40, 80, 160):
    rule = fastgj.gauss_jacobi(n, 0.0, 0.0)
    bw = fastgj.barycentric_weights(rule)
    err = np.max(np.abs(bw.interpolate(runge(bw.nodes), probes)
                        - runge(probes)))
    print(f"  n={n:4d}: {err:.3e}")

# equispaced nodes diverge for the same function (the classical contrast)
n = 40
eq_nodes = np.linspace(-1.0, 1.0, n)
vals = runge(eq_nodes)
V = np.vander(eq_nodes, increasing=True)
coeffs = np.linalg.solve(V, vals)
eq_err = np.max(np.abs(np.polyval(coeffs[::-1], probes) - runge(probes)))
print(f"\nequispaced n={n}: max error {eq_err:.3e} (diverging)")

# weights at nodes of a singular weight work just as well
rule = fastgj.gauss_jacobi(80, -0.5, 0.7)
bw = fastgj.barycentric_weights(rule)
f = lambda x: np.exp(np.sin(4 * x))
err = np.max(np.abs(bw.interpolate(f(bw.nodes), probes) - f(probes)))
print(f"entire function at (-0.5, 0.7) nodes, n=80: {err:.3e}")
