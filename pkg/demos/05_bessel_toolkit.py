"""The Bessel-function utilities that power the endpoint branch.

Three tools are exposed: J_nu evaluation, its positive zeros (large-index
expansion, Newton-polished where that matters), and a shifted series that
evaluates J_nu right next to one of its own zeros at full relative
accuracy, where standard routines only deliver absolute accuracy.
"""

import numpy as np

import fastgj

# zeros: spacing approaches pi, interlacing in the order
z = fastgj.bessel_zeros(0.25, 8)
print("first zeros of J_{1/4}:", np.array2string(z, precision=6))
print("gaps:", np.array2string(np.diff(z), precision=6))

# the sine special case is exact: j_{1/2,m} = m pi
print("\nj_{1/2,m}/pi:", np.array2string(fastgj.bessel_zeros(0.5, 5) / np.pi,
                                         precision=15))

# near-zero evaluation: relative accuracy survives as h -> 0
j5 = fastgj.bessel_zero(0.25, 5).j
print(f"\nJ_(1/4) near its 5th zero j5 = {j5:.12f}")
print(f"{'h':>8}  {'shifted series':>24}  {'direct/amplitude':>18}")
for h in (1e-2, 1e-4, 1e-6, 1e-8):
    near = fastgj.bessel_j_near_zero(0.25, j5, h)
    direct = fastgj.bessel_j(0.25, j5 + h)
    print(f"{h:8.0e}  {near:24.16e}  {direct / near - 1:18.2e}")
print("(the direct evaluation drifts as h shrinks; the series does not)")
