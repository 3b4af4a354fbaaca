"""
From the circle to its discretizations
======================================

Sampling the unit circle at n equally weighted points gives a family whose
bound is -1/(n-1), creeping up to 0, while the family's own coherence
cos(2 pi / n) heads to 1.  The gap is what a genuinely continuous index set
costs.
"""

import math

from rankin import check_rankin, discretize

for k in range(1, 11):
    n = 2 ** k
    r = check_rankin(discretize("circle", n))
    print(f"n={n:5d}  bound {r.coherence_bound:+.6f}  coherence {r.coherence:+.6f}"
          f"  cos(2pi/n) {math.cos(2 * math.pi / n):+.6f}")

# Same story on the sphere with a Fibonacci lattice
for n in (4, 16, 64, 256):
    r = check_rankin(discretize("sphere", n))
    print(f"sphere n={n:4d}  bound {r.coherence_bound:+.5f}  coherence {r.coherence:+.5f}")
