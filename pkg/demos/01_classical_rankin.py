"""
Rankin's bound for n unit vectors
=================================

However large the dimension, n unit vectors always contain a pair with inner
product at least -1/(n-1).  The regular simplex meets this exactly.
"""

import numpy as np

from rankin import check_rankin, classical_rankin_bound, counting_family, simplex_family

# The bound and its distance form for a few sizes
for n in (2, 3, 4, 10):
    coh, dist = classical_rankin_bound(n)
    print(f"n={n:2d}  max <t_j, t_k> >= {coh:+.4f}   min |t_j - t_k|^2 <= {dist:.4f}")

# The simplex attains it: every pair sits at -1/(n-1)
fam = simplex_family(4, 3)
print(np.round(fam.vectors @ fam.vectors.T, 12))
print(check_rankin(fam))

# Random unit vectors are nowhere near the bound, in any dimension
rng = np.random.default_rng(0)
for d in (2, 5, 50):
    X = rng.standard_normal((10, d))
    r = check_rankin(counting_family(X, mode="renormalize"))
    print(f"d={d:2d}  coherence {r.coherence:+.3f}  bound {r.coherence_bound:+.3f}  slack {r.slack:.3f}")
