"""
Functionals on l^p
==================

In a Banach space inner products are replaced by pairs (f_j, t_j) with
f_j(t_j) = 1 and norms at most 1.  Once the weighted sum of all f_j(t_k) is
nonnegative, the same -diag/offdiag bound holds for max_{j != k} f_j(t_k).
"""

import math

import numpy as np

from rankin import (FunctionalFamily, PreconditionViolation,
                    check_functional_rankin, counting_space,
                    duality_functional, gram_sum_condition, lp_norm)

v = np.array([1.0, 1.0, 0.0]) * 2 ** (-1 / 3)
f = duality_functional(v, 3)
print("l^3 unit vector", v, "-> norming functional", f,
      " f(v) =", f @ v, " ||f||_{3/2} =", lp_norm(f, 1.5))

rng = np.random.default_rng(3)
for p in (1.0, 1.5, 3.0, math.inf):
    V = rng.standard_normal((6, 3))
    V = np.array([x / lp_norm(x, p) for x in V])
    fam = FunctionalFamily(counting_space(6), p, V, [duality_functional(x, p) for x in V])
    try:
        r = check_functional_rankin(fam)
        print(f"p={p:g}: coherence {r.coherence:+.3f} >= bound {r.coherence_bound:+.3f}"
              f"  (pairing sum {r.gram_sum:.3f})")
    except PreconditionViolation as exc:
        print(f"p={p:g}: no verdict, {exc.failures}")

# A family breaking the summed condition gets no verdict at all
V = np.array([[-0.9, -0.1], [0.0, 1.0], [0.4, -0.6]])
bad = FunctionalFamily(counting_space(3), 1, V, [duality_functional(x, 1) for x in V])
print("pairing sum", gram_sum_condition(bad))
try:
    check_functional_rankin(bad)
except PreconditionViolation as exc:
    print("rejected:", exc.failures)
