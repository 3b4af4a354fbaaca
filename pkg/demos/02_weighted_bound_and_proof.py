"""
Weighted atoms and the proof, replayed numerically
==================================================

With atom weights w_i the counting argument turns into product masses:
the diagonal carries sum w_i^2, its complement (sum w_i)^2 - sum w_i^2.
"""

import numpy as np

from rankin import (MeasureSpace, VectorFamily, check_rankin,
                    implied_coherence_floor, proof_decomposition, rankin_bound,
                    synthesis)

# Heavier atoms push the bound below the counting value -1/2
space = MeasureSpace([1.0, 1.0, 2.0])
print(rankin_bound(space))

fam = VectorFamily(space, [[1, 0], [1, 0], [0, 1]])
dec = proof_decomposition(fam)
print(dec)

# The double sum is |sum_i w_i t_i|^2, hence nonnegative
s = synthesis(fam, np.ones(3))
print("synthesis of the constant function:", s, " squared norm:", s @ s)

# Bounding every off-diagonal term by the coherence gives a floor tailored to
# this family; it sits between the closed-form bound and the true coherence
print("bound", rankin_bound(space).coherence_bound,
      " floor", implied_coherence_floor(fam),
      " coherence", check_rankin(fam).coherence)

# Scaling all weights leaves the bound alone
for c in (1e-3, 1.0, 1e3):
    print(c, rankin_bound(space.scaled(c)).coherence_bound)
