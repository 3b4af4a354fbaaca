"""
Searching for minimal coherence
===============================

Projected gradient descent on a product of spheres, with a soft maximum
whose temperature is lowered as the run goes on.
"""

from rankin import MeasureSpace, counting_space, minimize_coherence
from rankin.optimizer import OptimizerConfig

cfg = OptimizerConfig(restarts=8, seed=1)

# Enough room (d >= n-1): the simplex is found and certified
for n in (3, 4, 5):
    r = minimize_coherence(counting_space(n), n - 1, cfg)
    print(f"n={n} d={n - 1}: coherence {r.achieved_coherence:+.8f}  gap {r.gap:.1e}  {r.certificate}")

# Too little room: 5 vectors in the plane can do no better than the pentagon
r = minimize_coherence(counting_space(5), 2, cfg)
print(f"n=5 d=2: coherence {r.achieved_coherence:+.6f}  gap {r.gap:.3f}")

# Unequal weights lower the bound below anything attainable
r = minimize_coherence(MeasureSpace([1, 1, 1, 4]), 3, cfg)
print(f"weights (1,1,1,4): coherence {r.achieved_coherence:+.6f}  bound {r.bound:+.6f}  {r.certificate}")

for t in r.traces[:3]:
    print(t)
