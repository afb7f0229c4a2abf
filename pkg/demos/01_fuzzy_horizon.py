"""
Fuzzy planning horizons and their alpha-cuts
============================================

The season length is uncertain: it is modelled as a symmetric triangular
fuzzy number centred on T = 12 with spread sigma = 2. Every membership level
alpha gives a crisp interval [T_left, T_right]; the optimisation is then run
separately on each end of that interval.
"""

import numpy as np

from fuzzyprod import DEFAULT_PARAMS, TriangularFuzzyNumber, horizon_cuts

horizon = TriangularFuzzyNumber.symmetric(DEFAULT_PARAMS.T, DEFAULT_PARAMS.sigma)
print(horizon)

# Membership is piecewise linear with peak 1 at T.
xs = np.linspace(9, 15, 13)
for x, mu in zip(xs, horizon.membership(xs)):
    print(f"  mu({x:5.2f}) = {mu:.3f}")

# Cutting at higher alpha narrows the interval; alpha = 1 collapses it to T.
print("\nalpha   left   right")
for alpha in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
    left, right = horizon_cuts(DEFAULT_PARAMS.T, DEFAULT_PARAMS.sigma, alpha)
    print(f"{alpha:5.1f}  {left.t_end:6.2f}  {right.t_end:6.2f}")
