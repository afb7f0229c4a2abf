"""
Optimal production and stock on one horizon cut
===============================================

Along the optimum the stock level is a cubic in time that starts and ends at
zero, and the production rate is a quadratic. This script builds the closed
form for the right and left cuts at alpha = 0.4 and prints the sampled
trajectory next to the published values.
"""

from fuzzyprod import DEFAULT_PARAMS, resolve_cut, solve, trajectory_table
from fuzzyprod.sweep import reference_values

ref = reference_values()

for side in ("right", "left"):
    cut = resolve_cut(DEFAULT_PARAMS.T, DEFAULT_PARAMS.sigma, 0.4, side)
    sol = solve(DEFAULT_PARAMS, cut)
    print(f"\n{cut.label}: t_end = {cut.t_end:g}, boundary coefficient = {sol.B:.3f}")
    print(f"stock polynomial      {sol.stock_poly}")
    print(f"production polynomial {sol.production_poly}")

    published = ref["trajectories"][side]["0.4"]
    traj = trajectory_table(DEFAULT_PARAMS, cut)
    print("  t       u       x       d   status          | published u, x")
    for row in traj.rows:
        t = int(row.t)
        pub = ""
        if t < len(published["u"]) and published["u"][t] is not None:
            pub = f"| {published['u'][t]:7.2f} {published['x'][t]:7.2f}"
        u = "" if row.u is None else f"{row.u:7.2f}"
        x = "" if row.x is None else f"{row.x:7.2f}"
        print(f"{t:3d} {u:>7} {x:>7} {row.d:7.2f}   {row.status.value:<15} {pub}")
