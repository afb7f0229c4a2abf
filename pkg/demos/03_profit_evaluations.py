"""
Three ways to evaluate the profit
=================================

The published term-by-term profit expression differs from the exact
integral of the profit rate along the optimal path: its squared-production
bracket drops a factor of the horizon length on the constant term and halves
one cross term. Both are computed here, together with a Simpson-quadrature
check of the exact value, and compared against the published numbers.
"""

from fuzzyprod import DEFAULT_PARAMS, discrepancy_report, profit_corrected, profit_printed, resolve_cut
from fuzzyprod.oracle import simpson_breakdown
from fuzzyprod.analytic import solve

cut = resolve_cut(DEFAULT_PARAMS.T, DEFAULT_PARAMS.sigma, 1.0, "crisp")
rows = [profit_printed(DEFAULT_PARAMS, cut), profit_corrected(DEFAULT_PARAMS, cut),
        simpson_breakdown(DEFAULT_PARAMS, solve(DEFAULT_PARAMS, cut))]
names = ("revenue", "holding", "production_linear", "production_quadratic",
         "development_setup", "total")
print(f"{'':22s}" + "".join(f"{b.method.value:>14s}" for b in rows))
for name in names:
    print(f"{name:22s}" + "".join(f"{getattr(b, name):14.2f}" for b in rows))

# Only the squared-production term differs, and it dominates the gap.
print("\nlabel                        published      printed    corrected  d_printed")
for e in discrepancy_report(DEFAULT_PARAMS).entries:
    print(f"{e.label:26s} {e.paper:12.2f} {e.printed:12.2f} {e.corrected:12.2f}"
          f"  {100 * e.printed_rel_delta:6.2f}%")
