"""
Profit against the membership level
===================================

Sweeping alpha from 0.1 to 0.9 moves the right cut in from T + sigma and the
left cut out from T - sigma. Longer seasons earn more, so right-cut profit
falls with alpha while left-cut profit rises; both meet at the crisp value.
The data behind the comparison figures are written to ``sweep_data/``.
"""

from pathlib import Path

from fuzzyprod import DEFAULT_PARAMS, alpha_sweep, emit_csv, reproduce_tables

for side in ("right", "left"):
    result = alpha_sweep(DEFAULT_PARAMS, [0.1 * k for k in range(1, 11)], side)
    print(f"\n{side} cut")
    print("alpha  t_end      printed    corrected")
    for r in result.rows:
        print(f"{r.alpha:5.1f} {r.t_end:6.2f} {r.profit_printed:12.2f} {r.profit_corrected:12.2f}")

out = Path("sweep_data")
out.mkdir(exist_ok=True)
for stem, result in reproduce_tables(DEFAULT_PARAMS).files():
    with open(out / f"{stem}.csv", "wb") as fh:
        emit_csv(result, fh)
print(f"\nwrote plot data to {out}/")
