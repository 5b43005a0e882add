"""The linear-vs-quadratic gap for the isolated-triangle property.

Sweeps v over 9, 15, ..., 57 measuring two certified lower bounds per v:

  s_lower  = sensitivity at the single-triangle input (3 removals plus
             3(v-3) isolating additions = 3v - 6, every bit re-verified)
  bs_lower = size of the Steiner-triple-system packing certificate at the
             empty graph (v(v-1)/6 disjoint blocks, each block re-verified)

and fits log-log slopes: about 1 for the sensitivity bound, about 2 for the
block certificate.
"""

from hypersens import rows_to_csv, run_scan

result = run_scan("isolated-triangle", range(9, 58, 6), ("s_lower", "bs_lower"))

print(rows_to_csv(result.rows), end="")
print()
for column, fit in result.fits.items():
    print(
        f"{column}: slope {fit.slope:.4f}, intercept {fit.intercept:+.4f}, "
        f"r^2 {fit.r_squared:.6f}, v in {fit.v_range}"
    )
gap = result.fits["bs_lower"].slope - result.fits["s_lower"].slope
print(f"\nexponent gap (bs vs s): {gap:.3f}  (a quadratic gap would be ~1)")
