"""The 3-uniform generalization: block certificates growing like v^3.

At the empty 3-uniform hypergraph, every member of an edge-disjoint packing
of complete 4-vertex cliques is a sensitive block for the isolated-clique
property (k=3, i=1, h=4): flipping its four triples creates an isolated
clique.  The greedy-to-maximality packing yields Theta(v^3) certified
blocks, while the single-clique witness certifies only Theta(v^2)
sensitivity, separating the two measures.
"""

from hypersens import (
    IsolatedCliqueProperty,
    build_s1_witness,
    fit_exponent,
    rows_to_csv,
    run_scan,
    sensitivity_at,
)

result = run_scan("isolated-clique", range(8, 23, 2), ("bs_lower",), k=3, i=1, h=4)
print(rows_to_csv(result.rows), end="")
fit = result.fits["bs_lower"]
print(f"\nblock-certificate slope over v=8..22: {fit.slope:.4f} (target ~3)\n")

rows = []
for v in range(32, 61, 4):
    spec = IsolatedCliqueProperty(v, 3, 1, 4)
    witness = build_s1_witness(v, 3, 1, 4)
    rows.append((v, sensitivity_at(spec, witness).s_at_x))
    print(f"v={v}: witness-certified sensitivity bound = {rows[-1][1]}")
sfit = fit_exponent(rows)
print(f"\nwitness-sensitivity slope over v=32..60: {sfit.slope:.4f} (target ~2)")
print(f"exponent gap: {fit.slope - sfit.slope:.3f}")
