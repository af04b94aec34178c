"""Colorings as cross-intersecting set families, and back.

A proper coloring of a shift graph is the same data as a family of
disjoint set pairs whose A-sides meet the B-sides across indices; the
local value caps the unions.  The classic extremal results then bound
how many pairs can coexist: the exact-fraction binomial sum never
exceeds 1, uniform skew families never beat the binomial coefficient,
and a canonical backtracking search finds the longest families for a
given target value.
"""

from localchrom import (
    bollobas_sum,
    coloring_to_families,
    complement_family,
    families_to_coloring,
    family_size_bound,
    local_chromatic,
    local_value,
    max_shift_order,
    shift_graph,
    skew_uniform_bound,
)

print("complement families are the extremal case, sum exactly 1")
for n, r in ((3, 2), (4, 2), (5, 2)):
    fam = complement_family(n, r)
    print(f"  all {r}-subsets of [{n}]: {len(fam)} pairs,"
          f" sum {bollobas_sum(fam)},"
          f" uniform cap {skew_uniform_bound(r, n - r)}")

print("\nround trip: optimal coloring -> family -> coloring")
g = shift_graph(5)
col = local_chromatic(g).witness
fam, mode = coloring_to_families(g, col)
print(f"  5-point shift graph, mode {mode}")
for i, (a, b) in enumerate(fam.pairs, start=1):
    print(f"    point {i}: A={sorted(a)} B={sorted(b)}")
g2, col2 = families_to_coloring(fam, mode)
print(f"  reconstructed local value: {local_value(g2, col2)}")

print("\nhow long can a value-k family get?")
for k in (2, 3):
    res = max_shift_order(k, budget_nodes=400_000)
    tag = "exhaustive" if res.exhaustive else f"budget hit at {res.nodes} nodes"
    print(f"  k={k}: best m = {res.best_m}"
          f" (theory cap {family_size_bound(k, 'ordered')}; {tag})")
    if res.certificate is not None:
        gk, ck = families_to_coloring(res.certificate, "ordered")
        print(f"    certificate colors {gk.n} pairs at local value"
              f" {local_value(gk, ck)}")
