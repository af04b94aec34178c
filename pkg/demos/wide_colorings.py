"""Wide colorings and the selection machinery on universal graphs.

A coloring is s-wide when no walk of 2s-1 edges joins two vertices of
the same color.  The universal graph W(s, t) carries a natural t-coloring
that is as wide as any s-wide t-colorable graph can witness.  Two-wide
colorings with 2h colors already buy an orientation of directed local
value h; the exact-rational selection machinery pushes that to tau+1 =
ceil(t/4)+1 whenever its edge-coverage property holds, and this script
measures where it starts holding for t=4.
"""

from localchrom import (
    directed_local_value,
    is_s_wide,
    swide_orientation,
    swide_state,
    wide_orientation,
    wide_universal,
)

print("the natural coloring of W(s, t) and its wideness")
for s, t in ((2, 4), (3, 4), (2, 6)):
    g, nat = wide_universal(s, t)
    wide, _ = is_s_wide(g, nat, s)
    print(f"  W({s},{t}): {g.n} vertices, natural coloring is {s}-wide: {wide}")

print("\ntwo-wide halving: orientations from the palette split")
for s, t, cap in ((2, 4, 2), (2, 6, 3)):
    g, nat = wide_universal(s, t)
    d = wide_orientation(g, nat)
    val = directed_local_value(d, nat)
    print(f"  W({s},{t}) with {t} colors: value {val} (bound {cap})")

print("\none vertex state, exact rationals all the way down")
st = swide_state((0, 1, 1, 1), 2)
print(f"  vector {st.vector}: color {st.color}, tau {st.tau}")
print(f"  normalized even/odd sums: P={st.big_p} Q={st.big_q}")
print(f"  drift of the 1-positions: {st.drift}")
print(f"  selected colors: {sorted(st.selected)}")

print("\nselection coverage ladder at t=4 (threshold is empirical)")
s = 2
while True:
    size = 4 * (s ** 3 - (s - 1) ** 3)
    if size > 1000:
        break
    res = swide_orientation(s, 4)
    rep = res.report
    if rep.edges_ok:
        print(f"  s={s}: covered, value {rep.value} <= tau+1 = {rep.tau + 1}")
    else:
        print(f"  s={s}: {len(rep.edge_failures)} uncovered edges, no orientation")
    s += 1
