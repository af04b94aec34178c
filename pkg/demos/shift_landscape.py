"""Walk the shift-graph family and watch the chromatic quantities move.

The ordered-pair shift graph on m points needs exactly ceil(log2 m)
colors, and its local value tracks the same staircase from below: equal
to it on the top band of each power-of-two window, possibly one less on
the bottom band.  The full-pair variant is denser; its independence
number is the balanced product and its chromatic number follows the
central binomial staircase.
"""

import math

from localchrom import (
    chromatic_number,
    independence_number,
    local_chromatic,
    shift_graph,
    symmetric_shift_graph,
    walk_reach,
)

print("ordered pairs: chromatic staircase and the local value bands")
print(f"{'m':>3} {'n':>4} {'edges':>6} {'chi':>4} {'psi':>4}  band")
for m in range(2, 9):
    g = shift_graph(m)
    chi = chromatic_number(g).value
    psi = local_chromatic(g).value
    k = chi - 1
    if m > 3 * 2 ** (k - 1):
        band = "top: psi = chi forced"
    else:
        band = "bottom: psi may drop one"
    print(f"{m:>3} {g.n:>4} {len(g.edges):>6} {chi:>4} {psi:>4}  {band}")

# no pair chains close a triangle
g = shift_graph(7)
assert not walk_reach(g, 3).diagonal().any()
print("\nshift graphs are triangle-free, so their clique number never explains chi")

print("\nfull pairs: independence products and the binomial staircase")
print(f"{'m':>3} {'n':>4} {'alpha':>6} {'chi':>4}")
for m in range(3, 6):
    s = symmetric_shift_graph(m)
    alpha = independence_number(s).value
    chi = chromatic_number(s).value
    assert alpha == -(-m // 2) * (m // 2)
    print(f"{m:>3} {s.n:>4} {alpha:>6} {chi:>4}")

s3 = symmetric_shift_graph(3)
print("\nlocal value of the 3-point full graph:", local_chromatic(s3).value)
s4 = symmetric_shift_graph(4)
print("local value of the 4-point full graph:", local_chromatic(s4).value)
