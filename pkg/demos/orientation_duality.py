"""Directed local value 2: the certificate machine.

Orienting the full-pair shift graph along increasing second coordinates
makes every out-neighborhood monochromatic under the first-coordinate
coloring, so the directed local value collapses to 2 no matter how many
colors the underlying graph needs.  The converse direction is decidable
in polynomial time: either a shared-in-neighbor class coloring works and
the digraph maps into the two-way shift digraph, or an alternating odd
cycle maps in and forces value 3.
"""

import random

from localchrom import (
    Digraph,
    alternating_odd_cycle,
    decide_local2,
    directed_local_chromatic,
    directed_local_value,
    is_proper,
    oriented_shift_with_coloring,
)

print("canonical orientation of the full-pair shift graph")
for m in (3, 5, 8):
    d, col = oriented_shift_with_coloring(m)
    print(f"  m={m}: {d.n} vertices, value under first-coordinate coloring ="
          f" {directed_local_value(d, col)}")

print("\nthe unique obstructions: alternating odd cycles")
for h in (1, 2, 3):
    alt = alternating_odd_cycle(h)
    print(f"  {2*h+1}-cycle: exact directed local value ="
          f" {directed_local_chromatic(alt).value}")

print("\ndeciding value <= 2 with certificates")
examples = {
    "directed 5-cycle": Digraph(range(5), [(i, (i + 1) % 5) for i in range(5)]),
    "transitive triangle": Digraph(range(3), [(0, 1), (0, 2), (1, 2)]),
}
rng = random.Random(7)
n = 8
arcs = [(u, v) if rng.random() < 0.5 else (v, u)
        for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
examples["random 8-vertex orientation"] = Digraph(range(n), arcs)

for name, d in examples.items():
    out = decide_local2(d)
    exact = directed_local_chromatic(d).value
    if out.value_le_2:
        assert is_proper(d.underlying, out.coloring)[0]
        assert directed_local_value(d, out.coloring) <= 2
        print(f"  {name}: value {exact}; class coloring with"
              f" {out.coloring.distinct()} classes maps into the"
              f" {out.universal.n}-vertex two-way shift digraph")
    else:
        h = out.obstruction_h
        hom = out.obstruction_hom
        assert all((hom[a], hom[b]) in d.arcs
                   for a, b in out.obstruction.arc_list())
        print(f"  {name}: value {exact}; alternating {2*h+1}-cycle maps in,"
              f" image {sorted(set(hom))}")
