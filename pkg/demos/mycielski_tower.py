"""Climbing the Mycielski tower with orientations in hand.

The cone construction raises the chromatic number by one per level
without ever creating a triangle.  Its directed lift does the same for
the worst-case directed local value: starting from a single arc, one
lift makes the alternating 5-cycle, a second makes an 11-vertex
orientation of value 4, while both stay triangle-free.
"""

from localchrom import (
    Digraph,
    chromatic_number,
    cycle_graph,
    directed_local_chromatic,
    generalized_mycielski,
    mycielski_orientation,
    walk_reach,
)

d = Digraph(["a", "b"], [(0, 1)])
print("level 0: a single arc, value",
      directed_local_chromatic(d).value)

for level in (1, 2):
    d = mycielski_orientation(d)
    und = d.underlying
    chi = chromatic_number(und).value
    val = directed_local_chromatic(d).value
    tri = bool(walk_reach(und, 3).diagonal().any())
    print(f"level {level}: {d.n} vertices, {len(und.edges)} edges,"
          f" chi {chi}, directed local value {val}, triangle-free {not tri}")

print("\nundirected tower over the 5-cycle for comparison")
g = cycle_graph(5)
for level in (1, 2):
    g = generalized_mycielski(g, 2)
    print(f"  after {level} cone(s): {g.n} vertices,"
          f" chi {chromatic_number(g).value}")
