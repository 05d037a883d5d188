"""Sweep every triangulation of small polygons and cross-check the methods.

Triangulated convex polygons are discs with marked points; their counts
follow the Catalan numbers.  Most have vanishing cohomology above degree 1,
but from the hexagon on some triangulations contain an internal triangle
and pick up the periodic tail.  Run:

    python3 demos/04_polygon_survey.py
"""

from collections import Counter

from gentlehh import (build_surface, generate_polygon_triangulations,
                      internal_triangles)
from gentlehh.report import compute_tables, tables_agree

print("polygon  triangulations  with internal triangles")
for n in range(4, 9):
    batch = generate_polygon_triangulations(n)
    with_internal = sum(
        1 for data in batch
        if internal_triangles(build_surface(data)))
    print("%7d  %14d  %23d" % (n, len(batch), with_internal))

# Cross-check all four methods on every heptagon triangulation, both fields.
print("\ncross-checking the 42 heptagon triangulations ...")
disagreements = 0
tail_values = Counter()
for data in generate_polygon_triangulations(7):
    surface = build_surface(data)
    for char in (0, 2):
        tables = compute_tables(surface, char, 13)
        if not tables_agree(tables):
            disagreements += 1
    tail_values[compute_tables(surface, 0, 13)["geometric"].dims[6]] += 1
print("disagreements:", disagreements)
print("HH^6 value distribution over the heptagons:", dict(tail_values))

# The two hexagon "snowflakes" (all three long diagonals) are the smallest
# discs whose algebra has cohomology in arbitrarily high degrees.
for data in generate_polygon_triangulations(6):
    surface = build_surface(data)
    if internal_triangles(surface):
        dims = compute_tables(surface, 0, 13)["geometric"].dims
        print("\n%s has an internal triangle; dims %s"
              % (data.name, list(dims)))
