"""Build a triangulated surface from raw gluing data and inspect it.

A surface is entered as triangles, each listing its three sides in
counter-clockwise order.  Sides are labelled oriented edges: an "arc" label
must occur exactly twice (with opposite directions -- that is the gluing),
a "boundary" label exactly once.  Run:

    python3 demos/01_build_a_surface.py
"""

from gentlehh import (Side, Triangle, TriangulationInput, build_surface,
                      classify_boundaries, internal_triangles, sint_count,
                      SurfaceError)

# An annulus: one marked point p on the outer circle, one point q on the
# inner circle, and the two non-isotopic arcs joining them.  Cutting along
# the arcs leaves two triangles, one against each boundary circle.
annulus = TriangulationInput("annulus", (
    Triangle((
        Side("a1", "arc", "p", "q"),
        Side("inner", "boundary", "q", "q"),
        Side("a2", "arc", "q", "p"),
    )),
    Triangle((
        Side("a1", "arc", "q", "p"),
        Side("outer", "boundary", "p", "p"),
        Side("a2", "arc", "p", "q"),
    )),
))

surface = build_surface(annulus)
print("name:               ", surface.name)
print("genus:              ", surface.genus)
print("Euler characteristic", surface.euler_char)
print("marked points:      ", surface.marked_points)
print("arcs:               ", surface.arcs)
print("boundary components:")
for comp in surface.boundary_components:
    print("   points", comp.points, "segments", comp.segments)

# The counts every formula downstream consumes:
print("internal triangles: ", sorted(internal_triangles(surface)))
print("one-boundary-side triangles:", sint_count(surface))
for profile in classify_boundaries(surface):
    print("boundary %d: %d arc-incident points, %d fully incident segments (%s)"
          % (profile.component, profile.n_incident, profile.m_segments,
             profile.type_tag))

# Validation catches broken gluings.  Here the same arc is glued to itself
# without reversing direction, which cannot happen on an oriented surface:
bad = TriangulationInput("bad", (
    Triangle((
        Side("e1", "boundary", "1", "2"),
        Side("e2", "boundary", "2", "3"),
        Side("d", "arc", "3", "1"),
    )),
    Triangle((
        Side("d", "arc", "3", "1"),
        Side("e3", "boundary", "1", "4"),
        Side("e4", "boundary", "4", "3"),
    )),
))
try:
    build_surface(bad)
except SurfaceError as exc:
    print("\nrejected bad input:", exc)
