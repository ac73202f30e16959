"""
==========================================
Gaps and their dynamics
==========================================

The leaves cut the disk into faces. Periodic faces have a boundary degree
and, in degree one, a rotation number.
"""

# %%
# A rotational triangle
# ---------------------

from fractions import Fraction as F

from lamkit.gaps import classify_gap, extract_gaps, gap_report, hull_gap, majors, rotation_number
from lamkit.lamination import build_from_rational_classes

tri = [F(1, 13), F(3, 13), F(9, 13)]
L = build_from_rational_classes(3, [tri])
for g in extract_gaps(L):
    print(g, "finite" if g.finite_flag else "has arcs")

T = hull_gap(tri)
print("rotation", rotation_number(3, T), "majors", majors(3, T))
print(classify_gap(L, T))

# %%
# Deeper pullbacks keep the triangle as a lap
# -------------------------------------------

from lamkit.chords import chord
from lamkit.gaps import FaceIndex
from lamkit.lamination import pullback_build
from lamkit.portraits import portrait

K = portrait(chord(F(1, 4), F(7, 12)), chord(F(7, 10), F(1, 30)))
for depth in range(6):
    L = pullback_build(K, T.edges, depth)
    idx = FaceIndex(L)
    print(depth, len(L), idx.faces[idx.locate(tri)])

# %%
# A gap report
# ------------
#
# Probing truncations records how the vertex count of each face evolves.

from lamkit.chiefs import quad_rotational

L = quad_rotational(4)
for line in gap_report(L, (2, 3, 4)):
    if "unresolved" not in line:
        print(line[:160])
