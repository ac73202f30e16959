"""
==========================================
Quadratic invariant gaps of z^3
==========================================

A critical chord c cuts off an arc of length 2/3. The points whose whole
orbit stays in that closed arc span an invariant gap G(c) on which tripling
acts with degree two.
"""

# %%
# The three types
# ---------------

from fractions import Fraction as F

from lamkit.chords import chord
from lamkit.gaps import periodic_gap_degree
from lamkit.quadgaps import classify_type, invariant_gap, pi_set

for c in (chord(0, F(1, 3)), chord(F(5, 24), F(13, 24)), chord(F(5, 12), F(3, 4))):
    U = invariant_gap(c, 81)
    print(c, classify_type(c), len(U.vertices), "vertices, degree", periodic_gap_degree(3, U.gap, 1))

print(sorted(pi_set(chord(0, F(1, 3)), 8)))

# %%
# Caterpillar gaps carry an isolated chain of leaves ending at the critical
# edge; dropping it leaves a gap of periodic type.

U = invariant_gap(chord(F(5, 12), F(3, 4)), 81)
V = invariant_gap(chord(F(5, 12), F(3, 4)), 81, perfect=True)
print(U.type_tag, len(U.vertices), "->", V.type_tag, len(V.vertices))

# %%
# Canonical laminations
# ---------------------
#
# The periodic-type gap sits in a lamination with two cycles of Fatou gaps:
# the invariant gap itself and a period-two cycle built on the major.

from lamkit.quadgaps import canonical_lamination, fatou_cycles

CL = canonical_lamination(V, 4)
print("portrait", CL.portrait, "major", CL.major, "excluded", CL.excluded)
for cyc in fatou_cycles(CL.lamination):
    print("cycle of length", len(cyc), "first gap", str(cyc[0])[:70])

# %%
# In the caterpillar lamination the critical leaf with a periodic endpoint
# keeps its distance from every other leaf.

from lamkit.chords import chord_distance

c = chord(0, F(1, 3))
L = canonical_lamination(invariant_gap(c, 81), 6).lamination
for k in range(2, 7):
    print(k, min(chord_distance(c, x) for x in L.truncate(k).leaves if x != c))
