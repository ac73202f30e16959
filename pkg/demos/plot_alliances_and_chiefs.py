"""
==========================================
Flowers, alliances and chiefs
==========================================

Minimal laminations come in two flavours: central ones carry a flower-like
set (an invariant infinite gap, or an invariant lap with attached periodic
Fatou gaps); regular ones are perfect. Distinct regular ones are compatible
with disjoint sets of critical portraits.
"""

# %%
# Flower-like sets
# ----------------

from fractions import Fraction as F

from lamkit.alliances import classify_alliance, detect_flower_like
from lamkit.chiefs import fixture
from lamkit.lamination import empty_lamination

print(detect_flower_like(empty_lamination(3)))
L = fixture("quad_rotational", 4)
print(detect_flower_like(L, (2, 3, 4)))

# %%
# Central or regular?
# -------------------

for name, depth in (("quad_rotational", 6), ("quad_preperiodic_critical", 6), ("cubic_perfect", 6)):
    print(name, classify_alliance(fixture(name, depth)))

# %%
# Disjoint alliances
# ------------------
#
# The cubic fixture and its mirror image are both regular; no critical
# portrait on the 1/24 grid is compatible with both.

from lamkit.alliances import alliances_disjoint_check

A, B = fixture("cubic_perfect", 6), fixture("cubic_perfect_mirror", 6)
print(alliances_disjoint_check(A, B, 24))

# %%
# Chief candidates
# ----------------
#
# Grand-orbit classes that can be dropped without breaking sibling
# invariance show that a lamination is not minimal.

from lamkit.chiefs import chief_candidate, grand_orbit_closure, perfect_dichotomy
from lamkit.chords import chord
from lamkit.lamination import union_laminations

print(grand_orbit_closure(2, chord(F(1, 8), F(5, 8)), 1).sorted_leaves)
U = union_laminations(fixture("quad_rotational", 3), fixture("quad_preperiodic_critical", 3))
print(chief_candidate(U).report())
for name in ("quad_rotational", "quad_preperiodic_critical"):
    print(name, perfect_dichotomy(fixture(name, 7)))
