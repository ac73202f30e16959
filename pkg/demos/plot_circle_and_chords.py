"""
==========================================
Angles, orbits and chords
==========================================

Everything happens on the circle R/Z with exact rational angles. The angle
map sigma_d multiplies by d; chords are unordered pairs of angles.
"""

# %%
# Angles and orbits
# -----------------
#
# Rational angles are eventually periodic. ``orbit_info`` returns the
# preperiod, the (minimal) period and the orbit itself.

from fractions import Fraction as F

from lamkit.circle import fmt_angle, orbit_info, preimages, sigma

print(sigma(3, F(1, 4)), sigma(2, F(5, 8)))
info = orbit_info(3, F(1, 24))
print("preperiod", info.preperiod, "period", info.period, [fmt_angle(x) for x in info.orbit])
print("fibre of 1/2 under tripling:", [fmt_angle(x) for x in preimages(3, F(1, 2))])

# %%
# Chords
# ------
#
# Two chords cross only when their endpoints interleave; sharing an endpoint
# is fine. A chord is critical when both ends have the same image.

from lamkit.chords import chord, chord_length, crosses, image_chord, is_critical

print(crosses(chord(0, F(1, 2)), chord(F(1, 4), F(3, 4))))   # True
print(crosses(chord(0, F(1, 4)), chord(F(1, 4), F(1, 2))))   # False
print(is_critical(3, chord(F(1, 12), F(5, 12))))              # True
print(image_chord(3, chord(F(1, 12), F(1, 4))))               # 1/4:3/4, three times longer

# %%
# Short chords grow
# -----------------
#
# A chord shorter than 1/(d+1) gets exactly d times longer, so every orbit
# eventually contains a chord of length at least 1/(d+1).

from lamkit.chords import orbit_longest_hit

c = chord(0, F(1, 100))
i, hit = orbit_longest_hit(3, c, 20)
print(f"{c} reaches {hit} (length {chord_length(hit)}) after {i} steps")

# %%
# Sibling collections
# -------------------
#
# A non-critical leaf comes with d pairwise disjoint chords sharing its image.

from lamkit.chords import full_sibling_collection

for leaf in (chord(0, F(1, 2)), chord(0, F(1, 12))):
    sc = full_sibling_collection(3, leaf)
    print(leaf, "->", ", ".join(map(str, sc.leaves)), "all map to", sc.shared_image)
