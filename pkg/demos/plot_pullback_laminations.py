"""
==========================================
Pullback laminations
==========================================

A critical portrait (two non-crossing critical chords for z^3) decides how
every leaf is pulled back. Iterating gives a finite-depth lamination.
"""

# %%
# Build and verify
# ----------------

from fractions import Fraction as F
from pathlib import Path

from lamkit import io
from lamkit.chords import chord
from lamkit.lamination import pullback_build, verify_sibling_invariant
from lamkit.portraits import portrait

OUT = Path(__file__).parent / "_output"
OUT.mkdir(exist_ok=True)

K = portrait(chord(0, F(1, 3)), chord(F(1, 2), F(5, 6)))
for depth in range(5):
    L = pullback_build(K, depth=depth)
    print(depth, len(L), verify_sibling_invariant(L, "full_below_depth").ok)

# %%
# The text format is canonical, so files diff cleanly.

print(io.dumps(pullback_build(K, depth=1)))

# %%
# A quadratic example
# -------------------
#
# The critical leaf {1/8, 5/8} lands on the fixed point 0 after three steps.
# Its pullbacks squeeze it from both sides, so the leaf is not isolated.

from lamkit.chords import chord_distance
from lamkit.lamination import perfect_part_approx

seed = chord(F(1, 8), F(5, 8))
for depth in (2, 4, 6, 8):
    L = pullback_build(portrait(seed), [seed], depth)
    near = min(chord_distance(seed, x) for x in L.leaves if x != seed)
    kept = perfect_part_approx(L, F(1, 100), 2)
    print(f"depth {depth}: {len(L)} leaves, nearest {near}, seed in proxy perfect part: {seed in kept.leaves}")

# %%
# Comparing laminations
# ---------------------

from lamkit.lamination import Lamination, hausdorff_distance, union_laminations

trio = Lamination(3, frozenset([chord(0, F(1, 2)), chord(F(1, 6), F(1, 3)), chord(F(2, 3), F(5, 6))]))
below = Lamination(3, frozenset([chord(F(1, 18), F(1, 9)), chord(F(7, 18), F(4, 9)), chord(F(13, 18), F(7, 9))]))
U = union_laminations(trio, below)
print(len(U), verify_sibling_invariant(U).ok, hausdorff_distance(trio, U))

# %%
# Picture
# -------

from lamkit.render import render_svg

(OUT / "pullback_depth4.svg").write_text(render_svg(pullback_build(K, depth=4)))
print("wrote", OUT / "pullback_depth4.svg")
