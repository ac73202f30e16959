from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lamkit.chords import chord, is_critical
from lamkit.circle import sigma
from lamkit.gaps import gap_image, periodic_gap_degree
from lamkit.quadgaps import (
    canonical_lamination, classify_type, fatou_cycles, in_closed_long_arc, invariant_gap, long_arc, pi_set,
)

CAT = chord(0, F(1, 3))
REG = chord(F(5, 24), F(13, 24))
PER = chord(F(5, 12), F(3, 4))


def test_long_arc_length():
    for c in (CAT, REG, PER):
        s, e = long_arc(c)
        assert (e - s) % 1 == F(2, 3)


def test_pi_set_examples():
    assert {0, F(1, 3), F(1, 2), F(2, 3), F(5, 6), F(5, 8), F(7, 8)} <= pi_set(CAT, 8)
    assert pi_set(CAT, 2) == {0, F(1, 2)}
    assert {F(5, 8), F(7, 8)} <= pi_set(REG, 8)


def test_pi_set_rejects_non_critical():
    with pytest.raises(ValueError):
        pi_set(chord(0, F(1, 2)), 8)


critical = st.builds(lambda p, q, k: chord(F(p % q, q), F(p % q, q) + F(k, 3)),
                     st.integers(0, 500), st.integers(1, 40), st.sampled_from([1, 2]))


@settings(max_examples=40, deadline=None)
@given(critical, st.integers(2, 60))
def test_pi_set_forward_invariant(c, n):
    pts = pi_set(c, n)
    assert pts
    assert all(sigma(3, x) in pts for x in pts)
    assert all(in_closed_long_arc(c, x) for x in pts)


def test_classify_type():
    assert classify_type(REG) == "regular_critical"
    assert classify_type(CAT) == "caterpillar"
    assert classify_type(PER) == "caterpillar"


def test_invariant_gap_caterpillar():
    U = invariant_gap(CAT, 27)
    assert U.type_tag == "caterpillar"
    assert {0, F(1, 3), F(4, 9), F(13, 27)} <= set(U.vertices)
    assert U.report().startswith("quadgap chord=0/1:1/3 type=caterpillar bound=27 vertices=[0/1,1/3,4/9,13/27,1/2,")


def test_invariant_gap_regular_edge():
    U = invariant_gap(REG, 81)
    assert U.type_tag == "regular_critical"
    assert REG in U.gap.edges


def test_invariant_gap_periodic():
    U = invariant_gap(PER, 81, perfect=True)
    assert U.type_tag == "periodic"
    assert F(3, 4) in U.vertices and F(5, 12) not in U.vertices
    assert set(U.vertices) < set(invariant_gap(PER, 81).vertices)


@pytest.mark.parametrize("c,perfect", [(CAT, False), (REG, False), (PER, False), (PER, True)])
def test_hull_invariant_degree_two(c, perfect):
    U = invariant_gap(c, 81, perfect=perfect)
    # at a finite bound the image is contained in G, and covers it from bound 3N
    image = gap_image(3, U.gap)
    assert set(image.vertices) <= set(U.vertices)
    wider = invariant_gap(c, 243, perfect=perfect)
    assert set(U.vertices) <= {sigma(3, x) for x in wider.vertices}
    assert periodic_gap_degree(3, U.gap, 1) == 2


def test_canonical_regular():
    U = invariant_gap(REG, 81)
    CL = canonical_lamination(U, 3)
    L = CL.lamination
    assert REG in L.leaves
    assert set(L.leaves) & set(U.gap.edges) >= {REG, chord(F(5, 72), F(13, 72))}
    assert len(fatou_cycles(L)) == 1
    assert CL.senior and all(is_critical(3, x) for x in CL.portrait.chords)


def test_canonical_periodic():
    U = invariant_gap(PER, 81, perfect=True)
    CL = canonical_lamination(U, 3)
    assert CL.major == chord(F(3, 8), F(3, 4))
    assert len(CL.senior) == 1 and len(CL.vassal) == 2
    assert {CL.major, chord(F(5, 12), F(17, 24))} <= set(CL.lamination.leaves)
    assert not set(CL.excluded) & set(CL.lamination.leaves)
    assert len(fatou_cycles(CL.lamination)) == 2


def test_canonical_depth_zero():
    U = invariant_gap(REG, 81)
    assert canonical_lamination(U, 0).lamination.leaves == {REG}
    U = invariant_gap(PER, 81, perfect=True)
    CL = canonical_lamination(U, 0)
    sides = {chord(CL.quadrilateral[i], CL.quadrilateral[(i + 1) % 4]) for i in range(4)}
    assert CL.lamination.leaves <= set(U.gap.edges) | (sides - set(CL.excluded))


def test_canonical_needs_vertex_data():
    with pytest.raises(ValueError, match="increase denominator bound"):
        canonical_lamination(invariant_gap(REG, 2), 2)
