from fractions import Fraction as F

import pytest

from lamkit.chords import chord, chord_distance
from lamkit.gaps import (
    FaceIndex, classify_gap, extract_gaps, find_invariant_object, gap_image, gap_report, hull_gap,
    majors, periodic_gap_degree, rotation_number,
)
from lamkit.lamination import Lamination, build_from_rational_classes, empty_lamination, pullback_build
from lamkit.portraits import portrait
from lamkit.quadgaps import canonical_lamination, invariant_gap

TRI = [F(1, 13), F(3, 13), F(9, 13)]


@pytest.fixture(scope="module")
def triangle():
    return build_from_rational_classes(3, [TRI])


def _face(L, pts):
    idx = FaceIndex(L)
    i = idx.locate(pts)
    assert isinstance(i, int)
    return idx, idx.faces[i]


def test_extract_empty():
    gaps = extract_gaps(empty_lamination(3))
    assert len(gaps) == 1
    assert gaps[0].vertices == () and not gaps[0].finite_flag and gaps[0].whole_disk


def test_extract_half_disks():
    gaps = extract_gaps(Lamination(2, frozenset([chord(0, F(1, 2))])))
    assert len(gaps) == 2
    assert all(g.vertices == (0, F(1, 2)) and not g.finite_flag for g in gaps)


def test_extract_triangle(triangle):
    gaps = extract_gaps(triangle)
    assert len(gaps) == 4
    finite = [g for g in gaps if g.finite_flag]
    assert len(finite) == 1 and list(finite[0].vertices) == TRI
    assert all(g.vertices[0] == min(g.vertices) for g in gaps)


def test_partition_of_bounded_angles(triangle):
    idx = FaceIndex(triangle)
    endpoints = set(TRI)
    for q in range(1, 40):
        for p in range(q):
            x = F(p, q)
            if x.denominator != q or x in endpoints:
                continue
            assert len(idx.faces_at(x)) == 1


def test_gap_image(triangle):
    T = hull_gap(TRI)
    assert gap_image(3, T) == T
    assert gap_image(3, hull_gap([0, F(1, 12), F(1, 3), F(5, 12)])) == chord(0, F(1, 4))


def test_gap_image_half_disk():
    half = extract_gaps(Lamination(2, frozenset([chord(0, F(1, 2))])))[0]
    with pytest.raises(ValueError, match="cannot image unresolved gap"):
        gap_image(2, half)
    img = gap_image(2, half, listed_only=True)
    assert img == chord(0, 0) and img.degenerate


def test_periodic_gap_degree():
    assert periodic_gap_degree(3, extract_gaps(empty_lamination(3))[0], 1) == 3
    assert periodic_gap_degree(3, hull_gap(TRI), 1) == 1
    assert periodic_gap_degree(3, invariant_gap(chord(0, F(1, 3)), 81).gap, 1) == 2
    with pytest.raises(ValueError):
        periodic_gap_degree(3, hull_gap([F(1, 7), F(2, 7), F(3, 7)]), 1)


def test_rotation_number():
    assert rotation_number(3, hull_gap([F(1, 8), F(3, 8)]), 1) == F(1, 2)
    assert rotation_number(3, hull_gap(TRI), 1) == F(1, 3)
    assert rotation_number(3, hull_gap([0]), 1) == 0
    assert rotation_number(3, invariant_gap(chord(0, F(1, 3)), 81).gap, 1) is None


def test_classify_triangle(triangle):
    cls = classify_gap(triangle, hull_gap(TRI))
    assert cls.tag == "finite_lap"
    assert (cls.period, cls.degree, cls.rotation) == (1, 1, F(1, 3))


@pytest.fixture(scope="module")
def canonical():
    out = {}
    for c in (chord(0, F(1, 3)), chord(F(5, 24), F(13, 24))):
        U = invariant_gap(c, 81)
        out[c] = (U, canonical_lamination(U, 4).lamination)
    return out


def test_classify_caterpillar(canonical):
    U, L = canonical[chord(0, F(1, 3))]
    idx, G = _face(L, U.gap.vertices[:3])
    cls = classify_gap(L, G, (2, 3, 4), idx)
    assert cls.tag == "caterpillar"
    assert "critical edge 0/1:1/3" in cls.evidence


def test_classify_regular_critical(canonical):
    U, L = canonical[chord(F(5, 24), F(13, 24))]
    idx, G = _face(L, U.gap.vertices[:3])
    cls = classify_gap(L, G, (2, 3, 4), idx)
    assert cls.tag == "fatou_candidate_degree_2"
    assert (cls.period, cls.degree) == (1, 2)
    assert "critical edge 5/24:13/24" in cls.evidence


def test_find_invariant_object(trio, triangle):
    obj = find_invariant_object(empty_lamination(3))
    assert obj.kind == "infinite_gap" and obj.item.whole_disk and obj.resolved
    obj = find_invariant_object(Lamination(3, frozenset(trio)))
    assert (obj.kind, obj.item) == ("leaf", chord(0, F(1, 2)))
    obj = find_invariant_object(triangle)
    assert obj.kind == "finite_lap" and list(obj.item.vertices) == TRI


def test_majors():
    assert majors(3, invariant_gap(chord(0, F(1, 3)), 81).gap) == [chord(0, F(1, 3))]
    m = majors(3, hull_gap(TRI))
    assert 1 <= len(m) <= 2
    assert set(m) <= set(hull_gap(TRI).edges)
    with pytest.raises(ValueError):
        majors(3, hull_gap([0, F(1, 2)]))


def test_majors_infinite_gap_has_critical():
    from lamkit.chords import is_critical
    U = invariant_gap(chord(F(5, 24), F(13, 24)), 81)
    assert any(is_critical(3, m) for m in majors(3, U.gap))


def test_gap_report(triangle):
    lines = gap_report(triangle)
    assert len(lines) == 4
    assert "gap 2: vertices=[1/13,3/13,9/13] class=finite_lap period=1 degree=1 rotation=1/3" in lines
    assert all(line.startswith(f"gap {k}: vertices=[") for k, line in enumerate(lines))


def test_triangle_stays_a_lap():
    K = portrait(chord(F(1, 4), F(7, 12)), chord(F(7, 10), F(1, 30)))
    seed = hull_gap(TRI).edges
    for n in range(0, 6):
        L = pullback_build(K, seed, n)
        idx, G = _face(L, TRI)
        assert list(G.vertices) == TRI and G.finite_flag


def test_caterpillar_leaf_isolated(canonical):
    c = chord(0, F(1, 3))
    U, L = canonical[c]
    dists = []
    for k in range(1, L.depth + 1):
        others = [x for x in L.truncate(k).leaves if x != c]
        dists.append(min(chord_distance(c, x) for x in others))
    assert all(b <= a for a, b in zip(dists, dists[1:]))
    assert dists[-1] * 2 >= dists[0] > 0
