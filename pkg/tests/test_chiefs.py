from fractions import Fraction as F

import pytest

from lamkit.alliances import detect_flower_like, default_probes
from lamkit.chiefs import (
    FIXTURES, chief_candidate, cubic_perfect, fixture, grand_orbit_closure, perfect_dichotomy,
    quad_preperiodic_critical, quad_rotational,
)
from lamkit.chords import chord, chord_distance
from lamkit.lamination import empty_lamination, union_laminations, verify_sibling_invariant


def test_grand_orbit_quadratic_critical():
    L = grand_orbit_closure(2, chord(F(1, 8), F(5, 8)), 1)
    # the fibre pairing unlinked with {1/8,5/8}
    assert L.leaves == {chord(F(1, 8), F(5, 8)), chord(F(5, 16), F(9, 16)), chord(F(1, 16), F(13, 16))}


def test_grand_orbit_triangle():
    L = grand_orbit_closure(3, chord(F(1, 13), F(3, 13)), 0)
    assert L.leaves == {chord(F(1, 13), F(3, 13)), chord(F(3, 13), F(9, 13)), chord(F(1, 13), F(9, 13))}


def test_grand_orbit_diameter():
    L = grand_orbit_closure(2, chord(0, F(1, 2)), 1)
    assert L.leaves == {chord(0, F(1, 2)), chord(0, F(1, 4)), chord(F(1, 2), F(3, 4))}


def test_grand_orbit_degenerate():
    with pytest.raises(ValueError):
        grand_orbit_closure(2, chord(F(1, 3), F(1, 3)), 1)


def test_chief_preperiodic():
    C = chief_candidate(quad_preperiodic_critical(6))
    assert C.generator == chord(F(1, 8), F(5, 8))
    assert C.removable == []
    assert C.closure.leaves == C.base.leaves


def test_chief_of_union():
    a, b = quad_rotational(3), quad_preperiodic_critical(3)
    U = union_laminations(a, b)
    assert verify_sibling_invariant(U, "full_below_depth").ok
    C = chief_candidate(U)
    assert C.closure.leaves == a.leaves
    assert len(C.removable) == 1 and C.removable[0] in b.leaves
    assert "removable=true" in C.report()


def test_chief_empty():
    with pytest.raises(ValueError):
        chief_candidate(empty_lamination(3))


def test_fixture_rotational():
    L = fixture("quad_rotational", 3)
    assert {chord(F(1, 7), F(2, 7)), chord(F(2, 7), F(4, 7)), chord(F(1, 7), F(4, 7))} <= L.leaves
    assert verify_sibling_invariant(L, "full_below_depth").ok


def test_fixture_preperiodic():
    L = fixture("quad_preperiodic_critical", 3)
    assert chord(F(1, 8), F(5, 8)) in L.leaves
    assert max(L.generations.values()) == 3


def test_fixture_cubic_verifies():
    L = fixture("cubic_perfect", 4)
    assert L.degree == 3
    assert verify_sibling_invariant(L, "full_below_depth").ok
    assert "fixture cubic_perfect" in L.provenance


def test_fixture_unknown():
    with pytest.raises(ValueError, match="unknown fixture"):
        fixture("nope")
    assert {"quad_rotational", "quad_preperiodic_critical", "cubic_perfect"} <= set(FIXTURES)


def _spread(L, closure):
    pool = closure.sorted_leaves
    return max(min(chord_distance(x, y) for y in pool) for x in L.sorted_leaves)


@pytest.mark.parametrize("name,top", [("quad_rotational", 5), ("quad_preperiodic_critical", 6), ("cubic_perfect", 4)])
def test_density_proxy(name, top):
    eps = []
    for n in range(2, top + 1):
        L = fixture(name, n)
        eps.append(_spread(L, chief_candidate(L).closure))
    assert all(b <= a for a, b in zip(eps, eps[1:]))


@pytest.mark.parametrize("name,depth,tag", [
    ("quad_rotational", 7, "countable"),
    ("quad_preperiodic_critical", 7, "perfect"),
    ("cubic_perfect", 5, "perfect"),
])
def test_dichotomy_proxy(name, depth, tag):
    L = fixture(name, depth)
    verdict = perfect_dichotomy(L)
    assert verdict[0] == tag
    if tag == "countable":
        assert detect_flower_like(L, default_probes(L)) is not None


def test_cubic_mirror():
    L, M = cubic_perfect(3), cubic_perfect(3, mirror=True)
    assert len(L) == len(M) and L.leaves != M.leaves
    assert verify_sibling_invariant(M, "full_below_depth").ok
