"""Grand orbits, chief candidates, and worked chief examples as fixtures."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .chords import Chord, chord, chord_length, image_chord, is_critical, linked, reflect
from .circle import circle_distance, is_periodic, sigma
from .lamination import Lamination, perfect_part_approx, pullback_build, verify_sibling_invariant
from .portraits import CriticalPortrait

GENERIC_DENOMINATOR = 101


def _forward_orbit(d: int, c: Chord) -> list[Chord]:
    out = [c]
    while True:
        c = image_chord(d, c)
        if c.degenerate or c in out:
            return out
        out.append(c)


def _clearance(c: Chord, pts) -> Fraction:
    return min((circle_distance(x, p) for x in c.endpoints for p in pts), default=Fraction(1))


def _critical_pool(d: int, leaves) -> list[Chord]:
    """Critical chords on a prime-denominator grid unlinked with ``leaves``, roomiest first."""
    leaves = list(leaves)
    pts = sorted({x for c in leaves for x in c.endpoints})
    q = GENERIC_DENOMINATOR
    pool = {chord(Fraction(k, q), Fraction(k, q) + Fraction(j, d)) for k in range(q) for j in range(1, d)}
    pool = [c for c in pool if not any(linked(c, e) for e in leaves)]
    return sorted(pool, key=lambda c: (-_clearance(c, pts), c))


def generic_portrait(d: int, leaves, include: Optional[Chord] = None) -> CriticalPortrait:
    """A critical portrait unlinked with ``leaves``, kept away from their endpoints.

    The prime-denominator grid keeps fibres from colliding with the rational
    data being pulled back. ``include`` forces one chord into the portrait.
    """
    pool = _critical_pool(d, leaves)
    fixed = [] if include is None else [include]
    for extra in combinations(pool, d - 1 - len(fixed)):
        cs = fixed + list(extra)
        if all(not linked(c, e) for c, e in combinations(cs, 2)):
            return CriticalPortrait(tuple(cs), d)
    raise ValueError("no compatible critical portrait")


def grand_orbit_closure(d: int, l: Chord, depth: int, portrait: Optional[CriticalPortrait] = None) -> Lamination:
    """Forward images of ``l`` plus pullbacks compatible with them, to ``depth`` generations.

    A critical ``l`` belongs to its own portrait; the remaining critical chords
    come from :func:`generic_portrait`.
    """
    if l.degenerate:
        raise ValueError("degenerate chord")
    orbit = _forward_orbit(d, l)
    if portrait is None:
        portrait = generic_portrait(d, orbit, l if is_critical(d, l) else None)
    return pullback_build(portrait, seed=orbit, depth=depth,
                          provenance=f"grand orbit of {l} (degree {d}) to depth {depth}")


@dataclass(frozen=True)
class ChiefCandidate:
    base: Lamination
    generator: Chord
    closure: Lamination
    minimality_evidence: tuple[tuple[Chord, bool], ...]

    @property
    def removable(self) -> list[Chord]:
        return [c for c, r in self.minimality_evidence if r]

    def report(self) -> str:
        lines = [f"chief generator={self.generator} leaves={len(self.closure)} depth={self.closure.depth}"]
        lines += [f"probe leaf={c} removable={str(r).lower()}" for c, r in self.minimality_evidence]
        return "\n".join(lines)


def grand_orbit_classes(L: Lamination) -> list[frozenset]:
    """Leaves of ``L`` grouped by the relation 'one is the image of the other'."""
    parent = {c: c for c in L.leaves}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in L.sorted_leaves:
        im = image_chord(L.degree, c)
        if im in parent:
            ra, rb = find(c), find(im)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[Chord, set] = {}
    for c in L.sorted_leaves:
        groups.setdefault(find(c), set()).add(c)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _generator(L: Lamination) -> Chord:
    periodic = [c for c in L.sorted_leaves if is_periodic(L.degree, c.a) and is_periodic(L.degree, c.b)
                and c in _forward_orbit(L.degree, image_chord(L.degree, c))]
    pool = periodic or L.sorted_leaves
    return max(pool, key=lambda c: (chord_length(c), [-x for x in c.endpoints]))


def _restrict(L: Lamination, leaves) -> Lamination:
    leaves = frozenset(leaves)
    gens = None if L.generations is None else {c: L.generations[c] for c in leaves}
    return Lamination(L.degree, leaves, L.depth, L.provenance, gens)


def chief_candidate(L: Lamination, depth: Optional[int] = None) -> ChiefCandidate:
    """Grand orbit of a longest periodic leaf, with removal probes on the rest of ``L``.

    Without periodic leaves the longest leaf is used. Each grand-orbit class of
    ``L`` disjoint from the candidate is removed in turn; it is reported
    removable when what remains still passes sibling verification.
    """
    if not L.leaves:
        raise ValueError("empty lamination has no chief candidate")
    depth = L.depth if depth is None else depth
    gen = _generator(L)
    classes = grand_orbit_classes(L)
    own = next(g for g in classes if gen in g)
    closure = _restrict(L, own)
    evidence = []
    for g in classes:
        if g is own:
            continue
        rest = _restrict(L, L.leaves - g)
        ok = bool(verify_sibling_invariant(rest, "full_below_depth"))
        evidence.append((min(g), ok))
    return ChiefCandidate(L, gen, closure, tuple(evidence))


DICHOTOMY_RADII = (Fraction(1, 50), Fraction(1, 100), Fraction(1, 200))


def perfect_dichotomy(L: Lamination, radii=DICHOTOMY_RADII, threshold: int = 2):
    """Perfect-looking or countable-looking, judged by the perfect-part proxy.

    At radius r only leaves longer than 2r are judged: shorter ones sit within
    r of a degenerate leaf, so the proxy says nothing about them. Radii are
    tried coarse to fine; the first one where the proxy keeps all judged
    leaves ("perfect") or none ("countable") decides. Otherwise "mixed".
    Returns (tag, radius, kept, judged).
    """
    for r in sorted(radii, reverse=True):
        judged = {c for c in L.leaves if chord_length(c) > 2 * r}
        if not judged:
            continue
        kept = len(judged & perfect_part_approx(L, r, threshold).leaves)
        if kept == len(judged):
            return "perfect", r, kept, len(judged)
        if kept == 0:
            return "countable", r, kept, len(judged)
    return "mixed", None, 0, 0


# fixtures ---------------------------------------------------------------

def rotational_orbit(p: int, q: int) -> list[Fraction]:
    """The doubling orbit of period ``q`` with combinatorial rotation number p/q."""
    if not 0 < p < q:
        raise ValueError("rotation number must lie in (0, 1)")
    n = 2**q - 1
    for k in range(1, n):
        x = Fraction(k, n)
        orb = sorted({(x * 2**i) % 1 for i in range(q)})
        if len(orb) != q:
            continue
        if all(sigma(2, orb[i]) == orb[(i + p) % q] for i in range(q)):
            return orb
    raise ValueError(f"no rotational orbit for {p}/{q}")


def quad_rotational(depth: int = 5, rotation: Fraction = Fraction(1, 3)) -> Lamination:
    rotation = Fraction(rotation)
    orb = rotational_orbit(rotation.numerator, rotation.denominator)
    q = len(orb)
    # the major is the polygon edge with the longest outer arc; the critical
    # diameter is a diagonal of the quadrilateral spanned by the major and its
    # sibling, so its endpoints lie on the critical Fatou gap
    arcs = [(orb[(i + 1) % q] - orb[i]) % 1 for i in range(q)]
    i = max(range(q), key=lambda j: arcs[j])
    u, w = orb[i], orb[i] + arcs[i]
    half = Fraction(1, 2)
    K = CriticalPortrait((min(chord(u, u + half), chord(w, w - half)),), 2)
    L = grand_orbit_closure(2, chord(orb[0], orb[1]), depth, K)
    return L.with_provenance(f"fixture quad_rotational: grand orbit of {chord(orb[0], orb[1])}"
                             f" rotation {rotation} portrait {K} depth {depth}")


def quad_preperiodic_critical(depth: int = 5) -> Lamination:
    c = chord(Fraction(1, 8), Fraction(5, 8))
    L = grand_orbit_closure(2, c, depth)
    return L.with_provenance(f"fixture quad_preperiodic_critical: grand orbit of critical leaf {c} depth {depth}")


# collapsing quadrilateral Q = {a, b, a+1/3, b+1/3} and critical leaf {x, x+1/3}
CUBIC_PERFECT = (Fraction(1, 18), Fraction(1, 9), Fraction(19, 36))


def cubic_quadrilateral_data(a, b, x):
    t = Fraction(1, 3)
    Q = sorted({a % 1, b % 1, (a + t) % 1, (b + t) % 1})
    sides = [chord(Q[i], Q[(i + 1) % 4]) for i in range(4)]
    diag, other = chord(a, a + t), chord(b, b + t)
    leaf = chord(x, x + t)
    return sides, diag, other, leaf


def cubic_perfect(depth: int = 6, params=CUBIC_PERFECT, mirror: bool = False) -> Lamination:
    a, b, x = params
    sides, diag, other, leaf = cubic_quadrilateral_data(a, b, x)
    K = CriticalPortrait((diag, leaf), 3)
    seed = sides + [leaf]
    L = pullback_build(K, seed=seed, depth=depth, forbidden=[other])
    name = "cubic_perfect"
    if mirror:
        L = mirror_lamination(L)
        name = "cubic_perfect_mirror"
    return L.with_provenance(f"fixture {name}: critical quadrilateral {','.join(map(str, sides))}"
                             f" and critical leaf {leaf} depth {depth}")


def mirror_lamination(L: Lamination) -> Lamination:
    gens = None if L.generations is None else {reflect(c): g for c, g in L.generations.items()}
    return Lamination(L.degree, frozenset(reflect(c) for c in L.leaves), L.depth,
                      f"mirror image of: {L.provenance}", gens)


FIXTURES = {
    "quad_rotational": quad_rotational,
    "quad_preperiodic_critical": quad_preperiodic_critical,
    "cubic_perfect": cubic_perfect,
    "cubic_perfect_mirror": lambda depth=6: cubic_perfect(depth, mirror=True),
}


def fixture(name: str, depth: Optional[int] = None) -> Lamination:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; expected one of {', '.join(sorted(FIXTURES))}")
    return FIXTURES[name]() if depth is None else FIXTURES[name](depth)
