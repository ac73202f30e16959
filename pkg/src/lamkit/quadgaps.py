"""Quadratic invariant gaps of the tripling map and their canonical laminations.

A critical chord ``c`` of sigma_3 cuts the circle into arcs of length 1/3 and
2/3. The points whose whole orbit stays in the closed long arc form a closed
forward invariant set Pi(c); its hull G(c) is an invariant gap of degree two.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .chords import Chord, chord, image_chord, is_critical, linked
from .circle import ccw, fmt_angle, is_periodic, orbit_info, preimages, sigma
from .gaps import FaceIndex, Gap, boundary_advance, majors, periodic_face_cycles
from .lamination import Lamination, pullback_build
from .portraits import CriticalPortrait

D = 3
THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)

TYPES = ("regular_critical", "caterpillar", "periodic", "plain")


def _check(c: Chord) -> None:
    if c.degenerate or not is_critical(D, c):
        raise ValueError(f"{c} is not a sigma_3-critical chord")


def long_arc(c: Chord) -> tuple[Fraction, Fraction]:
    """The ccw arc (start, end) of length 2/3 cut off by ``c``."""
    _check(c)
    return (c.a, c.b) if c.b - c.a == TWO_THIRDS else (c.b, c.a)


def in_closed_long_arc(c: Chord, x: Fraction) -> bool:
    s, _ = long_arc(c)
    return ccw(s, x) <= TWO_THIRDS


def in_open_long_arc(c: Chord, x: Fraction) -> bool:
    s, _ = long_arc(c)
    return 0 < ccw(s, x) < TWO_THIRDS


def _pi_for_denominator(s: Fraction, q: int) -> list[Fraction]:
    # points k/q; the arc test ccw(s, k/q) <= 2/3 in integers
    sn, sd = s.numerator, s.denominator
    mod = q * sd
    inside = [3 * ((k * sd - sn * q) % mod) <= 2 * mod for k in range(q)]
    # 0 unknown, 1 in progress, 2 good, 3 bad
    state = [0] * q
    for k in range(q):
        path = []
        x = k
        while state[x] == 0:
            if not inside[x]:
                state[x] = 3
                break
            state[x] = 1
            path.append(x)
            x = 3 * x % q
        # in-progress means we closed a cycle that stayed inside
        verdict = 3 if state[x] == 3 else 2
        for y in path:
            state[y] = verdict
    return [Fraction(k, q) for k in range(q) if state[k] == 2 and gcd(k, q) == 1]


def pi_set(c: Chord, denominator_bound: int) -> set[Fraction]:
    """Angles with denominator at most the bound whose orbits stay in the closed long arc."""
    s, _ = long_arc(c)
    if denominator_bound < 1:
        raise ValueError("denominator bound must be positive")
    out: set[Fraction] = set()
    for q in range(1, denominator_bound + 1):
        out.update(_pi_for_denominator(s, q))
    return out


def classify_type(c: Chord) -> str:
    """Exact type of the gap G(c) from the orbits of the endpoints."""
    _check(c)
    v = sigma(D, c.a)
    orbit = orbit_info(D, v).orbit
    if all(in_open_long_arc(c, x) for x in orbit):
        return "regular_critical"
    if (is_periodic(D, c.a) or is_periodic(D, c.b)) and all(in_closed_long_arc(c, x) for x in orbit):
        return "caterpillar"
    return "plain"


def _hits(x: Fraction, target: Fraction) -> bool:
    return target in orbit_info(D, x).orbit


def perfect_part(c: Chord, pts) -> set[Fraction]:
    """Drop the isolated points of Pi for a caterpillar chord.

    These are exactly the points that eventually land on the non-periodic
    endpoint of ``c``: the chain of pullbacks of the critical edge.
    """
    pts = set(pts)
    if classify_type(c) != "caterpillar":
        return pts
    loose = c.a if is_periodic(D, c.b) else c.b
    return {x for x in pts if not _hits(x, loose)}


@dataclass(frozen=True)
class QuadraticGapSpec:
    critical_chord: Chord
    type_tag: str
    vertices: tuple[Fraction, ...]
    bound: int
    all_points: tuple[Fraction, ...] = field(default=(), compare=False, repr=False)

    @property
    def L_arc(self) -> tuple[Fraction, Fraction]:
        return long_arc(self.critical_chord)

    @property
    def gap(self) -> Gap:
        return Gap(self.vertices)

    def report(self) -> str:
        verts = ",".join(fmt_angle(v) for v in self.vertices)
        return (f"quadgap chord={self.critical_chord} type={self.type_tag}"
                f" bound={self.bound} vertices=[{verts}]")

    def __str__(self) -> str:
        return self.report()


def invariant_gap(c: Chord, denominator_bound: int, perfect: bool = False) -> QuadraticGapSpec:
    """Vertex data of G(c), or of G'(c) when ``perfect`` is set.

    For a caterpillar chord G'(c) is of periodic type; otherwise G'(c) = G(c).
    """
    tag = classify_type(c)
    pts = pi_set(c, denominator_bound)
    if perfect and tag == "caterpillar":
        pts = perfect_part(c, pts)
        tag = "periodic"
    return QuadraticGapSpec(c, tag, tuple(sorted(pts)), denominator_bound, tuple(sorted(pts)))


def _inner_critical_chord(U: QuadraticGapSpec, avoid=()) -> Chord:
    """A critical chord joining two vertices of U, avoiding the listed images."""
    c = U.critical_chord
    verts = set(U.vertices)
    skip = set(orbit_info(D, sigma(D, c.a)).orbit) | set(avoid)
    candidates = []
    for z in sorted(verts, key=lambda x: (x.denominator, x)):
        fibre = [x for x in preimages(D, z) if x in verts]
        for i in range(len(fibre)):
            for j in range(i + 1, len(fibre)):
                e = chord(fibre[i], fibre[j])
                if e != c:
                    candidates.append((z in skip, z.denominator, e))
    if not candidates:
        raise ValueError("increase denominator bound")
    return min(candidates, key=lambda t: (t[0], t[1], t[2]))[2]


@dataclass(frozen=True)
class CanonicalLamination:
    lamination: Lamination
    gap: QuadraticGapSpec
    portrait: CriticalPortrait
    major: Optional[Chord] = None
    quadrilateral: tuple[Fraction, ...] = ()
    excluded: tuple[Chord, ...] = ()
    senior: tuple[Gap, ...] = ()
    vassal: tuple[Gap, ...] = ()


def _major(U: QuadraticGapSpec) -> tuple[Fraction, Fraction]:
    """Endpoints (u, w) of the major with the longest outer arc u -> w."""
    ms = set(majors(D, U.gap))
    if not ms:
        raise ValueError("increase denominator bound")
    outer = [(s, e) for s, e, arc in U.gap.pieces() if not arc and chord(s, e) in ms]
    return max(outer, key=lambda p: (ccw(p[0], p[1]), p))


def fatou_cycles(L: Lamination) -> list[list[Gap]]:
    """Periodic face cycles whose return map has degree at least two."""
    index = FaceIndex(L)
    out = []
    for cyc in periodic_face_cycles(index):
        deg = 1
        for i in cyc:
            deg *= int(boundary_advance(L.degree, index.faces[i], 1))
        if deg >= 2:
            out.append([index.faces[i] for i in cyc])
    return out


def _cycle_containing(L: Lamination, pts) -> tuple[Gap, ...]:
    pts = set(pts)
    for cyc in fatou_cycles(L):
        for g in cyc:
            if pts <= set(g.vertices) or all(g.in_footprint(p) for p in pts):
                return tuple(cyc)
    return ()


def canonical_lamination(U: QuadraticGapSpec, depth: int) -> CanonicalLamination:
    """Depth-limited pullback lamination with U as an invariant gap.

    Regular critical and caterpillar gaps use the portrait made of the
    critical edge and a critical chord inside U. A periodic gap gets the
    critical quadrilateral spanned by its major and the major's sibling; the
    two other sides of the quadrilateral are kept out.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    c = U.critical_chord
    if U.type_tag in ("regular_critical", "caterpillar", "plain"):
        inner = _inner_critical_chord(U)
        K = CriticalPortrait((c, inner), D)
        L = pullback_build(K, seed=[c], depth=depth,
                           provenance=f"canonical lamination of {U.type_tag} gap of {c} depth {depth}")
        return CanonicalLamination(L, U, K, senior=_cycle_containing(L, [inner.a, inner.b]))

    u, w = _major(U)
    M = chord(u, w)
    if ccw(u, w) <= THIRD:
        raise ValueError("major admits no sibling; increase denominator bound")
    M2 = chord(u + THIRD, w - THIRD)
    quad = tuple(sorted({u, (w - THIRD) % 1, (u + THIRD) % 1, w}))
    ell = (chord(u, w - THIRD), chord(u + THIRD, w))
    diagonals = [chord(u, u + THIRD), chord(w - THIRD, w)]
    diag = c if c in diagonals else min(diagonals)
    inner = _inner_critical_chord(U)
    if linked(inner, diag):
        raise ValueError("increase denominator bound")
    K = CriticalPortrait((diag, inner), D)
    seed = {M, M2}
    x = M
    for _ in range(64):
        x = image_chord(D, x)
        if x in seed:
            break
        seed.add(x)
    L = pullback_build(K, seed=sorted(seed), depth=depth, forbidden=ell,
                       provenance=f"canonical lamination of periodic gap of {c} depth {depth}")
    senior = _cycle_containing(L, [inner.a, inner.b])
    vassal = _cycle_containing(L, [M.a, M.b, M2.a, M2.b])
    return CanonicalLamination(L, U, K, M, quad, ell, senior, vassal)
