"""Chords of the unit circle with rational endpoints."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Optional

from .circle import angle, check_degree, circle_distance, fmt_angle, parse_angle, preimages, sigma


@dataclass(frozen=True, order=True)
class Chord:
    """Unordered pair of angles, stored with ``a <= b``."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError("Chord endpoints must be ordered; use chord()")

    @property
    def degenerate(self) -> bool:
        return self.a == self.b

    @property
    def endpoints(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def __contains__(self, x) -> bool:
        return x == self.a or x == self.b

    def __str__(self) -> str:
        return f"{fmt_angle(self.a)}:{fmt_angle(self.b)}"

    def __repr__(self) -> str:
        return f"Chord({self})"


def chord(x, y) -> Chord:
    x, y = angle(x), angle(y)
    return Chord(x, y) if x <= y else Chord(y, x)


def parse_chord(text: str) -> Chord:
    parts = text.strip().split(":")
    if len(parts) != 2:
        raise ValueError(f"malformed chord {text!r}: expected p/q:r/s")
    return chord(parse_angle(parts[0]), parse_angle(parts[1]))


def chord_length(c: Chord) -> Fraction:
    t = c.b - c.a
    return min(t, 1 - t)


def _interleaved(c1: Chord, c2: Chord) -> bool:
    return c1.a < c2.a < c1.b < c2.b or c2.a < c1.a < c2.b < c1.b


def crosses(c1: Chord, c2: Chord) -> bool:
    """Chords cross when they meet inside the open disk (shared endpoints don't count)."""
    if c1.degenerate or c2.degenerate:
        raise ValueError("degenerate chord has no interior")
    return _interleaved(c1, c2)


def linked(c1: Chord, c2: Chord) -> bool:
    """Like :func:`crosses` but degenerate chords are simply never linked."""
    return _interleaved(c1, c2)


def disjoint(c1: Chord, c2: Chord) -> bool:
    """No common point even on the circle."""
    return not (set(c1.endpoints) & set(c2.endpoints)) and not _interleaved(c1, c2)


def is_critical(d: int, c: Chord) -> bool:
    return sigma(d, c.a) == sigma(d, c.b)


def image_chord(d: int, c: Chord) -> Chord:
    return chord(sigma(d, c.a), sigma(d, c.b))


def image_n(d: int, c: Chord, n: int) -> Chord:
    for _ in range(n):
        c = image_chord(d, c)
    return c


def chord_distance(c1: Chord, c2: Chord) -> Fraction:
    """Max endpoint displacement under the better of the two matchings."""
    straight = max(circle_distance(c1.a, c2.a), circle_distance(c1.b, c2.b))
    swapped = max(circle_distance(c1.a, c2.b), circle_distance(c1.b, c2.a))
    return min(straight, swapped)


def critical_chords(d: int, x: Fraction) -> list[Chord]:
    """All critical chords with one endpoint at ``x``."""
    return [chord(x, x + Fraction(k, d)) for k in range(1, d)]


@dataclass(frozen=True)
class SiblingCollection:
    leaves: tuple[Chord, ...]
    shared_image: Chord


def pullback_options(d: int, target: Chord) -> list[tuple[Chord, ...]]:
    """Every way to pair the two fibres of ``target`` into ``d`` pairwise unlinked chords.

    Each option is a sorted tuple; the list is sorted lexicographically.
    """
    check_degree(d)
    if target.degenerate:
        raise ValueError("cannot pair fibres of a degenerate chord")
    xs = preimages(d, target.a)
    ys = preimages(d, target.b)
    out = []
    for perm in permutations(ys):
        leaves = tuple(sorted(chord(x, y) for x, y in zip(xs, perm)))
        if all(not _interleaved(p, q) for p, q in combinations(leaves, 2)):
            out.append(leaves)
    return sorted(out)


def full_sibling_collection(d: int, leaf: Chord) -> SiblingCollection:
    if leaf.degenerate or is_critical(d, leaf):
        raise ValueError("no sibling collection for critical leaf")
    image = image_chord(d, leaf)
    shifts = tuple(sorted(chord(leaf.a + Fraction(k, d), leaf.b + Fraction(k, d)) for k in range(d)))
    if all(disjoint(p, q) for p, q in combinations(shifts, 2)):
        return SiblingCollection(shifts, image)
    for option in pullback_options(d, image):
        if leaf in option:
            return SiblingCollection(option, image)
    raise AssertionError("fibre pairing always exists for a non-critical chord")


def orbit_longest_hit(d: int, c: Chord, max_steps: int) -> tuple[int, Chord]:
    """First iterate of ``c`` whose length reaches ``1/(d+1)``."""
    if c.degenerate:
        raise ValueError("degenerate chord")
    threshold = Fraction(1, d + 1)
    for i in range(max_steps + 1):
        if chord_length(c) >= threshold:
            return i, c
        c = image_chord(d, c)
    raise RuntimeError("budget exhausted")


def find_crossing(chords: Iterable[Chord]) -> Optional[tuple[Chord, Chord]]:
    """Return some crossing pair, or None when the family is pairwise unlinked.

    Chords become intervals ``[a, b]`` of [0, 1); unlinked means laminar.
    """
    stack: list[Chord] = []
    for c in sorted(set(chords), key=lambda c: (c.a, -c.b)):
        if c.degenerate:
            continue
        while stack and stack[-1].b <= c.a:
            stack.pop()
        if stack and c.b > stack[-1].b:
            return stack[-1], c
        stack.append(c)
    return None


def reflect(c: Chord) -> Chord:
    """Image under the reflection t -> -t, which commutes with every sigma_d."""
    return chord(-c.a, -c.b)
