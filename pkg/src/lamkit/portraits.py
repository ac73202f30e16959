"""Critical portraits and the sampled portrait space."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .chords import Chord, chord, is_critical, linked, parse_chord, reflect


@dataclass(frozen=True, order=True)
class CriticalPortrait:
    """``degree - 1`` pairwise unlinked critical chords (a pair for cubics).

    A doubled portrait repeats the same chord; it is kept, flagged by ``doubled``.
    """

    chords: tuple[Chord, ...]
    degree: int = 3

    def __post_init__(self):
        if len(self.chords) != self.degree - 1:
            raise ValueError(f"degree {self.degree} portrait needs {self.degree - 1} chords")
        object.__setattr__(self, "chords", tuple(sorted(self.chords)))
        for c in self.chords:
            if c.degenerate or not is_critical(self.degree, c):
                raise ValueError(f"{c} is not a critical chord")
        for i, c in enumerate(self.chords):
            for e in self.chords[i + 1:]:
                if linked(c, e):
                    raise ValueError(f"portrait chords {c} and {e} cross")

    @property
    def doubled(self) -> bool:
        return len(set(self.chords)) < len(self.chords)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.chords)


def portrait(*chords, degree=None) -> CriticalPortrait:
    cs = tuple(c if isinstance(c, Chord) else chord(*c) for c in chords)
    return CriticalPortrait(cs, degree if degree is not None else len(cs) + 1)


def parse_portrait(text: str, degree: int = 3) -> CriticalPortrait:
    return CriticalPortrait(tuple(parse_chord(t) for t in text.split(",")), degree)


def compatible(K: CriticalPortrait, L) -> bool:
    """No portrait chord crosses a leaf of ``L``."""
    return not any(linked(c, leaf) for c in K.chords for leaf in L.leaves)


def compatible_chords(chords, L) -> dict[Chord, bool]:
    """Per-chord compatibility with ``L`` (shared work for grid sweeps)."""
    leaves = sorted(L.leaves)
    return {c: not any(linked(c, leaf) for leaf in leaves) for c in chords}


def grid_critical_chords(resolution: int) -> list[Chord]:
    """Cubic critical chords whose endpoints have denominators dividing ``resolution``."""
    if resolution < 1:
        raise ValueError("resolution must be positive")
    out = set()
    for k in range(resolution):
        x = Fraction(k, resolution)
        for j in (1, 2):
            y = x + Fraction(j, 3)
            if (y % 1) * resolution % 1 == 0:
                out.add(chord(x, y))
    return sorted(out)


def portrait_grid(resolution: int) -> list[CriticalPortrait]:
    """All unordered unlinked pairs of grid critical chords, doubled pairs included."""
    chords = grid_critical_chords(resolution)
    return [
        CriticalPortrait((c, e), 3)
        for c, e in combinations_with_replacement(chords, 2)
        if not linked(c, e)
    ]


def rotate_portrait(K: CriticalPortrait, t: Fraction) -> CriticalPortrait:
    return CriticalPortrait(tuple(chord(c.a + t, c.b + t) for c in K.chords), K.degree)


def reflect_portrait(K: CriticalPortrait) -> CriticalPortrait:
    return CriticalPortrait(tuple(reflect(c) for c in K.chords), K.degree)
