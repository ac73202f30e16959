"""Exact arithmetic on the circle R/Z restricted to rational angles.

Angles are plain :class:`fractions.Fraction` values normalised into [0, 1).
Everything here is pure; nothing touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEGREES = (2, 3)

ZERO = Fraction(0)


def angle(x, q=None) -> Fraction:
    """Coerce ``x`` (or ``x/q``) to a reduced fraction in [0, 1)."""
    if q is not None:
        x = Fraction(x, q)
    elif isinstance(x, str):
        return parse_angle(x)
    return Fraction(x) % 1


def parse_angle(text: str) -> Fraction:
    """Parse the ``p/q`` grammar. Unreduced or out-of-range input is rejected."""
    text = text.strip()
    if "/" not in text:
        raise ValueError(f"malformed angle {text!r}: expected p/q")
    p, q = text.split("/", 1)
    try:
        p, q = int(p), int(q)
    except ValueError:
        raise ValueError(f"malformed angle {text!r}") from None
    if q <= 0 or not 0 <= p < q:
        raise ValueError(f"angle {text!r} outside [0, 1)")
    a = Fraction(p, q)
    if a.denominator != q:
        raise ValueError(f"angle {text!r} is not in lowest terms")
    return a


def fmt_angle(a: Fraction) -> str:
    return f"{a.numerator}/{a.denominator}"


def check_degree(d: int) -> None:
    if d not in DEGREES:
        raise ValueError(f"unsupported degree {d}; expected 2 or 3")


def sigma(d: int, a: Fraction) -> Fraction:
    return (d * a) % 1


def sigma_n(d: int, a: Fraction, n: int) -> Fraction:
    return (d**n * a) % 1


def preimages(d: int, a: Fraction) -> list[Fraction]:
    """The ``d`` angles mapping to ``a``, in increasing order."""
    return [(a + k) / d for k in range(d)]


def ccw(a: Fraction, b: Fraction) -> Fraction:
    """Length of the counterclockwise arc from ``a`` to ``b``, in [0, 1)."""
    return (b - a) % 1


def in_open_arc(x: Fraction, a: Fraction, b: Fraction) -> bool:
    """True iff ``x`` lies strictly inside the ccw arc from ``a`` to ``b``."""
    return 0 < ccw(a, x) < ccw(a, b) if a != b else x != a


def in_closed_arc(x: Fraction, a: Fraction, b: Fraction) -> bool:
    if a == b:
        return x == a
    return ccw(a, x) <= ccw(a, b)


def cyclic_order(a: Fraction, b: Fraction, c: Fraction) -> int:
    """+1 if a, b, c are met in ccw order, -1 if clockwise, 0 if any coincide."""
    if a == b or b == c or a == c:
        return 0
    return 1 if ccw(a, b) < ccw(a, c) else -1


def circle_distance(a: Fraction, b: Fraction) -> Fraction:
    t = ccw(a, b)
    return min(t, 1 - t)


@dataclass(frozen=True)
class OrbitInfo:
    preperiod: int
    period: int
    orbit: tuple[Fraction, ...]

    @property
    def cycle(self) -> tuple[Fraction, ...]:
        return self.orbit[self.preperiod:]

    @property
    def is_periodic(self) -> bool:
        return self.preperiod == 0


def orbit_info(d: int, a: Fraction) -> OrbitInfo:
    seen: dict[Fraction, int] = {}
    orbit = []
    x = angle(a)
    while x not in seen:
        seen[x] = len(orbit)
        orbit.append(x)
        x = sigma(d, x)
    pre = seen[x]
    return OrbitInfo(pre, len(orbit) - pre, tuple(orbit))


def is_periodic(d: int, a: Fraction) -> bool:
    return orbit_info(d, a).preperiod == 0


def farey_points(q_max: int) -> list[Fraction]:
    """All angles with denominator at most ``q_max``, sorted."""
    pts = {Fraction(p, q) for q in range(1, q_max + 1) for p in range(q)}
    return sorted(pts)
