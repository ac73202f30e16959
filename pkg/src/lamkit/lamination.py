"""Finite-depth laminations: construction, sibling verification, and comparison."""
from __future__ import annotations

import os
from bisect import bisect_left, bisect_right
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .chords import (
    Chord,
    chord,
    chord_distance,
    chord_length,
    disjoint,
    find_crossing,
    image_chord,
    is_critical,
    linked,
    pullback_options,
)
from .circle import check_degree, circle_distance
from .portraits import CriticalPortrait


@dataclass(frozen=True)
class Lamination:
    """A degree-tagged finite set of pairwise unlinked nondegenerate chords.

    ``generations`` optionally records, per leaf, the pullback generation at
    which it first appeared; it is metadata and does not take part in equality.
    """

    degree: int
    leaves: frozenset
    depth: int = 0
    provenance: str = ""
    generations: Optional[Mapping[Chord, int]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        check_degree(self.degree)
        leaves = frozenset(c for c in self.leaves if not c.degenerate)
        object.__setattr__(self, "leaves", leaves)
        bad = find_crossing(leaves)
        if bad:
            raise ValueError(f"leaves {bad[0]} and {bad[1]} cross")

    @property
    def sorted_leaves(self) -> list[Chord]:
        return sorted(self.leaves)

    def __len__(self) -> int:
        return len(self.leaves)

    def __iter__(self):
        return iter(self.sorted_leaves)

    def __contains__(self, c) -> bool:
        return c in self.leaves

    def truncate(self, depth: int) -> "Lamination":
        """Leaves of generation at most ``depth`` (needs generation metadata)."""
        if self.generations is None:
            raise ValueError("lamination carries no generation data")
        gens = {c: g for c, g in self.generations.items() if g <= depth}
        return Lamination(self.degree, frozenset(gens), min(depth, self.depth),
                          self.provenance, gens)

    def generation(self, c: Chord) -> Optional[int]:
        return None if self.generations is None else self.generations.get(c)

    def with_provenance(self, text: str) -> "Lamination":
        return Lamination(self.degree, self.leaves, self.depth, text, self.generations)


def infer_generations(L: Lamination) -> dict[Chord, int]:
    """Generation guesses for a lamination read back without metadata.

    Each leaf is followed forward until its orbit reaches a terminal: a
    critical leaf, a leaf whose image is not in ``L``, or a cycle of leaves.
    Step counts are shifted per terminal so the deepest leaf over it sits at
    ``L.depth``, then clamped at 0. Seeds and their same-length siblings are
    indistinguishable this way, so this is a best guess.
    """
    d = L.degree
    steps: dict[Chord, tuple[int, Chord]] = {}
    for c in L.sorted_leaves:
        path = []
        x = c
        while x not in steps:
            img = image_chord(d, x)
            if img.degenerate or img not in L.leaves or x in path:
                break
            path.append(x)
            x = img
        if x in steps:
            base, term = steps[x]
        elif x in path:
            i = path.index(x)
            term = min(path[i:])
            for y in path[i:]:
                steps[y] = (0, term)
            path = path[:i]
            base = 0
        else:
            base, term = 0, x
            steps[x] = (0, x)
        for k, y in enumerate(reversed(path), 1):
            steps[y] = (base + k, term)
    top: dict[Chord, int] = {}
    for n, term in steps.values():
        top[term] = max(top.get(term, 0), n)
    return {c: max(0, n - max(0, top[term] - L.depth)) for c, (n, term) in steps.items()}


def empty_lamination(degree: int) -> Lamination:
    return Lamination(degree, frozenset(), 0, "empty lamination", {})


@dataclass(frozen=True)
class Verdict:
    ok: bool
    condition: Optional[int] = None
    witness: object = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _image_index(L: Lamination) -> dict[Chord, list[Chord]]:
    idx = defaultdict(list)
    for c in L.sorted_leaves:
        idx[image_chord(L.degree, c)].append(c)
    return idx


def _has_full_collection(d: int, leaf: Chord, group: list[Chord]) -> bool:
    others = [c for c in group if c != leaf and disjoint(c, leaf)]
    for combo in combinations(others, d - 1):
        if all(disjoint(p, q) for p, q in combinations(combo, 2)):
            return True
    return False


def _forward_run(d: int, c: Chord, cap: int) -> int:
    """Number of nondegenerate forward images of ``c``, capped."""
    n = 0
    while n < cap:
        c = image_chord(d, c)
        if c.degenerate:
            break
        n += 1
    return n


MODES = ("forward_and_siblings", "full_below_depth")


def verify_sibling_invariant(L: Lamination, mode: str = "forward_and_siblings") -> Verdict:
    """Check the forward, sibling and (optionally) pullback conditions.

    In ``full_below_depth`` mode every leaf younger than ``L.depth`` must have a
    pullback in ``L``. Without generation data a leaf lacking a pullback is
    accepted only if it has ``L.depth`` nondegenerate forward images.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    d = L.degree
    idx = _image_index(L)
    for c in L.sorted_leaves:
        img = image_chord(d, c)
        if not img.degenerate and img not in L.leaves:
            return Verdict(False, 1, c, f"image {img} of {c} is not a leaf")
    for c in L.sorted_leaves:
        if is_critical(d, c):
            continue
        if not _has_full_collection(d, c, idx[image_chord(d, c)]):
            return Verdict(False, 3, c, f"{c} has no full sibling collection")
    if mode == "full_below_depth":
        for c in L.sorted_leaves:
            if c in idx:
                continue
            g = L.generation(c)
            if g is not None:
                if g < L.depth:
                    return Verdict(False, 2, c, f"{c} (generation {g}) has no pullback")
            elif _forward_run(d, c, L.depth) < L.depth:
                return Verdict(False, 2, c, f"{c} has no pullback")
    return Verdict(True)


def _workers() -> int:
    raw = os.environ.get("LAMKIT_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def forward_closure(d: int, chords: Iterable[Chord]) -> set[Chord]:
    out = set()
    todo = [c for c in chords if not c.degenerate]
    while todo:
        c = todo.pop()
        if c in out:
            continue
        out.add(c)
        img = image_chord(d, c)
        if not img.degenerate:
            todo.append(img)
    return out


def _choose(d, target, constraints, forbidden, existing):
    opts = pullback_options(d, target)
    opts = [o for o in opts if not any(linked(x, k) for x in o for k in constraints)]
    allowed = [o for o in opts if not any(x in forbidden for x in o)]
    if allowed:
        opts = allowed
    if not opts:
        raise RuntimeError(f"no compatible pullback of {target}")
    best = max(sum(x in existing for x in o) for o in opts)
    return min(o for o in opts if sum(x in existing for x in o) == best)


def pullback_build(
    portrait: CriticalPortrait,
    seed: Optional[Iterable[Chord]] = None,
    depth: int = 1,
    *,
    forbidden: Iterable[Chord] = (),
    provenance: Optional[str] = None,
) -> Lamination:
    """Iterated pullbacks of ``seed`` (default: the portrait chords).

    The forward orbit of the seed forms generation 0. Each chord of the latest
    generation is pulled back to a full fibre pairing that is unlinked with the
    portrait and the seed. Ties go first to pairings reusing existing leaves,
    then to the lexicographically least pairing. Pairings containing a
    ``forbidden`` chord are used only when nothing else is available.
    """
    d = portrait.degree
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    seed = list(portrait.chords if seed is None else seed)
    for s in seed:
        for c in portrait.chords:
            if linked(s, c):
                raise ValueError(f"incompatible seed: {s} crosses portrait chord {c}")
    if find_crossing(seed):
        raise ValueError("incompatible seed: seed chords cross")
    gen0 = forward_closure(d, seed)
    if find_crossing(gen0):
        raise ValueError("incompatible seed: forward images cross")
    constraints = tuple(sorted(set(portrait.chords) | gen0))
    forbidden = frozenset(forbidden)
    gens: dict[Chord, int] = {c: 0 for c in gen0}
    current = sorted(gen0)
    workers = _workers()
    for g in range(1, depth + 1):
        existing = frozenset(gens)

        def pull(target):
            return _choose(d, target, constraints, forbidden, existing)

        if workers > 1 and len(current) > 64:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                chosen = list(pool.map(pull, current, chunksize=64))
        else:
            chosen = [pull(t) for t in current]
        fresh = set()
        for option in chosen:
            for x in option:
                if x not in gens:
                    fresh.add(x)
        for x in fresh:
            gens[x] = g
        current = sorted(fresh)
    prov = provenance or f"pullback of portrait {portrait} to depth {depth}"
    return Lamination(d, frozenset(gens), depth, prov, gens)


def union_laminations(L1: Lamination, L2: Lamination) -> Lamination:
    if L1.degree != L2.degree:
        raise ValueError("degree mismatch")
    a, b = L1.sorted_leaves, L2.sorted_leaves
    bad = find_crossing(set(a) | set(b))
    if bad:
        raise ValueError(f"incompatible laminations: {bad[0]} crosses {bad[1]}")
    gens = None
    if L1.generations is not None and L2.generations is not None:
        gens = dict(L2.generations)
        for c, g in L1.generations.items():
            gens[c] = min(g, gens.get(c, g))
    prov = " + ".join(p for p in (L1.provenance, L2.provenance) if p)
    return Lamination(L1.degree, L1.leaves | L2.leaves, min(L1.depth, L2.depth), prov, gens)


def _max_denominator(L: Lamination) -> int:
    return max((x.denominator for c in L.leaves for x in c.endpoints), default=1)


def _distance_to_points(c: Chord, q_max: int) -> Fraction:
    """Chord distance from ``c`` to the nearest degenerate chord at a point of denominator <= q_max."""
    half = chord_length(c) / 2
    span = c.b - c.a
    if span < Fraction(1, 2):
        mids = [c.a + half]
    elif span > Fraction(1, 2):
        mids = [(c.b + half) % 1]
    else:
        mids = [c.a + half, (c.b + half) % 1]
    best = None
    for m in mids:
        p = m.limit_denominator(q_max)
        dist = max(circle_distance(c.a, p), circle_distance(c.b, p))
        best = dist if best is None else min(best, dist)
    return best


def _directed(A: list[Chord], B: list[Chord], q_max: int) -> Fraction:
    worst = Fraction(0)
    bset = set(B)
    for c in A:
        if c in bset:
            continue
        best = _distance_to_points(c, q_max)
        for e in B:
            dist = chord_distance(c, e)
            if dist < best:
                best = dist
        worst = max(worst, best)
    return worst


def hausdorff_distance(L1: Lamination, L2: Lamination, q_max: Optional[int] = None) -> Fraction:
    """Hausdorff distance; degenerate leaves at every point of denominator up to
    ``q_max`` count as leaves of both sides.

    ``q_max`` defaults to the largest denominator present in the pair. Compare
    several laminations with one shared ``q_max`` to stay in a single metric space.
    """
    if L1.degree != L2.degree:
        raise ValueError("degree mismatch")
    if q_max is None:
        q_max = max(_max_denominator(L1), _max_denominator(L2))
    a, b = L1.sorted_leaves, L2.sorted_leaves
    return max(_directed(a, b, q_max), _directed(b, a, q_max))


def neighbour_counts(leaves: list[Chord], radius: Fraction) -> dict[Chord, int]:
    """Number of other leaves within chord distance ``radius`` of each leaf."""
    by_a = sorted(leaves, key=lambda c: c.a)
    by_b = sorted(leaves, key=lambda c: c.b)
    keys_a = [c.a for c in by_a]
    keys_b = [c.b for c in by_b]

    def window(keys, items, x):
        lo, hi = x - radius, x + radius
        spans = [(lo, hi)]
        if lo < 0:
            spans = [(Fraction(0), hi), (lo + 1, Fraction(1))]
        elif hi >= 1:
            spans = [(lo, Fraction(1)), (Fraction(0), hi - 1)]
        for s, e in spans:
            yield from items[bisect_left(keys, s):bisect_right(keys, e)]

    counts = {}
    for c in leaves:
        near = set(window(keys_a, by_a, c.a)) | set(window(keys_b, by_b, c.a))
        counts[c] = sum(1 for e in near if e != c and chord_distance(c, e) <= radius)
    return counts


def perfect_part_approx(L: Lamination, radius: Fraction, threshold: int) -> Lamination:
    """Repeatedly drop leaves with fewer than ``threshold`` neighbours within ``radius``.

    A finite-depth stand-in for the perfect part; flagged as such in the provenance.
    """
    radius = Fraction(radius)
    kept = L.sorted_leaves
    while True:
        counts = neighbour_counts(kept, radius)
        nxt = [c for c in kept if counts[c] >= threshold]
        if len(nxt) == len(kept):
            break
        kept = nxt
    gens = None if L.generations is None else {c: L.generations[c] for c in kept}
    prov = f"perfect-part proxy (approximate; radius={radius}, threshold={threshold}) of: {L.provenance}"
    return Lamination(L.degree, frozenset(kept), L.depth, prov, gens)


def is_clean(L: Lamination) -> Verdict:
    """Leaves sharing an endpoint must be edges of one common finite gap."""
    from .gaps import extract_gaps

    finite_edges = [set(g.edges) for g in extract_gaps(L) if g.finite_flag]
    at = defaultdict(list)
    for c in L.sorted_leaves:
        at[c.a].append(c)
        at[c.b].append(c)
    for x in sorted(at):
        for p, q in combinations(at[x], 2):
            if not any(p in e and q in e for e in finite_edges):
                return Verdict(False, None, (p, q), f"{p} and {q} share {x} but bound no finite gap")
    return Verdict(True)


def leafwise_refines(L0: Lamination, L: Lamination) -> bool:
    """Every leaf of ``L0`` is a leaf of ``L`` or joins two vertices of a finite gap of ``L``."""
    from .gaps import extract_gaps

    if L0.degree != L.degree:
        raise ValueError("degree mismatch")
    finite = [set(g.vertices) for g in extract_gaps(L) if g.finite_flag]
    for c in L0.sorted_leaves:
        if c in L.leaves:
            continue
        if not any(c.a in vs and c.b in vs for vs in finite):
            return False
    return True


def build_from_rational_classes(d: int, classes: Iterable[Iterable[Fraction]]) -> Lamination:
    """Leaves are the convex hull edges of each class of angles."""
    check_degree(d)
    classes = [sorted({Fraction(x) % 1 for x in cls}) for cls in classes]
    seen: dict[Fraction, int] = {}
    for i, cls in enumerate(classes):
        for x in cls:
            if x in seen:
                raise ValueError(f"classes {seen[x]} and {i} share angle {x}")
            seen[x] = i
    leaves = set()
    for cls in classes:
        if len(cls) == 2:
            leaves.add(chord(*cls))
        elif len(cls) > 2:
            leaves.update(chord(x, y) for x, y in zip(cls, cls[1:] + cls[:1]))
    bad = find_crossing(leaves)
    if bad:
        raise ValueError(f"linked classes: {bad[0]} crosses {bad[1]}")
    return Lamination(d, frozenset(leaves), 0, f"hulls of {len(classes)} rational classes")
