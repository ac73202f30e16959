"""Flower-like sets, central/regular evidence and sampled alliance disjointness."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .chords import Chord, chord_distance
from .gaps import FaceIndex, Gap, boundary_advance, find_invariant_object, periodic_face_cycles
from .lamination import Lamination
from .portraits import CriticalPortrait, compatible_chords, grid_critical_chords, portrait_grid


@dataclass(frozen=True)
class FlowerLikeSet:
    center: Optional[object]  # Gap or Chord; None for a lone invariant infinite gap
    petals: tuple[Gap, ...]

    def __str__(self) -> str:
        petals = " ".join(str(p) if p.vertices else "[disk]" for p in self.petals)
        return f"center={self.center} petals={petals}"


@dataclass(frozen=True)
class AllianceVerdict:
    tag: str  # central_evidence | regular_evidence | unresolved
    witness: Optional[FlowerLikeSet] = None
    depth_used: int = 0
    note: str = ""

    def __str__(self) -> str:
        extra = f" witness={self.witness}" if self.witness else ""
        note = f" note={self.note}" if self.note else ""
        return f"verdict={self.tag} depth={self.depth_used}{extra}{note}"


def _fatou_faces(index: FaceIndex) -> dict[int, list[int]]:
    """Periodic faces with circle arcs whose cycle has degree at least two."""
    out = {}
    for cyc in periodic_face_cycles(index):
        faces = [index.faces[i] for i in cyc]
        if not all(any(g.arcs) or g.whole_disk for g in faces):
            continue
        deg = 1
        for g in faces:
            deg *= int(boundary_advance(index.degree, g, 1))
        if deg >= 2:
            for i in cyc:
                out[i] = cyc
    return out


def _persistent(L: Lamination, G: Gap, probe_depths) -> bool:
    """The face holding G stays invariant in every probed truncation."""
    if L.generations is None:
        return True
    for k in probe_depths:
        if k > L.depth:
            continue
        idx = FaceIndex(L.truncate(k))
        loc = idx.locate(G.vertices) if G.vertices else 0
        if not isinstance(loc, int) or idx.image(loc) != loc:
            return False
    return True


def detect_flower_like(L: Lamination, probe_depths=()) -> Optional[FlowerLikeSet]:
    """An invariant infinite gap, or an invariant lap with its attached periodic Fatou gaps."""
    obj = find_invariant_object(L)
    if not obj.resolved:
        return None
    index = FaceIndex(L)
    fatou = _fatou_faces(index)
    if obj.kind == "infinite_gap":
        i = index.faces.index(obj.item)
        if i in fatou and _persistent(L, obj.item, probe_depths):
            return FlowerLikeSet(None, (obj.item,))
        if obj.item.whole_disk:
            return FlowerLikeSet(None, (obj.item,))
        return None
    edges = set(obj.item.edges) if isinstance(obj.item, Gap) else {obj.item}
    petals = [index.faces[i] for i in sorted(fatou) if edges & set(index.faces[i].edges)]
    if not petals:
        return None
    return FlowerLikeSet(obj.item, tuple(petals))


def _upto(L: Lamination, k: int) -> list[Chord]:
    if L.generations is None:
        return L.sorted_leaves
    return [c for c in L.sorted_leaves if L.generations[c] <= k]


def _fdist(x: float, y: float) -> float:
    t = (y - x) % 1.0
    return min(t, 1.0 - t)


def nearest_distance(leaf: Chord, pool) -> Optional[Fraction]:
    """Exact chord distance from ``leaf`` to the closest other member of ``pool``.

    A float pass shortlists candidates; only those are compared exactly.
    """
    a, b = float(leaf.a), float(leaf.b)
    approx = []
    for x in pool:
        if x == leaf:
            continue
        xa, xb = float(x.a), float(x.b)
        d = min(max(_fdist(a, xa), _fdist(b, xb)), max(_fdist(a, xb), _fdist(b, xa)))
        approx.append((d, x))
    if not approx:
        return None
    best = min(d for d, _ in approx)
    return min(chord_distance(leaf, x) for d, x in approx if d <= best + 1e-9)


def isolation_profile(L: Lamination, leaf: Chord, depths) -> list[tuple[int, Fraction]]:
    """Distance from ``leaf`` to the nearest other leaf in each truncation."""
    out = []
    for k in depths:
        near = nearest_distance(leaf, _upto(L, k))
        if near is not None:
            out.append((k, near))
    return out


def looks_perfect(L: Lamination, probe_depths=()) -> bool:
    """Every generating leaf is approached ever closer as depth grows.

    Isolated leaves keep a nearest-neighbour distance bounded below; here the
    distance must at least halve between the shallowest and deepest probe.
    """
    depths = sorted(k for k in probe_depths if k <= L.depth)
    if L.generations is None or len(depths) < 2:
        return False
    seeds = [c for c in L.sorted_leaves if L.generations[c] == 0]
    shallow, deep = _upto(L, depths[0]), _upto(L, depths[-1])
    for c in seeds:
        near = [nearest_distance(c, pool) for pool in (shallow, deep)]
        if None in near or not near[1] * 2 <= near[0]:
            return False
    return True


def default_probes(L: Lamination) -> list[int]:
    return list(range(max(2, L.depth - 3), L.depth + 1))


def classify_alliance(L: Lamination, probe_depths=None) -> AllianceVerdict:
    probes = default_probes(L) if probe_depths is None else list(probe_depths)
    flower = detect_flower_like(L, probes)
    if flower is not None:
        return AllianceVerdict("central_evidence", flower, L.depth)
    if looks_perfect(L, probes):
        return AllianceVerdict("regular_evidence", None, L.depth, "no flower-like set; generators accumulated")
    return AllianceVerdict("unresolved", None, L.depth)


@dataclass(frozen=True)
class DisjointnessReport:
    ok: bool
    shared: tuple[CriticalPortrait, ...] = ()
    checked: int = 0
    note: str = ""
    lines: tuple[str, ...] = field(default=(), repr=False)

    def __str__(self) -> str:
        return f"disjoint={self.ok} checked={self.checked} shared={len(self.shared)}" + (
            f" note={self.note}" if self.note else "")


def sweep_lines(L: Lamination, resolution: int, verdict: str) -> list[str]:
    """One report line per grid portrait compatible with ``L``."""
    comp = compatible_chords(grid_critical_chords(resolution), L)
    return [f"portrait={K} verdict={verdict} depth={L.depth}"
            for K in portrait_grid(resolution) if all(comp[c] for c in K.chords)]


def alliances_disjoint_check(L1: Lamination, L2: Lamination, resolution: int = 24,
                             probe_depths=None) -> DisjointnessReport:
    """Grid portraits compatible with both laminations (there should be none)."""
    if L1.leaves == L2.leaves:
        return DisjointnessReport(True, note="identical laminations")
    for name, L in (("first", L1), ("second", L2)):
        v = classify_alliance(L, probe_depths)
        if v.tag != "regular_evidence":
            raise ValueError(f"precondition failure: {name} input is {v.tag.replace('_evidence', '')}")
    chords = grid_critical_chords(resolution)
    c1 = compatible_chords(chords, L1)
    c2 = compatible_chords(chords, L2)
    grid = portrait_grid(resolution)
    shared = tuple(K for K in grid if all(c1[c] and c2[c] for c in K.chords))
    lines = tuple(f"portrait={K} verdict=shared depth={min(L1.depth, L2.depth)}" for K in shared)
    return DisjointnessReport(not shared, shared, len(grid), lines=lines)
