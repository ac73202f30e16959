"""Gaps of finite laminations and their boundary dynamics.

A finite lamination is a laminar family of intervals of [0, 1), so its faces
come straight out of the nesting tree: one face under each leaf plus the root.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Optional, Union

from .chords import Chord, chord, is_critical
from .circle import ccw, circle_distance, fmt_angle, is_periodic, sigma, sigma_n


@dataclass(frozen=True)
class Gap:
    """Cyclically ordered vertices; ``arcs[i]`` marks whether the boundary piece
    from ``vertices[i]`` to the next vertex is a circle arc (True) or a chord.

    The whole disk has no vertices and is never finite.
    """

    vertices: tuple[Fraction, ...]
    arcs: tuple[bool, ...] = ()
    period_info: Optional[tuple[int, int]] = None
    parent: Optional[Chord] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.arcs and self.vertices:
            object.__setattr__(self, "arcs", (False,) * len(self.vertices))
        if len(self.arcs) != len(self.vertices):
            raise ValueError("one boundary flag per vertex expected")

    @property
    def finite_flag(self) -> bool:
        return bool(self.vertices) and not any(self.arcs)

    @property
    def whole_disk(self) -> bool:
        return not self.vertices

    def pieces(self):
        """Yield (start, end, is_arc) for each boundary piece."""
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n], self.arcs[i]

    @property
    def edges(self) -> list[Chord]:
        if len(self.vertices) < 2:
            return []
        out = {chord(x, y) for x, y, arc in self.pieces() if not arc and x != y}
        return sorted(out)

    def in_footprint(self, x: Fraction) -> bool:
        """True if ``x`` is a vertex or sits in one of the boundary arcs."""
        if not self.vertices:
            return True
        if x in self.vertices:
            return True
        for s, e, arc in self.pieces():
            if arc and (ccw(s, x) < ccw(s, e) or s == e):
                return True
        return False

    def __str__(self) -> str:
        return "[" + ",".join(fmt_angle(v) for v in self.vertices) + "]"


def hull_gap(points) -> Gap:
    """Convex hull of finitely many angles, as a finite gap (or degenerate hull)."""
    return Gap(tuple(sorted(set(Fraction(p) % 1 for p in points))))


def extract_gaps(L) -> list[Gap]:
    """All faces cut out by the leaves of ``L``, root face first then by parent leaf."""
    leaves = sorted(L.leaves, key=lambda c: (c.a, -c.b))
    children: dict[Optional[Chord], list[Chord]] = {None: []}
    stack: list[Chord] = []
    for c in leaves:
        while stack and stack[-1].b <= c.a:
            stack.pop()
        children.setdefault(stack[-1] if stack else None, []).append(c)
        children.setdefault(c, [])
        stack.append(c)

    gaps = []
    for parent in [None] + sorted(c for c in children if c is not None):
        kids = children[parent]
        seq: list[tuple[Fraction, bool]] = []  # (vertex, piece-to-next is arc)

        def push(v, arc_next):
            if seq and seq[-1][0] == v:
                seq[-1] = (v, arc_next)
            else:
                seq.append((v, arc_next))

        if parent is None:
            if not kids:
                gaps.append(Gap((), (), parent=None))
                continue
            for k in kids:
                push(k.a, False)
                push(k.b, True)
        else:
            push(parent.a, True)
            for k in kids:
                push(k.a, False)
                push(k.b, True)
            push(parent.b, False)
        # an arc of zero length between merged vertices is not an arc
        verts = tuple(v for v, _ in seq)
        arcs = tuple(a for _, a in seq)
        gaps.append(Gap(verts, arcs, parent=parent))
    return gaps


class FaceIndex:
    """Point location for the faces of a lamination."""

    def __init__(self, L):
        self.lamination = L
        self.degree = L.degree
        self.faces = extract_gaps(L)
        self.by_vertex: dict[Fraction, list[int]] = {}
        self.points: list[Fraction] = []
        arc_owner: dict[Fraction, int] = {}
        for i, g in enumerate(self.faces):
            for v in g.vertices:
                self.by_vertex.setdefault(v, []).append(i)
            for s, e, arc in g.pieces():
                if arc:
                    arc_owner[s] = i
        self.points = sorted(self.by_vertex)
        self._arc_owner = arc_owner
        self.leaves = L.leaves
        self._images = None
        self._positions = None

    def faces_at(self, x: Fraction) -> list[int]:
        if not self.points:
            return [0]
        if x in self.by_vertex:
            return self.by_vertex[x]
        i = bisect_right(self.points, x) - 1
        return [self._arc_owner[self.points[i]]]

    def locate(self, pts) -> Union[int, Chord, Fraction, None]:
        """Face whose footprint holds every point; a leaf or point when the hull
        is degenerate; None when the hull would cross a leaf."""
        pts = sorted(set(pts))
        if len(pts) == 1:
            return pts[0]
        if len(pts) == 2 and chord(*pts) in self.leaves:
            return chord(*pts)
        common = set(self.faces_at(pts[0]))
        for p in pts[1:]:
            common &= set(self.faces_at(p))
            if not common:
                return None
        if len(pts) == 2:
            return chord(*pts)
        return min(common)

    def position(self, G: Gap) -> Optional[int]:
        if self._positions is None:
            self._positions = {g: i for i, g in enumerate(self.faces)}
        return self._positions.get(G)

    def image_map(self) -> list:
        if self._images is None:
            self._images = [self.image(i) for i in range(len(self.faces))]
        return self._images

    def image(self, i: int, n: int = 1):
        g = self.faces[i]
        if g.whole_disk:
            return i
        return self.locate(sigma_n(self.degree, v, n) for v in g.vertices)


def gap_image(d: int, G: Gap, listed_only: bool = False) -> Union[Gap, Chord]:
    """Convex hull of the image of the listed vertices.

    Gaps with circle arcs are refused unless ``listed_only`` is set, since the
    arcs hide vertices the finite data does not see.
    """
    if not G.finite_flag and not listed_only:
        raise ValueError("cannot image unresolved gap")
    pts = sorted({sigma(d, v) for v in G.vertices})
    if len(pts) <= 2:
        return chord(pts[0], pts[-1])
    return Gap(tuple(pts))


def boundary_advance(d: int, G: Gap, n: int = 1) -> Fraction:
    """Total angular advance of sigma_d^n along the boundary of ``G``.

    Arcs stretch by ``d**n``; chords move to the chord between the images of
    their endpoints, traversed forward.
    """
    if G.whole_disk:
        return Fraction(d**n)
    total = Fraction(0)
    for s, e, arc in G.pieces():
        if arc:
            total += d**n * (ccw(s, e) if s != e else 1)
        else:
            total += ccw(sigma_n(d, s, n), sigma_n(d, e, n))
    return total


def periodic_gap_degree(d: int, G: Gap, n: int) -> int:
    """Topological degree of sigma_d^n on the boundary of an invariant gap."""
    if not G.whole_disk:
        for v in G.vertices:
            if not G.in_footprint(sigma_n(d, v, n)):
                raise ValueError(f"gap is not sigma^{n}-invariant: {v} leaves it")
    adv = boundary_advance(d, G, n)
    if adv.denominator != 1:
        raise ValueError(f"non-integral boundary winding {adv}")
    return int(adv)


def rotation_number(d: int, G: Gap, n: int = 1) -> Optional[Fraction]:
    """Rotation number of sigma_d^n on the vertex set of a degree-one gap."""
    if G.whole_disk:
        return None
    if len(G.vertices) == 1:
        return Fraction(0) if sigma_n(d, G.vertices[0], n) == G.vertices[0] else None
    if periodic_gap_degree(d, G, n) != 1:
        return None
    verts = list(G.vertices)
    m = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    start = next((v for v in verts if sigma_n(d, v, n) in pos), None)
    if start is None:
        return None
    # follow until the orbit closes, summing index shifts
    seen, x, shifts, steps = {}, start, 0, 0
    while x not in seen:
        seen[x] = (steps, shifts)
        y = sigma_n(d, x, n)
        if y not in pos:
            return None
        shifts += (pos[y] - pos[x]) % m
        steps += 1
        x = y
    s0, sh0 = seen[x]
    return Fraction(shifts - sh0, m * (steps - s0))


def majors(d: int, G: Gap) -> list[Chord]:
    """Edges of an invariant gap admitting a critical chord on their far side."""
    if len(G.vertices) < 3:
        raise ValueError("majors need a nondegenerate gap")
    for v in G.vertices:
        if not G.in_footprint(sigma(d, v)):
            raise ValueError("majors need an invariant gap")
    out = []
    for s, e, arc in G.pieces():
        if not arc and ccw(s, e) >= Fraction(1, d):
            out.append(chord(s, e))
    return sorted(out)


@dataclass(frozen=True)
class GapClass:
    tag: str
    evidence: str = ""
    period: Optional[int] = None
    degree: Optional[int] = None
    rotation: Optional[Fraction] = None


def face_cycle(index: FaceIndex, i: int) -> Optional[list[int]]:
    """The face cycle through face ``i``, or None if ``i`` is not periodic."""
    images = index.image_map()
    path = [i]
    j = images[i]
    while j != i:
        if not isinstance(j, int) or len(path) > len(images):
            return None
        path.append(j)
        j = images[j]
    return path


def periodic_face_cycles(index: FaceIndex) -> list[list[int]]:
    """Every cycle of the face map, each starting at its least face index."""
    images = index.image_map()
    state = [0] * len(images)  # 0 new, 1 on current path, 2 done
    out = []
    for i in range(len(images)):
        path = []
        j = i
        while isinstance(j, int) and state[j] == 0:
            state[j] = 1
            path.append(j)
            j = images[j]
        if isinstance(j, int) and state[j] == 1:
            cyc = path[path.index(j):]
            k = cyc.index(min(cyc))
            out.append(cyc[k:] + cyc[:k])
        for x in path:
            state[x] = 2
    return sorted(out)


def cycle_degree(index: FaceIndex, cycle: list[int]) -> int:
    d = index.degree
    degs = []
    for i in cycle:
        adv = boundary_advance(d, index.faces[i], 1)
        if adv.denominator != 1:
            raise ValueError("non-integral winding on a face cycle")
        degs.append(int(adv))
    return prod(degs)


def _critical_periodic_edge(d: int, gaps: list[Gap]) -> Optional[Chord]:
    for g in gaps:
        for e in g.edges:
            if is_critical(d, e) and (is_periodic(d, e.a) or is_periodic(d, e.b)):
                return e
    return None


def _standalone_period(d: int, G: Gap, limit: int = 24) -> Optional[int]:
    for n in range(1, limit + 1):
        if all(G.in_footprint(sigma_n(d, v, n)) for v in G.vertices):
            return n
    return None


def probe_counts(L, G: Gap, probe_depths) -> list[tuple[int, int]]:
    """Vertex count of the face holding ``G`` in each generation truncation of ``L``."""
    out = []
    if L.generations is None:
        return out
    for k in probe_depths:
        if k > L.depth:
            continue
        idx = FaceIndex(L.truncate(k))
        loc = idx.locate(G.vertices) if G.vertices else 0
        out.append((k, len(idx.faces[loc].vertices) if isinstance(loc, int) else 0))
    return out


def classify_gap(L, G: Gap, probe_depths=(), index: Optional[FaceIndex] = None) -> GapClass:
    """Tag a gap as finite lap, Fatou/Siegel/caterpillar candidate, or unresolved.

    When ``G`` is a face of ``L`` its cycle is followed through the faces of
    ``L``; otherwise the listed vertex set itself is tested for invariance.
    Vertex counts of the enclosing face in the generation truncations named
    by ``probe_depths`` are recorded as evidence.
    """
    d = L.degree
    growth = probe_counts(L, G, probe_depths)
    evidence = " ".join(f"depth{k}:{n}" for k, n in growth)
    sizes = [n for _, n in growth]

    index = index or FaceIndex(L)
    if G.finite_flag:
        if len(set(sizes)) > 1:
            return GapClass("unresolved", evidence + " vertex count changes")
        period = degree = rot = None
        pos = index.position(G)
        cyc = face_cycle(index, pos) if pos is not None else None
        if cyc is not None:
            period = len(cyc)
            degree = periodic_gap_degree(d, G, period)
            rot = rotation_number(d, G, period)
        return GapClass("finite_lap", evidence or f"vertices={len(G.vertices)}", period, degree, rot)

    cycle_gaps = [G]
    period = degree = None
    pos = index.position(G)
    if pos is not None:
        cyc = face_cycle(index, pos)
        if cyc is not None:
            period = len(cyc)
            cycle_gaps = [index.faces[i] for i in cyc]
            degree = cycle_degree(index, cyc)
    else:
        period = _standalone_period(d, G)
        if period is not None:
            degree = periodic_gap_degree(d, G, period)
    if period is None:
        return GapClass("unresolved", (evidence + " not periodic").strip())

    crit = _critical_periodic_edge(d, cycle_gaps)
    if crit is not None:
        note = f"critical edge {crit} has a periodic endpoint"
        return GapClass("caterpillar", f"{evidence} {note}".strip(), period, degree)
    if degree >= 2:
        crit = [e for g in cycle_gaps for e in g.edges if is_critical(d, e)]
        if crit:
            evidence = f"{evidence} critical edge {min(crit)}".strip()
        return GapClass(f"fatou_candidate_degree_{degree}", evidence, period, degree)
    grows = len(sizes) >= 2 and all(b > a for a, b in zip(sizes, sizes[1:]))
    periodic_vertex = any(is_periodic(d, v) for g in cycle_gaps for v in g.vertices)
    if degree == 1 and grows and not periodic_vertex:
        return GapClass("siegel_candidate", evidence, period, 1)
    return GapClass("unresolved", evidence, period, degree)


@dataclass(frozen=True)
class InvariantObject:
    item: Union[Gap, Chord]
    kind: str  # "finite_lap", "leaf", "infinite_gap"
    resolved: bool = True

    def __str__(self) -> str:
        flag = "" if self.resolved else " (unresolved)"
        return f"{self.kind} {self.item}{flag}"


def find_invariant_object(L) -> InvariantObject:
    """Search faces and leaves for one mapped onto itself.

    Preference: invariant finite gap, invariant leaf, invariant infinite gap.
    When nothing qualifies the face holding a fixed point is returned unresolved.
    """
    d = L.degree
    index = FaceIndex(L)
    invariant_faces = [i for i in range(len(index.faces)) if index.image(i) == i]
    for i in invariant_faces:
        if index.faces[i].finite_flag:
            return InvariantObject(index.faces[i], "finite_lap")
    for c in sorted(L.leaves):
        if chord(sigma(d, c.a), sigma(d, c.b)) == c:
            return InvariantObject(c, "leaf")
    for i in invariant_faces:
        return InvariantObject(index.faces[i], "infinite_gap")
    fixed = [Fraction(k, d - 1) for k in range(d - 1)]
    best = min(index.faces_at(fixed[0]))
    return InvariantObject(index.faces[best], "infinite_gap", resolved=False)


def gap_report(L, probe_depths=()) -> list[str]:
    """One line per face, in canonical face order."""
    index = FaceIndex(L)
    lines = []
    for k, g in enumerate(index.faces):
        cls = classify_gap(L, g, probe_depths, index)
        rot = cls.rotation
        verts = ",".join(fmt_angle(v) for v in g.vertices)
        lines.append(
            f"gap {k}: vertices=[{verts}] class={cls.tag} period={cls.period}"
            f" degree={cls.degree} rotation={fmt_angle(rot) if rot is not None else None}"
        )
    return lines


def vertex_distance(G1: Gap, G2: Gap) -> Fraction:
    """Hausdorff distance between the listed vertex sets on the circle."""
    if not G1.vertices or not G2.vertices:
        return Fraction(0) if G1.vertices == G2.vertices else Fraction(1, 2)

    def one_way(A, B):
        return max(min(circle_distance(a, b) for b in B) for a in A)

    return max(one_way(G1.vertices, G2.vertices), one_way(G2.vertices, G1.vertices))
