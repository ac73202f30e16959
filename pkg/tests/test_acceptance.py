"""Acceptance suite: ten end-to-end criteria, each printing one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines are printed even without -s)
or directly with ``python3 tests/test_acceptance.py``.
"""
import os
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from math import gcd
from pathlib import Path

import pytest

from lamkit import io
from lamkit.alliances import alliances_disjoint_check, detect_flower_like
from lamkit.chiefs import cubic_perfect
from lamkit.chords import chord, chord_distance, chord_length, image_chord, orbit_longest_hit
from lamkit.gaps import FaceIndex, hull_gap, periodic_gap_degree, vertex_distance
from lamkit.lamination import pullback_build, verify_sibling_invariant
from lamkit.portraits import portrait, portrait_grid
from lamkit.quadgaps import canonical_lamination, fatou_cycles, invariant_gap, pi_set

DATA = Path(__file__).parent / "data"
ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def report(capsys):
    def emit(n, title, ok, detail=""):
        line = f"criterion {n:>2} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
        with capsys.disabled():
            print("\n" + line, end="")
        return ok
    return emit


# 1 ----------------------------------------------------------------------

def _orbit_size(p, q):
    """(preperiod, period) of p/q under tripling, in integers."""
    k = 0
    while q % 3 == 0 and q > 1:
        q //= 3
        k += 1
    if q == 1:
        return k, 1
    n, x = 1, 3 % q
    while x != 1:
        x = x * 3 % q
        n += 1
    return k, n


def _chord_budget(c):
    """preperiod + period of the chord c under sigma_3."""
    (ka, na), (kb, nb) = _orbit_size(c.a.numerator, c.a.denominator), _orbit_size(c.b.numerator, c.b.denominator)
    pre = max(ka, kb)
    period = na * nb // gcd(na, nb)
    # a periodic chord whose endpoints swap returns after half the cycle
    a = c.a * 3**pre % 1
    b = c.b * 3**pre % 1
    if na == nb and na % 2 == 0 and a * 3 ** (na // 2) % 1 == b:
        period = na // 2
    return pre + period


def test_criterion_1_orbit_hits_long_chord(report):
    rng = random.Random(20240601)
    t = time.perf_counter()
    bad = []
    short_seen = 0
    for _ in range(1000):
        while True:
            q1, q2 = rng.randint(2, 10**4), rng.randint(2, 10**4)
            c = chord(F(rng.randrange(q1), q1), F(rng.randrange(q2), q2))
            if not c.degenerate:
                break
        budget = _chord_budget(c)
        try:
            i, hit = orbit_longest_hit(3, c, budget)
        except RuntimeError:
            bad.append(c)
            continue
        x = c
        for _ in range(i):
            if 0 < chord_length(x) < F(1, 4):
                short_seen += 1
                y = image_chord(3, x)
                if not (chord_length(y) == 3 * chord_length(x) or chord_length(y) >= F(1, 4)):
                    bad.append(x)
            x = image_chord(3, x)
        if x != hit or chord_length(hit) < F(1, 4):
            bad.append(c)
    dt = time.perf_counter() - t
    ok = not bad and dt < 5
    assert report(1, "orbit of every chord reaches length >= 1/4", ok,
                  f"1000 chords, {short_seen} short steps checked, {dt:.2f}s")


# 2 ----------------------------------------------------------------------

def test_criterion_2_pullbacks_are_sibling_invariant(report):
    grid = portrait_grid(24)
    sample = random.Random(7).sample(grid, 50)
    t = time.perf_counter()
    failures = []
    for K in sample:
        L = pullback_build(K, depth=6)
        v = verify_sibling_invariant(L, "full_below_depth")
        if not v.ok:
            failures.append((K, v))
    dt = time.perf_counter() - t
    ok = not failures and dt < 60
    assert report(2, "pullback laminations pass full_below_depth", ok,
                  f"50 portraits of resolution 24 ({sum(K.doubled for K in sample)} doubled), depth 6, "
                  f"{len(failures)} failures, {dt:.1f}s")


# 3 ----------------------------------------------------------------------

def _oracle(c, N):
    lo, hi = c.a, c.b
    if hi - lo == F(2, 3):
        def inside(x):
            return lo <= x <= hi
    else:
        def inside(x):
            return x >= hi or x <= lo
    good, bad = set(), set()
    for q in range(1, N + 1):
        for p in range(q):
            x = F(p, q)
            if x.denominator != q:
                continue
            seen = []
            while True:
                if x in good or x in seen:
                    good.update(seen)
                    break
                if x in bad or not inside(x):
                    bad.update(seen)
                    break
                seen.append(x)
                x = 3 * x % 1
    return good


def test_criterion_3_pi_set_matches_oracle(report):
    t = time.perf_counter()
    mismatches = []
    for c in (chord(0, F(1, 3)), chord(F(5, 24), F(13, 24))):
        want = _oracle(c, 729)
        for N in (2, 8, 27, 81, 243, 729):
            got = pi_set(c, N)
            if got != {x for x in want if x.denominator <= N}:
                mismatches.append((c, N))
    dt = time.perf_counter() - t
    ok = not mismatches and dt < 30
    assert report(3, "pi_set equals brute-force orbit oracle", ok, f"N up to 729, {dt:.1f}s")


# 4 ----------------------------------------------------------------------

def _critical_chords_up_to(qmax):
    out = set()
    for q in range(1, qmax + 1):
        for p in range(q):
            a = F(p, q)
            if a.denominator != q:
                continue
            for k in (1, 2):
                b = (a + F(k, 3)) % 1
                if b.denominator <= qmax:
                    out.add(chord(a, b))
    return sorted(out)


def test_criterion_4_quadratic_gap_degree(report):
    t = time.perf_counter()
    degrees = {}
    for c in _critical_chords_up_to(24):
        U = invariant_gap(c, 243)
        if len(U.vertices) < 3:
            continue
        degrees[c] = periodic_gap_degree(3, U.gap, 1)
    dt = time.perf_counter() - t
    ok = bool(degrees) and set(degrees.values()) == {2} and dt < 30
    assert report(4, "every quadratic invariant gap has degree 2", ok,
                  f"{len(degrees)} critical chords, degrees {sorted(set(degrees.values()))}, {dt:.1f}s")


# 5 ----------------------------------------------------------------------

def test_criterion_5_two_fatou_cycles(report):
    U = invariant_gap(chord(F(5, 12), F(3, 4)), 81, perfect=True)
    L = canonical_lamination(U, 6).lamination
    counts = {k: len(fatou_cycles(L.truncate(k))) for k in range(3, 7)}
    ok = set(counts.values()) == {2}
    assert report(5, "periodic canonical lamination has two Fatou cycles", ok, f"counts by depth {counts}")


# 6 ----------------------------------------------------------------------

def test_criterion_6_caterpillar_leaf_isolated(report):
    details, ok = [], True
    for c in (chord(0, F(1, 3)), chord(F(5, 12), F(3, 4))):
        L = canonical_lamination(invariant_gap(c, 81), 8).lamination
        dist = {}
        for k in (3, 8):
            dist[k] = min(chord_distance(c, x) for x in L.truncate(k).leaves if x != c)
        ok = ok and dist[8] * 2 >= dist[3] > 0
        details.append(f"{c}: {dist[3]} -> {dist[8]}")
    assert report(6, "critical leaf with periodic endpoint stays isolated", ok, "; ".join(details))


# 7 ----------------------------------------------------------------------

def test_criterion_7_triangle_stays_a_lap(report):
    tri = [F(1, 13), F(3, 13), F(9, 13)]
    K = portrait(chord(F(1, 4), F(7, 12)), chord(F(7, 10), F(1, 30)))
    laps = []
    for k in range(0, 9):
        L = pullback_build(K, hull_gap(tri).edges, k)
        idx = FaceIndex(L)
        i = idx.locate(tri)
        laps.append(isinstance(i, int) and list(idx.faces[i].vertices) == tri and idx.faces[i].finite_flag)
    first = laps.index(True) if True in laps else None
    ok = first is not None and all(laps[first:])
    assert report(7, "rotational triangle remains a lap", ok, f"lap from depth {first} through 8")


# 8 ----------------------------------------------------------------------

def test_criterion_8_regular_alliances_disjoint(report):
    t = time.perf_counter()
    L1, L2 = cubic_perfect(6), cubic_perfect(6, mirror=True)
    r = alliances_disjoint_check(L1, L2, 24)
    dt = time.perf_counter() - t
    ok = r.ok and not r.shared and dt < 60
    assert report(8, "distinct regular fixtures share no grid portrait", ok,
                  f"{r.checked} portraits, {len(r.shared)} shared, {dt:.1f}s")


# 9 ----------------------------------------------------------------------

def test_criterion_9_flower_limit(report):
    seq = [io.read(str(DATA / f"flower_{i}.lam")) for i in (1, 2, 3)]
    limit = io.read(str(DATA / "flower_limit.lam"))
    flowers = [detect_flower_like(L) for L in seq]
    fl = detect_flower_like(limit)
    ok = all(f is not None for f in flowers) and fl is not None
    dists = [vertex_distance(f.petals[0], fl.petals[0]) for f in flowers] if ok else []
    ok = ok and all(b < a for a, b in zip(dists, dists[1:]))
    assert report(9, "flower-like sequence has a flower-like limit", ok,
                  "petal distances " + ", ".join(map(str, dists)))


# 10 ---------------------------------------------------------------------

def _cli(args, threads, cwd):
    env = dict(os.environ, LAMKIT_THREADS=str(threads))
    subprocess.run([sys.executable, "-m", "lamkit.cli", *args], cwd=cwd, env=env, check=True,
                   stdout=subprocess.DEVNULL)


def test_criterion_10_thread_independent_output(report, tmp_path):
    outputs = {}
    for threads in (1, 4):
        d = tmp_path / f"t{threads}"
        d.mkdir()
        _cli(["pullback", "--portrait", "0/1:1/3,1/2:5/6", "--depth", "6", "-o", "lam.txt"], threads, d)
        _cli(["fixture", "cubic_perfect", "--depth", "5", "-o", "cubic.txt"], threads, d)
        _cli(["render", "lam.txt", "--gaps", "-o", "lam.svg"], threads, d)
        _cli(["render", "cubic.txt", "-o", "cubic.svg"], threads, d)
        outputs[threads] = {p.name: p.read_bytes() for p in sorted(d.iterdir())}
    ok = outputs[1] == outputs[4] and len(outputs[1]) == 4
    assert report(10, "byte-identical files across LAMKIT_THREADS=1 and 4", ok,
                  ", ".join(sorted(outputs[1])))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
