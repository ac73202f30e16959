"""Command-line entry point: ``lamkit <subcommand> ...``.

Exit status: 0 success, 1 a verdict came back negative, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .alliances import alliances_disjoint_check, classify_alliance
from .chiefs import FIXTURES, chief_candidate, fixture
from .chords import parse_chord
from .gaps import FaceIndex, classify_gap, gap_report
from .lamination import MODES, pullback_build, verify_sibling_invariant
from .portraits import parse_portrait
from .quadgaps import canonical_lamination, invariant_gap
from .render import RenderSpec, render_svg


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _probes(text: str | None):
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad probe list {text!r}; expected comma-separated integers") from None


def cmd_pullback(a) -> int:
    K = parse_portrait(a.portrait, a.degree)
    seed = [parse_chord(t) for t in a.seed.split(",")] if a.seed else None
    L = pullback_build(K, seed=seed, depth=a.depth)
    _emit(io.dumps(L), a.out)
    return 0


def cmd_verify(a) -> int:
    L = io.read(a.file)
    v = verify_sibling_invariant(L, a.mode)
    if v.ok:
        print(f"ok mode={a.mode} leaves={len(L)}")
        return 0
    print(f"fail mode={a.mode} condition={v.condition} witness={v.witness} {v.message}".rstrip())
    return 1


def cmd_gaps(a) -> int:
    L = io.read(a.file)
    _emit("\n".join(gap_report(L, _probes(a.probe) or ())) + "\n", a.out)
    return 0


def cmd_quadgap(a) -> int:
    c = parse_chord(a.chord)
    U = invariant_gap(c, a.bound, perfect=a.perfect)
    print(U.report())
    if a.canonical is not None:
        CL = canonical_lamination(U, a.canonical)
        if a.out:
            io.write(CL.lamination, a.out)
        print(f"canonical portrait={CL.portrait} leaves={len(CL.lamination)}"
              f" senior_period={len(CL.senior)} vassal_period={len(CL.vassal)}")
    return 0


def cmd_chief(a) -> int:
    L = io.read(a.file)
    if not L.leaves:
        raise UsageError("empty lamination has no chief candidate")
    print(chief_candidate(L, a.depth).report())
    return 0


def cmd_classify(a) -> int:
    L = io.read(a.file)
    v = classify_alliance(L, _probes(a.probe))
    print(v)
    return 0 if v.tag != "unresolved" else 1


def cmd_compare(a) -> int:
    L1, L2 = io.read(a.first), io.read(a.second)
    try:
        r = alliances_disjoint_check(L1, L2, a.resolution, _probes(a.probe))
    except ValueError as e:
        print(str(e))
        return 1
    for line in r.lines:
        print(line)
    print(r)
    return 0 if r.ok else 1


def cmd_render(a) -> int:
    L = io.read(a.file)
    gaps = None
    if a.gaps:
        index = FaceIndex(L)
        gaps = [(g, classify_gap(L, g, index=index).tag) for g in index.faces]
    spec = RenderSpec(size=a.size, label_angles=a.labels)
    _emit(render_svg(L, gaps, spec), a.output)
    return 0


def cmd_fixture(a) -> int:
    L = fixture(a.name, a.depth)
    _emit(io.dumps(L), a.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lamkit", description="Invariant laminations of the angle maps z^2, z^3 on the circle.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pullback", help="pullback lamination of a critical portrait")
    s.add_argument("--degree", type=int, default=3, choices=(2, 3))
    s.add_argument("--portrait", required=True, help="p/q:r/s[,p/q:r/s]")
    s.add_argument("--seed", help="seed chords (default: the portrait chords)")
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--out", "-o")
    s.set_defaults(func=cmd_pullback)

    s = sub.add_parser("verify", help="check sibling invariance")
    s.add_argument("file")
    s.add_argument("--mode", default="full_below_depth", choices=MODES)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gaps", help="gap report")
    s.add_argument("file")
    s.add_argument("--probe", help="comma-separated probe depths")
    s.add_argument("--out", "-o")
    s.set_defaults(func=cmd_gaps)

    s = sub.add_parser("quadgap", help="quadratic invariant gap of a critical chord")
    s.add_argument("--chord", required=True)
    s.add_argument("--bound", type=int, default=81)
    s.add_argument("--perfect", action="store_true", help="use the perfect part G'")
    s.add_argument("--canonical", type=int, metavar="DEPTH", help="also build the canonical lamination")
    s.add_argument("--out", "-o", help="file for the canonical lamination")
    s.set_defaults(func=cmd_quadgap)

    s = sub.add_parser("chief", help="chief candidate with removal probes")
    s.add_argument("file")
    s.add_argument("--depth", type=int)
    s.set_defaults(func=cmd_chief)

    s = sub.add_parser("classify", help="central/regular evidence")
    s.add_argument("file")
    s.add_argument("--probe")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("compare", help="sampled alliance disjointness")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--resolution", type=int, default=24)
    s.add_argument("--probe")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("render", help="SVG picture")
    s.add_argument("file")
    s.add_argument("--output", "-o")
    s.add_argument("--size", type=int, default=600)
    s.add_argument("--labels", action="store_true")
    s.add_argument("--gaps", action="store_true", help="fill gaps by class")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("fixture", help="worked chief examples")
    s.add_argument("name", choices=sorted(FIXTURES))
    s.add_argument("--depth", type=int)
    s.add_argument("--out", "-o")
    s.set_defaults(func=cmd_fixture)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except io.FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RuntimeError as e:
        print(f"failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
