"""Canonical text format for laminations.

    lamination degree=<d> depth=<n>
    # provenance: <free text>
    p/q:r/s
    ...

Leaves are written sorted, one per line. Blank lines and other ``#`` comments
are ignored on input. Serialising never depends on construction order.
Generation metadata is not stored; :func:`loads` infers it from the leaves.
"""
from __future__ import annotations

import re
import sys
from typing import TextIO

from .chords import find_crossing, parse_chord
from .lamination import Lamination, infer_generations

HEADER = re.compile(r"^lamination\s+degree=(\d+)\s+depth=(\d+)\s*$")


class FormatError(ValueError):
    def __init__(self, line: int, message: str, source: str = "<input>"):
        super().__init__(f"{source}:{line}: {message}")
        self.line = line
        self.source = source


def dumps(L: Lamination) -> str:
    lines = [f"lamination degree={L.degree} depth={L.depth}"]
    if L.provenance:
        for part in L.provenance.splitlines():
            lines.append(f"# provenance: {part}")
    lines += [str(c) for c in L.sorted_leaves]
    return "\n".join(lines) + "\n"


def loads(text: str, source: str = "<input>") -> Lamination:
    degree = depth = None
    provenance = []
    leaves = []
    where = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if degree is None:
            m = HEADER.match(line)
            if not m:
                raise FormatError(n, "expected header 'lamination degree=<d> depth=<n>'", source)
            degree, depth = int(m.group(1)), int(m.group(2))
            if degree not in (2, 3):
                raise FormatError(n, f"unsupported degree {degree}", source)
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("provenance:"):
                provenance.append(body[len("provenance:"):].strip())
            continue
        try:
            c = parse_chord(line)
        except ValueError as e:
            raise FormatError(n, str(e), source) from None
        if c.degenerate:
            raise FormatError(n, f"degenerate leaf {line}", source)
        where.setdefault(c, n)
        leaves.append(c)
    if degree is None:
        raise FormatError(1, "empty input: missing header", source)
    bad = find_crossing(leaves)
    if bad:
        p, q = bad
        raise FormatError(max(where[p], where[q]), f"leaf {q} crosses leaf {p} (line {min(where[p], where[q])})", source)
    L = Lamination(degree, frozenset(leaves), depth, "\n".join(provenance))
    # generation data is not part of the format; recover a best guess
    return Lamination(L.degree, L.leaves, L.depth, L.provenance, infer_generations(L))


def read(path: str) -> Lamination:
    if path == "-":
        return loads(sys.stdin.read(), "<stdin>")
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), path)


def write(L: Lamination, path: str) -> None:
    text = dumps(L)
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def dump(L: Lamination, fh: TextIO) -> None:
    fh.write(dumps(L))
