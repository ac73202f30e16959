"""
==========================================
Files, pictures and the command line
==========================================

Laminations travel as plain text. The ``lamkit`` command wraps the library
so that pipelines can be written in the shell; here it is driven through
``lamkit.cli.main`` to stay self-contained.
"""

# %%
# Round trip through the text format
# ----------------------------------

from pathlib import Path

from lamkit import io
from lamkit.chiefs import fixture
from lamkit.cli import main

OUT = Path(__file__).parent / "_output"
OUT.mkdir(exist_ok=True)

L = fixture("quad_rotational", 4)
path = OUT / "rotational.lam"
io.write(L, str(path))
print(io.read(str(path)).leaves == L.leaves)

# %%
# Subcommands
# -----------
#
# Exit status 0 means success, 1 a negative verdict, 2 bad input.

print("verify ->", main(["verify", str(path)]))
print("classify ->", main(["classify", str(path)]))
print("quadgap ->", main(["quadgap", "--chord", "5/24:13/24", "--bound", "81"]))
print("pullback ->", main(["pullback", "--portrait", "0/1:1/3,1/2:5/6", "--depth", "2",
                           "--out", str(OUT / "portrait.lam")]))

# %%
# Pictures with gaps coloured by class
# ------------------------------------

print("render ->", main(["render", str(path), "--gaps", "--labels", "-o", str(OUT / "rotational.svg")]))
print((OUT / "rotational.svg").read_text().count("<path"), "filled gaps")
