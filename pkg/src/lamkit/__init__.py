"""Exact-arithmetic toolkit for sibling-invariant laminations of z -> z^d, d = 2, 3."""
from .circle import angle, orbit_info, parse_angle, preimages, sigma, sigma_n
from .chords import Chord, chord, crosses, find_crossing, image_chord, is_critical, linked, parse_chord
from .lamination import (
    Lamination,
    empty_lamination,
    hausdorff_distance,
    pullback_build,
    union_laminations,
    verify_sibling_invariant,
)
from .portraits import CriticalPortrait, compatible, parse_portrait, portrait, portrait_grid
from .gaps import Gap, classify_gap, extract_gaps, find_invariant_object, majors, periodic_gap_degree, rotation_number
from .quadgaps import canonical_lamination, classify_type, invariant_gap, pi_set
from .alliances import alliances_disjoint_check, classify_alliance, detect_flower_like
from .chiefs import chief_candidate, fixture, grand_orbit_closure
from .render import RenderSpec, render_svg

__version__ = "0.1.0"
