"""Knot group pairs: presentations, Kervaire conditions, constructions and homology checks."""

from __future__ import annotations

from .alexander import LaurentPoly, is_type_K_cyclic, p_complex_homology, parse_laurent
from .constructions import (
    Connectivity,
    KnotGroupPair,
    SpinInput,
    frame_twist_spin,
    knot_sum,
    multi_component_spin,
    single_stratum_report,
    suspension,
)
from .coset import enumerate_cosets, is_trivial_group
from .errors import KnotPairsError, ParseError, PresentationError, UndeclaredSymbolError
from .homology import SimplicialComplex, circle_product, predict_boundary_homology, simplicial_homology
from .kervaire import Status, kervaire_report, pair_report
from .linalg import AbelianGroupInvariants, IntMatrix, abelianization, smith_normal_form
from .parsing import format_word, parse_presentation, parse_word
from .presentation import GroupMap, Presentation, direct_product, free_product, quotient_by_normal_closure
from .tietze import tietze_simplify
from .words import Word

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupInvariants", "Connectivity", "GroupMap", "IntMatrix", "KnotGroupPair", "KnotPairsError",
    "LaurentPoly", "ParseError", "Presentation", "PresentationError", "SimplicialComplex", "SpinInput",
    "Status", "UndeclaredSymbolError", "Word", "abelianization", "circle_product", "direct_product",
    "enumerate_cosets", "format_word", "free_product", "frame_twist_spin", "is_trivial_group",
    "is_type_K_cyclic", "kervaire_report", "knot_sum", "multi_component_spin", "p_complex_homology",
    "pair_report", "parse_laurent", "parse_presentation", "parse_word", "predict_boundary_homology",
    "quotient_by_normal_closure", "simplicial_homology", "single_stratum_report", "smith_normal_form",
    "suspension", "tietze_simplify",
]
