"""Index-2 subgroups of Seifert manifold groups and the Seifert invariants
of the corresponding double covers, with a Reidemeister-Schreier cross-check.
"""

from .abelian import H1Invariants, h1, h1_z2_dim, smith_normal_form
from .covers import CaseTag, CoverCase, classify, double_cover
from .groups import Presentation, Word, free_reduce, substitute, tietze_simplify
from .rs import kernel_presentation
from .seifert import (
    FiberPair,
    SeifertInvariants,
    TypeSymbol,
    format_seifert,
    fundamental_presentation,
    parse_seifert,
    validate,
)
from .verify import verify_cover
from .z2hom import Z2Hom, enumerate_epimorphisms, parse_hom

__all__ = [
    "CaseTag",
    "CoverCase",
    "FiberPair",
    "H1Invariants",
    "Presentation",
    "SeifertInvariants",
    "TypeSymbol",
    "Word",
    "Z2Hom",
    "classify",
    "double_cover",
    "enumerate_epimorphisms",
    "format_seifert",
    "free_reduce",
    "fundamental_presentation",
    "h1",
    "h1_z2_dim",
    "kernel_presentation",
    "parse_hom",
    "parse_seifert",
    "smith_normal_form",
    "substitute",
    "tietze_simplify",
    "validate",
    "verify_cover",
]
