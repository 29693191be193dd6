"""Exact symbolic workbench for Lie-Rinehart algebras.

Thin Python layer over the C++ core: presentations, the cochain complex with
windowed cohomology, the PBW rewriting engine with a confluence checker,
filtration window modules, and the Chern class / Chern character ledger.
"""

from ._lrworkbench import (
    Cochain,
    GradingError,
    InputError,
    PreconditionError,
    Presentation,
    betti,
    c1_section_report,
    char_ring_dim,
    chern_report,
    class_equal,
    class_is_zero,
    cohomology,
    diamond_check,
    differential,
    is_cocycle,
    kernel_demo,
    normal_form,
    rank_formula,
    wedge,
    window_module_report,
)

__all__ = [
    "Cochain",
    "GradingError",
    "InputError",
    "PreconditionError",
    "Presentation",
    "betti",
    "c1_section_report",
    "char_ring_dim",
    "chern_report",
    "class_equal",
    "class_is_zero",
    "cohomology",
    "diamond_check",
    "differential",
    "is_cocycle",
    "kernel_demo",
    "normal_form",
    "rank_formula",
    "wedge",
    "window_module_report",
]
