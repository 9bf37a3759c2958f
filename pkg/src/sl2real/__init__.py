"""Real structures and conjugacy invariants for SL(2,Z).

A matrix in SL(2,Z) is called real when it factors as a product of two
linear real structures, which are the integer involutions of
determinant -1.  The package classifies matrices by trace, computes
the cutting period-cycle conjugacy invariant of hyperbolic elements
through an exact continued-fraction reduction, decides realness,
builds explicit verified factorizations, and renders the Farey
tessellation of the hyperbolic disk as SVG.

All arithmetic is exact: plain Python integers, Fractions, and
quadratic surds with integer data.  Floating point appears only in
the final coordinates of SVG output.
"""

from .classify import (
    CENTRAL,
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    CanonicalForm,
    MatClass,
    classify,
    elliptic_canonicalize,
    parabolic_canonicalize,
    parabolic_signed_shift,
)
from .errors import (
    CentralInput,
    DepthTooLarge,
    MatrixParseError,
    NotARealStructure,
    NotElliptic,
    NotFactorable,
    NotHyperbolic,
    NotParabolic,
    NotReal,
    NotSL2,
    NotUnimodular,
    ReductionOverflow,
    Sl2RealError,
)
from .farey import (
    Cycle,
    SeriesReport,
    Surd,
    Word,
    attracting_fixed_point,
    cf_step,
    cutting_cycle,
    greedy_factor,
    repelling_fixed_point,
    series_crosscheck,
    word_to_matrix,
)
from .mat2 import (
    IDENTITY,
    NEG_IDENTITY,
    REFL_DIAG,
    REFL_SWAP,
    ROT_2PI3,
    ROT_PI,
    U,
    V,
    Mat2,
    RealStructureKind,
    is_real_structure,
    real_structure_kind,
    u_pow,
    v_pow,
)
from .oracle import (
    LatticeBasis,
    brute_force_conjugator,
    brute_force_factor,
    enumerate_involutions,
    integer_kernel,
)
from .realness import (
    RealFactorization,
    Split,
    WeaklyRealReport,
    central_factorization,
    conjugacy_test,
    factor_real,
    is_odd_bipalindromic,
    is_real,
    weakly_real,
    weakly_real_equals_real_check,
)
from .render import (
    MAX_DEPTH,
    AxisOverlay,
    FareyFigure,
    farey_figure,
    render_farey,
    render_svg,
)

__version__ = "0.1.0"

__all__ = [
    "AxisOverlay",
    "CENTRAL",
    "CanonicalForm",
    "CentralInput",
    "Cycle",
    "DepthTooLarge",
    "ELLIPTIC",
    "FareyFigure",
    "HYPERBOLIC",
    "IDENTITY",
    "LatticeBasis",
    "MAX_DEPTH",
    "Mat2",
    "MatClass",
    "MatrixParseError",
    "NEG_IDENTITY",
    "NotARealStructure",
    "NotElliptic",
    "NotFactorable",
    "NotHyperbolic",
    "NotParabolic",
    "NotReal",
    "NotSL2",
    "NotUnimodular",
    "PARABOLIC",
    "REFL_DIAG",
    "REFL_SWAP",
    "ROT_2PI3",
    "ROT_PI",
    "RealFactorization",
    "RealStructureKind",
    "ReductionOverflow",
    "SeriesReport",
    "Sl2RealError",
    "Split",
    "Surd",
    "U",
    "V",
    "WeaklyRealReport",
    "Word",
    "attracting_fixed_point",
    "brute_force_conjugator",
    "brute_force_factor",
    "central_factorization",
    "cf_step",
    "classify",
    "conjugacy_test",
    "cutting_cycle",
    "elliptic_canonicalize",
    "enumerate_involutions",
    "factor_real",
    "farey_figure",
    "greedy_factor",
    "integer_kernel",
    "is_odd_bipalindromic",
    "is_real",
    "is_real_structure",
    "parabolic_canonicalize",
    "parabolic_signed_shift",
    "real_structure_kind",
    "render_farey",
    "render_svg",
    "repelling_fixed_point",
    "series_crosscheck",
    "u_pow",
    "v_pow",
    "weakly_real",
    "weakly_real_equals_real_check",
    "word_to_matrix",
]
