"""
Polynomial ring, truncated series and elimination kernels.
"""

from src.algebra.elimination import (
    QuadExt,
    RatFunc,
    SignVerdict,
    UniPoly,
    quad_roots,
    ratfunc_equal,
    ratfunc_equal_mod,
    solve_linear,
    sturm_root_count,
    sturm_sign_certificate,
    sylvester_resultant,
)
from src.algebra.polyring import (
    R,
    MultiPoly,
    VarId,
    canonical,
    chebyshev_phase,
    exact_divide,
    permute_indices,
    poly_arith,
    pythagorean_reduce,
    serialize,
    substitute,
    verify_factorization,
)
from src.algebra.series import PhasedLinearArg, TruncSeries, cos_of, series_arith, sin_of

__all__ = [
    "MultiPoly",
    "PhasedLinearArg",
    "QuadExt",
    "R",
    "RatFunc",
    "SignVerdict",
    "TruncSeries",
    "UniPoly",
    "VarId",
    "canonical",
    "chebyshev_phase",
    "cos_of",
    "exact_divide",
    "permute_indices",
    "poly_arith",
    "pythagorean_reduce",
    "quad_roots",
    "ratfunc_equal",
    "ratfunc_equal_mod",
    "serialize",
    "series_arith",
    "sin_of",
    "solve_linear",
    "sturm_root_count",
    "sturm_sign_certificate",
    "substitute",
    "sylvester_resultant",
    "verify_factorization",
]
