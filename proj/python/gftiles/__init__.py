"""Exact Hadamard products of rational generating functions over Z[a,b].

The heavy lifting lives in the compiled extension ``gftiles._core``; this
package re-exports its public surface. Polynomials are exact (arbitrary
precision integer coefficients in the variables ``a`` and ``b``), series are
explicitly truncated, and every closed form can be checked against the
expansion oracle or brute-force tiling enumeration.
"""

from gftiles._core import (
    BijectionReport,
    MaskSign,
    Polynomial,
    RationalGF,
    SeriesTrunc,
    XPoly,
    binomial_fib_formula,
    chebyshev_bilinear_rhs,
    chebyshev_u,
    chebyshev_u_sign_pattern,
    enumerate_prime_blocks,
    enumerate_row_tilings,
    expand,
    fib_poly,
    fib_progression_gf,
    first_block_gf,
    first_block_gf_top,
    hadamard_rational,
    hadamard_series,
    lemma11_bijection_audit,
    lemma11_check,
    lucas_poly,
    masked_fib_product,
    nblock_product,
    prime_block_gf,
    rgf_equal,
    series_equal,
    shapiro_product,
    shifted_nblock_product,
    shifted_product,
    verify_all,
    weighted_pair_count,
)

__all__ = [
    "BijectionReport",
    "MaskSign",
    "Polynomial",
    "RationalGF",
    "SeriesTrunc",
    "XPoly",
    "binomial_fib_formula",
    "chebyshev_bilinear_rhs",
    "chebyshev_u",
    "chebyshev_u_sign_pattern",
    "enumerate_prime_blocks",
    "enumerate_row_tilings",
    "expand",
    "fib_poly",
    "fib_progression_gf",
    "first_block_gf",
    "first_block_gf_top",
    "hadamard_rational",
    "hadamard_series",
    "lemma11_bijection_audit",
    "lemma11_check",
    "lucas_poly",
    "masked_fib_product",
    "nblock_product",
    "prime_block_gf",
    "rgf_equal",
    "series_equal",
    "shapiro_product",
    "shifted_nblock_product",
    "shifted_product",
    "verify_all",
    "weighted_pair_count",
]

__version__ = "0.1.0"
