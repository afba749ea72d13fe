#pragma once

#include "gftiles/ratgf.hpp"

namespace gftiles {

// Closed forms for the Hadamard products of pair-tiling generating
// functions. Every constructor assembles its formula verbatim from
// Fibonacci polynomials, with no algebraic simplification, so that a
// formula error surfaces as an oracle mismatch instead of being silently
// repaired. Constructors with a prime-block/first-block factorization also
// re-derive themselves through that route and fail loudly on mismatch.

/// 1/(1-ax-x^2) * 1/(1-bx-x^2)
///   == (1 - x^2) / (1 - abx - (2+a^2+b^2)x^2 - abx^3 + x^4).
RationalGF shapiro_product();

/// Generating function P_n(x) for the weighted prime blocks of pair
/// tilings with 1/1x2 bricks on top and 1/1xn bricks on the bottom; n >= 1.
RationalGF prime_block_gf(int n);

/// 1/(1-ax-x^2) * 1/(1-bx-x^n), n >= 1. Equals 1/(1 - P_n).
RationalGF nblock_product(int n);

/// 1/(1-ax-x^2) * x^m/(1-bx-x^2), m >= 0.
RationalGF shifted_product(int m);

/// Generating function Q_{m,n}(x) for the weighted first blocks when the
/// bottom row is forced to start with a 1xm brick; m, n >= 1.
RationalGF first_block_gf(int m, int n);

/// 1/(1-ax-x^2) * x^m/(1-bx-x^n), m >= 0, n >= 1.
/// Equals Q_{m,n}/(1 - P_n) for m >= 1 and nblock_product(n) for m = 0.
RationalGF shifted_nblock_product(int m, int n);

/// The b = 0 specialization: sum_k f_{m+nk}(a) x^{m+nk}; m >= 0, n >= 1.
RationalGF fib_progression_gf(int m, int n);

/// Sign convention for the x^{(q+2)n} numerator term of
/// masked_fib_product. The two readings coincide wherever the Fibonacci
/// factor is nonzero (they differ only at r = 1, where f_{-1} = 0 kills
/// the term); both are kept so the series oracle can arbitrate.
enum class MaskSign {
    statement,  ///< (-1)^{n-r-1}
    lemma,      ///< (-1)^{min(n-2, n-r)+1}, read off the two-strip identity
};

/// x^m/(1-ax-x^2) * 1/(1-x^n), m >= 1, n >= 1, written via m = qn + r.
RationalGF masked_fib_product(int m, int n, MaskSign sign = MaskSign::statement);

/// Generating function R_{m,n}(x) for the weighted first blocks when the
/// top row is forced to start with a 1xm brick and the bottom row uses only
/// 1xn bricks; m, n >= 1. Satisfies
///   x^m/(1-ax-x^2) * 1/(1-x^n) == R_{m,n} / (1 - P_n|_{b=0}).
RationalGF first_block_gf_top(int m, int n);

/// sum_n U_n(a) U_n(b) x^n
///   == (1 - x^2) / (1 - 4abx - (2-4a^2-4b^2)x^2 - 4abx^3 + x^4).
RationalGF chebyshev_bilinear_rhs();

}  // namespace gftiles
