#pragma once

#include "gftiles/polynomial.hpp"

namespace gftiles {

/// Exact binomial coefficient; zero for k < 0 or k > n.
Int binomial(int n, int k);

/// Fibonacci polynomial: f_{-2} = 1, f_{-1} = 0, f_0 = 1,
/// f_n = var*f_{n-1} + f_{n-2}. f_n(1) = F_{n+1}. Indices below -2 are a
/// domain error; the extended conventions stop there and silent
/// extrapolation would mask index bugs in the closed-form constructors.
Polynomial fib_poly(int n, char var = 'a');

/// sum_k C(n-k, k) var^{n-2k}; equals fib_poly(n) for all n >= 0.
Polynomial binomial_fib_formula(int n, char var = 'a');

/// Lucas polynomial f_n + f_{n-2} (extended conventions), n >= 0.
Polynomial lucas_poly(int n, char var = 'a');

/// The two-strip identity
///   f_m f_{n+1} - f_{m+1} f_n == (-1)^{min(m, n+1)} f_{|m-n|-1}
/// checked as an exact polynomial equality; m, n >= -1.
bool lemma11_check(int m, int n);

/// Chebyshev polynomial of the second kind: U_0 = 1, U_1 = 2*var,
/// U_n = 2*var*U_{n-1} - U_{n-2}.
Polynomial chebyshev_u(int n, char var = 'a');

/// sum_k (-1)^k C(n-k, k) (2*var)^{n-2k}: the integral sign-pattern form of
/// U_n, realized without Gaussian-integer arithmetic.
Polynomial chebyshev_u_sign_pattern(int n, char var = 'a');

}  // namespace gftiles
