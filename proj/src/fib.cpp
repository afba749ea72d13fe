#include "gftiles/fib.hpp"

#include <cstdlib>
#include <mutex>
#include <vector>

namespace gftiles {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

namespace {

void check_var(char var) {
    if (var != 'a' && var != 'b') throw std::domain_error("unknown variable, expected 'a' or 'b'");
}

// Memo tables indexed by n+2, one per variable; guarded for concurrent use.
Polynomial fib_memo(int n, char var) {
    static std::mutex mu;
    static std::vector<Polynomial> memo_a;
    static std::vector<Polynomial> memo_b;
    std::lock_guard<std::mutex> lock(mu);
    auto& memo = (var == 'a') ? memo_a : memo_b;
    if (memo.empty()) {
        memo.push_back(Polynomial::one());              // f_{-2}
        memo.push_back(Polynomial{});                   // f_{-1}
        memo.push_back(Polynomial::one());              // f_0
    }
    const Polynomial v = Polynomial::variable(var);
    while (static_cast<int>(memo.size()) <= n + 2) {
        const std::size_t s = memo.size();
        memo.push_back(v * memo[s - 1] + memo[s - 2]);
    }
    return memo[n + 2];
}

}  // namespace

Polynomial fib_poly(int n, char var) {
    check_var(var);
    if (n < -2) throw std::domain_error("fib_poly index must be >= -2");
    return fib_memo(n, var);
}

Polynomial binomial_fib_formula(int n, char var) {
    check_var(var);
    if (n < 0) throw std::domain_error("binomial_fib_formula index must be >= 0");
    Polynomial out;
    for (int k = 0; 2 * k <= n; ++k) {
        const std::uint32_t e = static_cast<std::uint32_t>(n - 2 * k);
        out += (var == 'a') ? Polynomial::monomial(e, 0, binomial(n - k, k))
                            : Polynomial::monomial(0, e, binomial(n - k, k));
    }
    return out;
}

Polynomial lucas_poly(int n, char var) {
    if (n < 0) throw std::domain_error("lucas_poly index must be >= 0");
    return fib_poly(n, var) + fib_poly(n - 2, var);
}

bool lemma11_check(int m, int n) {
    if (m < -1 || n < -1) throw std::domain_error("lemma11_check requires m, n >= -1");
    const Polynomial lhs =
        fib_poly(m) * fib_poly(n + 1) - fib_poly(m + 1) * fib_poly(n);
    Polynomial rhs = fib_poly(std::abs(m - n) - 1);
    if (std::min(m, n + 1) % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

Polynomial chebyshev_u(int n, char var) {
    check_var(var);
    if (n < 0) throw std::domain_error("chebyshev_u index must be >= 0");
    const Polynomial two_v = Polynomial::constant(2) * Polynomial::variable(var);
    Polynomial prev = Polynomial::one();  // U_0
    if (n == 0) return prev;
    Polynomial cur = two_v;               // U_1
    for (int i = 2; i <= n; ++i) {
        Polynomial next = two_v * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial chebyshev_u_sign_pattern(int n, char var) {
    check_var(var);
    if (n < 0) throw std::domain_error("chebyshev_u index must be >= 0");
    Polynomial out;
    for (int k = 0; 2 * k <= n; ++k) {
        const std::uint32_t e = static_cast<std::uint32_t>(n - 2 * k);
        Int c = binomial(n - k, k) << e;  // C(n-k,k) * 2^{n-2k}
        if (k % 2 != 0) c = -c;
        out += (var == 'a') ? Polynomial::monomial(e, 0, c)
                            : Polynomial::monomial(0, e, c);
    }
    return out;
}

}  // namespace gftiles
