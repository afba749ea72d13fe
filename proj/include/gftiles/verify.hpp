#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gftiles {

/// Outcome of one verification check.
struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
    double seconds = 0.0;

    void fail(std::string msg) {
        ok = false;
        detail = std::move(msg);
    }
};

namespace checks {

/// Closed form of 1/(1-ax-x^2) * 1/(1-bx-x^2) vs the expansion oracle.
CheckResult shapiro_identity(int order = 40);

/// a = b = 1 specialization: squared Fibonacci numbers (A007598).
CheckResult squared_fibonacci();

/// 1/(1-ax-x^2) * 1/(1-bx-x^n); default range n = 1..8.
CheckResult nblock_family(std::optional<int> n = std::nullopt, int order = 40);

/// 1/(1-ax-x^2) * x^m/(1-bx-x^2); default range m = 0..8.
CheckResult shifted_family(std::optional<int> m = std::nullopt, int order = 40);

/// 1/(1-ax-x^2) * x^m/(1-bx-x^n) with reductions and b = 0 specialization;
/// default grid m = 0..6, n = 1..6.
CheckResult shifted_nblock_family(std::optional<int> m = std::nullopt,
                                  std::optional<int> n = std::nullopt, int order = 40);

/// x^m/(1-ax-x^2) * 1/(1-x^n); default grid m = 1..12, n = 1..6 restricted
/// to m >= n (both sign conventions are exercised).
CheckResult masked_family(std::optional<int> m = std::nullopt,
                          std::optional<int> n = std::nullopt, int order = 60);

/// Two-strip identity for -1 <= m, n <= 12 plus the tail-switch audit for
/// 0 <= n < m <= 10; or a single (m, n) audit instance.
CheckResult lemma_family(std::optional<int> m = std::nullopt,
                         std::optional<int> n = std::nullopt);

/// b = 0 progressions sum f_{m+nk} x^{m+nk}; default grid m = 0..6, n = 1..6.
CheckResult progression_family(std::optional<int> m = std::nullopt,
                               std::optional<int> n = std::nullopt, int order = 40);

/// Prime-block enumeration vs prime_block_gf for n <= 5, k <= 12, plus the
/// length-classification constraint.
CheckResult prime_block_taxonomy();

/// hadamard_rational (Kronecker route) vs every closed form above.
CheckResult kronecker_crosscheck();

/// Chebyshev bilinear series and the sign-pattern identity.
CheckResult chebyshev_bilinear(int order = 30);

}  // namespace checks

/// The full verification matrix, in a fixed order, with pinned ranges and
/// orders. Used by both `verify --all` and the acceptance suite.
std::vector<CheckResult> run_acceptance();

}  // namespace gftiles
