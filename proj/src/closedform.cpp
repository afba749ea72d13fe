#include "gftiles/closedform.hpp"

#include "gftiles/fib.hpp"

#include <vector>

namespace gftiles {

namespace {

const Polynomial kA = Polynomial::variable('a');
const Polynomial kB = Polynomial::variable('b');

Polynomial sign_pm(int exponent) {
    // (-1)^exponent, valid for negative exponents too.
    return Polynomial::constant(exponent % 2 == 0 ? 1 : -1);
}

// Builder for sparse XPoly values: accumulate (power, coeff) pairs.
class XBuilder {
public:
    void add(int power, const Polynomial& c) {
        if (power >= static_cast<int>(v_.size())) v_.resize(power + 1);
        v_[power] += c;
    }
    XPoly build() { return XPoly(std::move(v_)); }

private:
    std::vector<Polynomial> v_;
};

[[noreturn]] void construction_mismatch(const char* what) {
    throw std::logic_error(std::string("closed-form self-check failed: ") + what);
}

}  // namespace

RationalGF shapiro_product() {
    XBuilder num, den;
    num.add(0, Polynomial::one());
    num.add(2, Polynomial::constant(-1));
    den.add(0, Polynomial::one());
    den.add(1, -(kA * kB));
    den.add(2, -(Polynomial::constant(2) + kA * kA + kB * kB));
    den.add(3, -(kA * kB));
    den.add(4, Polynomial::one());
    return RationalGF(num.build(), den.build());
}

RationalGF prime_block_gf(int n) {
    if (n < 1) throw std::domain_error("prime_block_gf requires n >= 1");
    XBuilder num, den;
    num.add(1, kA * kB);
    num.add(2, kB * kB);
    num.add(n, fib_poly(n));
    num.add(n + 1, Polynomial::constant(2) * kB * fib_poly(n - 1) - kA * kB * fib_poly(n - 2));
    num.add(2 * n, sign_pm(n - 1));
    den.add(0, Polynomial::one());
    den.add(n, -fib_poly(n - 2));
    return RationalGF(num.build(), den.build());
}

namespace {

XPoly nblock_denominator(int n) {
    XBuilder den;
    den.add(0, Polynomial::one());
    den.add(1, -(kA * kB));
    den.add(2, -(kB * kB));
    den.add(n, -(fib_poly(n) + fib_poly(n - 2)));
    den.add(n + 1, -(Polynomial::constant(2) * kB * fib_poly(n - 1) - kA * kB * fib_poly(n - 2)));
    den.add(2 * n, sign_pm(n));
    return den.build();
}

}  // namespace

RationalGF nblock_product(int n) {
    if (n < 1) throw std::domain_error("nblock_product requires n >= 1");
    XBuilder num;
    num.add(0, Polynomial::one());
    num.add(n, -fib_poly(n - 2));
    RationalGF out(num.build(), nblock_denominator(n));
    if (!rgf_equal(out, reciprocal_one_minus(prime_block_gf(n)))) {
        construction_mismatch("nblock_product != 1/(1 - prime_block_gf)");
    }
    return out;
}

RationalGF shifted_product(int m) {
    if (m < 0) throw std::domain_error("shifted_product requires m >= 0");
    XBuilder num;
    num.add(m, fib_poly(m));
    num.add(m + 1, kB * fib_poly(m - 1));
    num.add(m + 2, -fib_poly(m - 2));
    RationalGF out(num.build(), shapiro_product().den());
    if (m >= 1 && !rgf_equal(out, div_by_one_minus(first_block_gf(m, 2), prime_block_gf(2)))) {
        construction_mismatch("shifted_product != Q_{m,2}/(1 - P_2)");
    }
    return out;
}

RationalGF first_block_gf(int m, int n) {
    if (m < 1 || n < 1) throw std::domain_error("first_block_gf requires m, n >= 1");
    XBuilder num, den;
    num.add(m, fib_poly(m));
    num.add(m + 1, kB * fib_poly(m - 1));
    num.add(m + n, sign_pm(std::min(m - 1, n - 1)) * fib_poly(std::abs(m - n + 1) - 1));
    den.add(0, Polynomial::one());
    den.add(n, -fib_poly(n - 2));
    return RationalGF(num.build(), den.build());
}

RationalGF shifted_nblock_product(int m, int n) {
    if (m < 0 || n < 1) throw std::domain_error("shifted_nblock_product requires m >= 0, n >= 1");
    if (m == 0) return nblock_product(n);
    XBuilder num;
    num.add(m, fib_poly(m));
    num.add(m + 1, kB * fib_poly(m - 1));
    num.add(m + n, sign_pm(std::min(m - 1, n - 1)) * fib_poly(std::abs(m - n + 1) - 1));
    RationalGF out(num.build(), nblock_denominator(n));
    if (!rgf_equal(out, div_by_one_minus(first_block_gf(m, n), prime_block_gf(n)))) {
        construction_mismatch("shifted_nblock_product != Q_{m,n}/(1 - P_n)");
    }
    return out;
}

namespace {

XPoly progression_denominator(int n) {
    XBuilder den;
    den.add(0, Polynomial::one());
    den.add(n, -(fib_poly(n) + fib_poly(n - 2)));
    den.add(2 * n, sign_pm(n));
    return den.build();
}

}  // namespace

RationalGF fib_progression_gf(int m, int n) {
    if (m < 0 || n < 1) throw std::domain_error("fib_progression_gf requires m >= 0, n >= 1");
    XBuilder num;
    num.add(m, fib_poly(m));
    num.add(m + n, sign_pm(std::min(m - 1, n - 1)) * fib_poly(std::abs(m - n + 1) - 1));
    return RationalGF(num.build(), progression_denominator(n));
}

RationalGF masked_fib_product(int m, int n, MaskSign sign) {
    if (m < 1 || n < 1) throw std::domain_error("masked_fib_product requires m, n >= 1");
    const int q = m / n;
    const int r = m % n;
    XBuilder num;
    if (r == 0) {
        // Numerator x^m - f_{n-2} x^{m+n}, as the first-block factorization
        // R_{m,n}/(1 - P_n|_{b=0}) = x^m (1 - f_{n-2}x^n)/(...) produces it.
        num.add(m, Polynomial::one());
        num.add(m + n, -fib_poly(n - 2));
    } else {
        const int exp = (sign == MaskSign::statement) ? n - r - 1 : std::min(n - 2, n - r) + 1;
        num.add((q + 1) * n, fib_poly(n - r));
        num.add((q + 2) * n, sign_pm(exp) * fib_poly(std::abs(r - 1) - 1));
    }
    RationalGF out(num.build(), progression_denominator(n));
    const RationalGF p_b0 = prime_block_gf(n).substitute('b', 0);
    if (!rgf_equal(out, div_by_one_minus(first_block_gf_top(m, n), p_b0))) {
        construction_mismatch("masked_fib_product != R_{m,n}/(1 - P_n|b=0)");
    }
    return out;
}

RationalGF first_block_gf_top(int m, int n) {
    if (m < 1 || n < 1) throw std::domain_error("first_block_gf_top requires m, n >= 1");
    const int q = m / n;
    const int r = m % n;
    if (r == 0) return RationalGF(XPoly::monomial(m, Polynomial::one()), XPoly::one());
    XBuilder num, den;
    num.add((q + 1) * n, fib_poly(n - r));
    num.add((q + 2) * n,
            fib_poly(n - 1) * fib_poly(n - r - 1) - fib_poly(n - 2) * fib_poly(n - r));
    den.add(0, Polynomial::one());
    den.add(n, -fib_poly(n - 2));
    return RationalGF(num.build(), den.build());
}

RationalGF chebyshev_bilinear_rhs() {
    XBuilder num, den;
    num.add(0, Polynomial::one());
    num.add(2, Polynomial::constant(-1));
    const Polynomial four_ab = Polynomial::constant(4) * kA * kB;
    den.add(0, Polynomial::one());
    den.add(1, -four_ab);
    den.add(2, -(Polynomial::constant(2) - Polynomial::constant(4) * kA * kA -
                 Polynomial::constant(4) * kB * kB));
    den.add(3, -four_ab);
    den.add(4, Polynomial::one());
    return RationalGF(num.build(), den.build());
}

}  // namespace gftiles
