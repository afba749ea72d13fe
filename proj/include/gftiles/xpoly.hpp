#pragma once

#include "gftiles/polynomial.hpp"

#include <vector>

namespace gftiles {

/// Dense polynomial in the series variable x with Polynomial coefficients.
/// Trailing zero coefficients are trimmed; the zero value is the empty list.
/// Also used for characteristic polynomials (indeterminate t).
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Polynomial> coeffs);

    static XPoly one() { return monomial(0, Polynomial::one()); }
    static XPoly monomial(std::size_t k, Polynomial c);

    /// Degree in x; -1 for the zero value.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of x^k (zero beyond the degree).
    const Polynomial& coeff(std::size_t k) const;
    const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& l, const XPoly& r);
    friend XPoly operator-(const XPoly& l, const XPoly& r);
    friend XPoly operator*(const XPoly& l, const XPoly& r);

    XPoly scaled(const Polynomial& c) const;
    XPoly shifted(std::size_t k) const;

    XPoly substitute(char v, const Int& value) const;

    friend bool operator==(const XPoly&, const XPoly&) = default;

    std::string str() const;

    /// Grammar: terms like `1`, `x^4`, `3*x^2`, `(a*b)*x`, `(2 + a^2 + b^2)*x^2`,
    /// joined with `+`/`-`; the coefficient grammar is Polynomial's.
    static XPoly parse(std::string_view text);

private:
    void trim();

    std::vector<Polynomial> coeffs_;
};

}  // namespace gftiles
