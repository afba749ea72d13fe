#pragma once

#include "gftiles/ratgf.hpp"

#include <vector>

namespace gftiles {

/// Truncated power series in x over Z[a,b]. Unlike XPoly, a series has an
/// explicit order and stores exactly order+1 coefficients, zeros included;
/// mixing orders in arithmetic is a domain error rather than a silent
/// re-truncation.
class SeriesTrunc {
public:
    explicit SeriesTrunc(int order);
    SeriesTrunc(int order, std::vector<Polynomial> coeffs);

    int order() const noexcept { return order_; }
    const Polynomial& coeff(int k) const;
    const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }

    /// The series as an XPoly (trailing zeros trimmed).
    XPoly to_xpoly() const { return XPoly(coeffs_); }

    friend bool operator==(const SeriesTrunc&, const SeriesTrunc&) = default;

private:
    int order_;
    std::vector<Polynomial> coeffs_;
};

/// Expand num/den to the given order using the linear recurrence read off
/// the denominator. Requires den(0) == 1.
SeriesTrunc expand_rational(const RationalGF& r, int order);

/// Coefficientwise product; orders must match.
SeriesTrunc hadamard_series(const SeriesTrunc& s, const SeriesTrunc& t);

/// Exact coefficientwise comparison; orders must match.
bool series_equal(const SeriesTrunc& s, const SeriesTrunc& t);

/// Truncated Cauchy (ordinary) product; orders must match.
SeriesTrunc cauchy_product(const SeriesTrunc& s, const SeriesTrunc& t);

/// Smallest index at which two series differ, or -1 if equal.
int first_mismatch(const SeriesTrunc& s, const SeriesTrunc& t);

}  // namespace gftiles
