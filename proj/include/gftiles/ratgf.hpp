#pragma once

#include "gftiles/xpoly.hpp"

#include <string>
#include <vector>

namespace gftiles {

/// Rational generating function num(x)/den(x) with den(0) = 1.
/// Not kept in lowest terms; equality is always the cross-multiplication
/// test rgf_equal, never syntactic identity.
class RationalGF {
public:
    /// Normalizes a -1 constant term by negating both parts; any other
    /// non-unit constant term is a domain error.
    RationalGF(XPoly num, XPoly den);

    static RationalGF from_text(std::string_view num, std::string_view den) {
        return RationalGF(XPoly::parse(num), XPoly::parse(den));
    }

    const XPoly& num() const noexcept { return num_; }
    const XPoly& den() const noexcept { return den_; }

    RationalGF substitute(char v, const Int& value) const;

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    XPoly num_;
    XPoly den_;
};

/// Square matrix of Polynomial entries (companion/Kronecker machinery).
class SquareMatrix {
public:
    explicit SquareMatrix(int dim);

    int dim() const noexcept { return dim_; }
    Polynomial& at(int i, int j);
    const Polynomial& at(int i, int j) const;

private:
    int dim_;
    std::vector<Polynomial> entries_;
};

/// Companion matrix of the recurrence u_k = sum c_j u_{k-j} encoded by
/// den = 1 - c_1 x - ... - c_d x^d. Its characteristic polynomial is the
/// degree-d reversal of den. Degree-zero denominators are a domain error.
SquareMatrix companion_matrix(const XPoly& den);

SquareMatrix kronecker(const SquareMatrix& a, const SquareMatrix& b);

/// det(t*I - m) over Z[a,b], division-free (Berkowitz); monic of degree dim,
/// returned with ascending powers of t.
XPoly berkowitz_charpoly(const SquareMatrix& m);

/// Reversal x^d * p(1/x) of a degree-d polynomial.
XPoly reversed(const XPoly& p);

/// True iff u and v represent the same series: u.num * v.den == v.num * u.den.
bool rgf_equal(const RationalGF& u, const RationalGF& v);

/// Closed-form Hadamard product via the Kronecker product of companion
/// matrices. The output denominator is the reversed characteristic polynomial
/// of the Kronecker product; the numerator is recovered by truncated
/// multiplication with a transient budget for improper inputs, and a
/// vanishing window beyond the budget is checked at runtime (a failure
/// signals an implementation bug, never a bad input).
RationalGF hadamard_rational(const RationalGF& u, const RationalGF& v);

/// 1/(1 - p) for a rational p with p(0) = 0.
RationalGF reciprocal_one_minus(const RationalGF& p);

/// q / (1 - p) for a rational p with p(0) = 0.
RationalGF div_by_one_minus(const RationalGF& q, const RationalGF& p);

}  // namespace gftiles
