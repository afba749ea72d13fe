#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gftiles {

/// Arbitrary-precision signed integer; every coefficient in the system lives here.
using Int = boost::multiprecision::cpp_int;

/// Syntax error raised by the text parsers, carrying the offending offset.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Exponent pair (e_a, e_b) of a monomial a^{e_a} b^{e_b}.
struct ExpPair {
    std::uint32_t ea = 0;
    std::uint32_t eb = 0;

    friend bool operator==(const ExpPair&, const ExpPair&) = default;
};

/// Canonical term order: ascending total degree, then descending power of a.
/// Fixed so that equal polynomials always render identically.
struct TermLess {
    bool operator()(const ExpPair& l, const ExpPair& r) const noexcept {
        const std::uint64_t lt = std::uint64_t(l.ea) + l.eb;
        const std::uint64_t rt = std::uint64_t(r.ea) + r.eb;
        if (lt != rt) return lt < rt;
        return l.ea > r.ea;
    }
};

/// An element of the ring Z[a,b], stored sparsely as exponent-pair -> coefficient.
/// Zero coefficients are never stored; the zero polynomial is the empty map.
/// Values are immutable in spirit: all operations return new polynomials.
class Polynomial {
public:
    using TermMap = std::map<ExpPair, Int, TermLess>;

    Polynomial() = default;

    static Polynomial constant(Int c);
    static Polynomial one() { return constant(1); }
    /// The variable `a` or `b`.
    static Polynomial variable(char v);
    static Polynomial monomial(std::uint32_t ea, std::uint32_t eb, Int c);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Degree in one variable ('a' or 'b'); 0 for the zero polynomial.
    std::uint32_t degree(char v) const;
    std::uint32_t total_degree() const;

    /// Coefficient of a^{ea} b^{eb} (zero if absent).
    Int coeff(std::uint32_t ea, std::uint32_t eb) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator*(const Polynomial& l, const Polynomial& r);

    /// Exact nonnegative power; a negative exponent is a domain error.
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Exact integer substitution a := a_val, b := b_val.
    Int eval(const Int& a_val, const Int& b_val) const;

    /// Substitute an integer for one variable, keeping the other symbolic.
    Polynomial substitute(char v, const Int& value) const;

    /// Canonical text form; parse(str()) reproduces the value exactly.
    std::string str() const;

    /// Grammar: signed integer coefficients, variables `a`/`b`, optional `*`
    /// between factors, `^` for exponents, terms joined with `+`/`-`.
    static Polynomial parse(std::string_view text);

private:
    void add_term(const ExpPair& e, const Int& c);

    TermMap terms_;
};

}  // namespace gftiles
