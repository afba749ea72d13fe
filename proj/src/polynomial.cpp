#include "gftiles/polynomial.hpp"

#include "term_parser.hpp"

#include <sstream>
#include <utility>

namespace gftiles {

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    p.add_term({0, 0}, c);
    return p;
}

Polynomial Polynomial::variable(char v) {
    if (v == 'a') return monomial(1, 0, 1);
    if (v == 'b') return monomial(0, 1, 1);
    throw std::domain_error("unknown variable, expected 'a' or 'b'");
}

Polynomial Polynomial::monomial(std::uint32_t ea, std::uint32_t eb, Int c) {
    Polynomial p;
    p.add_term({ea, eb}, c);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0});
}

bool Polynomial::is_one() const noexcept {
    return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
           terms_.begin()->second == 1;
}

std::uint32_t Polynomial::degree(char v) const {
    if (v != 'a' && v != 'b') throw std::domain_error("unknown variable, expected 'a' or 'b'");
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, v == 'a' ? e.ea : e.eb);
    return d;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.ea + e.eb);
    return d;
}

Int Polynomial::coeff(std::uint32_t ea, std::uint32_t eb) const {
    auto it = terms_.find({ea, eb});
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const ExpPair& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    Polynomial out;
    for (const auto& [el, cl] : l.terms_) {
        for (const auto& [er, cr] : r.terms_) {
            out.add_term({el.ea + er.ea, el.eb + er.eb}, cl * cr);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::domain_error("negative exponent in polynomial power");
    Polynomial result = one();
    Polynomial base = *this;
    unsigned n = static_cast<unsigned>(e);
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return result;
}

namespace {

Int int_pow(const Int& base, std::uint32_t e) {
    Int r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Int Polynomial::eval(const Int& a_val, const Int& b_val) const {
    Int sum = 0;
    for (const auto& [e, c] : terms_) {
        sum += c * int_pow(a_val, e.ea) * int_pow(b_val, e.eb);
    }
    return sum;
}

Polynomial Polynomial::substitute(char v, const Int& value) const {
    if (v != 'a' && v != 'b') throw std::domain_error("unknown variable, expected 'a' or 'b'");
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        if (v == 'a') out.add_term({0, e.eb}, c * int_pow(value, e.ea));
        else out.add_term({e.ea, 0}, c * int_pow(value, e.eb));
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const Int mag = neg ? Int(-c) : c;
        const bool has_vars = e.ea > 0 || e.eb > 0;
        bool printed = false;
        if (mag != 1 || !has_vars) {
            os << mag.str();
            printed = true;
        }
        if (e.ea > 0) {
            if (printed) os << '*';
            os << 'a';
            if (e.ea > 1) os << '^' << e.ea;
            printed = true;
        }
        if (e.eb > 0) {
            if (printed) os << '*';
            os << 'b';
            if (e.eb > 1) os << '^' << e.eb;
        }
    }
    return os.str();
}

Polynomial Polynomial::parse(std::string_view text) {
    detail::TermParser parser(text, /*allow_x=*/false);
    auto terms = parser.parse();
    Polynomial out;
    if (auto it = terms.find(0); it != terms.end()) out = it->second;
    return out;
}

}  // namespace gftiles
