#include "gftiles/xpoly.hpp"

#include "term_parser.hpp"

#include <sstream>

namespace gftiles {

XPoly::XPoly(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(std::size_t k, Polynomial c) {
    std::vector<Polynomial> v(k + 1);
    v[k] = std::move(c);
    return XPoly(std::move(v));
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Polynomial& XPoly::coeff(std::size_t k) const {
    static const Polynomial zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

XPoly XPoly::operator-() const {
    std::vector<Polynomial> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return XPoly(std::move(v));
}

XPoly operator+(const XPoly& l, const XPoly& r) {
    std::vector<Polynomial> v(std::max(l.coeffs_.size(), r.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = l.coeff(i) + r.coeff(i);
    return XPoly(std::move(v));
}

XPoly operator-(const XPoly& l, const XPoly& r) {
    std::vector<Polynomial> v(std::max(l.coeffs_.size(), r.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = l.coeff(i) - r.coeff(i);
    return XPoly(std::move(v));
}

XPoly operator*(const XPoly& l, const XPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Polynomial> v(l.coeffs_.size() + r.coeffs_.size() - 1);
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
        if (l.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
            if (r.coeffs_[j].is_zero()) continue;
            v[i + j] += l.coeffs_[i] * r.coeffs_[j];
        }
    }
    return XPoly(std::move(v));
}

XPoly XPoly::scaled(const Polynomial& c) const {
    std::vector<Polynomial> v;
    v.reserve(coeffs_.size());
    for (const auto& p : coeffs_) v.push_back(p * c);
    return XPoly(std::move(v));
}

XPoly XPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Polynomial> v(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return XPoly(std::move(v));
}

XPoly XPoly::substitute(char v, const Int& value) const {
    std::vector<Polynomial> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.push_back(p.substitute(v, value));
    return XPoly(std::move(out));
}

namespace {

// One rendered x^k term: leading sign plus the body, e.g. "(a*b)*x^3".
void render_term(std::ostringstream& os, bool first, bool neg, const std::string& body) {
    if (first) {
        if (neg) os << '-';
    } else {
        os << (neg ? " - " : " + ");
    }
    os << body;
}

std::string x_power(std::size_t k) {
    return k == 1 ? "x" : "x^" + std::to_string(k);
}

}  // namespace

std::string XPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Polynomial& p = coeffs_[k];
        if (p.is_zero()) continue;
        if (k == 0) {
            // Constant-in-x part renders inline, one term at a time.
            for (const auto& [e, c] : p.terms()) {
                const bool neg = c < 0;
                Polynomial t = Polynomial::monomial(e.ea, e.eb, neg ? Int(-c) : c);
                render_term(os, first, neg, t.str());
                first = false;
            }
            continue;
        }
        if (p.term_count() == 1) {
            const auto& [e, c] = *p.terms().begin();
            const bool neg = c < 0;
            const Int mag = neg ? Int(-c) : c;
            std::string body;
            if (e.ea == 0 && e.eb == 0) {
                body = (mag == 1) ? x_power(k) : mag.str() + "*" + x_power(k);
            } else {
                body = "(" + Polynomial::monomial(e.ea, e.eb, mag).str() + ")*" + x_power(k);
            }
            render_term(os, first, neg, body);
        } else {
            const bool neg = p.terms().begin()->second < 0;
            const Polynomial q = neg ? -p : p;
            render_term(os, first, neg, "(" + q.str() + ")*" + x_power(k));
        }
        first = false;
    }
    return os.str();
}

XPoly XPoly::parse(std::string_view text) {
    detail::TermParser parser(text, /*allow_x=*/true);
    auto terms = parser.parse();
    std::size_t deg = 0;
    for (const auto& [k, p] : terms) deg = std::max<std::size_t>(deg, k);
    std::vector<Polynomial> v(terms.empty() ? 0 : deg + 1);
    for (auto& [k, p] : terms) v[k] = std::move(p);
    return XPoly(std::move(v));
}

}  // namespace gftiles
