#pragma once

#include "gftiles/polynomial.hpp"

#include <cctype>
#include <map>

namespace gftiles::detail {

// Recursive-descent parser shared by Polynomial::parse and XPoly::parse.
// Produces a map x-power -> coefficient polynomial; plain polynomials are
// parsed with allow_x = false and must land entirely in power 0.
class TermParser {
public:
    TermParser(std::string_view text, bool allow_x)
        : s_(text), allow_x_(allow_x) {}

    std::map<std::uint32_t, Polynomial> parse() {
        auto out = parse_sum(/*inside_paren=*/false);
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(pos_, msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool at_factor_start() const {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        if (c == 'a' || c == 'b') return true;
        if (allow_x_ && (c == 'x' || c == '(')) return true;
        return false;
    }

    Int parse_integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    std::uint32_t parse_exponent() {
        ++pos_;  // consume '^'
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent after '^'");
        const std::size_t start = pos_;
        Int e = parse_integer();
        if (e > 1000000) throw parse_error(start, "exponent too large");
        return static_cast<std::uint32_t>(e);
    }

    // factor := INT | 'a'['^'INT] | 'b'['^'INT] | 'x'['^'INT] | '(' sum ')'
    // Accumulates into (coeff, xpow).
    void parse_factor(Polynomial& coeff, std::uint64_t& xpow) {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= Polynomial::constant(parse_integer());
            return;
        }
        if (c == 'a' || c == 'b') {
            ++pos_;
            skip_ws();
            std::uint32_t e = 1;
            if (peek() == '^') e = parse_exponent();
            coeff *= (c == 'a') ? Polynomial::monomial(e, 0, 1)
                                : Polynomial::monomial(0, e, 1);
            return;
        }
        if (c == 'x') {
            if (!allow_x_) fail("variable 'x' is not allowed here");
            ++pos_;
            skip_ws();
            std::uint32_t e = 1;
            if (peek() == '^') e = parse_exponent();
            xpow += e;
            if (xpow > 1000000) fail("power of x too large");
            return;
        }
        if (c == '(') {
            if (!allow_x_) fail("parentheses are not allowed here");
            ++pos_;
            TermParser inner(s_, /*allow_x=*/false);
            inner.pos_ = pos_;
            auto sub = inner.parse_sum(/*inside_paren=*/true);
            pos_ = inner.pos_;
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            Polynomial p;
            if (auto it = sub.find(0); it != sub.end()) p = it->second;
            coeff *= p;
            return;
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::map<std::uint32_t, Polynomial> parse_sum(bool inside_paren) {
        std::map<std::uint32_t, Polynomial> out;
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size() || (inside_paren && peek() == ')')) {
                if (first) fail("empty input");
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (peek() == '-') ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            skip_ws();
            if (!at_factor_start()) fail("expected a term");
            Polynomial coeff = Polynomial::one();
            std::uint64_t xpow = 0;
            parse_factor(coeff, xpow);
            for (;;) {
                skip_ws();
                if (peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (!at_factor_start()) fail("expected a factor after '*'");
                    parse_factor(coeff, xpow);
                } else if (at_factor_start()) {
                    parse_factor(coeff, xpow);
                } else {
                    break;
                }
            }
            if (sign < 0) coeff = -coeff;
            auto [it, inserted] = out.try_emplace(static_cast<std::uint32_t>(xpow), coeff);
            if (!inserted) it->second += coeff;
            first = false;
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero()) it = out.erase(it);
            else ++it;
        }
        return out;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    bool allow_x_;
};

}  // namespace gftiles::detail
