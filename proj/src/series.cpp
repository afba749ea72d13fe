#include "gftiles/series.hpp"

#include <algorithm>

namespace gftiles {

SeriesTrunc::SeriesTrunc(int order) : order_(order) {
    if (order < 0) throw std::domain_error("series order must be nonnegative");
    coeffs_.resize(order + 1);
}

SeriesTrunc::SeriesTrunc(int order, std::vector<Polynomial> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::domain_error("series order must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
        throw std::domain_error("series coefficient count must equal order + 1");
    }
}

const Polynomial& SeriesTrunc::coeff(int k) const {
    if (k < 0 || k > order_) throw std::domain_error("series coefficient index out of range");
    return coeffs_[k];
}

SeriesTrunc expand_rational(const RationalGF& r, int order) {
    if (order < 0) throw std::domain_error("series order must be nonnegative");
    if (!r.den().coeff(0).is_one()) {
        throw std::domain_error("denominator constant term must be 1");
    }
    const int d = r.den().degree();
    std::vector<Polynomial> s(order + 1);
    for (int k = 0; k <= order; ++k) {
        Polynomial acc = r.num().coeff(k);
        const int jmax = std::min(k, d);
        for (int j = 1; j <= jmax; ++j) acc -= r.den().coeff(j) * s[k - j];
        s[k] = std::move(acc);
    }
    return SeriesTrunc(order, std::move(s));
}

SeriesTrunc hadamard_series(const SeriesTrunc& s, const SeriesTrunc& t) {
    if (s.order() != t.order()) throw std::domain_error("series order mismatch");
    std::vector<Polynomial> v(s.order() + 1);
    for (int k = 0; k <= s.order(); ++k) v[k] = s.coeff(k) * t.coeff(k);
    return SeriesTrunc(s.order(), std::move(v));
}

bool series_equal(const SeriesTrunc& s, const SeriesTrunc& t) {
    if (s.order() != t.order()) throw std::domain_error("series order mismatch");
    return s.coeffs() == t.coeffs();
}

SeriesTrunc cauchy_product(const SeriesTrunc& s, const SeriesTrunc& t) {
    if (s.order() != t.order()) throw std::domain_error("series order mismatch");
    std::vector<Polynomial> v(s.order() + 1);
    for (int i = 0; i <= s.order(); ++i) {
        if (s.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= s.order(); ++j) {
            if (t.coeff(j).is_zero()) continue;
            v[i + j] += s.coeff(i) * t.coeff(j);
        }
    }
    return SeriesTrunc(s.order(), std::move(v));
}

int first_mismatch(const SeriesTrunc& s, const SeriesTrunc& t) {
    if (s.order() != t.order()) throw std::domain_error("series order mismatch");
    for (int k = 0; k <= s.order(); ++k) {
        if (!(s.coeff(k) == t.coeff(k))) return k;
    }
    return -1;
}

}  // namespace gftiles
