#include "gftiles/ratgf.hpp"

#include "gftiles/series.hpp"

#include <algorithm>

namespace gftiles {

RationalGF::RationalGF(XPoly num, XPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("denominator must be nonzero");
    const Polynomial& c0 = den_.coeff(0);
    if (c0.is_one()) return;
    if (c0 == Polynomial::constant(-1)) {
        num_ = -num_;
        den_ = -den_;
        return;
    }
    throw std::domain_error("denominator constant term must be 1");
}

RationalGF RationalGF::substitute(char v, const Int& value) const {
    return RationalGF(num_.substitute(v, value), den_.substitute(v, value));
}

SquareMatrix::SquareMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::domain_error("matrix dimension must be positive");
    entries_.resize(static_cast<std::size_t>(dim) * dim);
}

Polynomial& SquareMatrix::at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
}

const Polynomial& SquareMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
}

SquareMatrix companion_matrix(const XPoly& den) {
    if (!den.coeff(0).is_one()) throw std::domain_error("denominator constant term must be 1");
    const int d = den.degree();
    if (d < 1) throw std::domain_error("zero-degree denominator has no companion matrix");
    SquareMatrix m(d);
    for (int j = 0; j < d; ++j) m.at(0, j) = -den.coeff(j + 1);
    for (int i = 1; i < d; ++i) m.at(i, i - 1) = Polynomial::one();
    return m;
}

SquareMatrix kronecker(const SquareMatrix& a, const SquareMatrix& b) {
    const int da = a.dim(), db = b.dim();
    SquareMatrix k(da * db);
    for (int i1 = 0; i1 < da; ++i1) {
        for (int j1 = 0; j1 < da; ++j1) {
            if (a.at(i1, j1).is_zero()) continue;
            for (int i2 = 0; i2 < db; ++i2) {
                for (int j2 = 0; j2 < db; ++j2) {
                    if (b.at(i2, j2).is_zero()) continue;
                    k.at(i1 * db + i2, j1 * db + j2) = a.at(i1, j1) * b.at(i2, j2);
                }
            }
        }
    }
    return k;
}

XPoly berkowitz_charpoly(const SquareMatrix& m) {
    const int n = m.dim();
    // Coefficient vector of the characteristic polynomial of the leading
    // principal submatrix, in decreasing powers of t; starts as [1].
    std::vector<Polynomial> v{Polynomial::one()};
    for (int k = 0; k < n; ++k) {
        // Toeplitz column for the (k+1)x(k+1) principal block:
        // t0 = 1, t1 = -m[k][k], t_{j+2} = -(R . Msub^j . C)
        // with R the k-th row, C the k-th column, Msub the k x k block.
        std::vector<Polynomial> t(k + 2);
        t[0] = Polynomial::one();
        t[1] = -m.at(k, k);
        if (k >= 1) {
            std::vector<Polynomial> w(k);
            for (int r = 0; r < k; ++r) w[r] = m.at(r, k);
            for (int j = 2; j <= k + 1; ++j) {
                Polynomial dot;
                for (int c = 0; c < k; ++c) dot += m.at(k, c) * w[c];
                t[j] = -dot;
                if (j <= k) {
                    std::vector<Polynomial> w2(k);
                    for (int r = 0; r < k; ++r) {
                        Polynomial s;
                        for (int c = 0; c < k; ++c) s += m.at(r, c) * w[c];
                        w2[r] = std::move(s);
                    }
                    w = std::move(w2);
                }
            }
        }
        std::vector<Polynomial> v2(k + 2);
        for (int i = 0; i < k + 2; ++i) {
            Polynomial s;
            const int jmax = std::min<int>(i, static_cast<int>(t.size()) - 1);
            for (int j = 0; j <= jmax; ++j) {
                const int l = i - j;
                if (l < static_cast<int>(v.size())) s += t[j] * v[l];
            }
            v2[i] = std::move(s);
        }
        v = std::move(v2);
    }
    // Convert to ascending powers of t.
    std::vector<Polynomial> asc(n + 1);
    for (int d = 0; d <= n; ++d) asc[d] = v[n - d];
    return XPoly(std::move(asc));
}

XPoly reversed(const XPoly& p) {
    const int d = p.degree();
    if (d < 0) return {};
    std::vector<Polynomial> v(d + 1);
    for (int i = 0; i <= d; ++i) v[i] = p.coeff(d - i);
    return XPoly(std::move(v));
}

bool rgf_equal(const RationalGF& u, const RationalGF& v) {
    return u.num() * v.den() == v.num() * u.den();
}

RationalGF hadamard_rational(const RationalGF& u, const RationalGF& v) {
    if (u.num().is_zero() || v.num().is_zero()) return RationalGF(XPoly{}, XPoly::one());

    const int du = u.den().degree();
    const int dv = v.den().degree();
    if (du == 0 || dv == 0) {
        // One factor is a plain polynomial; the product is too.
        const RationalGF& p = (du == 0) ? u : v;
        const RationalGF& q = (du == 0) ? v : u;
        const int deg = p.num().degree();
        SeriesTrunc qs = expand_rational(q, deg);
        std::vector<Polynomial> c(deg + 1);
        for (int k = 0; k <= deg; ++k) c[k] = p.num().coeff(k) * qs.coeff(k);
        return RationalGF(XPoly(std::move(c)), XPoly::one());
    }

    const SquareMatrix k = kronecker(companion_matrix(u.den()), companion_matrix(v.den()));
    const XPoly den_out = reversed(berkowitz_charpoly(k));
    const int bigd = du * dv;

    // Transient budget: indices where an improper factor has not yet entered
    // its denominator's recurrence.
    const int tu = std::max(0, u.num().degree() - du + 1);
    const int tv = std::max(0, v.num().degree() - dv + 1);
    const int transient = tu + tv;
    const int window_hi = 2 * bigd + 2 * transient;

    const SeriesTrunc w =
        hadamard_series(expand_rational(u, window_hi), expand_rational(v, window_hi));

    std::vector<Polynomial> prod(window_hi + 1);
    for (int i = 0; i <= std::min(bigd, window_hi); ++i) {
        if (den_out.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= window_hi; ++j) {
            if (w.coeff(j).is_zero()) continue;
            prod[i + j] += den_out.coeff(i) * w.coeff(j);
        }
    }
    for (int i = bigd + transient; i <= window_hi; ++i) {
        if (!prod[i].is_zero()) {
            throw std::logic_error(
                "hadamard_rational self-check failed: den*series has a nonzero "
                "coefficient at x^" + std::to_string(i) + " beyond the transient window");
        }
    }
    prod.resize(bigd + transient);
    return RationalGF(XPoly(std::move(prod)), den_out);
}

RationalGF reciprocal_one_minus(const RationalGF& p) {
    if (!p.num().coeff(0).is_zero()) {
        throw std::domain_error("reciprocal_one_minus requires p(0) == 0");
    }
    return RationalGF(p.den(), p.den() - p.num());
}

RationalGF div_by_one_minus(const RationalGF& q, const RationalGF& p) {
    if (!p.num().coeff(0).is_zero()) {
        throw std::domain_error("div_by_one_minus requires p(0) == 0");
    }
    return RationalGF(q.num() * p.den(), q.den() * (p.den() - p.num()));
}

}  // namespace gftiles
