#include "gftiles/verify.hpp"

#include "gftiles/closedform.hpp"
#include "gftiles/fib.hpp"
#include "gftiles/series.hpp"
#include "gftiles/tilings.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace gftiles {

namespace {

RationalGF fib_gf(char var) {
    // 1/(1 - var*x - x^2)
    std::vector<Polynomial> den(3);
    den[0] = Polynomial::one();
    den[1] = -Polynomial::variable(var);
    den[2] = Polynomial::constant(-1);
    return RationalGF(XPoly::one(), XPoly(std::move(den)));
}

RationalGF nblock_gf(int n, char var) {
    // 1/(1 - var*x - x^n)
    std::vector<Polynomial> den(n + 1);
    den[0] = Polynomial::one();
    den[1] -= Polynomial::variable(var);
    den[n] -= Polynomial::one();
    return RationalGF(XPoly::one(), XPoly(std::move(den)));
}

RationalGF shifted_gf(int m, const RationalGF& base) {
    // x^m * base
    return RationalGF(base.num().shifted(m), base.den());
}

RationalGF mask_gf(int n) {
    // 1/(1 - x^n)
    std::vector<Polynomial> den(n + 1);
    den[0] = Polynomial::one();
    den[n] = Polynomial::constant(-1);
    return RationalGF(XPoly::one(), XPoly(std::move(den)));
}

// Compare a closed form against the coefficientwise product of its two
// factors' expansions; report the smallest mismatching index on failure.
bool oracle_match(CheckResult& res, const RationalGF& closed, const RationalGF& left,
                  const RationalGF& right, int order, const std::string& label) {
    const SeriesTrunc want = hadamard_series(expand_rational(left, order),
                                             expand_rational(right, order));
    const SeriesTrunc got = expand_rational(closed, order);
    const int k = first_mismatch(got, want);
    if (k < 0) return true;
    std::ostringstream os;
    os << label << ": first mismatch at x^" << k << "; closed form has "
       << got.coeff(k).str() << ", series oracle has " << want.coeff(k).str();
    res.fail(os.str());
    return false;
}

bool require(CheckResult& res, bool cond, const std::string& msg) {
    if (!cond) res.fail(msg);
    return cond;
}

CheckResult timed(const char* name, const std::string& detail,
                  const std::function<void(CheckResult&)>& body) {
    CheckResult res;
    res.name = name;
    res.detail = detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(res);
    } catch (const std::exception& e) {
        res.fail(e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace

namespace checks {

CheckResult shapiro_identity(int order) {
    return timed("shapiro", "order " + std::to_string(order), [&](CheckResult& res) {
        oracle_match(res, shapiro_product(), fib_gf('a'), fib_gf('b'), order, "shapiro");
    });
}

CheckResult squared_fibonacci() {
    return timed("a007598", "a=b=1 specialization", [](CheckResult& res) {
        const RationalGF spec = shapiro_product().substitute('a', 1).substitute('b', 1);
        const SeriesTrunc s = expand_rational(spec, 9);
        static const long expected[10] = {1, 1, 4, 9, 25, 64, 169, 441, 1156, 3025};
        for (int k = 0; k < 10; ++k) {
            if (!(s.coeff(k) == Polynomial::constant(expected[k]))) {
                res.fail("coefficient " + std::to_string(k) + " is " + s.coeff(k).str() +
                         ", expected " + std::to_string(expected[k]));
                return;
            }
        }
        const RationalGF lhs = RationalGF::from_text("1 - x^2", "1 - x - 4*x^2 - x^3 + x^4");
        const RationalGF rhs = RationalGF::from_text("1 - x", "1 - 2*x - 2*x^2 + x^3");
        require(res, rgf_equal(lhs, rhs), "squared-Fibonacci cross-multiplication identity failed");
        require(res, rgf_equal(spec, rhs), "a=b=1 specialization does not match (1-x)/(1-2x-2x^2+x^3)");
    });
}

CheckResult nblock_family(std::optional<int> n, int order) {
    const int lo = n.value_or(1), hi = n.value_or(8);
    std::ostringstream d;
    d << "n=" << lo << ".." << hi << ", order " << order;
    return timed("t1", d.str(), [&](CheckResult& res) {
        for (int k = lo; k <= hi; ++k) {
            const RationalGF closed = nblock_product(k);
            if (!oracle_match(res, closed, fib_gf('a'), nblock_gf(k, 'b'), order,
                              "n=" + std::to_string(k))) {
                return;
            }
        }
        require(res, rgf_equal(nblock_product(2), shapiro_product()),
                "n=2 does not reduce to the shapiro product");
    });
}

CheckResult shifted_family(std::optional<int> m, int order) {
    const int lo = m.value_or(0), hi = m.value_or(8);
    std::ostringstream d;
    d << "m=" << lo << ".." << hi << ", order " << order;
    return timed("t2", d.str(), [&](CheckResult& res) {
        for (int k = lo; k <= hi; ++k) {
            const RationalGF closed = shifted_product(k);
            if (!oracle_match(res, closed, fib_gf('a'), shifted_gf(k, fib_gf('b')), order,
                              "m=" + std::to_string(k))) {
                return;
            }
        }
        require(res, rgf_equal(shifted_product(0), shapiro_product()),
                "m=0 does not reduce to the shapiro product");
    });
}

CheckResult shifted_nblock_family(std::optional<int> m, std::optional<int> n, int order) {
    const int mlo = m.value_or(0), mhi = m.value_or(6);
    const int nlo = n.value_or(1), nhi = n.value_or(6);
    std::ostringstream d;
    d << "m=" << mlo << ".." << mhi << ", n=" << nlo << ".." << nhi << ", order " << order;
    return timed("t3", d.str(), [&](CheckResult& res) {
        for (int mm = mlo; mm <= mhi; ++mm) {
            for (int nn = nlo; nn <= nhi; ++nn) {
                const RationalGF closed = shifted_nblock_product(mm, nn);
                const std::string label = "m=" + std::to_string(mm) + ", n=" + std::to_string(nn);
                if (!oracle_match(res, closed, fib_gf('a'), shifted_gf(mm, nblock_gf(nn, 'b')),
                                  order, label)) {
                    return;
                }
                if (!require(res, rgf_equal(closed.substitute('b', 0), fib_progression_gf(mm, nn)),
                             label + ": b=0 specialization mismatch")) {
                    return;
                }
            }
        }
        for (int nn = nlo; nn <= nhi; ++nn) {
            if (!require(res, rgf_equal(shifted_nblock_product(0, nn), nblock_product(nn)),
                         "m=0 does not reduce to the two-denominator product")) {
                return;
            }
        }
        if (mlo <= 2 && 2 <= mhi && nlo <= 2 && 2 <= nhi) {
            for (int mm = std::max(0, mlo); mm <= mhi; ++mm) {
                if (!require(res, rgf_equal(shifted_nblock_product(mm, 2), shifted_product(mm)),
                             "n=2 does not match the quadratic-bottom closed form")) {
                    return;
                }
            }
        }
    });
}

CheckResult masked_family(std::optional<int> m, std::optional<int> n, int order) {
    const int mlo = m.value_or(1), mhi = m.value_or(12);
    const int nlo = n.value_or(1), nhi = n.value_or(6);
    std::ostringstream d;
    d << "m=" << mlo << ".." << mhi << ", n=" << nlo << ".." << nhi << " (q>=1), order " << order
      << "; statement and lemma-route signs agree";
    return timed("t4", d.str(), [&](CheckResult& res) {
        for (int mm = mlo; mm <= mhi; ++mm) {
            for (int nn = nlo; nn <= nhi; ++nn) {
                if (!m.has_value() && mm < nn) continue;  // default matrix keeps q >= 1
                const std::string label = "m=" + std::to_string(mm) + ", n=" + std::to_string(nn);
                const RationalGF closed = masked_fib_product(mm, nn);
                if (!oracle_match(res, closed, shifted_gf(mm, fib_gf('a')), mask_gf(nn), order,
                                  label)) {
                    return;
                }
                if (!require(res,
                             rgf_equal(closed, masked_fib_product(mm, nn, MaskSign::lemma)),
                             label + ": the two sign conventions disagree")) {
                    return;
                }
            }
        }
    });
}

CheckResult lemma_family(std::optional<int> m, std::optional<int> n) {
    if (m.has_value() || n.has_value()) {
        const int mm = m.value_or(1), nn = n.value_or(0);
        std::ostringstream d;
        d << "m=" << mm << ", n=" << nn;
        return timed("lemma", d.str(), [&](CheckResult& res) {
            require(res, lemma11_check(mm, nn), "polynomial identity failed");
            if (mm > nn && nn >= 0) lemma11_bijection_audit(mm, nn);
        });
    }
    return timed("lemma", "identity -1<=m,n<=12; audit 0<=n<m<=10", [](CheckResult& res) {
        for (int mm = -1; mm <= 12; ++mm) {
            for (int nn = -1; nn <= 12; ++nn) {
                if (!require(res, lemma11_check(mm, nn),
                             "polynomial identity failed at m=" + std::to_string(mm) +
                                 ", n=" + std::to_string(nn))) {
                    return;
                }
            }
        }
        for (int mm = 1; mm <= 10; ++mm) {
            for (int nn = 0; nn < mm; ++nn) lemma11_bijection_audit(mm, nn);
        }
        for (int nn = 0; nn <= 12; ++nn) {
            const Polynomial cassini = fib_poly(nn + 1) * fib_poly(nn + 1) -
                                       fib_poly(nn + 2) * fib_poly(nn);
            if (!require(res, cassini == Polynomial::constant(nn % 2 == 0 ? -1 : 1),
                         "Cassini specialization failed at n=" + std::to_string(nn))) {
                return;
            }
        }
    });
}

CheckResult progression_family(std::optional<int> m, std::optional<int> n, int order) {
    const int mlo = m.value_or(0), mhi = m.value_or(6);
    const int nlo = n.value_or(1), nhi = n.value_or(6);
    std::ostringstream d;
    d << "m=" << mlo << ".." << mhi << ", n=" << nlo << ".." << nhi << ", order " << order;
    return timed("b0", d.str(), [&](CheckResult& res) {
        for (int mm = mlo; mm <= mhi; ++mm) {
            for (int nn = nlo; nn <= nhi; ++nn) {
                const SeriesTrunc got = expand_rational(fib_progression_gf(mm, nn), order);
                for (int k = 0; k <= order; ++k) {
                    const bool hit = k >= mm && (k - mm) % nn == 0;
                    const Polynomial want = hit ? fib_poly(k) : Polynomial{};
                    if (!(got.coeff(k) == want)) {
                        res.fail("m=" + std::to_string(mm) + ", n=" + std::to_string(nn) +
                                 ": coefficient of x^" + std::to_string(k) + " is " +
                                 got.coeff(k).str() + ", expected " + want.str());
                        return;
                    }
                }
            }
        }
    });
}

CheckResult prime_block_taxonomy() {
    return timed("prime-blocks", "n=1..5, k=1..12", [](CheckResult& res) {
        const RowSpec top = RowSpec::fib_row('a');
        for (int n = 1; n <= 5; ++n) {
            const RowSpec bottom = RowSpec::nblock_row(n, 'b');
            const SeriesTrunc gf = expand_rational(prime_block_gf(n), 12);
            for (int k = 1; k <= 12; ++k) {
                const Polynomial got = enumerate_prime_blocks(top, bottom, k);
                if (!(got == gf.coeff(k))) {
                    res.fail("n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             ": enumeration gives " + got.str() + ", generating function gives " +
                             gf.coeff(k).str());
                    return;
                }
                // Classification: prime blocks exist only at lengths
                // 1, 2, n, and nk, nk+1, nk+2 for k >= 1.
                const bool allowed = k == 1 || k == 2 || k == n ||
                                     (k >= n && (k % n == 0 || k % n == 1 || k % n == 2));
                if (!allowed && !got.is_zero()) {
                    res.fail("n=" + std::to_string(n) + ": unexpected prime block of length " +
                             std::to_string(k));
                    return;
                }
            }
        }
    });
}

CheckResult kronecker_crosscheck() {
    return timed("kronecker", "hadamard_rational vs every closed form", [](CheckResult& res) {
        auto check = [&](const RationalGF& left, const RationalGF& right,
                         const RationalGF& closed, const std::string& label) {
            const RationalGF got = hadamard_rational(left, right);
            if (!rgf_equal(got, closed)) {
                res.fail(label + ": Kronecker-route product disagrees with the closed form");
                return false;
            }
            const int want_dim = left.den().degree() * right.den().degree();
            if (left.den().degree() > 0 && right.den().degree() > 0 &&
                got.den().degree() != want_dim) {
                res.fail(label + ": product representation has dimension " +
                         std::to_string(got.den().degree()) + ", expected " +
                         std::to_string(want_dim));
                return false;
            }
            return true;
        };
        if (!check(fib_gf('a'), fib_gf('b'), shapiro_product(), "shapiro")) return;
        for (int n = 1; n <= 8; ++n) {
            if (!check(fib_gf('a'), nblock_gf(n, 'b'), nblock_product(n),
                       "t1 n=" + std::to_string(n))) {
                return;
            }
        }
        for (int m = 0; m <= 8; ++m) {
            if (!check(fib_gf('a'), shifted_gf(m, fib_gf('b')), shifted_product(m),
                       "t2 m=" + std::to_string(m))) {
                return;
            }
        }
        for (int m = 0; m <= 6; ++m) {
            for (int n = 1; n <= 6; ++n) {
                if (!check(fib_gf('a'), shifted_gf(m, nblock_gf(n, 'b')),
                           shifted_nblock_product(m, n),
                           "t3 m=" + std::to_string(m) + ", n=" + std::to_string(n))) {
                    return;
                }
            }
        }
    });
}

CheckResult chebyshev_bilinear(int order) {
    return timed("cheb", "order " + std::to_string(order) + "; sign pattern n<=20",
                 [&](CheckResult& res) {
        const SeriesTrunc s = expand_rational(chebyshev_bilinear_rhs(), order);
        for (int k = 0; k <= order; ++k) {
            const Polynomial want = chebyshev_u(k, 'a') * chebyshev_u(k, 'b');
            if (!(s.coeff(k) == want)) {
                res.fail("coefficient of x^" + std::to_string(k) + " is " + s.coeff(k).str() +
                         ", expected U_k(a)U_k(b) = " + want.str());
                return;
            }
        }
        for (int k = 0; k <= 20; ++k) {
            if (!require(res, chebyshev_u(k) == chebyshev_u_sign_pattern(k),
                         "sign-pattern identity failed at n=" + std::to_string(k))) {
                return;
            }
        }
    });
}

}  // namespace checks

std::vector<CheckResult> run_acceptance() {
    std::vector<CheckResult> out;
    out.push_back(checks::shapiro_identity(40));
    out.push_back(checks::squared_fibonacci());
    out.push_back(checks::nblock_family(std::nullopt, 40));
    out.push_back(checks::shifted_family(std::nullopt, 40));
    out.push_back(checks::shifted_nblock_family(std::nullopt, std::nullopt, 40));
    out.push_back(checks::masked_family(std::nullopt, std::nullopt, 60));
    out.push_back(checks::lemma_family());
    out.push_back(checks::prime_block_taxonomy());
    out.push_back(checks::kronecker_crosscheck());
    out.push_back(checks::chebyshev_bilinear(30));
    return out;
}

}  // namespace gftiles
