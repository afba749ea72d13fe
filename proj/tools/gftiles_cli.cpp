// gftiles: exact Hadamard products of rational generating functions,
// closed-form verification, and two-row tiling inspection.

#include "gftiles/closedform.hpp"
#include "gftiles/series.hpp"
#include "gftiles/tilings.hpp"
#include "gftiles/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <optional>

namespace {

using namespace gftiles;

constexpr int kMaxOrder = 200;

void check_order(int order) {
    if (order < 0) throw std::domain_error("order must be nonnegative");
    if (order > kMaxOrder) {
        throw std::domain_error("orders above " + std::to_string(kMaxOrder) +
                                " are not supported; symbolic coefficients grow too large");
    }
}

void print_series(const SeriesTrunc& s, bool json) {
    if (json) {
        nlohmann::json j;
        j["order"] = s.order();
        auto& coeffs = j["coeffs"] = nlohmann::json::array();
        for (int k = 0; k <= s.order(); ++k) coeffs.push_back(s.coeff(k).str());
        std::cout << j.dump() << "\n";
        return;
    }
    for (int k = 0; k <= s.order(); ++k) {
        std::cout << k << "\t" << s.coeff(k).str() << "\n";
    }
}

int cmd_expand(const std::string& num, const std::string& den, int order, bool json) {
    check_order(order);
    const RationalGF r = RationalGF::from_text(num, den);
    print_series(expand_rational(r, order), json);
    return 0;
}

int cmd_hadamard(const std::string& lnum, const std::string& lden, const std::string& rnum,
                 const std::string& rden, bool closed, std::optional<int> series_order,
                 bool json) {
    const RationalGF u = RationalGF::from_text(lnum, lden);
    const RationalGF v = RationalGF::from_text(rnum, rden);
    if (closed == series_order.has_value()) {
        throw CLI::ValidationError("hadamard", "pass exactly one of --closed or --series <N>");
    }
    if (closed) {
        const RationalGF w = hadamard_rational(u, v);
        if (json) {
            nlohmann::json j;
            j["num"] = w.num().str();
            j["den"] = w.den().str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "num\t" << w.num().str() << "\n";
            std::cout << "den\t" << w.den().str() << "\n";
        }
        return 0;
    }
    check_order(*series_order);
    print_series(hadamard_series(expand_rational(u, *series_order),
                                 expand_rational(v, *series_order)),
                 json);
    return 0;
}

int cmd_verify(const std::string& theorem, std::optional<int> m, std::optional<int> n,
               int order) {
    check_order(order);
    std::vector<CheckResult> results;
    if (theorem == "shapiro") {
        results.push_back(checks::shapiro_identity(order));
        results.push_back(checks::squared_fibonacci());
    } else if (theorem == "t1") {
        results.push_back(checks::nblock_family(n, order));
    } else if (theorem == "t2") {
        results.push_back(checks::shifted_family(m, order));
    } else if (theorem == "t3") {
        results.push_back(checks::shifted_nblock_family(m, n, order));
    } else if (theorem == "t4") {
        results.push_back(checks::masked_family(m, n, order));
    } else if (theorem == "lemma") {
        results.push_back(checks::lemma_family(m, n));
    } else if (theorem == "b0") {
        results.push_back(checks::progression_family(m, n, order));
    } else if (theorem == "cheb") {
        results.push_back(checks::chebyshev_bilinear(std::min(order, 30)));
    } else if (theorem == "all") {
        results = run_acceptance();
    } else {
        throw CLI::ValidationError(
            "--theorem", "expected one of shapiro|t1|t2|t3|t4|lemma|b0|cheb|all");
    }
    bool ok = true;
    for (const auto& r : results) {
        if (r.ok) {
            std::printf("PASS %s (%s) [%.2fs]\n", r.name.c_str(), r.detail.c_str(), r.seconds);
        } else {
            std::printf("FAIL %s: %s\n", r.name.c_str(), r.detail.c_str());
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

int cmd_tilings(const std::string& top, const std::string& bottom, int k, bool show,
                bool prime_only) {
    const RowSpec top_spec = RowSpec::parse(top);
    const RowSpec bottom_spec = RowSpec::parse(bottom);
    if (k < 0) throw std::domain_error("--k must be nonnegative");
    long count = 0;
    Polynomial weight;
    for (const auto& t : enumerate_row_tilings(top_spec, k)) {
        for (const auto& b : enumerate_row_tilings(bottom_spec, k)) {
            const PairTiling pair{t, b};
            if (prime_only && !is_prime(pair)) continue;
            ++count;
            weight += pair.weight();
            if (show) std::cout << render_ascii(pair) << "\n";
        }
    }
    std::cout << "count\t" << count << "\n";
    std::cout << "weight\t" << weight.str() << "\n";
    return 0;
}

int cmd_bijection(int m, int n, bool show) {
    if (show) {
        const RowSpec strip = RowSpec::fib_row('a');
        for (const auto& t : enumerate_row_tilings(strip, m)) {
            for (const auto& b : enumerate_row_tilings(strip, n + 1)) {
                const StripPair sp{t, b, m - n};
                if (!tail_switch(sp)) {
                    std::cout << "exceptional:\n" << render_ascii(sp) << "\n";
                }
            }
        }
    }
    const BijectionReport rep = lemma11_bijection_audit(m, n);
    std::cout << "matched\t" << rep.matched_weight.str() << "\n";
    std::cout << "exceptional_a\t" << rep.exceptional_a.str() << "\n";
    std::cout << "exceptional_b\t" << rep.exceptional_b.str() << "\n";
    std::cout << "PASS\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hadamard products of rational generating functions over Z[a,b], "
                 "with series and tiling oracles"};
    app.require_subcommand(1);

    std::string num = "1", den = "1";
    int order = 40;
    bool json = false;
    auto* expand = app.add_subcommand("expand", "Expand num/den as a power series in x");
    expand->add_option("--num", num, "numerator (polynomial in x)")->required();
    expand->add_option("--den", den, "denominator (constant term 1)")->required();
    expand->add_option("--order", order, "truncation order")->required();
    expand->add_flag("--json", json, "emit JSON");

    std::string lnum = "1", lden = "1", rnum = "1", rden = "1";
    bool closed = false;
    std::optional<int> series_order;
    auto* hadamard =
        app.add_subcommand("hadamard", "Hadamard product of two rational series");
    hadamard->add_option("--lnum", lnum)->required();
    hadamard->add_option("--lden", lden)->required();
    hadamard->add_option("--rnum", rnum)->required();
    hadamard->add_option("--rden", rden)->required();
    hadamard->add_flag("--closed", closed, "compute the closed form");
    hadamard->add_option("--series", series_order, "expand the product to this order");
    hadamard->add_flag("--json", json, "emit JSON");

    std::string theorem;
    std::optional<int> opt_m, opt_n;
    auto* verify = app.add_subcommand("verify", "Check closed forms against the oracles");
    verify->add_option("--theorem", theorem, "shapiro|t1|t2|t3|t4|lemma|b0|cheb|all")
        ->required();
    verify->add_option("--m", opt_m, "restrict to one m");
    verify->add_option("--n", opt_n, "restrict to one n");
    verify->add_option("--order", order, "series truncation order");

    std::string top, bottom;
    int k = 0;
    bool show = false, prime_only = false;
    auto* tilings = app.add_subcommand("tilings", "Enumerate weighted two-row tilings");
    tilings->add_option("--top", top, "top row spec, e.g. 1:a,2:1")->required();
    tilings->add_option("--bottom", bottom, "bottom row spec, e.g. 1:b,3:1,prefix=2")->required();
    tilings->add_option("--k", k, "tiling length")->required();
    tilings->add_flag("--show", show, "render each tiling");
    tilings->add_flag("--prime-only", prime_only, "keep only prime blocks");

    int bm = 1, bn = 0;
    auto* bijection = app.add_subcommand("bijection", "Audit the tail-switching bijection");
    bijection->add_option("--m", bm)->required();
    bijection->add_option("--n", bn)->required();
    bijection->add_flag("--show", show, "render the exceptional tilings");

    try {
        app.parse(argc, argv);
        if (expand->parsed()) return cmd_expand(num, den, order, json);
        if (hadamard->parsed()) {
            return cmd_hadamard(lnum, lden, rnum, rden, closed, series_order, json);
        }
        if (verify->parsed()) return cmd_verify(theorem, opt_m, opt_n, order);
        if (tilings->parsed()) return cmd_tilings(top, bottom, k, show, prime_only);
        if (bijection->parsed()) return cmd_bijection(bm, bn, show);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const gftiles::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
