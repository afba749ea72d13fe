#include "gftiles/tilings.hpp"

#include "gftiles/closedform.hpp"
#include "gftiles/fib.hpp"
#include "gftiles/series.hpp"

#include "doctest.h"

#include <map>
#include <set>

using namespace gftiles;

TEST_SUITE_BEGIN("tilings");

TEST_CASE("row spec validation and parsing") {
    CHECK_THROWS_AS(RowSpec({{1, Polynomial::one()}, {1, Polynomial::variable('a')}}),
                    std::domain_error);
    CHECK_THROWS_AS(RowSpec({{0, Polynomial::one()}}), std::domain_error);
    CHECK_THROWS_AS(RowSpec({{2, Polynomial{}}}), std::domain_error);

    const RowSpec spec = RowSpec::parse("1:b,3:1,prefix=2");
    CHECK(spec.bricks().size() == 2);
    CHECK(spec.prefix() == 2);
    CHECK(spec.bricks()[0].length == 1);
    CHECK(spec.bricks()[0].weight == Polynomial::variable('b'));
    CHECK(spec.bricks()[1].length == 3);
    CHECK_THROWS_AS(RowSpec::parse("1"), parse_error);
    CHECK_THROWS_AS(RowSpec::parse("1:a,,2:1"), parse_error);
}

TEST_CASE("row tilings of the strip") {
    const RowSpec strip = RowSpec::fib_row('a');
    const auto t3 = enumerate_row_tilings(strip, 3);
    REQUIRE(t3.size() == 3);  // [1,1,1], [1,2], [2,1]
    Polynomial sum;
    for (const auto& t : t3) sum += t.weight;
    CHECK(sum == fib_poly(3));

    const auto t0 = enumerate_row_tilings(strip, 0);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].bricks.empty());
    CHECK(t0[0].weight.is_one());

    const auto b3 = enumerate_row_tilings(RowSpec::nblock_row(3, 'b'), 3);
    REQUIRE(b3.size() == 2);  // [1,1,1] and [3]
    Polynomial bsum;
    for (const auto& t : b3) bsum += t.weight;
    CHECK(bsum == Polynomial::parse("b^3 + 1"));

    CHECK(enumerate_row_tilings(strip.with_prefix(4), 3).empty());
    CHECK_THROWS_AS(enumerate_row_tilings(strip, -1), std::domain_error);
}

TEST_CASE("row tilings match the generating function coefficients") {
    for (int n = 1; n <= 4; ++n) {
        const RowSpec spec = RowSpec::nblock_row(n, 'b');
        const std::string den =
            n == 1 ? "1 - b*x - x" : "1 - b*x - x^" + std::to_string(n);
        const SeriesTrunc s = expand_rational(RationalGF::from_text("1", den), 10);
        for (int k = 0; k <= 10; ++k) {
            Polynomial sum;
            for (const auto& t : enumerate_row_tilings(spec, k)) sum += t.weight;
            CHECK(sum == s.coeff(k));
        }
    }
}

TEST_CASE("weighted pair counts") {
    const RowSpec top = RowSpec::fib_row('a');
    const RowSpec bottom = RowSpec::fib_row('b');
    CHECK(weighted_pair_count(top, bottom, 2) ==
          Polynomial::parse("1 + a^2 + b^2 + a^2*b^2"));
    CHECK(weighted_pair_count(top, bottom, 0).is_one());
    CHECK(weighted_pair_count(top, bottom.with_prefix(2), 1).is_zero());
}

TEST_CASE("pair counts match the closed forms") {
    const RowSpec top = RowSpec::fib_row('a');
    for (int n = 1; n <= 5; ++n) {
        const RowSpec bottom = RowSpec::nblock_row(n, 'b');
        const SeriesTrunc s = expand_rational(nblock_product(n), 12);
        for (int k = 0; k <= 12; ++k) {
            CHECK(weighted_pair_count(top, bottom, k) == s.coeff(k));
        }
    }
    // Bottom prefix m against the prefixed product.
    for (int m = 1; m <= 4; ++m) {
        for (int n = 2; n <= 4; ++n) {
            const RowSpec bottom = RowSpec::nblock_row(n, 'b').with_prefix(m);
            const SeriesTrunc s = expand_rational(shifted_nblock_product(m, n), 10);
            for (int k = 0; k <= 10; ++k) {
                CHECK(weighted_pair_count(top, bottom, k) == s.coeff(k));
            }
        }
    }
    // Top prefix m with an all-domino bottom against the masked product.
    for (int m = 1; m <= 6; ++m) {
        for (int n = 2; n <= 4; ++n) {
            const RowSpec ptop = RowSpec::fib_row('a').with_prefix(m);
            const RowSpec bottom = RowSpec::mask_row(n);
            const SeriesTrunc s = expand_rational(masked_fib_product(m, n), 10);
            for (int k = 0; k <= 10; ++k) {
                CHECK(weighted_pair_count(ptop, bottom, k) == s.coeff(k));
            }
        }
    }
}

TEST_CASE("fault lines and primality") {
    // top [1,2] vs bottom [2,1]: boundaries {1} and {2} are disjoint.
    PairTiling t{{{1, 2}, fib_poly(1)}, {{2, 1}, fib_poly(1, 'b')}};
    CHECK(fault_positions(t).empty());
    CHECK(is_prime(t));
    CHECK(prime_factorize(t).size() == 1);

    PairTiling u{{{1, 1}, Polynomial::one()}, {{1, 1}, Polynomial::one()}};
    CHECK(fault_positions(u) == std::vector<int>{1});
    CHECK_FALSE(is_prime(u));
    CHECK(prime_factorize(u).size() == 2);
}

TEST_CASE("the 2x19 factorization figure") {
    // The worked two-row example: its seven blocks have lengths
    // 1, 2, 3, 2, 5, 5, 1 and fault lines at 1, 3, 6, 8, 13, 18.
    PairTiling t;
    t.top.bricks = {1, 2, 1, 2, 1, 1, 1, 2, 2, 2, 2, 1, 1};
    t.bottom.bricks = {1, 1, 1, 2, 1, 2, 2, 2, 1, 1, 2, 2, 1};
    REQUIRE(t.top.length() == 19);
    REQUIRE(t.bottom.length() == 19);
    CHECK(fault_positions(t) == std::vector<int>{1, 3, 6, 8, 13, 18});
    const auto blocks = prime_factorize(t);
    REQUIRE(blocks.size() == 7);
    const int want_len[7] = {1, 2, 3, 2, 5, 5, 1};
    int pos = 0;
    std::vector<int> top_cat, bottom_cat;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        CHECK(blocks[i].length() == want_len[i]);
        CHECK(is_prime(blocks[i]));
        for (int b : blocks[i].top.bricks) top_cat.push_back(b);
        for (int b : blocks[i].bottom.bricks) bottom_cat.push_back(b);
        pos += blocks[i].length();
    }
    CHECK(pos == 19);
    CHECK(top_cat == t.top.bricks);
    CHECK(bottom_cat == t.bottom.bricks);
}

TEST_CASE("unique factorization into prime blocks") {
    const RowSpec top = RowSpec::fib_row('a');
    const RowSpec bottom = RowSpec::fib_row('b');
    for (int k = 1; k <= 9; ++k) {
        const auto all = enumerate_pair_tilings(top, bottom, k);
        // Factorize each tiling; blocks must be prime and concatenate back.
        std::multiset<std::string> factored;
        for (const auto& t : all) {
            const auto blocks = prime_factorize(t);
            std::string key;
            int len = 0;
            for (const auto& b : blocks) {
                CHECK(is_prime(b));
                len += b.length();
                key += render_ascii(b);
            }
            CHECK(len == k);
            factored.insert(key);
        }
        // Rebuild every sequence of prime blocks of total length k; the
        // multiset of concatenations must hit every tiling exactly once.
        std::map<int, std::vector<PairTiling>> primes;
        for (int l = 1; l <= k; ++l) {
            for (const auto& t : enumerate_pair_tilings(top, bottom, l)) {
                if (is_prime(t)) primes[l].push_back(t);
            }
        }
        std::multiset<std::string> rebuilt;
        std::vector<const PairTiling*> seq;
        auto rec = [&](auto&& self, int rem) -> void {
            if (rem == 0) {
                std::string key;
                for (const auto* b : seq) key += render_ascii(*b);
                rebuilt.insert(key);
                return;
            }
            for (int l = 1; l <= rem; ++l) {
                for (const auto& b : primes[l]) {
                    seq.push_back(&b);
                    self(self, rem - l);
                    seq.pop_back();
                }
            }
        };
        rec(rec, k);
        CHECK(rebuilt == factored);
        CHECK(rebuilt.size() == all.size());
    }
}

TEST_CASE("prime block enumeration matches the generating function") {
    const RowSpec top = RowSpec::fib_row('a');
    const RowSpec b2 = RowSpec::nblock_row(2, 'b');
    CHECK(enumerate_prime_blocks(top, b2, 1) == Polynomial::parse("a*b"));
    CHECK(enumerate_prime_blocks(top, b2, 2) == Polynomial::parse("1 + a^2 + b^2"));
    CHECK(enumerate_prime_blocks(top, b2, 3) == Polynomial::parse("2*a*b"));
    const RowSpec b3 = RowSpec::nblock_row(3, 'b');
    CHECK(enumerate_prime_blocks(top, b3, 3) == fib_poly(3));
    CHECK_THROWS_AS(enumerate_prime_blocks(top, b2, 0), std::domain_error);
}

TEST_CASE("ascii rendering") {
    PairTiling t{{{1, 2}, fib_poly(1)}, {{2, 1}, fib_poly(1, 'b')}};
    CHECK(render_ascii(t) == "|1|2 2|\n|2 2|1|\n+     +\n");
    PairTiling u{{{1, 1}, Polynomial::one()}, {{2}, Polynomial::one()}};
    CHECK(render_ascii(u) == "|1|1|\n|2 2|\n+   +\n");
}

TEST_CASE("tail switch on a hand example") {
    // A-element for (m,n) = (2,1): top [2], bottom [1,1] indented 1.
    StripPair sp{{{2}, Polynomial::one()},
                 {{1, 1}, fib_poly(1) * fib_poly(1)},
                 1};
    const auto img = tail_switch(sp);
    REQUIRE(img.has_value());
    CHECK(img->top.bricks == std::vector<int>{2, 1});
    CHECK(img->bottom.bricks == std::vector<int>{1});
    CHECK(img->indent == 1);
    // Involution: switching the image returns the original.
    const auto back = tail_switch(*img);
    REQUIRE(back.has_value());
    CHECK(*back == sp);

    // The staggered all-domino A-element has no switch line.
    StripPair stag{{{2}, Polynomial::one()}, {{2}, Polynomial::one()}, 1};
    CHECK_FALSE(tail_switch(stag).has_value());

    // Geometric invariant: right edges must differ by exactly one.
    StripPair bad{{{2}, Polynomial::one()}, {{2}, Polynomial::one()}, 0};
    CHECK_THROWS_AS(tail_switch(bad), std::domain_error);
}

TEST_CASE("trailing squares swap back and forth") {
    // A-element for (m,n) = (3,1) whose final columns are square-over-square:
    // the switch moves the trailing squares and a second application undoes it.
    StripPair sp{{{2, 1}, fib_poly(1)}, {{1, 1}, fib_poly(1) * fib_poly(1)}, 2};
    const auto img = tail_switch(sp);
    REQUIRE(img.has_value());
    CHECK(img->top.length() == 4);
    CHECK(img->bottom.length() == 1);
    const auto back = tail_switch(*img);
    REQUIRE(back.has_value());
    CHECK(*back == sp);
}

TEST_CASE("bijection audit small cases") {
    // m=2, n=1 (odd n): the exceptional weight sits on the A side, f_0 = 1.
    const BijectionReport r21 = lemma11_bijection_audit(2, 1);
    CHECK(r21.exceptional_a.is_one());
    CHECK(r21.exceptional_b.is_zero());
    // m=3, n=2 (even n): the exceptional weight sits on the B side.
    const BijectionReport r32 = lemma11_bijection_audit(3, 2);
    CHECK(r32.exceptional_a.is_zero());
    CHECK(r32.exceptional_b.is_one());
    // m=4, n=3: Cassini shape, difference +f_0.
    const BijectionReport r43 = lemma11_bijection_audit(4, 3);
    CHECK(r43.exceptional_a - r43.exceptional_b == Polynomial::one());
    // m=3, n=1: exceptional weight f_{m-n-1} = f_1 = a.
    const BijectionReport r31 = lemma11_bijection_audit(3, 1);
    CHECK(r31.exceptional_a == fib_poly(1));
    CHECK_THROWS_AS(lemma11_bijection_audit(2, 2), std::domain_error);
}

TEST_CASE("exceptional elements have the staggered-domino shape") {
    for (int m = 2; m <= 7; ++m) {
        for (int n = 0; n < m; ++n) {
            const RowSpec strip = RowSpec::fib_row('a');
            const int indent = m - n;
            for (const auto& t : enumerate_row_tilings(strip, m)) {
                for (const auto& b : enumerate_row_tilings(strip, n + 1)) {
                    const StripPair sp{t, b, indent};
                    if (tail_switch(sp)) continue;
                    // Bottom is all dominoes, and the top is all dominoes
                    // from position m-n-1 on.
                    for (int br : sp.bottom.bricks) CHECK(br == 2);
                    int pos = 0;
                    for (int br : sp.top.bricks) {
                        if (pos >= m - n - 1) CHECK(br == 2);
                        pos += br;
                    }
                }
            }
        }
    }
}

TEST_CASE("bijection audit, full range with n=0 included") {
    for (int m = 1; m <= 10; ++m) {
        for (int n = 0; n < m; ++n) {
            const BijectionReport rep = lemma11_bijection_audit(m, n);
            Polynomial expected = fib_poly(m - n - 1);
            if (std::min(m, n + 1) % 2 != 0) expected = -expected;
            CHECK(rep.exceptional_a - rep.exceptional_b == expected);
        }
    }
}

TEST_SUITE_END();
