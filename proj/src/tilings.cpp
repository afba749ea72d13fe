#include "gftiles/tilings.hpp"

#include "gftiles/fib.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gftiles {

RowSpec::RowSpec(std::vector<Brick> bricks, int prefix)
    : bricks_(std::move(bricks)), prefix_(prefix) {
    if (prefix_ < 0) throw std::domain_error("row prefix must be nonnegative");
    std::set<int> lens;
    for (const auto& b : bricks_) {
        if (b.length <= 0) throw std::domain_error("brick lengths must be positive");
        if (!lens.insert(b.length).second) throw std::domain_error("brick lengths must be distinct");
        if (b.weight.is_zero()) throw std::domain_error("brick weights must be nonzero");
    }
}

RowSpec RowSpec::parse(std::string_view text) {
    std::vector<Brick> bricks;
    int prefix = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        if (item.empty()) throw parse_error(start, "empty row-spec item");
        if (item.substr(0, 7) == "prefix=") {
            try {
                prefix = std::stoi(std::string(item.substr(7)));
            } catch (const std::exception&) {
                throw parse_error(start + 7, "bad prefix length");
            }
        } else {
            const std::size_t colon = item.find(':');
            if (colon == std::string_view::npos) {
                throw parse_error(start, "expected 'len:weight' in row spec");
            }
            int len = 0;
            try {
                len = std::stoi(std::string(item.substr(0, colon)));
            } catch (const std::exception&) {
                throw parse_error(start, "bad brick length");
            }
            Polynomial w = Polynomial::parse(item.substr(colon + 1));
            bricks.push_back({len, std::move(w)});
        }
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return RowSpec(std::move(bricks), prefix);
}

RowSpec RowSpec::fib_row(char var) {
    return RowSpec({{1, Polynomial::variable(var)}, {2, Polynomial::one()}});
}

RowSpec RowSpec::nblock_row(int n, char var) {
    if (n < 1) throw std::domain_error("nblock_row requires n >= 1");
    if (n == 1) return RowSpec({{1, Polynomial::one() + Polynomial::variable(var)}});
    return RowSpec({{1, Polynomial::variable(var)}, {n, Polynomial::one()}});
}

RowSpec RowSpec::mask_row(int n) {
    if (n < 1) throw std::domain_error("mask_row requires n >= 1");
    return RowSpec({{n, Polynomial::one()}});
}

int RowTiling::length() const {
    int s = 0;
    for (int b : bricks) s += b;
    return s;
}

std::vector<RowTiling> enumerate_row_tilings(const RowSpec& spec, int k) {
    if (k < 0) throw std::domain_error("row length must be nonnegative");
    std::vector<RowTiling> out;
    RowTiling cur{{}, Polynomial::one()};
    int filled = 0;
    if (spec.prefix() > 0) {
        if (spec.prefix() > k) return out;
        cur.bricks.push_back(spec.prefix());
        filled = spec.prefix();
    }
    // Depth-first over compositions in brick-list order.
    auto rec = [&](auto&& self, int len) -> void {
        if (len == k) {
            out.push_back(cur);
            return;
        }
        for (const auto& b : spec.bricks()) {
            if (len + b.length > k) continue;
            cur.bricks.push_back(b.length);
            Polynomial saved = cur.weight;
            cur.weight *= b.weight;
            self(self, len + b.length);
            cur.weight = std::move(saved);
            cur.bricks.pop_back();
        }
    };
    rec(rec, filled);
    return out;
}

namespace {

// Internal brick boundaries: proper partial sums (0 and k excluded).
std::vector<int> internal_boundaries(const RowTiling& t) {
    std::vector<int> out;
    int s = 0;
    for (std::size_t i = 0; i + 1 < t.bricks.size(); ++i) {
        s += t.bricks[i];
        out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<int> fault_positions(const PairTiling& t) {
    if (t.top.length() != t.bottom.length()) {
        throw std::domain_error("pair tiling rows must have equal length");
    }
    const auto tb = internal_boundaries(t.top);
    const auto bb = internal_boundaries(t.bottom);
    std::vector<int> out;
    std::set_intersection(tb.begin(), tb.end(), bb.begin(), bb.end(), std::back_inserter(out));
    return out;
}

bool is_prime(const PairTiling& t) { return fault_positions(t).empty(); }

namespace {

// Split off the leading bricks of a row up to absolute position pos, which
// must be a brick boundary.
std::pair<RowTiling, RowTiling> split_row(const RowTiling& t, int pos,
                                          const std::vector<Polynomial>& unit_weights) {
    RowTiling left{{}, Polynomial::one()};
    RowTiling right{{}, Polynomial::one()};
    int s = 0;
    for (int b : t.bricks) {
        if (s < pos) {
            left.bricks.push_back(b);
        } else {
            right.bricks.push_back(b);
        }
        s += b;
    }
    for (int b : left.bricks) left.weight *= unit_weights[b];
    for (int b : right.bricks) right.weight *= unit_weights[b];
    return {std::move(left), std::move(right)};
}

}  // namespace

std::vector<PairTiling> prime_factorize(const PairTiling& t) {
    const auto faults = fault_positions(t);
    std::vector<PairTiling> blocks;
    std::size_t ti = 0, bi = 0;
    int prev = 0;
    auto take = [](const RowTiling& row, std::size_t& i, int len) {
        RowTiling out{{}, Polynomial::one()};
        int s = 0;
        while (s < len) {
            out.bricks.push_back(row.bricks[i]);
            s += row.bricks[i];
            ++i;
        }
        return out;
    };
    std::vector<int> cuts = faults;
    cuts.push_back(t.length());
    for (int cut : cuts) {
        PairTiling block;
        block.top = take(t.top, ti, cut - prev);
        block.bottom = take(t.bottom, bi, cut - prev);
        blocks.push_back(std::move(block));
        prev = cut;
    }
    return blocks;
}

std::vector<PairTiling> enumerate_pair_tilings(const RowSpec& top, const RowSpec& bottom, int k) {
    const auto tops = enumerate_row_tilings(top, k);
    const auto bottoms = enumerate_row_tilings(bottom, k);
    std::vector<PairTiling> out;
    out.reserve(tops.size() * bottoms.size());
    for (const auto& t : tops) {
        for (const auto& b : bottoms) out.push_back({t, b});
    }
    return out;
}

Polynomial weighted_pair_count(const RowSpec& top, const RowSpec& bottom, int k) {
    if (k < 0) throw std::domain_error("tiling length must be nonnegative");
    Polynomial sum;
    for (const auto& t : enumerate_row_tilings(top, k)) {
        for (const auto& b : enumerate_row_tilings(bottom, k)) {
            sum += t.weight * b.weight;
        }
    }
    return sum;
}

Polynomial enumerate_prime_blocks(const RowSpec& top, const RowSpec& bottom, int k) {
    if (k < 1) throw std::domain_error("prime blocks have length >= 1");
    Polynomial sum;
    for (const auto& t : enumerate_row_tilings(top, k)) {
        const auto tb = internal_boundaries(t);
        for (const auto& b : enumerate_row_tilings(bottom, k)) {
            const auto bb = internal_boundaries(b);
            std::vector<int> faults;
            std::set_intersection(tb.begin(), tb.end(), bb.begin(), bb.end(),
                                  std::back_inserter(faults));
            if (faults.empty()) sum += t.weight * b.weight;
        }
    }
    return sum;
}

namespace {

char brick_char(int len) {
    if (len < 10) return static_cast<char>('0' + len);
    return '#';
}

// Row picture at a column offset: boundary slots at even columns, cells at
// odd columns.
std::string row_line(const RowTiling& t, int offset, int total) {
    std::string line(2 * total + 1, ' ');
    int pos = offset;
    for (std::size_t i = 0; i < t.bricks.size(); ++i) {
        line[2 * pos] = '|';
        for (int c = 0; c < t.bricks[i]; ++c) line[2 * (pos + c) + 1] = brick_char(t.bricks[i]);
        pos += t.bricks[i];
    }
    line[2 * pos] = '|';
    return line;
}

}  // namespace

std::string render_ascii(const PairTiling& t) {
    const int k = t.length();
    std::string top = row_line(t.top, 0, k);
    std::string bottom = row_line(t.bottom, 0, k);
    std::string faults(2 * k + 1, ' ');
    faults[0] = '+';
    faults[2 * k] = '+';
    for (int p : fault_positions(t)) faults[2 * p] = '+';
    return top + "\n" + bottom + "\n" + faults + "\n";
}

std::string render_ascii(const StripPair& p) {
    const int total = std::max(p.top.length(), p.indent + p.bottom.length());
    return row_line(p.top, 0, total) + "\n" + row_line(p.bottom, p.indent, total) + "\n";
}

namespace {

// Boundary positions of a strip placed at `offset`, ends included.
std::set<int> strip_boundaries(const RowTiling& t, int offset) {
    std::set<int> out{offset};
    int s = offset;
    for (int b : t.bricks) {
        s += b;
        out.insert(s);
    }
    return out;
}

Polynomial strip_weight(const std::vector<int>& bricks) {
    Polynomial w = Polynomial::one();
    const Polynomial a = Polynomial::variable('a');
    for (int b : bricks) {
        if (b == 1) w *= a;
    }
    return w;
}

void check_strip_pair(const StripPair& p) {
    if (p.indent < 0) throw std::domain_error("strip pair indent must be nonnegative");
    for (int b : p.top.bricks) {
        if (b != 1 && b != 2) throw std::domain_error("strip bricks must have length 1 or 2");
    }
    for (int b : p.bottom.bricks) {
        if (b != 1 && b != 2) throw std::domain_error("strip bricks must have length 1 or 2");
    }
    const int top_end = p.top.length();
    const int bottom_end = p.indent + p.bottom.length();
    if (std::abs(top_end - bottom_end) != 1) {
        throw std::domain_error("strip pair right edges must differ by exactly one cell");
    }
}

}  // namespace

std::optional<StripPair> tail_switch(const StripPair& p) {
    check_strip_pair(p);
    const int top_end = p.top.length();
    const int bottom_end = p.indent + p.bottom.length();
    const auto tb = strip_boundaries(p.top, 0);
    const auto bb = strip_boundaries(p.bottom, p.indent);
    const int lo = p.indent;
    const int hi = std::min(top_end, bottom_end);
    for (int pos = hi; pos >= lo; --pos) {
        if (!tb.count(pos) || !bb.count(pos)) continue;
        // Swap the two rows right of pos. Both splits are clean because pos
        // is a boundary in each row.
        std::vector<int> top_head, top_tail, bottom_head, bottom_tail;
        int s = 0;
        for (int b : p.top.bricks) {
            (s < pos ? top_head : top_tail).push_back(b);
            s += b;
        }
        s = p.indent;
        for (int b : p.bottom.bricks) {
            (s < pos ? bottom_head : bottom_tail).push_back(b);
            s += b;
        }
        StripPair out;
        out.indent = p.indent;
        out.top.bricks = std::move(top_head);
        out.top.bricks.insert(out.top.bricks.end(), bottom_tail.begin(), bottom_tail.end());
        out.bottom.bricks = std::move(bottom_head);
        out.bottom.bricks.insert(out.bottom.bricks.end(), top_tail.begin(), top_tail.end());
        out.top.weight = strip_weight(out.top.bricks);
        out.bottom.weight = strip_weight(out.bottom.bricks);
        return out;
    }
    return std::nullopt;
}

namespace {

std::string encode(const StripPair& p) {
    std::ostringstream os;
    for (int b : p.top.bricks) os << b;
    os << '/';
    for (int b : p.bottom.bricks) os << b;
    return os.str();
}

[[noreturn]] void audit_fail(const std::string& what, const StripPair& p) {
    throw std::logic_error("bijection audit failed: " + what + "\n" + render_ascii(p));
}

}  // namespace

BijectionReport lemma11_bijection_audit(int m, int n) {
    if (!(m > n && n >= 0)) throw std::domain_error("audit requires m > n >= 0");
    const RowSpec strip = RowSpec::fib_row('a');
    const int indent = m - n;

    const auto tops_a = enumerate_row_tilings(strip, m);
    const auto bottoms_a = enumerate_row_tilings(strip, n + 1);
    const auto tops_b = enumerate_row_tilings(strip, m + 1);
    const auto bottoms_b = enumerate_row_tilings(strip, n);

    BijectionReport report;
    std::set<std::string> images;

    for (const auto& t : tops_a) {
        for (const auto& bo : bottoms_a) {
            const StripPair sp{t, bo, indent};
            const Polynomial w = t.weight * bo.weight;
            const auto img = tail_switch(sp);
            if (!img) {
                report.exceptional_a += w;
                continue;
            }
            if (img->top.length() != m + 1 || img->bottom.length() != n) {
                audit_fail("image has wrong strip lengths", *img);
            }
            if (!(img->top.weight * img->bottom.weight == w)) {
                audit_fail("tail switch changed the weight", sp);
            }
            const auto back = tail_switch(*img);
            if (!back || !(*back == sp)) audit_fail("tail switch is not an involution", sp);
            if (!images.insert(encode(*img)).second) audit_fail("two elements share an image", sp);
            report.matched_weight += w;
        }
    }

    Polynomial matched_b;
    for (const auto& t : tops_b) {
        for (const auto& bo : bottoms_b) {
            const StripPair sp{t, bo, indent};
            const Polynomial w = t.weight * bo.weight;
            const auto img = tail_switch(sp);
            if (!img) {
                if (images.count(encode(sp))) audit_fail("exceptional element was hit", sp);
                report.exceptional_b += w;
                continue;
            }
            if (!images.count(encode(sp))) audit_fail("matched element was never hit", sp);
            matched_b += w;
        }
    }
    if (!(matched_b == report.matched_weight)) {
        throw std::logic_error("bijection audit failed: matched weights disagree between sides");
    }

    Polynomial expected = fib_poly(m - n - 1);
    if (std::min(m, n + 1) % 2 != 0) expected = -expected;
    if (!(report.exceptional_a - report.exceptional_b == expected)) {
        throw std::logic_error(
            "bijection audit failed: exceptional weights " + report.exceptional_a.str() +
            " - " + report.exceptional_b.str() + " != " + expected.str() +
            " for m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
    const Polynomial lemma_lhs =
        fib_poly(m) * fib_poly(n + 1) - fib_poly(m + 1) * fib_poly(n);
    if (!(lemma_lhs == expected)) {
        throw std::logic_error("bijection audit failed: polynomial identity mismatch");
    }
    return report;
}

}  // namespace gftiles
