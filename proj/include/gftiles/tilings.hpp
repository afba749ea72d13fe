#pragma once

#include "gftiles/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gftiles {

/// One brick kind for a row: a length and a weight.
struct Brick {
    int length;
    Polynomial weight;
};

/// The brick alphabet of one row, with an optional forced first brick
/// (weight 1, realizing an x^m numerator factor). Brick lengths must be
/// distinct and positive and weights nonzero.
class RowSpec {
public:
    explicit RowSpec(std::vector<Brick> bricks, int prefix = 0);

    /// Text form: comma-separated `len:weight` pairs plus optional
    /// `prefix=<len>`, e.g. `1:a,2:1` or `1:b,3:1,prefix=2`.
    static RowSpec parse(std::string_view text);

    /// {1: var, 2: 1} - the strip alphabet behind 1/(1 - var*x - x^2).
    static RowSpec fib_row(char var);
    /// Alphabet behind 1/(1 - var*x - x^n): {1: var, n: 1} for n >= 2,
    /// collapsing to the single brick {1: 1+var} for n = 1.
    static RowSpec nblock_row(int n, char var);
    /// {n: 1} - the alphabet behind 1/(1 - x^n).
    static RowSpec mask_row(int n);

    const std::vector<Brick>& bricks() const noexcept { return bricks_; }
    int prefix() const noexcept { return prefix_; }
    RowSpec with_prefix(int prefix) const { return RowSpec(bricks_, prefix); }

private:
    std::vector<Brick> bricks_;
    int prefix_;
};

/// A tiling of one row: brick lengths left to right plus the weight product.
struct RowTiling {
    std::vector<int> bricks;
    Polynomial weight;

    int length() const;
    friend bool operator==(const RowTiling& l, const RowTiling& r) {
        return l.bricks == r.bricks;
    }
};

/// Exhaustive list of row tilings of length k (compositions of k into brick
/// lengths, honoring the prefix). A prefix longer than k yields an empty
/// list. The weighted sum over the list is the x^k coefficient of the row's
/// rational generating function.
std::vector<RowTiling> enumerate_row_tilings(const RowSpec& spec, int k);

/// A two-row tiling of a 2 x k rectangle.
struct PairTiling {
    RowTiling top;
    RowTiling bottom;

    int length() const { return top.length(); }
    Polynomial weight() const { return top.weight * bottom.weight; }
};

/// Positions 0 < p < k that are brick boundaries in both rows.
std::vector<int> fault_positions(const PairTiling& t);

/// A prime block has no internal fault line.
bool is_prime(const PairTiling& t);

/// Cut at every fault line; the blocks concatenate back to the input and
/// each is prime (the unique prime-block factorization).
std::vector<PairTiling> prime_factorize(const PairTiling& t);

std::vector<PairTiling> enumerate_pair_tilings(const RowSpec& top, const RowSpec& bottom, int k);

/// Weighted count of all pair tilings of length k: the x^k coefficient of
/// the Hadamard product of the two row generating functions.
Polynomial weighted_pair_count(const RowSpec& top, const RowSpec& bottom, int k);

/// Weighted count of the prime pair tilings of length k >= 1: the x^k
/// coefficient of the prime-block generating function.
Polynomial enumerate_prime_blocks(const RowSpec& top, const RowSpec& bottom, int k);

/// ASCII picture of a pair tiling: one character column per unit cell,
/// `|` at brick boundaries, rows on two lines, fault lines marked with `+`
/// on a third line.
std::string render_ascii(const PairTiling& t);

/// Two strips of square (weight a) and domino (weight 1) bricks, the bottom
/// one indented; their right edges differ by exactly one cell. This is the
/// carrier of the tail-switching involution.
struct StripPair {
    RowTiling top;
    RowTiling bottom;
    int indent;

    friend bool operator==(const StripPair& l, const StripPair& r) {
        return l.top == r.top && l.bottom == r.bottom && l.indent == r.indent;
    }
};

/// Tail switch: find the rightmost position within the overlap (strip ends
/// included) that is a brick boundary in both rows, and swap everything to
/// its right between the rows. Returns nullopt for the exceptional
/// staggered-domino tilings that admit no such position. An involution off
/// the exceptional set; a geometrically malformed pair is a domain error.
std::optional<StripPair> tail_switch(const StripPair& p);

std::string render_ascii(const StripPair& p);

/// Outcome of auditing the tail-switching bijection for strips (m, n+1)
/// versus (m+1, n).
struct BijectionReport {
    Polynomial matched_weight;   ///< total weight paired up on each side
    Polynomial exceptional_a;    ///< unmatched weight among (m, n+1) pairs
    Polynomial exceptional_b;    ///< unmatched weight among (m+1, n) pairs
};

/// Exhaustively enumerate both sides for m > n >= 0, drive tail_switch over
/// every element, and verify: weight preservation, the involution property,
/// bijectivity onto the non-exceptional elements, and
///   exceptional_a - exceptional_b == (-1)^{min(m, n+1)} f_{m-n-1}.
/// Any violation throws with a counterexample dump; the audit is itself a
/// test.
BijectionReport lemma11_bijection_audit(int m, int n);

}  // namespace gftiles
