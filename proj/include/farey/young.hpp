#pragma once

/**
 * @file young.hpp
 * @brief Ranking tables for a rational slope and the interval <-> pair bijection.
 *
 * The table of size (m, n) at slope xi ranks the mn numbers i + j*xi; for any
 * slope that is not a grid fraction with numerator <= m-1 and denominator
 * <= n-1 the table is injective and increases along rows and columns. All
 * slopes drawn from one open interval of the (m-1, n-1) Farey grid produce
 * the same table, which yields a bijection from those intervals to the
 * tables (and, after restricting to the two far corners, to terminal pairs).
 *
 * delta(m, n, xi) is the corner difference tau(m,1) - tau(1,n) as a step
 * function of the slope; its one-sided limits are evaluated exactly by
 * stepping to a mediant strictly inside the neighbouring constancy interval.
 */

#include <cstdint>
#include <vector>

#include "farey/farey.hpp"
#include "farey/rational.hpp"
#include "farey/terminal.hpp"

namespace farey {

struct RankingTable {
    std::int64_t m = 0;
    std::int64_t n = 0;
    Rational xi;
    std::vector<std::int64_t> entries;  // row j=1 first (bottom-up), each row i=1..m

    std::int64_t at(std::int64_t i, std::int64_t j) const { return entries[(j - 1) * m + (i - 1)]; }

    friend bool operator==(const RankingTable&, const RankingTable&) = default;
};

// Full table of ranks. Requires xi finite and positive and not a breakpoint
// (a value p/q with p <= m-1, q <= n-1), which is exactly the injectivity
// condition.
RankingTable ranking_table(std::int64_t m, std::int64_t n, const Rational& xi);

// Weak row/column monotonicity of an arbitrary table over [1, mn].
bool is_young(std::int64_t m, std::int64_t n, const std::vector<std::int64_t>& entries);
bool is_young(const RankingTable& table);

// Corner difference tau(m,1) - tau(1,n) in the zero-based form that needs no
// injectivity, so it is defined at breakpoints too.
std::int64_t delta(std::int64_t m, std::int64_t n, const Rational& xi);

enum class Side { left, right };

// Exact one-sided limit of delta at x: evaluates at the mediant of x and its
// strict neighbour in the (m, n) sequence, which brackets every breakpoint.
std::int64_t delta_one_sided(std::int64_t m, std::int64_t n, const Rational& x, Side side);

// (tau(m,1), tau(1,n), (m, n)) without materializing the table; O(log) via
// floor sums. The slope must be finite and positive (breakpoints allowed).
TerminalPair slope_terminal(std::int64_t m, std::int64_t n, const Rational& xi);

// Interval with indices (m-1, n-1) -> table of size (m, n), evaluated at the
// mediant of the endpoints (any interior slope gives the same table).
RankingTable suranyi_table(const FareyVertex& v);

// The terminal pair of suranyi_table(v); the vertex-level bijection between
// the interval tree and the pair tree.
TerminalPair suranyi_terminal(const FareyVertex& v);

// All pairs arising from intervals of the (m-1, n-1) grid, canonical order.
std::vector<TerminalPair> young_terminal_pairs(std::int64_t m, std::int64_t n);

// Unique interval mapping to p, via a lazily built per-size index. Throws
// std::domain_error when p arises from no interval.
FareyVertex suranyi_inverse(const TerminalPair& p);

// Parent map transported through the bijection: image of the parent interval
// of the interval of p.
TerminalPair young_parent(const TerminalPair& p);

namespace detail {

// sum_{i=0}^{count-1} floor((a*i + b) / q) for count >= 0, q >= 1, a, b >= 0.
std::int64_t floor_sum(std::int64_t count, std::int64_t q, std::int64_t a, std::int64_t b);

}  // namespace detail

}  // namespace farey
