#pragma once

/**
 * @file terminal.hpp
 * @brief Injective L-shapes of difference-equation type and their terminal pairs.
 *
 * An L-shape is the bottom row and left column of an m-by-n table with values
 * in [1, mn]. The difference condition ties each increment along one arm to a
 * count of values on the other arm; together with injectivity and a 1 in the
 * shared corner, such a shape is fully reconstructible from the pair
 * (bottom[m], left[n]). The pairs grow by a two-line recursion (add n to s,
 * or add m to t) and shrink by the inverse step, which is what decompress
 * walks to rebuild the arrays.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace farey {

struct TerminalPair {
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;

    friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

struct PairChildren {
    std::optional<TerminalPair> horizontal;  // (s + n, t, (m+1, n)) when s - t > -n
    std::optional<TerminalPair> vertical;    // (s, t + m, (m, n+1)) when s - t < m
};

struct LShape {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> bottom;  // values at (1,1) .. (m,1)
    std::vector<std::int64_t> left;    // values at (1,1) .. (1,n); left[0] == bottom[0]

    friend bool operator==(const LShape&, const LShape&) = default;
};

// (m, n, s, t) lexicographic; the order used inside tree levels.
bool canonical_less(const TerminalPair& x, const TerminalPair& y);

std::string label(const TerminalPair& p);  // "(7,6,(4,3))"

// The two difference equations plus an injectivity precheck. Malformed input
// (bad lengths, out-of-range values, mismatched corner) throws instead of
// returning false.
bool is_difference_type(const LShape& shape);

// Parent of p one index-sum below. Rejects the root and ties (s == t).
TerminalPair parent_pair(const TerminalPair& p);

PairChildren pair_children(const TerminalPair& p);

// (s, t, (m, n)) -> (t, s, (n, m)); an involution.
TerminalPair transpose(const TerminalPair& p);

// Rebuilds the unique L-shape whose terminal pair is p by walking parents up
// to the root, collecting one newly revealed value per step. Throws
// std::domain_error when the walk leaves the valid range or hits a tie, i.e.
// when p is not reachable from the root.
LShape decompress(const TerminalPair& p);

// (bottom[m], left[n], (m, n)) of a structurally valid shape.
TerminalPair lshape_terminal(const LShape& shape);

// Exhaustive search for all injective L-shapes of difference-equation type
// with a 1 in the corner, in canonical order. Values are placed in increasing
// order, which makes each difference equation checkable the moment its value
// is chosen. Guarded by m + n <= guard.
std::vector<LShape> enumerate_difference_lshapes(std::int64_t m, std::int64_t n, std::int64_t guard = 9);

}  // namespace farey
