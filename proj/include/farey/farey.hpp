#pragma once

/**
 * @file farey.hpp
 * @brief Generalized Farey sequences and their tagged open intervals.
 *
 * For indices (m, n) the sequence holds 0, infinity and every reduced p/q
 * with p in [1, m] and q in [1, n]. The open gaps between adjacent terms,
 * tagged with (m, n), are the vertices of the interval tree: each one has a
 * unique parent one index-sum below it and at most two children above it
 * (one growing m, one growing n).
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

struct FareySequence {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::vector<Rational> terms;  // strictly increasing, first 0, last infinity
};

// Open interval (a, b) between adjacent terms of the (m, n) sequence.
struct FareyVertex {
    Rational a;
    Rational b;
    std::int64_t m = 0;
    std::int64_t n = 0;

    friend bool operator==(const FareyVertex&, const FareyVertex&) = default;
};

struct FareyChildren {
    std::optional<FareyVertex> horizontal;  // indices (m+1, n), keeps the left endpoint
    std::optional<FareyVertex> vertical;    // indices (m, n+1), keeps the right endpoint
};

// (m, n, a, b) lexicographic; the order used inside tree levels.
bool canonical_less(const FareyVertex& x, const FareyVertex& y);

std::string label(const FareyVertex& v);  // "((0/1,1/2),(3,2))"

FareySequence farey_sequence(std::int64_t m, std::int64_t n);
std::vector<FareyVertex> farey_intervals(std::int64_t m, std::int64_t n);

// True iff (a, b) is an open gap between adjacent terms of the (m, n) sequence.
bool is_valid_interval(const FareyVertex& v);

// Parent of v among the intervals with index sum m + n - 1. Rejects the root.
FareyVertex parent_interval(const FareyVertex& v);

FareyChildren interval_children(const FareyVertex& v);

// ((a, b), (m, n)) -> ((1/b, 1/a), (n, m)); an involution.
FareyVertex transpose(const FareyVertex& v);

namespace detail {

// Shared, thread-safe cache of sequence terms.
std::shared_ptr<const std::vector<Rational>> sequence_terms(std::int64_t m, std::int64_t n);

std::vector<Rational> build_sequence(std::int64_t m, std::int64_t n);

// Parent computation against caller-supplied parent-sequence terms
// (grid_h = terms of (m-1, n), grid_v = terms of (m, n-1)). The public
// parent_interval wraps this with the cache; the tree verifier feeds it
// per-level pools instead.
FareyVertex parent_interval_using(const FareyVertex& v, std::span<const Rational> grid_h,
                                  std::span<const Rational> grid_v);

}  // namespace detail

}  // namespace farey
