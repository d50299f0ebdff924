#pragma once

/**
 * @file tree.hpp
 * @brief Level-synchronous construction, verification and export of the
 *        three rooted binary trees.
 *
 * The interval tree grows by the closed-form children rule, the pair tree by
 * the two-line recursion, and the Young tree is the image of the interval
 * tree under the slope bijection. Levels are kept canonically sorted, which
 * makes every build byte-deterministic regardless of threading.
 *
 * Expansion of a level is data-parallel per target (m, n) block: each block
 * is an ordered two-way merge of the horizontal children of one source block
 * and the vertical children of another. A naive append-then-sort serial
 * expander is kept as a reference implementation for tests and benchmarks.
 *
 * Verification walks adjacent level pairs only, so the streaming mode holds
 * two levels (plus one row of sequence pools) at a time and scales to
 * heights far beyond what fits in memory as a whole tree.
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "farey/farey.hpp"
#include "farey/terminal.hpp"

namespace farey {

enum class TreeKind { farey, terminal, young };

std::string to_string(TreeKind kind);
TreeKind tree_kind_from_string(const std::string& text);

struct FareyTree {
    std::int64_t height = 0;
    std::vector<std::vector<FareyVertex>> levels;       // levels[k] canonically sorted
    std::vector<std::vector<std::int64_t>> parents;     // parents[k][i] indexes levels[k-1]; parents[0] empty

    friend bool operator==(const FareyTree&, const FareyTree&) = default;
};

struct PairTree {
    TreeKind kind = TreeKind::terminal;  // terminal or young
    std::int64_t height = 0;
    std::vector<std::vector<TerminalPair>> levels;
    std::vector<std::vector<std::int64_t>> parents;

    friend bool operator==(const PairTree&, const PairTree&) = default;
};

struct BuildOptions {
    bool parallel = true;
    std::int64_t max_vertices = 1'000'000'000;  // cumulative resource guard
};

struct BlockCount {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t count = 0;

    friend bool operator==(const BlockCount&, const BlockCount&) = default;
};

struct LevelStats {
    std::int64_t level = 0;
    std::vector<BlockCount> blocks;
};

struct VerifyOptions {
    bool streaming = false;   // keep only adjacent levels instead of whole trees
    bool parallel = true;
    std::int64_t max_vertices = 1'000'000'000;
    std::int64_t enumeration_guard = 9;  // cap on m + n for exhaustive searches
    bool collect_stats = true;
};

struct VerificationReport {
    std::string mode;
    std::int64_t height = 0;
    bool pass = false;
    std::string counterexample;  // empty iff pass
    std::int64_t total_vertices = 0;
    std::vector<LevelStats> levels;

    // Largest height for which this equivalence has previously been
    // machine-checked; the identity itself holds at every height.
    static constexpr std::int64_t precedent_height = 1000;
};

FareyTree build_farey_tree(std::int64_t height, const BuildOptions& options = {});
PairTree build_terminal_tree(std::int64_t height, const BuildOptions& options = {});
PairTree build_young_tree(std::int64_t height, const BuildOptions& options = {});

// Per level k: the Young level equals the pair level as a set, and the
// transported parent map agrees with the recursion's parent map, with the
// interval parent recomputed from scratch (four-case rule with binary
// searches) and cross-checked against the generating children rule.
VerificationReport verify_theorem1(std::int64_t height, const VerifyOptions& options = {});

// Per level k: the slope bijection maps the interval level one-to-one onto
// the pair level and maps every parent edge to a parent edge.
VerificationReport verify_isomorphism(std::int64_t height, const VerifyOptions& options = {});

// For every size with m + n <= max_mn_sum: the exhaustively enumerated
// L-shapes, compressed to pairs, equal the pairs arising from intervals, and
// both count one less than the (m-1, n-1) sequence length.
VerificationReport verify_corollary2(std::int64_t max_mn_sum, const VerifyOptions& options = {});

std::string export_json(const FareyTree& tree);
std::string export_json(const PairTree& tree);
std::string export_dot(const FareyTree& tree);
std::string export_dot(const PairTree& tree);

std::variant<FareyTree, PairTree> parse_tree_json(const std::string& text);

namespace detail {

// Sorted-level expanders. The block-merge expander is the parallel kernel;
// the reference expander appends then sorts and exists to pin the kernel's
// output in tests and to compare in benchmarks.
void expand_pair_level(const std::vector<TerminalPair>& level, std::vector<TerminalPair>& next,
                       std::vector<std::int64_t>& parent, bool parallel);
void expand_pair_level_reference(const std::vector<TerminalPair>& level, std::vector<TerminalPair>& next,
                                 std::vector<std::int64_t>& parent);
void expand_farey_level(const std::vector<FareyVertex>& level, std::vector<FareyVertex>& next,
                        std::vector<std::int64_t>& parent, bool parallel);
void expand_farey_level_reference(const std::vector<FareyVertex>& level, std::vector<FareyVertex>& next,
                                  std::vector<std::int64_t>& parent);

// Young level as the image of an interval level; to_farey[i] is the index in
// `level` of the interval mapping to young[i].
void young_level_from_farey(const std::vector<FareyVertex>& level, std::vector<TerminalPair>& young,
                            std::vector<std::int64_t>& to_farey, bool parallel);
void young_level_from_farey_reference(const std::vector<FareyVertex>& level, std::vector<TerminalPair>& young,
                                      std::vector<std::int64_t>& to_farey);

}  // namespace detail

}  // namespace farey
