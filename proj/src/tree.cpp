#include "farey/tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "farey/young.hpp"
#include "json.hpp"

namespace farey {

std::string to_string(TreeKind kind) {
    switch (kind) {
        case TreeKind::farey: return "farey";
        case TreeKind::terminal: return "terminal";
        case TreeKind::young: return "young";
    }
    throw std::invalid_argument("unknown tree kind");
}

TreeKind tree_kind_from_string(const std::string& text) {
    if (text == "farey") return TreeKind::farey;
    if (text == "terminal") return TreeKind::terminal;
    if (text == "young") return TreeKind::young;
    throw std::invalid_argument("unknown tree kind \"" + text + "\"");
}

namespace {

std::int64_t index_m(const TerminalPair& p) { return p.m; }
std::int64_t index_n(const TerminalPair& p) { return p.n; }
std::int64_t index_m(const FareyVertex& v) { return v.m; }
std::int64_t index_n(const FareyVertex& v) { return v.n; }

bool payload_less(const TerminalPair& x, const TerminalPair& y) { return x.s != y.s ? x.s < y.s : x.t < y.t; }
bool payload_less(const FareyVertex& x, const FareyVertex& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; }

std::optional<TerminalPair> horizontal_child(const TerminalPair& p) { return pair_children(p).horizontal; }
std::optional<TerminalPair> vertical_child(const TerminalPair& p) { return pair_children(p).vertical; }
std::optional<FareyVertex> horizontal_child(const FareyVertex& v) { return interval_children(v).horizontal; }
std::optional<FareyVertex> vertical_child(const FareyVertex& v) { return interval_children(v).vertical; }

struct Span {
    std::int64_t begin = 0;
    std::int64_t end = 0;
    bool empty() const { return begin >= end; }
};

// Level buffers are recycled across levels of slowly growing size; a slack
// reserve keeps reallocation (and the resulting heap holes) rare.
template <class T>
void reserve_slack(std::vector<T>& buffer, std::size_t need) {
    if (buffer.capacity() < need) buffer.reserve(need + need / 4 + 16);
}

// Contiguous (m, n) runs of a canonically sorted level.
template <class V>
std::vector<Span> level_blocks(const std::vector<V>& level) {
    std::vector<Span> blocks;
    std::int64_t i = 0;
    const std::int64_t size = std::ssize(level);
    while (i < size) {
        std::int64_t j = i + 1;
        while (j < size && index_m(level[j]) == index_m(level[i]) && index_n(level[j]) == index_n(level[i])) ++j;
        blocks.push_back({i, j});
        i = j;
    }
    return blocks;
}

template <class V>
Span find_block(const std::vector<V>& level, const std::vector<Span>& blocks, std::int64_t m, std::int64_t n) {
    for (const Span& b : blocks)
        if (index_m(level[b.begin]) == m && index_n(level[b.begin]) == n) return b;
    return Span{};
}

// Ordered merge of the horizontal children of one source block and the
// vertical children of another. Children inherit their source's order, so
// each stream is already sorted and the whole target block comes out sorted.
template <class V>
struct MergeTask {
    Span horizontal_src;
    Span vertical_src;
};

template <class V>
std::int64_t count_children(const std::vector<V>& level, const MergeTask<V>& task) {
    std::int64_t count = 0;
    for (std::int64_t i = task.horizontal_src.begin; i < task.horizontal_src.end; ++i)
        count += horizontal_child(level[i]).has_value();
    for (std::int64_t i = task.vertical_src.begin; i < task.vertical_src.end; ++i)
        count += vertical_child(level[i]).has_value();
    return count;
}

template <class V>
void merge_children(const std::vector<V>& level, const MergeTask<V>& task, V* out, std::int64_t* parent) {
    std::int64_t ih = task.horizontal_src.begin;
    std::int64_t iv = task.vertical_src.begin;
    std::optional<V> h;
    std::optional<V> v;
    const auto advance_h = [&] {
        h.reset();
        for (; ih < task.horizontal_src.end && !h; ++ih) h = horizontal_child(level[ih]);
    };
    const auto advance_v = [&] {
        v.reset();
        for (; iv < task.vertical_src.end && !v; ++iv) v = vertical_child(level[iv]);
    };
    advance_h();
    advance_v();
    while (h || v) {
        if (h && (!v || payload_less(*h, *v))) {
            *out++ = *h;
            *parent++ = ih - 1;
            advance_h();
        } else {
            *out++ = *v;
            *parent++ = iv - 1;
            advance_v();
        }
    }
}

template <class V>
void expand_level_impl(const std::vector<V>& level, std::vector<V>& next, std::vector<std::int64_t>& parent,
                       bool parallel) {
    next.clear();
    parent.clear();
    if (level.empty()) return;

    const auto blocks = level_blocks(level);
    const std::int64_t sum = index_m(level[0]) + index_n(level[0]);
    const std::int64_t base = index_m(level[0]) == 0 || index_n(level[0]) == 0 ? 0 : 1;  // smallest index value

    std::vector<MergeTask<V>> tasks;
    for (std::int64_t m = base; m + base <= sum + 1; ++m) {
        const std::int64_t n = sum + 1 - m;
        MergeTask<V> task;
        if (m - 1 >= base) task.horizontal_src = find_block(level, blocks, m - 1, n);
        if (n - 1 >= base) task.vertical_src = find_block(level, blocks, m, n - 1);
        tasks.push_back(task);
    }
    const std::int64_t task_count = std::ssize(tasks);

    std::vector<std::int64_t> offsets(task_count + 1, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < task_count; ++i) offsets[i + 1] = count_children(level, tasks[i]);
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

    reserve_slack(next, offsets[task_count]);
    reserve_slack(parent, offsets[task_count]);
    next.resize(offsets[task_count]);
    parent.resize(offsets[task_count]);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < task_count; ++i)
        merge_children(level, tasks[i], next.data() + offsets[i], parent.data() + offsets[i]);
}

template <class V>
void expand_level_reference_impl(const std::vector<V>& level, std::vector<V>& next,
                                 std::vector<std::int64_t>& parent) {
    std::vector<std::pair<V, std::int64_t>> kids;
    for (std::int64_t i = 0; i < std::ssize(level); ++i) {
        if (const auto h = horizontal_child(level[i])) kids.emplace_back(*h, i);
        if (const auto v = vertical_child(level[i])) kids.emplace_back(*v, i);
    }
    std::sort(kids.begin(), kids.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    next.clear();
    parent.clear();
    next.reserve(kids.size());
    parent.reserve(kids.size());
    for (auto& [child, src] : kids) {
        next.push_back(child);
        parent.push_back(src);
    }
}

}  // namespace

namespace detail {

void expand_pair_level(const std::vector<TerminalPair>& level, std::vector<TerminalPair>& next,
                       std::vector<std::int64_t>& parent, bool parallel) {
    expand_level_impl(level, next, parent, parallel);
}

void expand_pair_level_reference(const std::vector<TerminalPair>& level, std::vector<TerminalPair>& next,
                                 std::vector<std::int64_t>& parent) {
    expand_level_reference_impl(level, next, parent);
}

void expand_farey_level(const std::vector<FareyVertex>& level, std::vector<FareyVertex>& next,
                        std::vector<std::int64_t>& parent, bool parallel) {
    expand_level_impl(level, next, parent, parallel);
}

void expand_farey_level_reference(const std::vector<FareyVertex>& level, std::vector<FareyVertex>& next,
                                  std::vector<std::int64_t>& parent) {
    expand_level_reference_impl(level, next, parent);
}

void young_level_from_farey(const std::vector<FareyVertex>& level, std::vector<TerminalPair>& young,
                            std::vector<std::int64_t>& to_farey, bool parallel) {
    const auto blocks = level_blocks(level);
    const std::int64_t block_count = std::ssize(blocks);
    reserve_slack(young, level.size());
    reserve_slack(to_farey, level.size());
    young.resize(level.size());
    to_farey.resize(level.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t b = 0; b < block_count; ++b) {
        std::vector<std::pair<TerminalPair, std::int64_t>> buf;
        buf.reserve(blocks[b].end - blocks[b].begin);
        for (std::int64_t i = blocks[b].begin; i < blocks[b].end; ++i)
            buf.emplace_back(suranyi_terminal(level[i]), i);
        std::sort(buf.begin(), buf.end(),
                  [](const auto& x, const auto& y) { return payload_less(x.first, y.first); });
        for (std::int64_t j = 0; j < std::ssize(buf); ++j) {
            young[blocks[b].begin + j] = buf[j].first;
            to_farey[blocks[b].begin + j] = buf[j].second;
        }
    }
}

void young_level_from_farey_reference(const std::vector<FareyVertex>& level, std::vector<TerminalPair>& young,
                                      std::vector<std::int64_t>& to_farey) {
    std::vector<std::pair<TerminalPair, std::int64_t>> buf;
    for (std::int64_t i = 0; i < std::ssize(level); ++i) buf.emplace_back(suranyi_terminal(level[i]), i);
    std::sort(buf.begin(), buf.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    young.clear();
    to_farey.clear();
    for (auto& [pair, src] : buf) {
        young.push_back(pair);
        to_farey.push_back(src);
    }
}

}  // namespace detail

namespace {

constexpr std::int64_t kSpotValidationLevels = 12;

FareyVertex farey_root() { return {Rational::zero(), Rational::infinity(), 0, 0}; }

void check_budget(std::int64_t total, std::int64_t budget) {
    if (total > budget)
        throw std::runtime_error("vertex budget exceeded (" + std::to_string(total) + " > " +
                                 std::to_string(budget) + "); raise the budget to proceed");
}

}  // namespace

FareyTree build_farey_tree(std::int64_t height, const BuildOptions& options) {
    if (height < 0) throw std::invalid_argument("tree height must be nonnegative");
    FareyTree tree;
    tree.height = height;
    tree.levels.push_back({farey_root()});
    tree.parents.emplace_back();
    std::int64_t total = 1;
    for (std::int64_t k = 0; k < height; ++k) {
        std::vector<FareyVertex> next;
        std::vector<std::int64_t> parent;
        detail::expand_farey_level(tree.levels[k], next, parent, options.parallel);
        total += std::ssize(next);
        check_budget(total, options.max_vertices);
        if (k + 1 <= kSpotValidationLevels)
            for (std::int64_t i = 0; i < std::ssize(next); ++i)
                if (!(parent_interval(next[i]) == tree.levels[k][parent[i]]))
                    throw std::logic_error("children rule and parent rule disagree at " + label(next[i]));
        tree.levels.push_back(std::move(next));
        tree.parents.push_back(std::move(parent));
    }
    return tree;
}

PairTree build_terminal_tree(std::int64_t height, const BuildOptions& options) {
    if (height < 0) throw std::invalid_argument("tree height must be nonnegative");
    PairTree tree;
    tree.kind = TreeKind::terminal;
    tree.height = height;
    tree.levels.push_back({TerminalPair{1, 1, 1, 1}});
    tree.parents.emplace_back();
    std::int64_t total = 1;
    for (std::int64_t k = 0; k < height; ++k) {
        std::vector<TerminalPair> next;
        std::vector<std::int64_t> parent;
        detail::expand_pair_level(tree.levels[k], next, parent, options.parallel);
        total += std::ssize(next);
        check_budget(total, options.max_vertices);
        if (k + 1 <= kSpotValidationLevels)
            for (std::int64_t i = 0; i < std::ssize(next); ++i)
                if (!(parent_pair(next[i]) == tree.levels[k][parent[i]]))
                    throw std::logic_error("children rule and parent rule disagree at " + label(next[i]));
        tree.levels.push_back(std::move(next));
        tree.parents.push_back(std::move(parent));
    }
    return tree;
}

PairTree build_young_tree(std::int64_t height, const BuildOptions& options) {
    if (height < 0) throw std::invalid_argument("tree height must be nonnegative");
    PairTree tree;
    tree.kind = TreeKind::young;
    tree.height = height;
    tree.levels.push_back({suranyi_terminal(farey_root())});
    tree.parents.emplace_back();

    std::vector<FareyVertex> farey_cur{farey_root()};
    std::vector<std::int64_t> farey_to_young{0};
    std::int64_t total = 1;
    for (std::int64_t k = 0; k < height; ++k) {
        std::vector<FareyVertex> farey_next;
        std::vector<std::int64_t> farey_parent;
        detail::expand_farey_level(farey_cur, farey_next, farey_parent, options.parallel);
        total += std::ssize(farey_next);
        check_budget(total, options.max_vertices);

        std::vector<TerminalPair> young;
        std::vector<std::int64_t> to_farey;
        detail::young_level_from_farey(farey_next, young, to_farey, options.parallel);

        std::vector<std::int64_t> parent(young.size());
        std::vector<std::int64_t> farey_to_young_next(young.size());
        for (std::int64_t i = 0; i < std::ssize(young); ++i) {
            parent[i] = farey_to_young[farey_parent[to_farey[i]]];
            farey_to_young_next[to_farey[i]] = i;
        }
        tree.levels.push_back(std::move(young));
        tree.parents.push_back(std::move(parent));
        farey_cur = std::move(farey_next);
        farey_to_young = std::move(farey_to_young_next);
    }
    return tree;
}

// --------------------------------------------------------------------------
// Verification
// --------------------------------------------------------------------------

namespace {

// All sequence grids with one fixed index sum, advanced one sum at a time:
// the (m, n) grid extends the (m-1, n) grid by the coprime column m/q.
struct SequencePool {
    std::int64_t sum = 0;
    std::vector<std::vector<Rational>> grids;  // grids[m] holds the (m, sum - m) terms
};

SequencePool initial_pool() {
    SequencePool pool;
    pool.grids.push_back({Rational::zero(), Rational::infinity()});
    return pool;
}

// Fills `out` from `prev`, recycling out's grid buffers.
void advance_pool(const SequencePool& prev, SequencePool& out, bool parallel) {
    out.sum = prev.sum + 1;
    out.grids.resize(out.sum + 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t m = 0; m <= out.sum; ++m) {
        const std::int64_t n = out.sum - m;
        std::vector<Rational>& grid = out.grids[m];
        grid.clear();
        if (m == 0 || n == 0) {
            grid.push_back(Rational::zero());
            grid.push_back(Rational::infinity());
            continue;
        }
        std::vector<Rational> column;  // new values m/q, ascending
        column.reserve(n);
        for (std::int64_t q = n; q >= 1; --q)
            if (std::gcd(m, q) == 1) column.push_back(Rational(m, q));
        const std::vector<Rational>& base = prev.grids[m - 1];
        reserve_slack(grid, base.size() + column.size());
        std::merge(base.begin(), base.end(), column.begin(), column.end(), std::back_inserter(grid));
    }
}

struct TransitionView {
    const std::vector<FareyVertex>* farey_prev = nullptr;
    const std::vector<FareyVertex>* farey_next = nullptr;
    const std::vector<std::int64_t>* farey_parent = nullptr;
    const std::vector<TerminalPair>* young_prev = nullptr;
    const std::vector<std::int64_t>* farey_to_young_prev = nullptr;
    const std::vector<TerminalPair>* young_next = nullptr;
    const std::vector<std::int64_t>* young_to_farey_next = nullptr;
    const std::vector<TerminalPair>* term_next = nullptr;
    const SequencePool* pool_prev = nullptr;  // non-null: recompute the parent interval per vertex
};

bool check_transition(const TransitionView& view, std::int64_t level, bool parallel, std::string& counterexample) {
    const auto& young = *view.young_next;
    const auto& term = *view.term_next;

    for (std::int64_t i = 0; i + 1 < std::ssize(young); ++i) {
        if (young[i] == young[i + 1]) {
            counterexample = "level " + std::to_string(level) + ": duplicate image " + label(young[i]);
            return false;
        }
    }
    if (young.size() != term.size()) {
        counterexample = "level " + std::to_string(level) + ": " + std::to_string(young.size()) +
                         " interval images vs " + std::to_string(term.size()) + " recursion pairs";
        return false;
    }
    for (std::int64_t i = 0; i < std::ssize(young); ++i) {
        if (!(young[i] == term[i])) {
            counterexample = "level " + std::to_string(level) + ": level sets differ at index " +
                             std::to_string(i) + ": " + label(young[i]) + " vs " + label(term[i]);
            return false;
        }
    }

    const std::int64_t size = std::ssize(young);
    std::int64_t first_bad = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first_bad) if (parallel)
    for (std::int64_t i = 0; i < size; ++i) {
        bool ok = true;
        try {
            const std::int64_t f = (*view.young_to_farey_next)[i];
            const std::int64_t parent_idx = (*view.farey_parent)[f];
            const TerminalPair& phi = (*view.young_prev)[(*view.farey_to_young_prev)[parent_idx]];
            ok = parent_pair(young[i]) == phi;
            if (ok && view.pool_prev) {
                const FareyVertex& v = (*view.farey_next)[f];
                const auto& grids = view.pool_prev->grids;
                const std::span<const Rational> grid_h =
                    v.m >= 1 ? std::span<const Rational>(grids[v.m - 1]) : std::span<const Rational>();
                const std::span<const Rational> grid_v =
                    v.n >= 1 ? std::span<const Rational>(grids[v.m]) : std::span<const Rational>();
                ok = detail::parent_interval_using(v, grid_h, grid_v) == (*view.farey_prev)[parent_idx];
            }
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) first_bad = std::min(first_bad, i);
    }
    if (first_bad != std::numeric_limits<std::int64_t>::max()) {
        const std::int64_t f = (*view.young_to_farey_next)[first_bad];
        counterexample = "level " + std::to_string(level) + ": parent maps disagree at " +
                         label(young[first_bad]) + " (interval " + label((*view.farey_next)[f]) + ")";
        return false;
    }
    return true;
}

template <class V>
LevelStats block_stats(std::int64_t level, const std::vector<V>& vertices) {
    LevelStats stats;
    stats.level = level;
    for (const Span& b : level_blocks(vertices))
        stats.blocks.push_back({index_m(vertices[b.begin]), index_n(vertices[b.begin]), b.end - b.begin});
    return stats;
}

// One fully cross-linked level of all three trees.
struct LevelData {
    std::vector<FareyVertex> farey;
    std::vector<std::int64_t> farey_parent;  // into the previous level's farey
    std::vector<TerminalPair> young;
    std::vector<std::int64_t> young_to_farey;
    std::vector<std::int64_t> farey_to_young;
    std::vector<TerminalPair> term;
    std::vector<std::int64_t> term_parent;
};

VerificationReport run_level_verification(const std::string& mode, std::int64_t height, const VerifyOptions& options,
                                          bool recompute_parent_route) {
    if (height < 0) throw std::invalid_argument("tree height must be nonnegative");
    VerificationReport report;
    report.mode = mode;
    report.height = height;

    LevelData cur;
    cur.farey = {farey_root()};
    cur.young = {suranyi_terminal(farey_root())};
    cur.young_to_farey = {0};
    cur.farey_to_young = {0};
    cur.term = {TerminalPair{1, 1, 1, 1}};
    report.total_vertices = 1;

    if (!(cur.young[0] == cur.term[0])) {
        report.counterexample = "level 0: root images differ";
        return report;
    }
    if (options.collect_stats) report.levels.push_back(block_stats(0, cur.term));

    // In streaming mode `next` is recycled by swapping, so its buffers keep
    // their capacity across levels; in resident mode every level is retained,
    // which is the whole-tree-in-memory behaviour.
    std::vector<LevelData> retained;
    LevelData next;
    SequencePool pool = initial_pool();
    SequencePool pool_scratch;
    for (std::int64_t k = 0; k < height; ++k) {
        detail::expand_farey_level(cur.farey, next.farey, next.farey_parent, options.parallel);
        report.total_vertices += std::ssize(next.farey);
        check_budget(report.total_vertices, options.max_vertices);

        detail::young_level_from_farey(next.farey, next.young, next.young_to_farey, options.parallel);
        reserve_slack(next.farey_to_young, next.young_to_farey.size());
        next.farey_to_young.resize(next.young_to_farey.size());
        for (std::int64_t i = 0; i < std::ssize(next.young_to_farey); ++i)
            next.farey_to_young[next.young_to_farey[i]] = i;

        detail::expand_pair_level(cur.term, next.term, next.term_parent, options.parallel);

        TransitionView view;
        view.farey_prev = &cur.farey;
        view.farey_next = &next.farey;
        view.farey_parent = &next.farey_parent;
        view.young_prev = &cur.young;
        view.farey_to_young_prev = &cur.farey_to_young;
        view.young_next = &next.young;
        view.young_to_farey_next = &next.young_to_farey;
        view.term_next = &next.term;
        view.pool_prev = recompute_parent_route ? &pool : nullptr;

        if (!check_transition(view, k + 1, options.parallel, report.counterexample)) return report;
        if (options.collect_stats) report.levels.push_back(block_stats(k + 1, next.term));

        if (recompute_parent_route && k + 1 < height) {
            advance_pool(pool, pool_scratch, options.parallel);
            std::swap(pool, pool_scratch);
        }
        if (options.streaming) {
            std::swap(cur, next);
        } else {
            retained.push_back(std::move(cur));
            cur = std::move(next);
            next = LevelData{};
        }
    }

    report.pass = true;
    return report;
}

}  // namespace

VerificationReport verify_theorem1(std::int64_t height, const VerifyOptions& options) {
    return run_level_verification("theorem1", height, options, /*recompute_parent_route=*/true);
}

VerificationReport verify_isomorphism(std::int64_t height, const VerifyOptions& options) {
    return run_level_verification("isomorphism", height, options, /*recompute_parent_route=*/false);
}

VerificationReport verify_corollary2(std::int64_t max_mn_sum, const VerifyOptions& options) {
    if (max_mn_sum < 2) throw std::invalid_argument("the size bound must be at least 2");
    if (max_mn_sum > options.enumeration_guard)
        throw std::invalid_argument("size bound " + std::to_string(max_mn_sum) +
                                    " exceeds the enumeration guard " +
                                    std::to_string(options.enumeration_guard));
    VerificationReport report;
    report.mode = "corollary2";
    report.height = max_mn_sum;

    for (std::int64_t sum = 2; sum <= max_mn_sum; ++sum) {
        LevelStats stats;
        stats.level = sum - 2;
        for (std::int64_t m = 1; m <= sum - 1; ++m) {
            const std::int64_t n = sum - m;
            std::vector<TerminalPair> enumerated;
            for (const LShape& shape : enumerate_difference_lshapes(m, n, options.enumeration_guard))
                enumerated.push_back(lshape_terminal(shape));
            std::sort(enumerated.begin(), enumerated.end(),
                      [](const TerminalPair& x, const TerminalPair& y) { return canonical_less(x, y); });
            if (std::adjacent_find(enumerated.begin(), enumerated.end()) != enumerated.end()) {
                report.counterexample = "size (" + std::to_string(m) + "," + std::to_string(n) +
                                        "): two shapes share a terminal pair";
                return report;
            }

            const std::vector<TerminalPair> young = young_terminal_pairs(m, n);
            if (!(enumerated == young)) {
                report.counterexample = "size (" + std::to_string(m) + "," + std::to_string(n) +
                                        "): enumerated shapes and interval images differ";
                return report;
            }
            const std::int64_t expected = std::ssize(farey_intervals(m - 1, n - 1));
            if (std::ssize(enumerated) != expected) {
                report.counterexample = "size (" + std::to_string(m) + "," + std::to_string(n) + "): " +
                                        std::to_string(enumerated.size()) + " shapes vs " +
                                        std::to_string(expected) + " intervals";
                return report;
            }
            report.total_vertices += expected;
            stats.blocks.push_back({m, n, expected});
        }
        if (options.collect_stats) report.levels.push_back(std::move(stats));
    }
    report.pass = true;
    return report;
}

// --------------------------------------------------------------------------
// Export and import
// --------------------------------------------------------------------------

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json payload_json(const FareyVertex& v) {
    return {{"a", v.a.str()}, {"b", v.b.str()}, {"m", v.m}, {"n", v.n}};
}

ordered_json payload_json(const TerminalPair& p) { return {{"s", p.s}, {"t", p.t}, {"m", p.m}, {"n", p.n}}; }

std::string dot_label(const FareyVertex& v) {
    return "(" + v.a.str() + "," + v.b.str() + ")|" + std::to_string(v.m) + "," + std::to_string(v.n);
}

std::string dot_label(const TerminalPair& p) {
    return std::to_string(p.s) + "," + std::to_string(p.t) + "|" + std::to_string(p.m) + "," +
           std::to_string(p.n);
}

template <class Tree>
std::string export_json_impl(const Tree& tree, const std::string& kind) {
    ordered_json root;
    root["kind"] = kind;
    root["height"] = tree.height;
    ordered_json levels = ordered_json::array();
    for (std::int64_t k = 0; k < std::ssize(tree.levels); ++k) {
        ordered_json level;
        level["level"] = k;
        ordered_json vertices = ordered_json::array();
        for (std::int64_t i = 0; i < std::ssize(tree.levels[k]); ++i) {
            ordered_json vertex;
            vertex["id"] = i;
            if (k == 0)
                vertex["parent"] = nullptr;
            else
                vertex["parent"] = tree.parents[k][i];
            vertex["payload"] = payload_json(tree.levels[k][i]);
            vertices.push_back(std::move(vertex));
        }
        level["vertices"] = std::move(vertices);
        levels.push_back(std::move(level));
    }
    root["levels"] = std::move(levels);
    return root.dump();
}

template <class Tree>
std::string export_dot_impl(const Tree& tree, const std::string& kind) {
    std::string out = "digraph " + kind + "_tree {\n";
    for (std::int64_t k = 0; k < std::ssize(tree.levels); ++k)
        for (std::int64_t i = 0; i < std::ssize(tree.levels[k]); ++i)
            out += "  v" + std::to_string(k) + "_" + std::to_string(i) + " [label=\"" +
                   dot_label(tree.levels[k][i]) + "\"];\n";
    for (std::int64_t k = 1; k < std::ssize(tree.levels); ++k)
        for (std::int64_t i = 0; i < std::ssize(tree.levels[k]); ++i)
            out += "  v" + std::to_string(k - 1) + "_" + std::to_string(tree.parents[k][i]) + " -> v" +
                   std::to_string(k) + "_" + std::to_string(i) + ";\n";
    out += "}\n";
    return out;
}

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed tree JSON: " + what); }

template <class Tree, class PayloadReader>
Tree parse_tree_impl(const ordered_json& root, PayloadReader read_payload) {
    Tree tree;
    tree.height = root.at("height").get<std::int64_t>();
    const auto& levels = root.at("levels");
    if (!levels.is_array() || std::ssize(levels) != tree.height + 1) malformed("level count does not match height");
    for (std::int64_t k = 0; k < std::ssize(levels); ++k) {
        const auto& level = levels[k];
        if (level.at("level").get<std::int64_t>() != k) malformed("levels out of order");
        const auto& vertices = level.at("vertices");
        std::vector<std::int64_t> parents;
        auto& payloads = tree.levels.emplace_back();
        for (std::int64_t i = 0; i < std::ssize(vertices); ++i) {
            const auto& vertex = vertices[i];
            if (vertex.at("id").get<std::int64_t>() != i) malformed("vertex ids must be 0..count-1 in order");
            if (k == 0) {
                if (!vertex.at("parent").is_null()) malformed("the root cannot have a parent");
            } else {
                const std::int64_t p = vertex.at("parent").get<std::int64_t>();
                if (p < 0 || p >= std::ssize(tree.levels[k - 1])) malformed("parent index out of range");
                parents.push_back(p);
            }
            payloads.push_back(read_payload(vertex.at("payload")));
        }
        tree.parents.push_back(std::move(parents));
    }
    return tree;
}

}  // namespace

std::string export_json(const FareyTree& tree) { return export_json_impl(tree, "farey"); }
std::string export_json(const PairTree& tree) { return export_json_impl(tree, to_string(tree.kind)); }
std::string export_dot(const FareyTree& tree) { return export_dot_impl(tree, "farey"); }
std::string export_dot(const PairTree& tree) { return export_dot_impl(tree, to_string(tree.kind)); }

std::variant<FareyTree, PairTree> parse_tree_json(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }
    const TreeKind kind = tree_kind_from_string(root.at("kind").get<std::string>());
    if (kind == TreeKind::farey) {
        return parse_tree_impl<FareyTree>(root, [](const ordered_json& payload) {
            return FareyVertex{Rational::parse(payload.at("a").get<std::string>()),
                               Rational::parse(payload.at("b").get<std::string>()),
                               payload.at("m").get<std::int64_t>(), payload.at("n").get<std::int64_t>()};
        });
    }
    PairTree tree = parse_tree_impl<PairTree>(root, [](const ordered_json& payload) {
        return TerminalPair{payload.at("s").get<std::int64_t>(), payload.at("t").get<std::int64_t>(),
                            payload.at("m").get<std::int64_t>(), payload.at("n").get<std::int64_t>()};
    });
    tree.kind = kind;
    return tree;
}

}  // namespace farey
