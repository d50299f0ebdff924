#include "farey/young.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace farey {

namespace detail {

std::int64_t floor_sum(std::int64_t count, std::int64_t q, std::int64_t a, std::int64_t b) {
    std::int64_t ans = 0;
    while (true) {
        if (a >= q) {
            ans += (count - 1) * count / 2 * (a / q);
            a %= q;
        }
        if (b >= q) {
            ans += count * (b / q);
            b %= q;
        }
        const std::int64_t y_max = a * count + b;
        if (y_max < q) return ans;
        count = y_max / q;
        b = y_max % q;
        std::swap(q, a);
    }
}

}  // namespace detail

namespace {

constexpr std::int64_t kSizeLimit = 1'000'000'000;

void require_sizes(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("table sizes must be positive");
    if (m > kSizeLimit || n > kSizeLimit || m > kSizeLimit / n)
        throw std::overflow_error("table size exceeds the 64-bit safety bound");
}

void require_slope(const Rational& xi) {
    if (xi.is_infinite() || xi.is_zero()) throw std::domain_error("slope must be finite and positive");
}

// floor(a / b) for b > 0 and possibly negative a.
std::int64_t div_floor(std::int64_t a, std::int64_t b) { return a / b - (a % b != 0 && (a % b < 0) != (b < 0)); }

}  // namespace

RankingTable ranking_table(std::int64_t m, std::int64_t n, const Rational& xi) {
    require_sizes(m, n);
    require_slope(xi);
    if (m > kSizeLimit / xi.den() || n > kSizeLimit / xi.num())
        throw std::overflow_error("slope components too large for this table size");
    if (m >= 2 && n >= 2 && xi.num() <= m - 1 && xi.den() <= n - 1)
        throw std::domain_error("slope " + xi.str() + " is a breakpoint of the (" + std::to_string(m) + "," +
                                std::to_string(n) + ") table");

    const std::int64_t p = xi.num();
    const std::int64_t q = xi.den();
    RankingTable table{m, n, xi, std::vector<std::int64_t>(m * n)};
    for (std::int64_t j = 1; j <= n; ++j) {
        for (std::int64_t i = 1; i <= m; ++i) {
            // rank of i + j*xi: per opposite row t, the count of s in [1, m]
            // with s <= i + (j - t)*xi
            std::int64_t rank = 0;
            for (std::int64_t t = 1; t <= n; ++t)
                rank += std::clamp<std::int64_t>(div_floor(i * q + (j - t) * p, q), 0, m);
            table.entries[(j - 1) * m + (i - 1)] = rank;
        }
    }

    std::vector<bool> seen(m * n, false);
    for (const std::int64_t value : table.entries) {
        if (value < 1 || value > m * n || seen[value - 1])
            throw std::logic_error("interior slope produced a non-injective table");
        seen[value - 1] = true;
    }
    if (!is_young(table)) throw std::logic_error("interior slope produced a non-monotone table");
    return table;
}

bool is_young(std::int64_t m, std::int64_t n, const std::vector<std::int64_t>& entries) {
    require_sizes(m, n);
    if (std::ssize(entries) != m * n) throw std::invalid_argument("table entry count does not match the size");
    for (const std::int64_t value : entries)
        if (value < 1 || value > m * n) throw std::invalid_argument("table value out of range");
    const auto at = [&](std::int64_t i, std::int64_t j) { return entries[(j - 1) * m + (i - 1)]; };
    for (std::int64_t j = 1; j <= n; ++j)
        for (std::int64_t i = 1; i < m; ++i)
            if (at(i, j) > at(i + 1, j)) return false;
    for (std::int64_t i = 1; i <= m; ++i)
        for (std::int64_t j = 1; j < n; ++j)
            if (at(i, j) > at(i, j + 1)) return false;
    return true;
}

bool is_young(const RankingTable& table) { return is_young(table.m, table.n, table.entries); }

std::int64_t delta(std::int64_t m, std::int64_t n, const Rational& xi) {
    require_sizes(m, n);
    require_slope(xi);
    std::int64_t d = 0;
    for (std::int64_t t = 0; t < n; ++t) {
        for (std::int64_t s = 0; s < m; ++s) {
            const __int128 lhs = static_cast<__int128>(t) * xi.num();
            const __int128 rhs = static_cast<__int128>(s) * xi.den();
            d += (lhs <= rhs) - (lhs >= rhs);
        }
    }
    return d;
}

std::int64_t delta_one_sided(std::int64_t m, std::int64_t n, const Rational& x, Side side) {
    require_sizes(m, n);
    require_slope(x);
    // Every breakpoint of delta is a grid fraction of the (m, n) sequence, so
    // the mediant of x and its strict neighbour lies in a constancy interval.
    const auto terms = detail::sequence_terms(m, n);
    if (side == Side::left) {
        const auto it = std::lower_bound(terms->begin(), terms->end(), x);
        return delta(m, n, mediant(*std::prev(it), x));  // terms front is 0 < x
    }
    const auto it = std::upper_bound(terms->begin(), terms->end(), x);
    return delta(m, n, mediant(x, *it));  // terms back is infinity > x
}

TerminalPair slope_terminal(std::int64_t m, std::int64_t n, const Rational& xi) {
    require_sizes(m, n);
    require_slope(xi);
    const std::int64_t p = xi.num();
    const std::int64_t q = xi.den();
    if (m > kSizeLimit / q || n > kSizeLimit / p)
        throw std::overflow_error("slope components too large for this table size");

    // rank of the lower-right corner: m for the bottom row, then for each of
    // the rows above it the clipped count floor((m*q - u*p) / q), u = 1..n-1,
    // which is nonnegative exactly while u <= m*q / p
    const std::int64_t upper = std::min<std::int64_t>(n - 1, (m * q) / p);
    std::int64_t s = m;
    if (upper >= 1) s += detail::floor_sum(upper, q, p, m * q - upper * p);

    // rank of the upper-left corner: rows far enough below contribute a full
    // m, the first few contribute 1 + floor(u*p / q)
    const std::int64_t cutoff = m == 1 ? 0 : ((m - 1) * q + p - 1) / p;
    const std::int64_t low = std::min<std::int64_t>(cutoff, n);
    const std::int64_t t = low + detail::floor_sum(low, q, p, 0) + m * (n - low);

    return {s, t, m, n};
}

RankingTable suranyi_table(const FareyVertex& v) {
    if (v.m < 0 || v.n < 0 || !(v.a < v.b)) throw std::invalid_argument("malformed interval " + label(v));
    return ranking_table(v.m + 1, v.n + 1, mediant(v.a, v.b));
}

TerminalPair suranyi_terminal(const FareyVertex& v) {
    if (v.m < 0 || v.n < 0 || !(v.a < v.b)) throw std::invalid_argument("malformed interval " + label(v));
    return slope_terminal(v.m + 1, v.n + 1, mediant(v.a, v.b));
}

std::vector<TerminalPair> young_terminal_pairs(std::int64_t m, std::int64_t n) {
    require_sizes(m, n);
    std::vector<TerminalPair> out;
    for (const FareyVertex& v : farey_intervals(m - 1, n - 1)) out.push_back(suranyi_terminal(v));
    std::sort(out.begin(), out.end(),
              [](const TerminalPair& x, const TerminalPair& y) { return canonical_less(x, y); });
    return out;
}

namespace {

using InverseIndex = std::vector<std::pair<TerminalPair, FareyVertex>>;

std::shared_mutex inverse_mutex;
std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const InverseIndex>> inverse_cache;

std::shared_ptr<const InverseIndex> inverse_index(std::int64_t m, std::int64_t n) {
    {
        std::shared_lock lock(inverse_mutex);
        if (auto it = inverse_cache.find({m, n}); it != inverse_cache.end()) return it->second;
    }
    InverseIndex index;
    for (const FareyVertex& v : farey_intervals(m - 1, n - 1)) index.emplace_back(suranyi_terminal(v), v);
    std::sort(index.begin(), index.end(),
              [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    auto built = std::make_shared<const InverseIndex>(std::move(index));
    std::unique_lock lock(inverse_mutex);
    return inverse_cache.try_emplace({m, n}, std::move(built)).first->second;
}

}  // namespace

FareyVertex suranyi_inverse(const TerminalPair& p) {
    if (p.m < 1 || p.n < 1) throw std::domain_error("terminal pair sizes must be positive");
    const auto index = inverse_index(p.m, p.n);
    const auto it = std::lower_bound(index->begin(), index->end(), p, [](const auto& entry, const TerminalPair& key) {
        return canonical_less(entry.first, key);
    });
    if (it == index->end() || !(it->first == p))
        throw std::domain_error(label(p) + " is not the terminal pair of any ranking table");
    return it->second;
}

TerminalPair young_parent(const TerminalPair& p) {
    if (p.m == 1 && p.n == 1) throw std::domain_error("the root pair has no parent");
    return suranyi_terminal(parent_interval(suranyi_inverse(p)));
}

}  // namespace farey
