#include "farey/farey.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace farey {

bool canonical_less(const FareyVertex& x, const FareyVertex& y) {
    if (x.m != y.m) return x.m < y.m;
    if (x.n != y.n) return x.n < y.n;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

std::string label(const FareyVertex& v) {
    return "((" + v.a.str() + "," + v.b.str() + "),(" + std::to_string(v.m) + "," + std::to_string(v.n) + "))";
}

namespace detail {

std::vector<Rational> build_sequence(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw std::invalid_argument("sequence indices must be nonnegative");
    std::vector<Rational> terms;
    terms.reserve(m * n / 2 + 2);
    terms.push_back(Rational::zero());
    // Every distinct value p/q with p <= m, q <= n has exactly one coprime
    // representative in range, so enumerating coprime pairs avoids a dedupe.
    for (std::int64_t p = 1; p <= m; ++p)
        for (std::int64_t q = 1; q <= n; ++q)
            if (std::gcd(p, q) == 1) terms.push_back(Rational(p, q));
    terms.push_back(Rational::infinity());
    std::sort(terms.begin(), terms.end());
    return terms;
}

namespace {

std::shared_mutex cache_mutex;
std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const std::vector<Rational>>> cache;

}  // namespace

std::shared_ptr<const std::vector<Rational>> sequence_terms(std::int64_t m, std::int64_t n) {
    {
        std::shared_lock lock(cache_mutex);
        if (auto it = cache.find({m, n}); it != cache.end()) return it->second;
    }
    auto terms = std::make_shared<const std::vector<Rational>>(build_sequence(m, n));
    std::unique_lock lock(cache_mutex);
    return cache.try_emplace({m, n}, std::move(terms)).first->second;
}

FareyVertex parent_interval_using(const FareyVertex& v, std::span<const Rational> grid_h,
                                  std::span<const Rational> grid_v) {
    if (v.m == 0 && v.n == 0) throw std::domain_error("the root interval has no parent");
    if (v.m < 0 || v.n < 0 || !(v.a < v.b)) throw std::invalid_argument("malformed interval " + label(v));

    // Exactly one of the four positions of (a, b) relative to m/n occurs;
    // m/n is the one term present in the (m, n) grid but absent from both
    // parent grids (it is infinite when n == 0 and zero when m == 0).
    const Rational corner(v.m, v.n);
    if (v.b < corner) return {v.a, v.b, v.m - 1, v.n};
    if (v.b == corner) {
        // smallest term of the (m-1, n) grid above a
        const auto it = std::upper_bound(grid_h.begin(), grid_h.end(), v.a);
        if (it == grid_h.end()) throw std::invalid_argument("malformed interval " + label(v));
        return {v.a, *it, v.m - 1, v.n};
    }
    if (v.a == corner) {
        // largest term of the (m, n-1) grid below b
        const auto it = std::lower_bound(grid_v.begin(), grid_v.end(), v.b);
        if (it == grid_v.begin()) throw std::invalid_argument("malformed interval " + label(v));
        return {*std::prev(it), v.b, v.m, v.n - 1};
    }
    return {v.a, v.b, v.m, v.n - 1};
}

}  // namespace detail

FareySequence farey_sequence(std::int64_t m, std::int64_t n) {
    const auto terms = detail::sequence_terms(m, n);
    return FareySequence{m, n, *terms};
}

std::vector<FareyVertex> farey_intervals(std::int64_t m, std::int64_t n) {
    const auto terms = detail::sequence_terms(m, n);
    std::vector<FareyVertex> out;
    out.reserve(terms->size() - 1);
    for (std::size_t i = 0; i + 1 < terms->size(); ++i)
        out.push_back(FareyVertex{(*terms)[i], (*terms)[i + 1], m, n});
    return out;
}

bool is_valid_interval(const FareyVertex& v) {
    if (v.m < 0 || v.n < 0 || !(v.a < v.b)) return false;
    const auto terms = detail::sequence_terms(v.m, v.n);
    const auto it = std::lower_bound(terms->begin(), terms->end(), v.a);
    return it != terms->end() && *it == v.a && std::next(it) != terms->end() && *std::next(it) == v.b;
}

FareyVertex parent_interval(const FareyVertex& v) {
    if (v.m == 0 && v.n == 0) throw std::domain_error("the root interval has no parent");
    // Fetch lazily: each branch needs at most one parent grid.
    const Rational corner(v.m, v.n);
    if (v.b == corner) {
        const auto grid_h = detail::sequence_terms(v.m - 1, v.n);
        return detail::parent_interval_using(v, *grid_h, {});
    }
    if (v.a == corner) {
        const auto grid_v = detail::sequence_terms(v.m, v.n - 1);
        return detail::parent_interval_using(v, {}, *grid_v);
    }
    return detail::parent_interval_using(v, {}, {});
}

FareyChildren interval_children(const FareyVertex& v) {
    FareyChildren out;
    const Rational h_corner(v.m + 1, v.n);  // infinite when n == 0
    const Rational v_corner(v.m, v.n + 1);
    if (v.a < h_corner) out.horizontal = FareyVertex{v.a, std::min(v.b, h_corner), v.m + 1, v.n};
    if (v.b > v_corner) out.vertical = FareyVertex{std::max(v.a, v_corner), v.b, v.m, v.n + 1};
    return out;
}

FareyVertex transpose(const FareyVertex& v) { return {v.b.reciprocal(), v.a.reciprocal(), v.n, v.m}; }

}  // namespace farey
