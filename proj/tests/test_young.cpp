#include "farey/young.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "farey/farey.hpp"

using namespace farey;

namespace {

Rational rat(std::int64_t p, std::int64_t q) { return Rational(p, q); }

// Literal double sum behind every rank: the number of grid points (s, t)
// with s + t*xi <= i + j*xi, compared exactly via q*s + p*t <= q*i + p*j.
std::int64_t rank_oracle(std::int64_t m, std::int64_t n, const Rational& xi, std::int64_t i, std::int64_t j) {
    std::int64_t rank = 0;
    for (std::int64_t s = 1; s <= m; ++s)
        for (std::int64_t t = 1; t <= n; ++t)
            rank += xi.den() * s + xi.num() * t <= xi.den() * i + xi.num() * j;
    return rank;
}

std::vector<Rational> mediant_samples(std::int64_t m, std::int64_t n) {
    const auto terms = farey_sequence(m, n).terms;
    std::vector<Rational> samples;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) samples.push_back(mediant(terms[i], terms[i + 1]));
    return samples;
}

}  // namespace

TEST_CASE("ranking table values") {
    const RankingTable table = ranking_table(4, 3, rat(5, 4));
    const std::vector<std::int64_t> expected{1, 2, 4, 7, 3, 5, 8, 10, 6, 9, 11, 12};
    CHECK(table.entries == expected);
    CHECK(table.at(4, 1) == 7);
    CHECK(table.at(1, 3) == 6);

    CHECK(ranking_table(1, 1, rat(7, 5)).entries == std::vector<std::int64_t>{1});
    CHECK(ranking_table(2, 1, rat(1, 1)).entries == std::vector<std::int64_t>{1, 2});

    SUBCASE("matches the literal rank sum on small sizes") {
        for (std::int64_t m = 1; m <= 5; ++m)
            for (std::int64_t n = 1; n <= 5; ++n)
                for (const Rational& xi : mediant_samples(m, n)) {
                    const RankingTable t = ranking_table(m, n, xi);
                    for (std::int64_t i = 1; i <= m; ++i)
                        for (std::int64_t j = 1; j <= n; ++j) CHECK(t.at(i, j) == rank_oracle(m, n, xi, i, j));
                }
    }

    SUBCASE("breakpoint and domain errors") {
        CHECK_THROWS_AS(ranking_table(4, 3, rat(1, 1)), std::domain_error);   // 1/1 is a grid value of (3, 2)
        CHECK_THROWS_AS(ranking_table(4, 3, rat(3, 2)), std::domain_error);
        CHECK_THROWS_AS(ranking_table(2, 2, rat(1, 1)), std::domain_error);
        CHECK_THROWS_AS(ranking_table(4, 3, Rational::zero()), std::domain_error);
        CHECK_THROWS_AS(ranking_table(4, 3, Rational::infinity()), std::domain_error);
        CHECK_NOTHROW(ranking_table(2, 1, rat(1, 1)));  // no vertical breakpoints when n == 1
        CHECK_NOTHROW(ranking_table(4, 3, rat(4, 1)));  // 4 exceeds the (3, 2) grid
    }
}

TEST_CASE("young property check") {
    CHECK(is_young(ranking_table(4, 3, rat(5, 4))));
    CHECK_FALSE(is_young(2, 2, {1, 2, 4, 3}));
    CHECK(is_young(2, 2, {1, 2, 3, 4}));
    CHECK_THROWS_AS(is_young(2, 2, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(is_young(2, 2, {1, 2, 3, 9}), std::invalid_argument);

    SUBCASE("transposed tables stay monotone") {
        const RankingTable t = ranking_table(4, 3, rat(5, 4));
        const RankingTable tt = ranking_table(3, 4, rat(4, 5));
        for (std::int64_t i = 1; i <= 4; ++i)
            for (std::int64_t j = 1; j <= 3; ++j) CHECK(t.at(i, j) == tt.at(j, i));
        CHECK(is_young(tt));
    }
}

TEST_CASE("corner difference") {
    CHECK(delta(4, 3, rat(5, 4)) == 1);
    CHECK(delta(4, 3, rat(3, 2)) == 0);
    CHECK(delta(4, 3, rat(1, 1)) == 3);

    SUBCASE("definition route: difference of the two corner ranks") {
        for (std::int64_t m = 1; m <= 5; ++m)
            for (std::int64_t n = 1; n <= 5; ++n)
                for (const Rational& xi : mediant_samples(m, n)) {
                    const TerminalPair corners = slope_terminal(m, n, xi);
                    CHECK(delta(m, n, xi) == corners.s - corners.t);
                }
    }
}

TEST_CASE("one-sided limits") {
    CHECK(delta_one_sided(4, 3, rat(1, 1), Side::left) == 5);
    CHECK(delta_one_sided(4, 3, rat(1, 1), Side::right) == 1);
    CHECK(delta_one_sided(3, 4, rat(1, 1), Side::right) == -5);

    SUBCASE("agrees with evaluation just past the point") {
        for (std::int64_t m = 2; m <= 5; ++m) {
            for (std::int64_t n = 2; n <= 5; ++n) {
                const auto terms = farey_sequence(m, n).terms;
                for (std::size_t i = 1; i + 1 < terms.size(); ++i) {
                    const Rational& x = terms[i];
                    const Rational below = mediant(terms[i - 1], x);
                    const Rational above = mediant(x, terms[i + 1]);
                    CHECK(delta_one_sided(m, n, x, Side::left) == delta(m, n, below));
                    CHECK(delta_one_sided(m, n, x, Side::right) == delta(m, n, above));
                    // limits from one side are antisymmetric to the transposed
                    // limits from the other side
                    CHECK(delta_one_sided(m, n, x, Side::right) ==
                          -delta_one_sided(n, m, x.reciprocal(), Side::left));
                }
                // below the least positive grid value the mediant is taken with 0
                const Rational least = terms[1];
                CHECK(delta_one_sided(m, n, least, Side::left) ==
                      delta(m, n, mediant(Rational::zero(), least)));
            }
        }
    }
}

TEST_CASE("closed forms of the corner difference") {
    for (std::int64_t m = 2; m <= 12; ++m) {
        for (std::int64_t n = 2; n <= 12; ++n) {
            CHECK(delta(m, n, rat(m - 1, n)) == m - 1);
            CHECK(delta_one_sided(m, n, rat(m - 1, n), Side::left) == m - 1 + std::gcd(m - 1, n) - 1);
            CHECK(delta(m, n, rat(m, n - 1)) == 1 - n);
            CHECK(delta_one_sided(m, n, rat(m, n - 1), Side::right) == 1 - n - (std::gcd(m, n - 1) - 1));
            CHECK(delta(m, n, rat(m - 1, n - 1)) == 0);
        }
    }
}

TEST_CASE("monotonicity and antisymmetry over a slope sweep") {
    const std::vector<Rational> samples = mediant_samples(8, 8);
    for (std::int64_t m = 1; m <= 8; ++m) {
        for (std::int64_t n = 1; n <= 8; ++n) {
            if (m + n < 3) continue;
            std::int64_t prev_s = -1;
            std::int64_t prev_t = -1;
            std::int64_t prev_d = 0;
            bool first = true;
            for (const Rational& xi : samples) {  // increasing slopes
                const TerminalPair corners = slope_terminal(m, n, xi);
                const std::int64_t d = delta(m, n, xi);
                CHECK(d == -delta(n, m, xi.reciprocal()));
                if (n >= 2 && xi < rat(m, n - 1)) CHECK(delta(m + 1, n, xi) - d == n);
                if (!first) {
                    CHECK(corners.s <= prev_s);
                    CHECK(corners.t >= prev_t);
                    CHECK(d <= prev_d);
                    // equal differences force equal corner pairs
                    if (d == prev_d) {
                        CHECK(corners.s == prev_s);
                        CHECK(corners.t == prev_t);
                    }
                }
                prev_s = corners.s;
                prev_t = corners.t;
                prev_d = d;
                first = false;
            }
        }
    }
}

TEST_CASE("corner ranks via floor sums match the literal sum at larger sizes") {
    const std::vector<std::pair<std::int64_t, std::int64_t>> sizes{{37, 23}, {50, 50}, {101, 7}, {2, 90}};
    const std::vector<Rational> slopes{rat(1, 97), rat(13, 11), rat(97, 96), rat(5, 1), rat(211, 3), rat(1, 1)};
    for (const auto& [m, n] : sizes) {
        for (const Rational& xi : slopes) {
            const TerminalPair corners = slope_terminal(m, n, xi);
            CHECK(corners.s == rank_oracle(m, n, xi, m, 1));
            CHECK(corners.t == rank_oracle(m, n, xi, 1, n));
        }
    }
}

TEST_CASE("one-sided limits away from any breakpoint") {
    // 5/4 is not a grid value of (4, 3), so both limits equal the value
    CHECK(delta_one_sided(4, 3, rat(5, 4), Side::left) == delta(4, 3, rat(5, 4)));
    CHECK(delta_one_sided(4, 3, rat(5, 4), Side::right) == delta(4, 3, rat(5, 4)));
    // beyond the largest finite grid value the upper neighbour is infinity
    CHECK(delta_one_sided(4, 3, rat(100, 1), Side::right) == delta(4, 3, rat(101, 1)));
}

TEST_CASE("interval to table") {
    const FareyVertex example{rat(1, 1), rat(3, 2), 3, 2};
    const RankingTable table = suranyi_table(example);
    CHECK(table.m == 4);
    CHECK(table.n == 3);
    CHECK(table.entries == std::vector<std::int64_t>{1, 2, 4, 7, 3, 5, 8, 10, 6, 9, 11, 12});
    CHECK(table.entries == ranking_table(4, 3, rat(5, 4)).entries);  // any interior slope

    CHECK(suranyi_table(FareyVertex{rat(0, 1), Rational::infinity(), 0, 0}).entries ==
          std::vector<std::int64_t>{1});

    // low slopes rank the bottom row first
    const RankingTable low = suranyi_table(FareyVertex{rat(0, 1), rat(1, 2), 3, 2});
    CHECK(low.at(4, 1) == 10);
    CHECK(low.at(1, 3) == 3);
    CHECK(low.at(4, 1) == rank_oracle(4, 3, mediant(rat(0, 1), rat(1, 2)), 4, 1));

    SUBCASE("well-defined across interior points") {
        for (std::int64_t m = 0; m <= 5; ++m) {
            for (std::int64_t n = 0; n <= 5; ++n) {
                for (const FareyVertex& v : farey_intervals(m, n)) {
                    const Rational first = mediant(v.a, v.b);
                    const Rational second = mediant(v.a, first);
                    CHECK(ranking_table(m + 1, n + 1, first).entries ==
                          ranking_table(m + 1, n + 1, second).entries);
                }
            }
        }
    }
}

TEST_CASE("interval to pair") {
    CHECK(suranyi_terminal(FareyVertex{rat(1, 1), rat(3, 2), 3, 2}) == TerminalPair{7, 6, 4, 3});
    CHECK(suranyi_terminal(FareyVertex{rat(0, 1), Rational::infinity(), 0, 0}) == TerminalPair{1, 1, 1, 1});
    for (std::int64_t m = 2; m <= 6; ++m)
        CHECK(suranyi_terminal(FareyVertex{rat(0, 1), Rational::infinity(), m - 1, 0}) ==
              TerminalPair{m, 1, m, 1});

    SUBCASE("corner pair matches the full table corners") {
        for (std::int64_t m = 0; m <= 5; ++m)
            for (std::int64_t n = 0; n <= 5; ++n)
                for (const FareyVertex& v : farey_intervals(m, n)) {
                    const RankingTable table = suranyi_table(v);
                    const TerminalPair pair = suranyi_terminal(v);
                    CHECK(pair.s == table.at(table.m, 1));
                    CHECK(pair.t == table.at(1, table.n));
                }
    }

    SUBCASE("commutes with transposition and stays injective") {
        for (std::int64_t sum = 0; sum <= 10; ++sum) {
            std::set<std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>>
                seen;
            std::int64_t count = 0;
            for (std::int64_t m = 0; m <= sum; ++m) {
                for (const FareyVertex& v : farey_intervals(m, sum - m)) {
                    const TerminalPair pair = suranyi_terminal(v);
                    CHECK(suranyi_terminal(transpose(v)) == transpose(pair));
                    seen.insert({{pair.m, pair.n}, {pair.s, pair.t}});
                    ++count;
                }
            }
            CHECK(std::ssize(seen) == count);
        }
    }
}

TEST_CASE("pairs arising from intervals") {
    const auto ty43 = young_terminal_pairs(4, 3);
    CHECK(ty43.size() == 6);
    CHECK(std::find(ty43.begin(), ty43.end(), TerminalPair{7, 6, 4, 3}) != ty43.end());
    // one pair per interval of the (3, 2) sequence, frozen from the corner
    // rank sums evaluated at each interval's mediant
    CHECK(ty43 == std::vector<TerminalPair>{{4, 9, 4, 3},
                                            {5, 8, 4, 3},
                                            {6, 7, 4, 3},
                                            {7, 6, 4, 3},
                                            {9, 4, 4, 3},
                                            {10, 3, 4, 3}});

    CHECK(young_terminal_pairs(1, 1) == std::vector<TerminalPair>{TerminalPair{1, 1, 1, 1}});

    const auto ty23 = young_terminal_pairs(2, 3);
    CHECK(std::find(ty23.begin(), ty23.end(), TerminalPair{4, 3, 2, 3}) != ty23.end());
    CHECK(std::find(ty23.begin(), ty23.end(), TerminalPair{2, 5, 2, 3}) != ty23.end());
}

TEST_CASE("inverting the interval to pair map") {
    CHECK(suranyi_inverse(TerminalPair{7, 6, 4, 3}) == FareyVertex{rat(1, 1), rat(3, 2), 3, 2});
    CHECK(suranyi_inverse(TerminalPair{1, 1, 1, 1}) ==
          FareyVertex{rat(0, 1), Rational::infinity(), 0, 0});
    CHECK(suranyi_inverse(TerminalPair{2, 5, 2, 3}) ==
          FareyVertex{rat(1, 1), Rational::infinity(), 1, 2});
    CHECK_THROWS_AS(suranyi_inverse(TerminalPair{2, 3, 4, 3}), std::domain_error);

    for (std::int64_t m = 1; m <= 5; ++m)
        for (std::int64_t n = 1; n <= 5; ++n)
            for (const TerminalPair& pair : young_terminal_pairs(m, n))
                CHECK(suranyi_terminal(suranyi_inverse(pair)) == pair);
}

TEST_CASE("parent map transported to pairs") {
    CHECK(young_parent(TerminalPair{7, 3, 3, 3}) == TerminalPair{4, 3, 2, 3});
    CHECK(young_parent(TerminalPair{2, 7, 2, 4}) == TerminalPair{2, 5, 2, 3});
    CHECK_THROWS_AS(young_parent(TerminalPair{1, 1, 1, 1}), std::domain_error);

    SUBCASE("agrees with the recursion's parent map on small sizes") {
        for (std::int64_t m = 1; m <= 5; ++m)
            for (std::int64_t n = 1; n <= 5; ++n)
                for (const TerminalPair& pair : young_terminal_pairs(m, n))
                    if (!(pair.m == 1 && pair.n == 1)) CHECK(young_parent(pair) == parent_pair(pair));
    }
}
