#include "farey/rational.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"

using farey::Rational;
using farey::mediant;

TEST_CASE("construction reduces and normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, 0) == Rational::infinity());
    CHECK(Rational(0, 7) == Rational::zero());
    CHECK(Rational(12, 8).num() == 3);
    CHECK(Rational(12, 8).den() == 2);
    CHECK(Rational() == Rational::zero());

    SUBCASE("equal values share one representation") {
        for (std::int64_t k = 1; k <= 7; ++k) CHECK(Rational(3 * k, 5 * k) == Rational(3, 5));
    }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Rational(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, -2), std::invalid_argument);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 2) < Rational(3, 1));
    CHECK(Rational(1, 0) > Rational(3, 1));
    CHECK(Rational(3, 2) == Rational(3, 2));
    CHECK(Rational::zero() < Rational(1, 1000000));
    CHECK(Rational::infinity() == Rational::infinity());

    SUBCASE("total order on a shuffled grid") {
        std::vector<Rational> values;
        for (std::int64_t p = 0; p <= 9; ++p)
            for (std::int64_t q = 0; q <= 9; ++q)
                if (p || q) values.push_back(Rational(p, q));
        std::mt19937 rng(7);
        std::shuffle(values.begin(), values.end(), rng);
        std::sort(values.begin(), values.end());
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            CHECK(values[i] <= values[i + 1]);
            if (values[i] != values[i + 1]) {
                // cross multiplication agrees on finite neighbours
                if (values[i + 1].is_finite())
                    CHECK(static_cast<__int128>(values[i].num()) * values[i + 1].den() <
                          static_cast<__int128>(values[i + 1].num()) * values[i].den());
            }
        }
    }
}

TEST_CASE("reciprocal conventions and involution") {
    CHECK(Rational::zero().reciprocal() == Rational::infinity());
    CHECK(Rational::infinity().reciprocal() == Rational::zero());
    CHECK(Rational(2, 3).reciprocal() == Rational(3, 2));

    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(0, 1 << 20);
    for (int i = 0; i < 200; ++i) {
        std::int64_t p = dist(rng);
        std::int64_t q = dist(rng);
        if (p == 0 && q == 0) p = 1;
        const Rational r(p, q);
        CHECK(r.reciprocal().reciprocal() == r);
    }
}

TEST_CASE("mediant") {
    CHECK(mediant(Rational::zero(), Rational::infinity()) == Rational(1, 1));
    CHECK(mediant(Rational(1, 1), Rational(3, 2)) == Rational(4, 3));
    CHECK(mediant(Rational(1, 2), Rational(1, 1)) == Rational(2, 3));
    CHECK_THROWS_AS(mediant(Rational(1, 1), Rational(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(mediant(Rational(3, 2), Rational(1, 1)), std::invalid_argument);

    SUBCASE("strictly interior for random pairs") {
        std::mt19937 rng(13);
        std::uniform_int_distribution<std::int64_t> dist(0, 999);
        for (int i = 0; i < 500; ++i) {
            std::int64_t p = dist(rng), q = dist(rng), r = dist(rng), s = dist(rng);
            if (p == 0 && q == 0) p = 1;
            if (r == 0 && s == 0) s = 1;
            Rational x(p, q), y(r, s);
            if (x == y) continue;
            if (y < x) std::swap(x, y);
            const Rational mid = mediant(x, y);
            CHECK(x < mid);
            CHECK(mid < y);
        }
    }

    SUBCASE("component overflow is detected") {
        const Rational huge1(std::numeric_limits<std::int64_t>::max() - 1, 1);
        const Rational huge2(std::numeric_limits<std::int64_t>::max() - 2, 1);
        CHECK_THROWS_AS(mediant(huge2, huge1), std::overflow_error);
    }
}

TEST_CASE("text form") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational::infinity().str() == "1/0");
    CHECK(Rational::zero().str() == "0/1");
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("1/0") == Rational::infinity());
    CHECK_THROWS_AS(Rational::parse("3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("-1/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("0/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5/2"), std::invalid_argument);

    std::ostringstream os;
    os << Rational(7, 3);
    CHECK(os.str() == "7/3");
}
