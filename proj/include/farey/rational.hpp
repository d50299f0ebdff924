#pragma once

/**
 * @file rational.hpp
 * @brief Exact nonnegative rationals extended with a point at infinity.
 *
 * Values are always stored reduced (gcd(num, den) == 1, with the convention
 * gcd(x, 0) == x), so zero is uniquely 0/1 and infinity is uniquely 1/0.
 * The reciprocal simply swaps numerator and denominator, which makes 0 and
 * infinity each other's inverses and keeps the map total and involutive.
 *
 * Components stay in 64 bits. Comparisons go through 128-bit cross products
 * and the mediant is overflow-checked, so every result is exact or an
 * exception is thrown -- never a silent wraparound.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace farey {

class Rational {
public:
    constexpr Rational() = default;  // 0/1

    // Reduced representative of p/q. Rejects negatives and 0/0.
    constexpr Rational(std::int64_t p, std::int64_t q) {
        if (p < 0 || q < 0)
            throw std::invalid_argument("rational components must be nonnegative");
        if (p == 0 && q == 0)
            throw std::invalid_argument("0/0 is not a rational value");
        const std::int64_t g = std::gcd(p, q);  // gcd(x, 0) == x, so p/0 -> 1/0 and 0/q -> 0/1
        num_ = p / g;
        den_ = q / g;
    }

    static constexpr Rational zero() { return Rational(); }
    static constexpr Rational infinity() {
        Rational r;
        r.num_ = 1;
        r.den_ = 0;
        return r;
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_infinite() const { return den_ == 0; }
    constexpr bool is_finite() const { return den_ != 0; }

    // Total and involutive: 0/1 <-> 1/0, p/q <-> q/p.
    constexpr Rational reciprocal() const {
        Rational r;
        r.num_ = den_;
        r.den_ = num_;
        return r;
    }

    // Total order with infinity as the maximum; finite values compare by
    // 128-bit cross multiplication.
    friend constexpr std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        if (x.is_infinite() || y.is_infinite()) {
            if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
            return x.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
        const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Stored form is canonical, so field equality is value equality.
    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// (a + c) / (b + d) for a/b < c/d; lies strictly between the two.
inline Rational mediant(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("mediant requires a < b");
    std::int64_t p = 0;
    std::int64_t q = 0;
    if (__builtin_add_overflow(a.num(), b.num(), &p) || __builtin_add_overflow(a.den(), b.den(), &q))
        throw std::overflow_error("mediant overflows 64-bit components");
    return Rational(p, q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace farey
