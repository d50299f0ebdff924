#include "farey/rational.hpp"

#include <charconv>
#include <ostream>

namespace farey {

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size())
        throw std::invalid_argument("expected a rational of the form \"p/q\", got \"" + std::string(text) + "\"");

    const auto parse_part = [&](std::string_view part) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || value < 0)
            throw std::invalid_argument("expected a rational of the form \"p/q\", got \"" + std::string(text) + "\"");
        return value;
    };

    return Rational(parse_part(text.substr(0, slash)), parse_part(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace farey
