#include "impsel/rat.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace impsel {

std::string rat_to_string(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

long long parse_int(std::string_view s, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("invalid " + what + " in rational: '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (text.find('.') != std::string::npos) {
        throw std::invalid_argument("decimal rationals are not accepted, use p/q: '" + text + "'");
    }
    if (slash == std::string::npos) {
        return Rat(parse_int(text, "numerator"));
    }
    const long long num = parse_int(std::string_view(text).substr(0, slash), "numerator");
    const long long den = parse_int(std::string_view(text).substr(slash + 1), "denominator");
    if (den <= 0) {
        throw std::invalid_argument("rational denominator must be positive: '" + text + "'");
    }
    return Rat(num, den);
}

}  // namespace impsel
