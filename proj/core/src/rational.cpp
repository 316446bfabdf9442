#include "proxima/rational.hpp"

#include "proxima/error.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace proxima {

namespace {

wide_int gcd128(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(wide_int v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw Error(ErrorCode::InvalidArgument, "not a rational: '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide_int g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) throw Error(ErrorCode::Overflow, "rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<wide_int>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.den_ + static_cast<wide_int>(rhs.num_) * den_,
                             static_cast<wide_int>(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.den_ - static_cast<wide_int>(rhs.num_) * den_,
                             static_cast<wide_int>(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.num_, static_cast<wide_int>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
    return *this = from_wide(static_cast<wide_int>(num_) * rhs.den_, static_cast<wide_int>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    wide_int a = static_cast<wide_int>(lhs.num_) * rhs.den_;
    wide_int b = static_cast<wide_int>(rhs.num_) * lhs.den_;
    return a <=> b;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace proxima
