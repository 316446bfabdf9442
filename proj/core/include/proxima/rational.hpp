#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace proxima {

__extension__ typedef __int128 wide_int;

/// Exact rational number on 64-bit numerator/denominator.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Intermediate products
/// are formed in 128 bits; a result that does not fit back into 64 bits
/// throws Error(Overflow) instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Accepts "p/q" or an integer "p".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Canonical "p/q" form, denominator always present.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    static Rational from_wide(wide_int num, wide_int den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace proxima
