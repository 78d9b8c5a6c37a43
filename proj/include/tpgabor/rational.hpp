#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tpgabor {

/// Exact fraction with normalized sign (den > 0) and gcd-reduced terms.
/// Carries lattice and period parameters wherever a divisibility test
/// (K/M integral, L/a integral, alpha*beta < 1) must be exact.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    bool positive() const { return num > 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::int64_t floor() const;
    std::int64_t ceil() const;

    std::string str() const;
};

/// Parses "5", "-3/4" or a plain decimal such as "0.125" into an exact fraction.
/// Throws Error(UsageError) on malformed or zero-denominator input.
Rational parse_rational(std::string_view text);

} // namespace tpgabor
