#include "tpgabor/rational.hpp"

#include <charconv>
#include <numeric>

#include "tpgabor/errors.hpp"

namespace tpgabor {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0)
        throw Error(ErrorCode::UsageError, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0)
        throw Error(ErrorCode::UsageError, "division of rational by zero");
    return Rational(num * o.den, den * o.num);
}

bool Rational::operator<(const Rational& o) const {
    return num * o.den < o.num * den;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw Error(ErrorCode::UsageError, "malformed number: '" + std::string(s) + "'");
    return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw Error(ErrorCode::UsageError, "empty number");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t n = parse_int(text.substr(0, slash));
        const std::int64_t d = parse_int(text.substr(slash + 1));
        if (d == 0)
            throw Error(ErrorCode::UsageError,
                        "zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 18)
            throw Error(ErrorCode::UsageError,
                        "too many decimal digits in '" + std::string(text) + "'");
        const bool negative = !whole.empty() && whole.front() == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
        if (negative && w < 0) w = -w;
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        if (f < 0)
            throw Error(ErrorCode::UsageError, "malformed decimal: '" + std::string(text) + "'");
        const std::int64_t n = w * scale + f;
        return Rational(negative ? -n : n, scale);
    }
    return Rational(parse_int(text));
}

} // namespace tpgabor
