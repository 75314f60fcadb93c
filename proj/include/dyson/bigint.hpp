#ifndef DYSON_BIGINT_HPP
#define DYSON_BIGINT_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyson
{

/// Arbitrary-precision signed integer used for every exact count.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt &x)
{
    return x.str();
}

inline BigInt parse_bigint(const std::string &s)
{
    if (s.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        throw std::invalid_argument("malformed integer literal: " + s);
    }
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("malformed integer literal: " + s);
        }
    }
    return BigInt(s);
}

/// Nearest double (may be +inf beyond the double range).
inline double to_double(const BigInt &x)
{
    return x.convert_to<double>();
}

/// Natural logarithm of a positive integer, usable far beyond the double range.
inline double log_of(const BigInt &x)
{
    if (x <= 0) {
        throw std::domain_error("log_of requires a positive integer");
    }
    const auto bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
    if (bits <= 1000) {
        return std::log(to_double(x));
    }
    const long shift = bits - 64;
    const BigInt top = x >> shift;
    return std::log(to_double(top)) + static_cast<double>(shift) * std::log(2.0);
}

/// Exact three-way comparison between an integer and a finite double.
inline std::partial_ordering compare_exact(const BigInt &x, double d)
{
    if (std::isnan(d)) {
        return std::partial_ordering::unordered;
    }
    if (std::isinf(d)) {
        return d > 0 ? std::partial_ordering::less : std::partial_ordering::greater;
    }
    const double fl = std::floor(d);
    // Every finite floor(d) is an integer and converts exactly.
    const BigInt base(fl);
    if (x < base) {
        return std::partial_ordering::less;
    }
    if (x > base) {
        // x >= base + 1 > d whenever d has a fractional part; otherwise x > d = base.
        return std::partial_ordering::greater;
    }
    return fl == d ? std::partial_ordering::equivalent : std::partial_ordering::less;
}

inline bool exact_less(double d, const BigInt &x)
{
    return compare_exact(x, d) == std::partial_ordering::greater;
}

inline bool exact_less(const BigInt &x, double d)
{
    return compare_exact(x, d) == std::partial_ordering::less;
}

} // namespace dyson

#endif
