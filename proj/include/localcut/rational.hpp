#pragma once

// Exact arithmetic helpers: big integers, rationals and binomial coefficients.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace localcut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

inline BigInt pow2(unsigned exponent) {
    BigInt r = 1;
    r <<= exponent;
    return r;
}

inline BigInt pow4(unsigned exponent) { return pow2(2 * exponent); }

/// Binomial coefficient with the convention C(n, k) = 0 outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Row n of Pascal's triangle: C(n, 0), ..., C(n, n).
inline std::vector<BigInt> binomial_row(long n) {
    if (n < 0) return {};
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long k = 1; k <= n; ++k) {
        row[k] = row[k - 1] * (n - k + 1);
        row[k] /= k;
    }
    return row;
}

/// "num/den" in lowest terms; integers print with denominator 1.
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

// Numerator and denominator may each exceed the double range, so divide in
// the integer domain with a 64-bit quotient and rescale.
inline double to_double(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (num == 0) return 0.0;
    bool negative = num < 0;
    if (negative) num = -num;
    long shift = static_cast<long>(boost::multiprecision::msb(den)) -
                 static_cast<long>(boost::multiprecision::msb(num)) + 64;
    BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt((num >> -shift) / den);
    double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
    return negative ? -v : v;
}

} // namespace localcut
