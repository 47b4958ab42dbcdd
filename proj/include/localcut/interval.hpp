#pragma once

// Certified interval arithmetic over exact rationals.
//
// Endpoints are rationals; after every operation that would otherwise grow
// them (products, quotients, transcendental enclosures) they are rounded
// outward to dyadic numbers k / 2^bits. Every true value therefore stays inside
// its interval, and a decision is conclusive exactly when the interval lies on
// one side of the threshold.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "localcut/rational.hpp"

namespace localcut {

namespace detail {

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den; // truncates toward zero
    if ((num % den != 0) && ((num < 0) != (den < 0))) q -= 1;
    return q;
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) { return -floor_div(-num, den); }

} // namespace detail

inline Rational round_down(const Rational& x, unsigned bits) {
    return make_rational(detail::floor_div(numerator(x) << bits, denominator(x)), pow2(bits));
}

inline Rational round_up(const Rational& x, unsigned bits) {
    return make_rational(detail::ceil_div(numerator(x) << bits, denominator(x)), pow2(bits));
}

class Interval {
public:
    Interval() = default;
    explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
    }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool positive() const { return lo_ > 0; }

    Interval rounded(unsigned bits) const { return {round_down(lo_, bits), round_up(hi_, bits)}; }

    friend Interval operator+(const Interval& x, const Interval& y) { return {x.lo_ + y.lo_, x.hi_ + y.hi_}; }
    friend Interval operator-(const Interval& x, const Interval& y) { return {x.lo_ - y.hi_, x.hi_ - y.lo_}; }

    friend Interval operator*(const Interval& x, const Interval& y) {
        Rational a = x.lo_ * y.lo_, b = x.lo_ * y.hi_, c = x.hi_ * y.lo_, d = x.hi_ * y.hi_;
        return {std::min({a, b, c, d}), std::max({a, b, c, d})};
    }

    friend Interval operator/(const Interval& x, const Interval& y) {
        if (y.lo_ <= 0 && y.hi_ >= 0) throw std::domain_error("interval division by an interval containing 0");
        return x * Interval(1 / y.hi_, 1 / y.lo_);
    }

private:
    Rational lo_ = 0;
    Rational hi_ = 0;
};

/// Enclosure of sqrt(x) for x >= 0, endpoints on the grid 2^-bits.
inline Interval sqrt(const Interval& x, unsigned bits) {
    if (x.lo() < 0) throw std::domain_error("sqrt of an interval reaching below 0");
    const BigInt scale = pow2(bits);
    // floor(sqrt(floor(lo * 4^bits))) / 2^bits <= sqrt(lo)
    BigInt lo_scaled = detail::floor_div(numerator(x.lo()) << (2 * bits), denominator(x.lo()));
    BigInt lo_root = boost::multiprecision::sqrt(lo_scaled);
    BigInt hi_scaled = detail::ceil_div(numerator(x.hi()) << (2 * bits), denominator(x.hi()));
    BigInt hi_root = boost::multiprecision::sqrt(hi_scaled);
    if (hi_root * hi_root < hi_scaled) hi_root += 1;
    return {make_rational(lo_root, scale), make_rational(hi_root, scale)};
}

/// arctan(1/x) for integer x >= 2 from its alternating series; consecutive
/// partial sums bracket the limit.
inline Interval arctan_inverse(long x, unsigned bits) {
    if (x < 2) throw std::invalid_argument("arctan_inverse needs x >= 2");
    const Rational tolerance = make_rational(1, pow2(bits + 2));
    const BigInt x2 = BigInt(x) * x;
    Rational sum = 0;
    BigInt power = x; // x^(2k+1)
    for (long k = 0;; ++k) {
        Rational term = make_rational(1, power * (2 * k + 1));
        Rational next = (k % 2 == 0) ? Rational(sum + term) : Rational(sum - term);
        if (term < tolerance) {
            Interval enclosure(std::min(sum, next), std::max(sum, next));
            return enclosure.rounded(bits);
        }
        sum = next;
        power *= x2;
    }
}

/// pi = 16 arctan(1/5) - 4 arctan(1/239).
inline Interval pi_enclosure(unsigned bits) {
    Interval r = Interval(Rational(16)) * arctan_inverse(5, bits + 6) -
                 Interval(Rational(4)) * arctan_inverse(239, bits + 6);
    return r.rounded(bits);
}

/// exp(-x) for rational x >= 0. Arguments above 1/2 are halved m times and the
/// enclosure squared back up; below that the Taylor series alternates with
/// decreasing terms, so consecutive partial sums bracket the limit.
inline Interval exp_neg_enclosure(const Rational& x, unsigned bits) {
    if (x < 0) throw std::domain_error("exp_neg_enclosure expects x >= 0");
    unsigned halvings = 0;
    Rational y = x;
    while (y > Rational(1, 2)) {
        y /= 2;
        ++halvings;
    }
    const unsigned work_bits = bits + 2 * halvings + 8;
    const Rational tolerance = make_rational(1, pow2(work_bits + 2));
    Rational sum = 1;
    Rational term = 1;
    Interval e;
    for (long k = 1;; ++k) {
        term *= y / k;
        Rational next = (k % 2 == 1) ? Rational(sum - term) : Rational(sum + term);
        if (term < tolerance) {
            e = Interval(std::min(sum, next), std::max(sum, next)).rounded(work_bits);
            break;
        }
        sum = next;
    }
    for (unsigned i = 0; i < halvings; ++i) e = (e * e).rounded(work_bits);
    return e.rounded(bits);
}

enum class Certainty { proven, refuted, inconclusive };

inline std::string to_string(Certainty c) {
    switch (c) {
    case Certainty::proven:
        return "proven";
    case Certainty::refuted:
        return "refuted";
    case Certainty::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

/// Decide quantity > threshold from an enclosure of the quantity.
inline Certainty certify_greater(const Interval& quantity, const Rational& threshold) {
    if (quantity.lo() > threshold) return Certainty::proven;
    if (quantity.hi() <= threshold) return Certainty::refuted;
    return Certainty::inconclusive;
}

} // namespace localcut
