#pragma once

// Certified numeric checks of the binomial estimates behind the large-d part
// of the lower-bound proof:
//
//   central:    0.999 / sqrt(pi n) < C(2n, n) / 4^n < 1 / sqrt(pi n)
//   off-centre: C(2n, n + delta_j(n)) > 0.995 * g_j * C(2n, n),   j = 1..4
//   auxiliary:  h_j(delta_j(1500)) > 0.995 * g_j,                  j = 1..4
//   cumulative: sum_{i=-delta+1}^{delta}   C(2n, n+i) / 4^n > 0.6088
//               sum_{i=-delta+1}^{delta-1} C(2n, n+i) / 4^n > 0.5975,  delta = delta_4(n)
//
// with delta_j(n) = floor(j sqrt(n/32)), g_j = exp(-j^2/32) and
// h_j(delta) = (1 - j^2 / (32 delta))^delta. Binomial quantities are exact
// rationals; pi and g_j enter through rational enclosures whose precision is
// doubled until each inequality is decided.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "localcut/interval.hpp"
#include "localcut/rational.hpp"

namespace localcut {

inline constexpr long kAppendixMinN = 1500;

/// floor(j * sqrt(n / 32)) = floor(sqrt(j^2 n / 32)), computed on integers.
inline long delta_j(long j, long n) {
    BigInt inner = BigInt(j) * j * n / 32;
    return boost::multiprecision::sqrt(inner).convert_to<long>();
}

/// g_j = exp(-j^2/32).
inline Interval g_enclosure(long j, unsigned bits) { return exp_neg_enclosure(Rational(j * j, 32), bits); }

/// C(2n, n) / 4^n.
inline Rational central_binomial_ratio(long n) { return make_rational(binomial(2 * n, n), pow4(static_cast<unsigned>(n))); }

/// C(2n, n + delta) / C(2n, n) = prod_{k=1}^{delta} (n - delta + k) / (n + k).
inline Rational off_centre_ratio(long n, long delta) {
    BigInt num = 1, den = 1;
    for (long k = 1; k <= delta; ++k) {
        num *= n - delta + k;
        den *= n + k;
    }
    return make_rational(num, den);
}

inline Rational h_j(long j, long delta) {
    if (delta <= 0) throw std::invalid_argument("h_j needs delta >= 1");
    Rational base = 1 - Rational(j * j, 32 * delta);
    Rational r = 1;
    for (long k = 0; k < delta; ++k) r *= base;
    return r;
}

/// sum_{i=lo}^{hi} C(2n, n+i) / 4^n.
inline Rational central_window_mass(long n, long lo, long hi) {
    if (lo > hi) return 0;
    // Walk outward from C(2n, n+lo).
    BigInt c = binomial(2 * n, n + lo);
    BigInt sum = 0;
    for (long i = lo; i <= hi; ++i) {
        sum += c;
        c *= n - i;
        c /= n + i + 1;
    }
    return make_rational(sum, pow4(static_cast<unsigned>(n)));
}

enum class Relation { greater, less };

struct EstimateRecord {
    std::string check;      // "central-lower", "off-centre", ...
    long n = 0;             // 0 when not applicable
    std::optional<long> j;  // for the off-centre and auxiliary checks
    std::optional<long> delta;
    Relation relation = Relation::greater;
    Rational target;        // the constant the quantity is compared against
    Interval quantity;      // certified enclosure at the deciding precision
    unsigned bits = 0;      // precision used for the last attempt
    Certainty status = Certainty::inconclusive;

    bool pass() const noexcept { return status == Certainty::proven; }
};

struct AppendixEstimateReport {
    std::vector<long> n_values;
    unsigned max_bits = 0;
    std::vector<EstimateRecord> records;

    bool pass() const {
        for (const auto& r : records) {
            if (!r.pass()) return false;
        }
        return !records.empty();
    }

    bool any_inconclusive() const {
        for (const auto& r : records) {
            if (r.status == Certainty::inconclusive) return true;
        }
        return false;
    }
};

namespace detail {

inline Certainty decide(const Interval& q, Relation rel, const Rational& target) {
    if (rel == Relation::greater) return certify_greater(q, target);
    if (q.hi() < target) return Certainty::proven;
    if (q.lo() >= target) return Certainty::refuted;
    return Certainty::inconclusive;
}

// Re-evaluates `quantity` at 64, 128, ... bits until decided or over `max_bits`.
inline void certify(EstimateRecord& rec, const std::function<Interval(unsigned)>& quantity, unsigned max_bits) {
    for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
        rec.bits = bits;
        rec.quantity = quantity(bits);
        rec.status = decide(rec.quantity, rec.relation, rec.target);
        if (rec.status != Certainty::inconclusive) return;
    }
}

} // namespace detail

/// Runs every estimate for each n in `n_values` (all must be >= 1500), plus
/// the auxiliary h_j check at delta_j(1500).
inline AppendixEstimateReport verify_appendix_estimates(const std::vector<long>& n_values, unsigned max_bits = 4096) {
    if (n_values.empty()) throw std::invalid_argument("no n values given");
    for (long n : n_values) {
        if (n < kAppendixMinN) {
            throw std::invalid_argument("estimates hold for n >= 1500, got n = " + std::to_string(n));
        }
    }
    if (max_bits < 64) throw std::invalid_argument("precision cap must be at least 64 bits");

    AppendixEstimateReport report;
    report.n_values = n_values;
    report.max_bits = max_bits;

    for (long n : n_values) {
        const Rational central = central_binomial_ratio(n);
        const Interval point(central);

        // Scaled form: C(2n,n)/4^n * sqrt(pi n) against 0.999 and 1.
        auto scaled = [&](unsigned bits) {
            Interval root = sqrt((pi_enclosure(bits + 8) * Interval(Rational(n))).rounded(bits + 8), bits + 4);
            return (point * root).rounded(bits);
        };
        EstimateRecord lower{"central-lower", n, {}, {}, Relation::greater, Rational(999, 1000)};
        detail::certify(lower, scaled, max_bits);
        report.records.push_back(lower);
        EstimateRecord upper{"central-upper", n, {}, {}, Relation::less, Rational(1)};
        detail::certify(upper, scaled, max_bits);
        report.records.push_back(upper);

        for (long j = 1; j <= 4; ++j) {
            const long delta = delta_j(j, n);
            const Interval ratio(off_centre_ratio(n, delta));
            EstimateRecord rec{"off-centre", n, j, delta, Relation::greater, Rational(995, 1000)};
            detail::certify(rec, [&](unsigned bits) { return (ratio / g_enclosure(j, bits + 8)).rounded(bits); },
                            max_bits);
            report.records.push_back(rec);
        }

        const long delta = delta_j(4, n);
        EstimateRecord first{"window-first", n, 4, delta, Relation::greater, Rational(6088, 10000)};
        const Interval mass_first(central_window_mass(n, -delta + 1, delta));
        detail::certify(first, [&](unsigned bits) { return mass_first.rounded(bits); }, max_bits);
        report.records.push_back(first);

        EstimateRecord second{"window-second", n, 4, delta, Relation::greater, Rational(5975, 10000)};
        const Interval mass_second(central_window_mass(n, -delta + 1, delta - 1));
        detail::certify(second, [&](unsigned bits) { return mass_second.rounded(bits); }, max_bits);
        report.records.push_back(second);
    }

    for (long j = 1; j <= 4; ++j) {
        const long delta = delta_j(j, kAppendixMinN);
        const Interval h(h_j(j, delta));
        EstimateRecord rec{"off-centre-base", kAppendixMinN, j, delta, Relation::greater, Rational(995, 1000)};
        detail::certify(rec, [&](unsigned bits) { return (h / g_enclosure(j, bits + 8)).rounded(bits); }, max_bits);
        report.records.push_back(rec);
    }
    return report;
}

inline nlohmann::json to_json(const AppendixEstimateReport& r) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : r.records) {
        nlohmann::json j{{"check", rec.check},
                         {"n", rec.n},
                         {"relation", rec.relation == Relation::greater ? ">" : "<"},
                         {"target", to_double(rec.target)},
                         {"lo", to_double(rec.quantity.lo())},
                         {"hi", to_double(rec.quantity.hi())},
                         {"bits", rec.bits},
                         {"status", to_string(rec.status)}};
        if (rec.j) j["j"] = *rec.j;
        if (rec.delta) j["delta"] = *rec.delta;
        records.push_back(std::move(j));
    }
    return {{"n_values", r.n_values},
            {"max_bits", r.max_bits},
            {"pass", r.pass()},
            {"inconclusive", r.any_inconclusive()},
            {"records", std::move(records)}};
}

} // namespace localcut
