#pragma once

// Exact analysis of threshold algorithms.
//
// alpha(tau, d) is the expected cut weight of the tau-threshold rule on any
// d-regular triangle-free graph. For tau > d/2 it has the closed form
//
//   alpha = 1/2 + C(d-1, tau-1) * sum_{i=d-tau+1}^{tau-1} C(d-1, i) / 4^(d-1)
//
// and for tau <= d/2 it is evaluated as a cut of the neighbourhood graph.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "localcut/cutsearch.hpp"
#include "localcut/ngraph.hpp"
#include "localcut/rational.hpp"

namespace localcut {

inline void check_tau(int tau, int d) {
    check_degree(d);
    if (tau < 0 || tau > d + 1) {
        throw std::out_of_range("threshold " + std::to_string(tau) + " outside [0, " + std::to_string(d + 1) + "]");
    }
}

/// Precomputed row C(d-1, .) with prefix sums; answers alpha queries for a
/// fixed degree with one multiplication each.
class AlphaTable {
public:
    explicit AlphaTable(int d) : degree_(d), row_(binomial_row(d - 1)), prefix_(row_.size() + 1) {
        check_degree(d);
        prefix_[0] = 0;
        for (std::size_t i = 0; i < row_.size(); ++i) prefix_[i + 1] = prefix_[i] + row_[i];
        denominator_ = pow4(static_cast<unsigned>(d - 1));
    }

    int degree() const noexcept { return degree_; }

    /// 4^(d-1) * (alpha - 1/2) for tau > d/2; zero when the summation is empty.
    BigInt excess_numerator(int tau) const {
        check_tau(tau, degree_);
        if (2 * tau <= degree_) throw std::domain_error("closed form requires tau > d/2");
        if (tau == 0 || tau - 1 > degree_ - 1) return 0;
        const int lo = degree_ - tau + 1;
        const int hi = tau - 1;
        if (lo > hi) return 0;
        return row_[static_cast<std::size_t>(tau - 1)] *
               (prefix_[static_cast<std::size_t>(hi) + 1] - prefix_[static_cast<std::size_t>(lo)]);
    }

    /// 4^(d-1); alpha = 1/2 + excess_numerator / excess_denominator.
    const BigInt& excess_denominator() const noexcept { return denominator_; }

    Rational closed_form(int tau) const {
        return Rational(1, 2) + make_rational(excess_numerator(tau), denominator_);
    }

private:
    int degree_;
    std::vector<BigInt> row_;
    std::vector<BigInt> prefix_;
    BigInt denominator_;
};

/// Closed form; requires tau > d/2.
inline Rational alpha_closed_form(int tau, int d) { return AlphaTable(d).closed_form(tau); }

/// Neighbourhood-graph route, valid for every tau.
inline Rational alpha_via_ngraph(int tau, int d) {
    check_tau(tau, d);
    return evaluate_cut(build_ngraph(d), threshold_assignment(ThresholdRule(d, tau)));
}

inline Rational alpha(int tau, int d) {
    check_tau(tau, d);
    return 2 * tau > d ? alpha_closed_form(tau, d) : alpha_via_ngraph(tau, d);
}

struct OptimalTau {
    int tau;
    Rational alpha;
    std::vector<int> ties; // every maximiser, ascending
};

/// Maximiser of alpha(., d) over [0, d+1], smallest tau on ties.
///
/// Only tau > d/2 is scanned: for tau <= d/2 alpha <= 1/2 (the factor
/// sum C(d-1,i) over [d-tau+1, tau-1] turns into a non-positive difference of
/// prefix sums), whereas tau = d+1 already attains 1/2 and the interior
/// optimum is strictly larger for every d >= 2.
inline OptimalTau optimal_tau(int d) {
    AlphaTable table(d);
    OptimalTau best{d + 1, Rational(1, 2), {}};
    std::optional<BigInt> best_excess;
    for (int tau = d / 2 + 1; tau <= d + 1; ++tau) {
        BigInt e = table.excess_numerator(tau);
        if (!best_excess || e > *best_excess) {
            best_excess = e;
            best.tau = tau;
            best.ties = {tau};
        } else if (e == *best_excess) {
            best.ties.push_back(tau);
        }
    }
    best.alpha = Rational(1, 2) + make_rational(*best_excess, table.excess_denominator());
    return best;
}

/// ceil((d + sqrt d) / 2) in integer arithmetic: smallest t with 2t >= d and (2t - d)^2 >= d.
inline int tau_formula(int d) {
    check_degree(d);
    int t = (d + 1) / 2;
    while (static_cast<long long>(2 * t - d) * (2 * t - d) < d) ++t;
    return t;
}

/// A bound of the form 1/2 + sqrt(c / d) with c rational, compared exactly
/// against rationals by squaring: r >= bound <=> r >= 1/2 and (r-1/2)^2 * d >= c.
class SqrtBound {
public:
    SqrtBound(Rational c, int d) : c_(std::move(c)), d_(d) { check_degree(d); }

    int degree() const noexcept { return d_; }

    /// Sign of r - bound: -1, 0 or +1.
    int compare(const Rational& r) const {
        Rational excess = r - Rational(1, 2);
        if (excess < 0) return -1;
        Rational lhs = excess * excess * d_;
        return lhs < c_ ? -1 : (lhs == c_ ? 0 : 1);
    }

    /// The exact value when sqrt(c/d) is rational.
    std::optional<Rational> exact() const {
        Rational q = c_ / d_;
        BigInt num = numerator(q);
        BigInt den = denominator(q);
        BigInt rn = boost::multiprecision::sqrt(num);
        BigInt rd = boost::multiprecision::sqrt(den);
        if (rn * rn != num || rd * rd != den) return std::nullopt;
        return Rational(1, 2) + make_rational(rn, rd);
    }

    double approx() const { return 0.5 + std::sqrt(to_double(c_) / d_); }

private:
    Rational c_;
    int d_;
};

/// 1/2 + 9/(32 sqrt d), i.e. c = 81/1024.
inline SqrtBound our_bound(int d) { return SqrtBound(Rational(81, 1024), d); }

/// Shearer's guarantee 1/2 + sqrt 2/(8 sqrt d), i.e. c = 1/32.
inline SqrtBound shearer_bound(int d) { return SqrtBound(Rational(1, 32), d); }

struct BoundCheck {
    int degree;
    int tau;
    Rational alpha;
    int comparison; // sign of alpha - bound
    double margin;  // alpha - bound, in floating point for reporting

    bool pass() const noexcept { return comparison >= 0; }
    bool equality() const noexcept { return comparison == 0; }
};

struct BoundReport {
    int d_min = 2;
    int d_max = 2;
    std::vector<BoundCheck> checks;

    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass()) return false;
        }
        return true;
    }

    std::vector<int> equality_degrees() const {
        std::vector<int> r;
        for (const auto& c : checks) {
            if (c.equality()) r.push_back(c.degree);
        }
        return r;
    }

    std::vector<int> failing_degrees() const {
        std::vector<int> r;
        for (const auto& c : checks) {
            if (!c.pass()) r.push_back(c.degree);
        }
        return r;
    }
};

inline BoundCheck check_theorem_bound(int d) {
    AlphaTable table(d);
    const int tau = tau_formula(d);
    BoundCheck c{d, tau, table.closed_form(tau), 0, 0.0};
    auto bound = our_bound(d);
    c.comparison = bound.compare(c.alpha);
    c.margin = to_double(c.alpha) - bound.approx();
    if (c.comparison == 0) c.margin = 0.0;
    return c;
}

/// alpha(tau_formula(d), d) >= 1/2 + 9/(32 sqrt d) for every d in [2, d_max].
inline BoundReport verify_theorem_bound(int d_max) {
    if (d_max < 2) throw std::invalid_argument("d_max must be at least 2");
    BoundReport report;
    report.d_max = d_max;
    report.checks.reserve(static_cast<std::size_t>(d_max - 1));
    for (int d = 2; d <= d_max; ++d) report.checks.push_back(check_theorem_bound(d));
    return report;
}

inline nlohmann::json to_json(const BoundReport& r, bool include_checks = true) {
    nlohmann::json j{{"d_min", r.d_min},
                     {"d_max", r.d_max},
                     {"pass", r.pass()},
                     {"equality_degrees", r.equality_degrees()},
                     {"failing_degrees", r.failing_degrees()}};
    if (include_checks) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : r.checks) {
            arr.push_back({{"d", c.degree},
                           {"tau", c.tau},
                           {"alpha", to_double(c.alpha)},
                           {"bound", our_bound(c.degree).approx()},
                           {"margin", c.margin},
                           {"equality", c.equality()},
                           {"pass", c.pass()}});
        }
        j["checks"] = std::move(arr);
    }
    return j;
}

} // namespace localcut
