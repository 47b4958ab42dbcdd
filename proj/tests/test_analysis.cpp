#include <gtest/gtest.h>

#include "localcut/analysis.hpp"
#include "oracles.hpp"

using namespace localcut;

TEST(Alpha, Boundaries) {
    for (int d = 2; d <= 40; ++d) {
        EXPECT_EQ(alpha(0, d), Rational(1, 2)) << "d=" << d;
        EXPECT_EQ(alpha(d + 1, d), Rational(1, 2)) << "d=" << d;
    }
}

TEST(Alpha, KnownValues) {
    EXPECT_EQ(alpha(3, 3), Rational(11, 16));
    EXPECT_EQ(alpha(3, 4), Rational(41, 64));
    EXPECT_EQ(alpha(2, 2), Rational(3, 4));
    EXPECT_EQ(alpha(4, 4), Rational(39, 64));
}

TEST(Alpha, RejectsBadArguments) {
    EXPECT_THROW(alpha(-1, 3), std::out_of_range);
    EXPECT_THROW(alpha(5, 3), std::out_of_range);
    EXPECT_THROW(alpha(1, 1), std::invalid_argument);
    EXPECT_THROW(alpha_closed_form(2, 4), std::domain_error);
}

TEST(Alpha, ClosedFormAgreesWithNeighbourhoodGraph) {
    for (int d = 2; d <= 32; ++d) {
        auto g = build_ngraph(d);
        for (int tau = 0; tau <= d + 1; ++tau) {
            auto via_graph = evaluate_cut(g, threshold_assignment({d, tau}));
            EXPECT_EQ(alpha(tau, d), via_graph) << "d=" << d << " tau=" << tau;
            if (2 * tau > d) EXPECT_EQ(alpha_closed_form(tau, d), via_graph) << "d=" << d << " tau=" << tau;
        }
    }
}

TEST(Alpha, AgreesWithEdgeEnumerationOracle) {
    for (int d = 2; d <= 8; ++d) {
        for (int tau = 0; tau <= d + 1; ++tau) {
            Rational expected = make_rational(BigInt(oracle::threshold_cut_count(d, tau)), pow4(static_cast<unsigned>(d)));
            EXPECT_EQ(alpha(tau, d), expected) << "d=" << d << " tau=" << tau;
        }
    }
}

// Below d/2 the rule never beats a uniform cut; this is what lets
// optimal_tau skip that half of the range.
TEST(Alpha, LowThresholdsNeverExceedOneHalf) {
    for (int d = 2; d <= 32; ++d) {
        for (int tau = 0; 2 * tau <= d; ++tau) {
            auto a = alpha(tau, d);
            EXPECT_LE(a, Rational(1, 2)) << "d=" << d << " tau=" << tau;
            EXPECT_GE(a, Rational(1, 4));
        }
        for (int tau = d / 2 + 1; tau <= d + 1; ++tau) EXPECT_GE(alpha(tau, d), Rational(1, 2));
    }
}

TEST(OptimalTau, TableValues) {
    const int expected[] = {2,  3,  3,  4,  5,  5,  6,  6,  7,  7,  8,  9,  9,  10, 10, 11,
                            11, 12, 12, 13, 14, 14, 15, 15, 16, 16, 17, 17, 18, 18, 19};
    for (int d = 2; d <= 32; ++d) EXPECT_EQ(optimal_tau(d).tau, expected[d - 2]) << "d=" << d;
}

TEST(OptimalTau, MatchesFullRangeScan) {
    for (int d = 2; d <= 24; ++d) {
        int best_tau = 0;
        Rational best = alpha(0, d);
        for (int tau = 1; tau <= d + 1; ++tau) {
            auto a = alpha(tau, d);
            if (a > best) {
                best = a;
                best_tau = tau;
            }
        }
        auto r = optimal_tau(d);
        EXPECT_EQ(r.tau, best_tau) << "d=" << d;
        EXPECT_EQ(r.alpha, best) << "d=" << d;
    }
}

// Regression anchor from the exact sweep.
TEST(OptimalTau, Degree500) {
    auto r = optimal_tau(500);
    EXPECT_EQ(r.tau, 260);
    EXPECT_EQ(r.ties, std::vector<int>{260});
    EXPECT_EQ(boost::multiprecision::msb(denominator(r.alpha)), 998U);
    EXPECT_NEAR(to_double(r.alpha), 0.51503982977182616, 1e-15);
}

TEST(OptimalTau, InUpperHalfUpTo1000) {
    for (int d = 2; d <= 1000; ++d) {
        auto r = optimal_tau(d);
        EXPECT_GT(2 * r.tau, d) << "d=" << d;
        EXPECT_LE(r.tau, d + 1) << "d=" << d;
    }
}

TEST(TauFormula, Values) {
    EXPECT_EQ(tau_formula(4), 3);
    EXPECT_EQ(tau_formula(9), 6);
    EXPECT_EQ(tau_formula(22), 14);
    EXPECT_EQ(tau_formula(2), 2);
    EXPECT_EQ(tau_formula(3), 3);
}

TEST(TauFormula, MatchesFloatingCeilingAwayFromSquares) {
    for (int d = 2; d <= 5000; ++d) {
        const double x = (d + std::sqrt(static_cast<double>(d))) / 2.0;
        if (std::abs(x - std::round(x)) < 1e-9) continue;
        EXPECT_EQ(tau_formula(d), static_cast<int>(std::ceil(x))) << "d=" << d;
    }
    // Perfect squares: (d + sqrt d)/2 is an integer.
    EXPECT_EQ(tau_formula(16), 10);
    EXPECT_EQ(tau_formula(2500), 1275);
}

TEST(TauFormula, NeverBeatsTheOptimum) {
    const int table[] = {2,  3,  3,  4,  5,  5,  6,  6,  7,  7,  8,  9,  9,  10, 10, 11,
                         11, 12, 12, 13, 14, 14, 15, 15, 16, 16, 17, 17, 18, 18, 19};
    for (int d = 2; d <= 200; ++d) {
        auto best = optimal_tau(d);
        auto formula = alpha(tau_formula(d), d);
        EXPECT_LE(formula, best.alpha);
        if (d <= 32 && tau_formula(d) == table[d - 2]) EXPECT_EQ(formula, best.alpha);
    }
}

TEST(Bounds, ExactValues) {
    EXPECT_EQ(our_bound(4).exact(), Rational(41, 64));
    EXPECT_EQ(our_bound(16).exact(), Rational(1, 2) + Rational(9, 128));
    EXPECT_FALSE(our_bound(3).exact().has_value());
    EXPECT_EQ(shearer_bound(2).exact(), Rational(5, 8));
    EXPECT_EQ(shearer_bound(8).exact(), Rational(1, 2) + Rational(1, 16));
}

TEST(Bounds, SquaredComparison) {
    // (3/16)^2 * 1024 * 3 = 108 >= 81
    EXPECT_EQ(our_bound(3).compare(Rational(11, 16)), 1);
    EXPECT_EQ(our_bound(4).compare(Rational(41, 64)), 0);
    EXPECT_EQ(our_bound(4).compare(Rational(40, 64)), -1);
    EXPECT_EQ(our_bound(4).compare(Rational(1, 4)), -1);
    for (int d = 2; d <= 50; ++d) {
        EXPECT_GT(our_bound(d).approx(), shearer_bound(d).approx());
        if (auto e = our_bound(d).exact()) EXPECT_EQ(shearer_bound(d).compare(*e), 1);
    }
}

TEST(TheoremBound, SmallRange) {
    auto report = verify_theorem_bound(50);
    EXPECT_TRUE(report.pass());
    EXPECT_EQ(report.equality_degrees(), std::vector<int>{4});
    for (const auto& c : report.checks) {
        EXPECT_GE(c.margin, 0.0);
        EXPECT_EQ(shearer_bound(c.degree).compare(c.alpha), 1);
        EXPECT_LE(c.alpha, optimal_tau(c.degree).alpha);
    }
    EXPECT_THROW(verify_theorem_bound(1), std::invalid_argument);
}

TEST(TheoremBound, JsonShape) {
    auto j = to_json(verify_theorem_bound(10));
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["checks"].size(), 9U);
    EXPECT_EQ(j["equality_degrees"], nlohmann::json::array({4}));
}
