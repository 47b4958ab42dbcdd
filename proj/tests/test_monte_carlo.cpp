#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "localcut/analysis.hpp"
#include "localcut/generators.hpp"
#include "localcut/monte_carlo.hpp"
#include "oracles.hpp"

using namespace localcut;

namespace {

std::vector<std::vector<int>> adjacency(const RegularGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) {
        for (int u : g.neighbours(v)) adj[v].push_back(u);
    }
    return adj;
}

} // namespace

TEST(MonteCarlo, Deterministic) {
    auto g = petersen();
    auto s1 = monte_carlo(g, AlgorithmSpec::threshold(3), 500, 42);
    auto s2 = monte_carlo(g, AlgorithmSpec::threshold(3), 500, 42);
    auto s3 = monte_carlo(g, AlgorithmSpec::threshold(3), 500, 43);
    EXPECT_EQ(s1.total_cut_edges, s2.total_cut_edges);
    EXPECT_EQ(s1.mean, s2.mean);
    EXPECT_NE(s1.total_cut_edges, s3.total_cut_edges);
}

TEST(MonteCarlo, SingleTrialOnFourCycle) {
    auto s = monte_carlo(cycle_graph(4), AlgorithmSpec::threshold(3), 1, 0);
    EXPECT_TRUE(s.mean == 0.0 || s.mean == 0.25 || s.mean == 0.5 || s.mean == 0.75 || s.mean == 1.0);
    EXPECT_EQ(s.standard_error, 0.0);
}

TEST(MonteCarlo, FourCycleMatchesEnumeration) {
    auto g = cycle_graph(4);
    // Expected cut edges over all 16 labellings, divided by 16 * 4 edges.
    const double exact = static_cast<double>(oracle::threshold_cut_edges_total(adjacency(g), 2)) / 64.0;
    EXPECT_DOUBLE_EQ(exact, 0.75);
    EXPECT_EQ(alpha(2, 2), Rational(3, 4));
    auto s = monte_carlo(g, AlgorithmSpec::threshold(2), 20000, kDefaultSeed);
    EXPECT_LE(std::abs(s.mean - exact), 3 * s.standard_error);
}

TEST(MonteCarlo, SmallGraphsMatchEnumeration) {
    for (auto g : {petersen(), complete_bipartite(3), cycle_graph(7)}) {
        const int d = g.declared_degree();
        const int tau = tau_formula(d);
        const double exact = static_cast<double>(oracle::threshold_cut_edges_total(adjacency(g), tau)) /
                             (std::ldexp(1.0, g.node_count()) * static_cast<double>(g.edge_count()));
        EXPECT_NEAR(exact, to_double(alpha(tau, d)), 1e-12);
    }
}

TEST(MonteCarlo, PerEdgeAndJson) {
    auto g = complete_bipartite(3);
    auto s = monte_carlo(g, AlgorithmSpec::threshold(3), 2000, 1, {true});
    ASSERT_TRUE(s.per_edge.has_value());
    std::size_t sum = 0;
    for (auto c : *s.per_edge) sum += c;
    EXPECT_EQ(sum, s.total_cut_edges);
    EXPECT_FALSE(s.triangle_mean.has_value());
    EXPECT_DOUBLE_EQ(s.non_triangle_mean, s.mean);
    auto j = to_json(s);
    EXPECT_EQ(j["trials"], 2000);
    EXPECT_TRUE(j.contains("stderr"));
    EXPECT_EQ(j["per_edge"].size(), 9U);
    std::ostringstream csv;
    write_csv(csv, s);
    EXPECT_EQ(csv.str().substr(0, 18), "trials,edges,mean,");
}

TEST(MonteCarlo, Errors) {
    EXPECT_THROW(monte_carlo(petersen(), AlgorithmSpec::threshold(3), 0, 1), std::invalid_argument);
    EXPECT_THROW(monte_carlo(prism_graph(), AlgorithmSpec::threshold(3), 10, 1), std::invalid_argument);
}

TEST(JointDistribution, CompleteBipartiteCells) {
    auto g = complete_bipartite(3);
    const std::size_t trials = 20000;
    auto dist = empirical_joint_distribution(g, {0, 3}, trials, 5);
    // Two b-labelled adjacent nodes: v agrees with u, so l(v) >= 1.
    EXPECT_EQ(dist.count({Side::b, 0}, {Side::b, 1}), 0U);
    const double p = 1.0 / 16.0;
    const double f = static_cast<double>(dist.count({Side::a, 1}, {Side::b, 1})) / trials;
    EXPECT_LE(std::abs(f - p), 3 * std::sqrt(p * (1 - p) / trials));
    EXPECT_THROW(empirical_joint_distribution(g, {0, 1}, 10, 5), std::invalid_argument);
    EXPECT_THROW(empirical_joint_distribution(prism_graph(), {0, 3}, 10, 5), std::invalid_argument);
}

TEST(JointDistribution, PetersenTotalVariation) {
    auto g = petersen();
    auto ng = build_ngraph(3);
    auto dist = empirical_joint_distribution(g, {0, 1}, 50000, 8);
    double tv = 0;
    for (std::size_t x = 0; x < ng.node_count(); ++x) {
        for (std::size_t y = 0; y < ng.node_count(); ++y) tv += std::abs(dist.frequency(x, y) - to_double(ng.weight(x, y)));
    }
    EXPECT_LT(tv / 2, 0.02);
}

TEST(VirtualNeighbour, StarAndPathMatchAlpha) {
    const int d = 4, tau = 3;
    const double a = to_double(alpha(tau, d));
    for (auto g : {star_graph(3, d), path_graph(6, d)}) {
        auto s = monte_carlo(g, AlgorithmSpec::virtual_neighbour(d, tau), 20000, 17);
        EXPECT_LE(std::abs(s.mean - a), 3 * s.standard_error);
    }
}

TEST(Triangles, NonTriangleEdgesMatchAlpha) {
    auto g = prism_graph();
    auto s = monte_carlo(g, AlgorithmSpec::threshold(3, TrianglePolicy::allow), 20000, 23);
    const double a = to_double(alpha(3, 3));
    EXPECT_EQ(s.non_triangle_edges, 3U);
    ASSERT_TRUE(s.triangle_mean.has_value());
    EXPECT_LE(std::abs(s.non_triangle_mean - a), 3 * s.non_triangle_stderr);
}
