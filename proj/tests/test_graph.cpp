#include <gtest/gtest.h>

#include <sstream>

#include "localcut/generators.hpp"
#include "localcut/graph.hpp"

using namespace localcut;

namespace {

// Independent triangle check: every triple.
bool has_triangle_cubic(const RegularGraph& g) {
    for (int a = 0; a < g.node_count(); ++a) {
        for (int b = a + 1; b < g.node_count(); ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.node_count(); ++c) {
                if (g.has_edge(a, c) && g.has_edge(b, c)) return true;
            }
        }
    }
    return false;
}

bool bipartite(const RegularGraph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.node_count()), -1);
    for (int s = 0; s < g.node_count(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbours(v)) {
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    stack.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST(RegularGraph, RejectsMalformedInput) {
    EXPECT_THROW(RegularGraph(3, 2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(RegularGraph(3, 2, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(RegularGraph(3, 2, {{0, 3}}), std::invalid_argument);
}

TEST(RegularGraph, TriangleFlags) {
    auto prism = prism_graph();
    EXPECT_TRUE(prism.regular());
    EXPECT_FALSE(prism.strict());
    EXPECT_EQ(prism.triangle_edge_count(), 6U);
    EXPECT_FALSE(prism.in_triangle(static_cast<std::size_t>(prism.edge_index(0, 3))));
    EXPECT_TRUE(prism.in_triangle(static_cast<std::size_t>(prism.edge_index(1, 0))));
    EXPECT_EQ(prism.edge_index(0, 4), -1);
}

TEST(FixedFamilies, CompleteBipartite) {
    auto g = gen_fixed(Family::complete_bipartite, 3);
    EXPECT_EQ(g.node_count(), 6);
    EXPECT_EQ(g.edge_count(), 9U);
    EXPECT_TRUE(g.strict());
    EXPECT_TRUE(bipartite(g));
}

TEST(FixedFamilies, CycleAndHypercube) {
    auto c5 = gen_fixed(Family::cycle, 5);
    EXPECT_TRUE(c5.strict());
    EXPECT_FALSE(bipartite(c5));
    EXPECT_THROW(gen_fixed(Family::cycle, 3), std::invalid_argument);
    auto q4 = gen_fixed(Family::hypercube, 4);
    EXPECT_EQ(q4.node_count(), 16);
    EXPECT_EQ(q4.declared_degree(), 4);
    EXPECT_TRUE(q4.strict());
    EXPECT_THROW(gen_fixed(Family::hypercube, 1), std::invalid_argument);
}

TEST(FixedFamilies, Petersen) {
    auto g = petersen();
    EXPECT_EQ(g.node_count(), 10);
    EXPECT_EQ(g.edge_count(), 15U);
    EXPECT_TRUE(g.strict());
    EXPECT_FALSE(bipartite(g));
    // Girth 5: no 4-cycles either, i.e. adjacent or not, two nodes share at most one neighbour.
    for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) EXPECT_LE(g.common_neighbours(u, v), 1U);
    }
}

TEST(RandomBipartite, SimpleRegularTriangleFree) {
    auto g = gen_random_bipartite_regular(100, 3, 1);
    EXPECT_EQ(g.node_count(), 200);
    EXPECT_EQ(g.edge_count(), 300U);
    EXPECT_TRUE(g.strict());
    EXPECT_FALSE(has_triangle_cubic(g));
    EXPECT_TRUE(bipartite(g));
}

TEST(RandomBipartite, FourCycleIsTheOnlyOutcome) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gen_random_bipartite_regular(2, 2, seed);
        EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    }
}

TEST(RandomBipartite, SeedSensitive) {
    auto g1 = gen_random_bipartite_regular(50, 5, 1);
    auto g2 = gen_random_bipartite_regular(50, 5, 2);
    EXPECT_NE(g1.edges(), g2.edges());
    EXPECT_EQ(g1.edges(), gen_random_bipartite_regular(50, 5, 1).edges());
}

TEST(RandomBipartite, Errors) {
    EXPECT_THROW(gen_random_bipartite_regular(2, 3, 0), std::invalid_argument);
    // d = n_per_side forces K_{n,n}; repeated clashes exhaust the budget quickly for large n.
    EXPECT_THROW(gen_random_bipartite_regular(12, 12, 0), BudgetExhausted);
}

TEST(RandomTriangleFree, PassesValidator) {
    auto g = gen_random_triangle_free(20, 3, 7);
    EXPECT_TRUE(g.strict());
    EXPECT_FALSE(has_triangle_cubic(g));
    EXPECT_THROW(gen_random_triangle_free(5, 3, 7), std::invalid_argument);
}

TEST(RandomTriangleFree, LargeInstance) {
    GenerationInfo info;
    auto g = gen_random_triangle_free(1000, 4, 3, &info);
    EXPECT_TRUE(g.strict());
    EXPECT_EQ(g.edge_count(), 2000U);
    EXPECT_GE(info.attempts, 1);
    EXPECT_LE(info.attempts, kResampleBudget);
    RecordProperty("attempts", info.attempts);
}

TEST(RandomTriangleFree, ManySeedsStrict) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen_random_triangle_free(30, 3, seed);
        EXPECT_TRUE(g.strict()) << "seed " << seed;
        EXPECT_FALSE(has_triangle_cubic(g));
    }
}

TEST(RandomRegular, SimpleAndRegular) {
    auto g = gen_random_regular(30, 3, 5);
    EXPECT_TRUE(g.regular());
    EXPECT_EQ(g.edge_count(), 45U);
}

TEST(EdgeList, RoundTrip) {
    auto g = petersen();
    std::ostringstream out;
    write_edge_list(out, g);
    EXPECT_EQ(out.str().substr(0, 8), "10 15 3\n");
    auto back = parse_edge_list(out.str());
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_EQ(back.declared_degree(), 3);
    EXPECT_THROW(parse_edge_list("4 2 2\n0 1\n"), std::runtime_error);
    EXPECT_THROW(parse_edge_list(""), std::runtime_error);
}
