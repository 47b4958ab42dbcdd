#include <gtest/gtest.h>

#include <map>

#include "localcut/algorithms.hpp"
#include "localcut/generators.hpp"

using namespace localcut;

namespace {

// Bits taken from a table, defaulting to a hash so every address is defined.
struct TableBits {
    std::map<std::pair<int, int>, bool> table;
    CounterBits fallback{1, 0};

    bool bit(int node, int stream) const {
        auto it = table.find({node, stream});
        return it == table.end() ? fallback.bit(node, stream) : it->second;
    }
};

std::vector<int> distances_from(const RegularGraph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (int u : g.neighbours(queue[k])) {
            if (dist[u] < 0) {
                dist[u] = dist[queue[k]] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

} // namespace

TEST(Threshold, ExtremeThresholds) {
    auto g = petersen();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto uniform = run_uniform(g, CounterBits(seed, 0));
        EXPECT_EQ(run_threshold(g, 4, seed), uniform);
        EXPECT_EQ(run_threshold(g, 0, seed), uniform.complement());
    }
}

TEST(Threshold, HandComputedOnFourCycle) {
    auto g = cycle_graph(4); // 0-1-2-3-0
    TableBits bits;
    for (int v = 0; v < 4; ++v) bits.table[{v, 0}] = v == 0; // node 0 on b, the rest on a
    // Node 2 sees two like neighbours; nodes 1 and 3 see one; node 0 sees none.
    auto out = run_threshold(g, 2, bits);
    EXPECT_EQ(to_string(out), "baba");
    EXPECT_EQ(cut_weight(g, out), 1.0);
}

TEST(Threshold, UsesOneBitPerNode) {
    auto g = gen_random_triangle_free(40, 4, 2);
    CountingBits counting(CounterBits(5, 0), 40);
    run_threshold(g, 3, counting);
    for (int c : counting.counts()) EXPECT_EQ(c, 1);
}

TEST(Shearer, UsesThreeBitsPerNode) {
    auto g = petersen();
    CountingBits counting(CounterBits(5, 0), 10);
    run_shearer(g, counting);
    for (int c : counting.counts()) EXPECT_EQ(c, 3);
}

TEST(Shearer, OddDegreeIgnoresTieBreaker) {
    auto g = petersen();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        TableBits flipped;
        flipped.fallback = CounterBits(seed, 0);
        for (int v = 0; v < 10; ++v) flipped.table[{v, 2}] = !flipped.fallback.bit(v, 2);
        EXPECT_EQ(run_shearer(g, CounterBits(seed, 0)), run_shearer(g, flipped));
    }
}

TEST(Shearer, FollowsSecondCutAboveHalf) {
    auto g = cycle_graph(4);
    TableBits bits;
    for (int v = 0; v < 4; ++v) {
        bits.table[{v, 0}] = false; // everyone agrees: 2 > d/2
        bits.table[{v, 1}] = v % 2 == 1;
    }
    EXPECT_EQ(to_string(run_shearer(g, bits)), "abab");
}

// A node's output depends only on bits within distance 1 of it.
TEST(Locality, OneRound) {
    auto g = gen_random_triangle_free(30, 3, 11);
    for (int target = 0; target < 30; target += 7) {
        auto dist = distances_from(g, target);
        for (int far = 0; far < 30; ++far) {
            if (dist[far] <= 1) continue;
            TableBits base, changed;
            base.fallback = changed.fallback = CounterBits(3, 0);
            for (int s = 0; s < 3; ++s) changed.table[{far, s}] = !base.fallback.bit(far, s);
            EXPECT_EQ(run_threshold(g, 3, base)[target], run_threshold(g, 3, changed)[target]);
            EXPECT_EQ(run_shearer(g, base)[target], run_shearer(g, changed)[target]);
        }
    }
}

TEST(VirtualNeighbour, BitBudgetAndRegularCase) {
    auto star = star_graph(3, 5);
    CountingBits counting(CounterBits(9, 0), 4);
    run_virtual_neighbour(star, 5, 4, counting);
    EXPECT_EQ(counting.counts()[0], 1 + 2);
    for (int leaf = 1; leaf <= 3; ++leaf) EXPECT_EQ(counting.counts()[leaf], 1 + 4);

    auto g = petersen();
    for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_EQ(run_virtual_neighbour(g, 3, 3, seed), run_threshold(g, 3, seed));
}

TEST(VirtualNeighbour, RejectsDegreeAboveBound) {
    EXPECT_THROW(run_virtual_neighbour(star_graph(4, 3), 3, 2, 0), std::invalid_argument);
}

TEST(Runners, RejectInvalidGraphs) {
    EXPECT_THROW(run_threshold(path_graph(5, 2), 2, 0), std::invalid_argument);
    EXPECT_THROW(run_shearer(path_graph(5, 2), 0), std::invalid_argument);
    EXPECT_THROW(run_threshold(prism_graph(), 3, 0), std::invalid_argument);
    EXPECT_NO_THROW(run_threshold(prism_graph(), 3, CounterBits(0, 0), TrianglePolicy::allow));
    EXPECT_THROW(run_threshold(petersen(), 5, 0), std::out_of_range);
}

TEST(CounterBits, Reproducible) {
    CounterBits a(kDefaultSeed, 3), b(kDefaultSeed, 3), c(kDefaultSeed, 4);
    int same = 0, ones = 0;
    for (int v = 0; v < 1000; ++v) {
        EXPECT_EQ(a.bit(v, 0), b.bit(v, 0));
        same += a.bit(v, 0) == c.bit(v, 0);
        ones += a.bit(v, 0);
    }
    EXPECT_GT(same, 400);
    EXPECT_LT(same, 600);
    EXPECT_GT(ones, 400);
    EXPECT_LT(ones, 600);
}
