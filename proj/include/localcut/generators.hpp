#pragma once

// Deterministic and seeded random generators of test graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "localcut/graph.hpp"

namespace localcut {

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kResampleBudget = 1000;

/// How many attempts a randomised generator needed.
struct GenerationInfo {
    int attempts = 0;
    double acceptance_rate() const { return attempts == 0 ? 0.0 : 1.0 / attempts; }
};

inline RegularGraph complete_bipartite(int d) {
    if (d < 1) throw std::invalid_argument("K_{d,d} needs d >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) edges.push_back({u, d + v});
    }
    return RegularGraph(2 * d, d, std::move(edges));
}

inline RegularGraph cycle_graph(int n) {
    if (n < 4) throw std::invalid_argument("a triangle-free cycle needs n >= 4, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return RegularGraph(n, 2, std::move(edges));
}

/// k-dimensional hypercube: 2^k nodes, k-regular, bipartite.
inline RegularGraph hypercube(int k) {
    if (k < 2 || k > 20) throw std::invalid_argument("hypercube dimension must be in [2, 20]");
    const int n = 1 << k;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < k; ++b) {
            int u = v ^ (1 << b);
            if (v < u) edges.push_back({v, u});
        }
    }
    return RegularGraph(n, k, std::move(edges));
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
inline RegularGraph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return RegularGraph(10, 3, std::move(edges));
}

/// Star K_{1,leaves}; `declared_degree` is the degree bound d.
inline RegularGraph star_graph(int leaves, int declared_degree) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return RegularGraph(leaves + 1, declared_degree, std::move(edges));
}

inline RegularGraph path_graph(int n, int declared_degree) {
    if (n < 2) throw std::invalid_argument("path needs at least two nodes");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return RegularGraph(n, declared_degree, std::move(edges));
}

/// Triangular prism: two triangles joined by a perfect matching. 3-regular;
/// the six triangle edges are flagged, the three matching edges are not.
inline RegularGraph prism_graph() {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    return RegularGraph(6, 3, std::move(edges));
}

enum class Family { complete_bipartite, cycle, hypercube, petersen };

/// `size` is d for K_{d,d}, n for the cycle, the dimension for the hypercube,
/// and ignored for Petersen.
inline RegularGraph gen_fixed(Family family, int size = 0) {
    switch (family) {
    case Family::complete_bipartite:
        if (size < 2) throw std::invalid_argument("K_{d,d} needs d >= 2");
        return complete_bipartite(size);
    case Family::cycle:
        return cycle_graph(size);
    case Family::hypercube:
        return hypercube(size);
    case Family::petersen:
        return petersen();
    }
    throw std::invalid_argument("unknown family");
}

/// Union of d uniformly random perfect matchings between two sides of
/// n_per_side nodes (left 0..n-1, right n..2n-1). A matching that repeats an
/// existing edge is discarded and redrawn; more than kResampleBudget redraws in
/// total raises BudgetExhausted.
inline RegularGraph gen_random_bipartite_regular(int n_per_side, int d, std::uint64_t seed,
                                                 GenerationInfo* info = nullptr) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    if (n_per_side < d) {
        throw std::invalid_argument("need n_per_side >= d, got " + std::to_string(n_per_side) + " < " +
                                    std::to_string(d));
    }
    std::mt19937_64 rng(seed);
    const auto n = static_cast<std::size_t>(n_per_side);
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    std::vector<Edge> edges;
    std::vector<int> perm(n);
    int attempts = 0;
    for (int k = 0; k < d; ++k) {
        for (;;) {
            if (++attempts > kResampleBudget + d) {
                throw BudgetExhausted("random bipartite generator exhausted its resample budget (n_per_side=" +
                                      std::to_string(n_per_side) + ", d=" + std::to_string(d) + ")");
            }
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            bool clash = false;
            for (std::size_t i = 0; i < n && !clash; ++i) clash = used[i][static_cast<std::size_t>(perm[i])];
            if (clash) continue;
            for (std::size_t i = 0; i < n; ++i) {
                used[i][static_cast<std::size_t>(perm[i])] = 1;
                edges.push_back({static_cast<int>(i), n_per_side + perm[i]});
            }
            break;
        }
    }
    if (info) info->attempts = attempts;
    return RegularGraph(2 * n_per_side, d, std::move(edges));
}

namespace detail {

// Configuration-model pairing done stub by stub: each stub is matched to a
// random remaining stub, redrawing partners that would create a self-loop, a
// parallel edge, or (when requested) a triangle. An attempt fails when a stub
// runs out of redraws; the whole pairing then restarts.
inline RegularGraph pair_stubs(int n, int d, std::uint64_t seed, bool forbid_triangles, GenerationInfo* info) {
    if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
    if ((static_cast<long long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("n*d must be even, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
    if (d >= n) throw std::invalid_argument("a simple d-regular graph needs n > d");
    constexpr int kPartnerRedraws = 64;
    std::mt19937_64 rng(seed);
    const auto nn = static_cast<std::size_t>(n);

    for (int attempt = 1; attempt <= kResampleBudget; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(nn * static_cast<std::size_t>(d));
        for (int v = 0; v < n; ++v) {
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::vector<int>> adj(nn);
        auto connected = [&](int a, int b) {
            return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
        };
        auto shares_neighbour = [&](int a, int b) {
            for (int x : adj[a]) {
                if (connected(b, x)) return true;
            }
            return false;
        };
        std::vector<Edge> edges;
        bool failed = false;
        while (!stubs.empty() && !failed) {
            int u = stubs.back();
            stubs.pop_back();
            bool placed = false;
            std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
            for (int r = 0; r < kPartnerRedraws && !placed; ++r) {
                std::size_t idx = pick(rng);
                int v = stubs[idx];
                if (v == u || connected(u, v)) continue;
                if (forbid_triangles && shares_neighbour(u, v)) continue;
                stubs[idx] = stubs.back();
                stubs.pop_back();
                adj[u].push_back(v);
                adj[v].push_back(u);
                edges.push_back({u, v});
                placed = true;
            }
            failed = !placed;
        }
        if (!failed) {
            if (info) info->attempts = attempt;
            return RegularGraph(n, d, std::move(edges));
        }
    }
    throw BudgetExhausted("stub pairing exhausted its budget of " + std::to_string(kResampleBudget) +
                          " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

} // namespace detail

/// Random d-regular triangle-free graph on n nodes.
inline RegularGraph gen_random_triangle_free(int n, int d, std::uint64_t seed, GenerationInfo* info = nullptr) {
    return detail::pair_stubs(n, d, seed, true, info);
}

/// Random simple d-regular graph; triangles allowed (generalised mode).
inline RegularGraph gen_random_regular(int n, int d, std::uint64_t seed, GenerationInfo* info = nullptr) {
    return detail::pair_stubs(n, d, seed, false, info);
}

} // namespace localcut
