#pragma once

// Monte Carlo estimation of expected cut weights and of the joint
// distribution of local views across an edge.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "localcut/algorithms.hpp"
#include "localcut/graph.hpp"
#include "localcut/ngraph.hpp"
#include "localcut/random_bits.hpp"

namespace localcut {

enum class AlgorithmKind { uniform, threshold, shearer, virtual_neighbour };

struct AlgorithmSpec {
    AlgorithmKind kind = AlgorithmKind::threshold;
    int tau = 0;
    int degree = 0; // d for the virtual-neighbour runner; the graph's declared degree otherwise
    TrianglePolicy triangles = TrianglePolicy::reject;

    static AlgorithmSpec uniform() { return {AlgorithmKind::uniform}; }
    static AlgorithmSpec threshold(int tau, TrianglePolicy t = TrianglePolicy::reject) {
        return {AlgorithmKind::threshold, tau, 0, t};
    }
    static AlgorithmSpec shearer(TrianglePolicy t = TrianglePolicy::reject) { return {AlgorithmKind::shearer, 0, 0, t}; }
    static AlgorithmSpec virtual_neighbour(int d, int tau, TrianglePolicy t = TrianglePolicy::reject) {
        return {AlgorithmKind::virtual_neighbour, tau, d, t};
    }
};

inline std::string to_string(AlgorithmKind k) {
    switch (k) {
    case AlgorithmKind::uniform:
        return "uniform";
    case AlgorithmKind::threshold:
        return "threshold";
    case AlgorithmKind::shearer:
        return "shearer";
    case AlgorithmKind::virtual_neighbour:
        return "virtual";
    }
    return "unknown";
}

template <BitSource Source>
CutAssignment run_algorithm(const RegularGraph& g, const AlgorithmSpec& spec, Source&& bits) {
    switch (spec.kind) {
    case AlgorithmKind::uniform:
        return run_uniform(g, bits);
    case AlgorithmKind::threshold:
        return run_threshold(g, spec.tau, bits, spec.triangles);
    case AlgorithmKind::shearer:
        return run_shearer(g, bits, spec.triangles);
    case AlgorithmKind::virtual_neighbour:
        return run_virtual_neighbour(g, spec.degree, spec.tau, bits, spec.triangles);
    }
    throw std::invalid_argument("unknown algorithm");
}

/// Running mean and sample standard error of a stream of observations.
struct SampleMoments {
    std::size_t count = 0;
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double x) {
        ++count;
        sum += x;
        sum_sq += x * x;
    }

    double mean() const { return count == 0 ? 0.0 : sum / static_cast<double>(count); }

    double standard_error_of_mean() const {
        if (count < 2) return 0.0;
        const double n = static_cast<double>(count);
        const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
        return std::sqrt(var / n);
    }
};

struct TrialStats {
    std::size_t trials = 0;
    std::size_t edges = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t total_cut_edges = 0;

    // Edges lying in no triangle, reported separately.
    std::size_t non_triangle_edges = 0;
    double non_triangle_mean = 0.0;
    double non_triangle_stderr = 0.0;
    std::optional<double> triangle_mean; // empty when no edge lies in a triangle

    std::optional<std::vector<std::size_t>> per_edge; // cut counts, aligned with graph.edges()
};

struct MonteCarloOptions {
    bool per_edge = false;
};

/// Trial t uses CounterBits(seed, t), so the result depends only on
/// (graph, algorithm, trials, seed).
inline TrialStats monte_carlo(const RegularGraph& g, const AlgorithmSpec& spec, std::size_t trials,
                              std::uint64_t seed, MonteCarloOptions options = {}) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<char> triangle(m);
    std::size_t flagged = 0;
    for (std::size_t k = 0; k < m; ++k) {
        triangle[k] = g.in_triangle(k);
        flagged += static_cast<std::size_t>(triangle[k]);
    }
    const std::size_t clean = m - flagged;

    TrialStats stats;
    stats.trials = trials;
    stats.edges = m;
    stats.seed = seed;
    stats.non_triangle_edges = clean;
    std::vector<std::size_t> per_edge(options.per_edge ? m : 0, 0);
    SampleMoments all, clean_moments, flagged_moments;
    std::size_t clean_cut_total = 0;

    for (std::size_t t = 0; t < trials; ++t) {
        const auto cut = run_algorithm(g, spec, CounterBits(seed, t));
        std::size_t cut_all = 0, cut_clean = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (cut[edges[k].u] == cut[edges[k].v]) continue;
            ++cut_all;
            if (!triangle[k]) ++cut_clean;
            if (options.per_edge) ++per_edge[k];
        }
        stats.total_cut_edges += cut_all;
        clean_cut_total += cut_clean;
        all.add(static_cast<double>(cut_all) / static_cast<double>(m));
        if (clean > 0) clean_moments.add(static_cast<double>(cut_clean) / static_cast<double>(clean));
        if (flagged > 0) flagged_moments.add(static_cast<double>(cut_all - cut_clean) / static_cast<double>(flagged));
    }

    stats.mean = static_cast<double>(stats.total_cut_edges) / (static_cast<double>(trials) * static_cast<double>(m));
    stats.standard_error = all.standard_error_of_mean();
    if (clean > 0) {
        stats.non_triangle_mean =
            static_cast<double>(clean_cut_total) / (static_cast<double>(trials) * static_cast<double>(clean));
    }
    stats.non_triangle_stderr = clean_moments.standard_error_of_mean();
    if (flagged > 0) stats.triangle_mean = flagged_moments.mean();
    if (options.per_edge) stats.per_edge = std::move(per_edge);
    return stats;
}

inline nlohmann::json to_json(const TrialStats& s) {
    nlohmann::json j{{"trials", s.trials},
                     {"edges", s.edges},
                     {"mean", s.mean},
                     {"stderr", s.standard_error},
                     {"seed", s.seed},
                     {"non_triangle_edges", s.non_triangle_edges},
                     {"non_triangle_mean", s.non_triangle_mean},
                     {"non_triangle_stderr", s.non_triangle_stderr}};
    if (s.triangle_mean) j["triangle_mean"] = *s.triangle_mean;
    if (s.per_edge) j["per_edge"] = *s.per_edge;
    return j;
}

inline void write_csv(std::ostream& out, const TrialStats& s) {
    out << "trials,edges,mean,stderr,seed,non_triangle_edges,non_triangle_mean,non_triangle_stderr\n";
    out << s.trials << ',' << s.edges << ',' << s.mean << ',' << s.standard_error << ',' << s.seed << ','
        << s.non_triangle_edges << ',' << s.non_triangle_mean << ',' << s.non_triangle_stderr << '\n';
}

/// Counts of (view of u, view of v) over `trials` uniform random cuts, as a
/// dense (2d+2) x (2d+2) table in neighbourhood order.
struct JointDistribution {
    int degree = 0;
    std::size_t trials = 0;
    std::vector<std::size_t> counts;

    std::size_t count(const Neighbourhood& n1, const Neighbourhood& n2) const {
        return counts.at(index_of(degree, n1) * neighbourhood_count(degree) + index_of(degree, n2));
    }

    double frequency(std::size_t from, std::size_t to) const {
        return static_cast<double>(counts.at(from * neighbourhood_count(degree) + to)) / static_cast<double>(trials);
    }
};

inline JointDistribution empirical_joint_distribution(const RegularGraph& g, Edge edge, std::size_t trials,
                                                      std::uint64_t seed) {
    if (!g.strict()) throw std::invalid_argument("joint distribution requires a d-regular triangle-free graph");
    if (!g.has_edge(edge.u, edge.v)) {
        throw std::invalid_argument("{" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "} is not an edge");
    }
    const int d = g.declared_degree();
    const std::size_t n = neighbourhood_count(d);
    JointDistribution dist{d, trials, std::vector<std::size_t>(n * n, 0)};
    for (std::size_t t = 0; t < trials; ++t) {
        CounterBits bits(seed, t);
        auto c = run_uniform(g, bits).labels;
        auto x = index_of(d, local_view(g, c, edge.u));
        auto y = index_of(d, local_view(g, c, edge.v));
        ++dist.counts[x * n + y];
    }
    return dist;
}

} // namespace localcut
