#pragma once

// One-round randomised cut algorithms on concrete graphs.
//
// Every node draws its bit(s), reads its neighbours' first bit (one
// synchronous round) and decides. Labels map to bits as a <-> 0, b <-> 1.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "localcut/cutsearch.hpp"
#include "localcut/graph.hpp"
#include "localcut/ngraph.hpp"
#include "localcut/random_bits.hpp"

namespace localcut {

constexpr Side side_of_bit(bool bit) noexcept { return bit ? Side::b : Side::a; }

enum class TrianglePolicy { reject, allow };

namespace detail {

inline void require_bounded(const RegularGraph& g, int d) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) > d) {
            throw std::invalid_argument("node " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                        " > d = " + std::to_string(d));
        }
    }
}

inline void require_runnable(const RegularGraph& g, TrianglePolicy triangles) {
    if (!g.regular()) {
        throw std::invalid_argument("graph is not " + std::to_string(g.declared_degree()) +
                                    "-regular; use the virtual-neighbour runner for bounded-degree graphs");
    }
    if (triangles == TrianglePolicy::reject && !g.triangle_free()) {
        throw std::invalid_argument("graph contains triangles; pass TrianglePolicy::allow to run anyway");
    }
}

template <BitSource Source>
std::vector<Side> draw_uniform_cut(const RegularGraph& g, Source& bits, int stream = 0) {
    std::vector<Side> c(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) c[v] = side_of_bit(bits.bit(v, stream));
    return c;
}

} // namespace detail

/// Neighbours of v sharing its label in `c`.
inline int like_count(const RegularGraph& g, const std::vector<Side>& c, NodeId v) {
    int l = 0;
    for (NodeId u : g.neighbours(v)) l += c[u] == c[v];
    return l;
}

/// The local view (own label, like-minded count) of node v under cut c.
inline Neighbourhood local_view(const RegularGraph& g, const std::vector<Side>& c, NodeId v) {
    return {c[v], like_count(g, c, v)};
}

template <BitSource Source>
CutAssignment run_uniform(const RegularGraph& g, Source&& bits) {
    return {detail::draw_uniform_cut(g, bits)};
}

/// Keep the random label while fewer than tau neighbours agree, flip otherwise.
template <BitSource Source>
CutAssignment run_threshold(const RegularGraph& g, int tau, Source&& bits,
                            TrianglePolicy triangles = TrianglePolicy::reject) {
    detail::require_runnable(g, triangles);
    const ThresholdRule rule(g.declared_degree(), tau);
    auto c1 = detail::draw_uniform_cut(g, bits);
    CutAssignment out;
    out.labels.resize(c1.size());
    for (NodeId v = 0; v < g.node_count(); ++v) out.labels[v] = rule.apply(local_view(g, c1, v));
    return out;
}

/// Shearer's rule: follow c1 when fewer than d/2 neighbours agree, c2 when
/// more, and let c3 pick between them at exactly d/2. Each node draws all
/// three bits (streams 0, 1, 2).
template <BitSource Source>
CutAssignment run_shearer(const RegularGraph& g, Source&& bits, TrianglePolicy triangles = TrianglePolicy::reject) {
    detail::require_runnable(g, triangles);
    const int d = g.declared_degree();
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<Side> c1(n), c2(n);
    std::vector<bool> c3(n);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        c1[v] = side_of_bit(bits.bit(v, 0));
        c2[v] = side_of_bit(bits.bit(v, 1));
        c3[v] = bits.bit(v, 2);
    }
    CutAssignment out;
    out.labels.resize(n);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const int twice_like = 2 * like_count(g, c1, v);
        if (twice_like < d) {
            out.labels[v] = c1[v];
        } else if (twice_like > d) {
            out.labels[v] = c2[v];
        } else {
            out.labels[v] = c3[v] ? c2[v] : c1[v];
        }
    }
    return out;
}

/// Threshold rule on graphs of maximum degree d: a node of degree d' also
/// draws d - d' bits (streams 1..d-d') for simulated neighbours and counts
/// agreement over real and simulated neighbours together.
template <BitSource Source>
CutAssignment run_virtual_neighbour(const RegularGraph& g, int d, int tau, Source&& bits,
                                    TrianglePolicy triangles = TrianglePolicy::reject) {
    detail::require_bounded(g, d);
    if (triangles == TrianglePolicy::reject && !g.triangle_free()) {
        throw std::invalid_argument("graph contains triangles; pass TrianglePolicy::allow to run anyway");
    }
    const ThresholdRule rule(d, tau);
    auto c1 = detail::draw_uniform_cut(g, bits);
    CutAssignment out;
    out.labels.resize(c1.size());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        int like = like_count(g, c1, v);
        const int missing = d - g.degree(v);
        for (int k = 1; k <= missing; ++k) like += side_of_bit(bits.bit(v, k)) == c1[v];
        out.labels[v] = rule.apply({c1[v], like});
    }
    return out;
}

inline CutAssignment run_threshold(const RegularGraph& g, int tau, std::uint64_t seed) {
    return run_threshold(g, tau, CounterBits(seed, 0));
}

inline CutAssignment run_shearer(const RegularGraph& g, std::uint64_t seed) {
    return run_shearer(g, CounterBits(seed, 0));
}

inline CutAssignment run_virtual_neighbour(const RegularGraph& g, int d, int tau, std::uint64_t seed) {
    return run_virtual_neighbour(g, d, tau, CounterBits(seed, 0));
}

/// Fraction of edges whose endpoints carry different labels.
inline double cut_weight(const RegularGraph& g, const CutAssignment& cut) {
    if (g.edge_count() == 0) return 0.0;
    std::size_t c = 0;
    for (const auto& e : g.edges()) c += cut[e.u] != cut[e.v];
    return static_cast<double>(c) / static_cast<double>(g.edge_count());
}

} // namespace localcut
