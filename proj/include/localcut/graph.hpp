#pragma once

// Simple undirected graphs with a declared degree and per-edge triangle flags.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace localcut {

using NodeId = int;

struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class RegularGraph {
public:
    RegularGraph() = default;

    /// Builds from an undirected edge list. Throws on self-loops, parallel
    /// edges or endpoints outside [0, node_count).
    RegularGraph(int node_count, int declared_degree, std::vector<Edge> edge_list)
        : declared_degree_(declared_degree), adjacency_(static_cast<std::size_t>(node_count)) {
        if (node_count < 0) throw std::invalid_argument("negative node count");
        for (auto& e : edge_list) {
            if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
                throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            "} has an endpoint outside the node range");
            }
            if (e.u == e.v) throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end()) {
            throw std::invalid_argument("parallel edges in edge list");
        }
        edges_ = std::move(edge_list);
        for (const auto& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
        compute_triangle_flags();
    }

    int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    int declared_degree() const noexcept { return declared_degree_; }

    int degree(NodeId v) const { return static_cast<int>(adjacency_.at(v).size()); }
    std::span<const NodeId> neighbours(NodeId v) const { return adjacency_.at(v); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(NodeId u, NodeId v) const {
        const auto& a = adjacency_.at(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Position of {u, v} in edges(), or -1.
    long edge_index(NodeId u, NodeId v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        return (it != edges_.end() && *it == Edge{u, v}) ? static_cast<long>(it - edges_.begin()) : -1;
    }

    bool in_triangle(std::size_t edge) const { return triangle_.at(edge); }
    std::size_t triangle_edge_count() const {
        return static_cast<std::size_t>(std::count(triangle_.begin(), triangle_.end(), true));
    }
    bool triangle_free() const { return triangle_edge_count() == 0; }

    int max_degree() const {
        int m = 0;
        for (const auto& a : adjacency_) m = std::max(m, static_cast<int>(a.size()));
        return m;
    }

    bool regular() const {
        return std::all_of(adjacency_.begin(), adjacency_.end(),
                           [&](const auto& a) { return static_cast<int>(a.size()) == declared_degree_; });
    }

    /// Every node has exactly the declared degree and no edge lies in a triangle.
    bool strict() const { return regular() && triangle_free(); }

    /// Number of common neighbours of u and v (sorted-list intersection).
    std::size_t common_neighbours(NodeId u, NodeId v) const {
        const auto& a = adjacency_.at(u);
        const auto& b = adjacency_.at(v);
        std::size_t i = 0, j = 0, c = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) {
                ++i;
            } else if (b[j] < a[i]) {
                ++j;
            } else {
                ++c;
                ++i;
                ++j;
            }
        }
        return c;
    }

private:
    void compute_triangle_flags() {
        triangle_.assign(edges_.size(), false);
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            triangle_[k] = common_neighbours(edges_[k].u, edges_[k].v) > 0;
        }
    }

    int declared_degree_ = 0;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<bool> triangle_;
};

/// `n m d` header, then one `u v` line per edge (0-indexed).
inline void write_edge_list(std::ostream& out, const RegularGraph& g) {
    out << g.node_count() << ' ' << g.edge_count() << ' ' << g.declared_degree() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline RegularGraph read_edge_list(std::istream& in) {
    long n = 0, m = 0, d = 0;
    if (!(in >> n >> m >> d)) throw std::runtime_error("edge list: missing `n m d` header");
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative sizes in header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) {
        Edge e{};
        if (!(in >> e.u >> e.v)) {
            throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(k));
        }
        edges.push_back(e);
    }
    return RegularGraph(static_cast<int>(n), static_cast<int>(d), std::move(edges));
}

inline RegularGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

} // namespace localcut
