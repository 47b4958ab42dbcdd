#pragma once

// Cuts of the weighted neighbourhood graph: threshold cuts, exact cut
// evaluation, exhaustive maximum cut for small degrees, and the weighted
// MaxSAT encoding used to hand larger instances to an external solver.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "localcut/ngraph.hpp"
#include "localcut/rational.hpp"

namespace localcut {

/// A labelling of nodes 0..n-1 with {a, b}. Used for both neighbourhood
/// graphs (indexed by neighbourhood order) and simulated graphs.
struct CutAssignment {
    std::vector<Side> labels;

    std::size_t size() const noexcept { return labels.size(); }
    Side operator[](std::size_t i) const { return labels[i]; }

    CutAssignment complement() const {
        CutAssignment r = *this;
        for (auto& s : r.labels) s = flip(s);
        return r;
    }

    friend bool operator==(const CutAssignment&, const CutAssignment&) = default;
};

inline std::string to_string(const CutAssignment& cut) {
    std::string s;
    s.reserve(cut.size());
    for (auto l : cut.labels) s.push_back(side_char(l));
    return s;
}

/// Keep the own label while fewer than `tau` neighbours agree, flip otherwise.
struct ThresholdRule {
    int degree;
    int tau;

    ThresholdRule(int d, int t) : degree(d), tau(t) {
        check_degree(d);
        if (t < 0 || t > d + 1) {
            throw std::out_of_range("threshold " + std::to_string(t) + " outside [0, " +
                                    std::to_string(d + 1) + "]");
        }
    }

    Side apply(const Neighbourhood& n) const { return n.like_count < tau ? n.side : flip(n.side); }
};

inline CutAssignment threshold_assignment(const ThresholdRule& rule) {
    const std::size_t n = neighbourhood_count(rule.degree);
    CutAssignment cut;
    cut.labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cut.labels.push_back(rule.apply(neighbourhood_at(rule.degree, i)));
    return cut;
}

/// If `cut` is a threshold cut, the smallest tau producing it.
inline std::optional<int> threshold_of(int d, const CutAssignment& cut) {
    for (int tau = 0; tau <= d + 1; ++tau) {
        if (threshold_assignment(ThresholdRule(d, tau)) == cut) return tau;
    }
    return std::nullopt;
}

inline BigInt evaluate_cut_scaled(const WeightedNgraph& g, const CutAssignment& cut) {
    if (cut.size() != g.node_count()) {
        throw std::invalid_argument("cut labels " + std::to_string(cut.size()) + " nodes, graph has " +
                                    std::to_string(g.node_count()));
    }
    BigInt sum = 0;
    for (std::size_t x = 0; x < g.node_count(); ++x) {
        for (std::size_t y = 0; y < g.node_count(); ++y) {
            if (cut[x] != cut[y]) sum += g.scaled_weight(x, y);
        }
    }
    return sum;
}

/// Total weight of ordered pairs whose endpoints carry different labels.
inline Rational evaluate_cut(const WeightedNgraph& g, const CutAssignment& cut) {
    return make_rational(evaluate_cut_scaled(g, cut), g.denominator());
}

constexpr int kMaxExhaustiveDegree = 12;

struct MaxCutResult {
    CutAssignment cut;
    Rational weight;
};

namespace detail {

// Node 0 is the most significant bit so that integer order on masks is
// lexicographic order on assignments (a < b).
inline CutAssignment cut_from_mask(std::uint64_t mask, std::size_t n) {
    CutAssignment cut;
    cut.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) cut.labels[i] = ((mask >> (n - 1 - i)) & 1U) ? Side::b : Side::a;
    return cut;
}

} // namespace detail

/// Exhaustive maximum-weight cut. Node (a,0) is fixed to label a (complements
/// have equal weight); the remaining 2^(2d+1) labellings are enumerated in Gray
/// code order with O(n) incremental updates. Ties resolve to the
/// lexicographically smallest assignment.
inline MaxCutResult brute_force_max_cut(const WeightedNgraph& g) {
    const int d = g.degree();
    if (d > kMaxExhaustiveDegree) {
        throw std::invalid_argument("exhaustive max cut supports d <= " + std::to_string(kMaxExhaustiveDegree) +
                                    ", got d = " + std::to_string(d) + "; use the WCNF export instead");
    }
    const std::size_t n = g.node_count();

    // Symmetric pair weights w(x,y) + w(y,x) scaled by 4^d fit in 64 bits for d <= 12.
    std::vector<std::int64_t> pair(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            pair[x * n + y] = (g.scaled_weight(x, y) + g.scaled_weight(y, x)).convert_to<std::int64_t>();
        }
    }

    // bit position p (0 = least significant) belongs to node n-1-p.
    std::vector<unsigned char> label(n, 0);
    std::int64_t current = 0;
    std::int64_t best = 0;
    std::uint64_t best_mask = 0;
    std::uint64_t mask = 0;
    const std::uint64_t free_bits = n - 1;
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto p = static_cast<std::size_t>(__builtin_ctzll(step));
        const std::size_t node = n - 1 - p;
        // Flipping `node` toggles every pair it forms with the rest.
        std::int64_t delta = 0;
        const std::int64_t* row = &pair[node * n];
        for (std::size_t y = 0; y < n; ++y) {
            if (y == node) continue;
            delta += label[y] == label[node] ? row[y] : -row[y];
        }
        label[node] ^= 1U;
        mask ^= std::uint64_t{1} << p;
        current += delta;
        if (current > best || (current == best && mask < best_mask)) {
            best = current;
            best_mask = mask;
        }
    }
    return {detail::cut_from_mask(best_mask, n), make_rational(BigInt(best), g.denominator())};
}

/// Weighted CNF: variables are 1-based, literals signed.
struct WcnfClause {
    BigInt weight;
    std::vector<int> literals;
};

struct WcnfDocument {
    int degree = 0;
    int variable_count = 0;
    std::vector<WcnfClause> clauses;

    BigInt total_weight() const {
        BigInt s = 0;
        for (const auto& c : clauses) s += c.weight;
        return s;
    }

    /// Classic "top" for all-soft instances: one more than the sum of weights.
    BigInt top() const { return total_weight() + 1; }
};

/// One variable per neighbourhood (x_u true <=> label a). Every unordered pair
/// {u, v} with nonzero weight yields (x_u | x_v) and (!x_u | !x_v), each
/// weighted by its 4^d-scaled weight; for u != v that is w(u,v) + w(v,u), which
/// keeps the total clause weight at 2 * 4^d. Self-loops yield the pair
/// (x_u | x_u), (!x_u | !x_u) and are never cut.
inline WcnfDocument export_wcnf(const WeightedNgraph& g) {
    WcnfDocument doc;
    doc.degree = g.degree();
    doc.variable_count = static_cast<int>(g.node_count());
    for (std::size_t x = 0; x < g.node_count(); ++x) {
        for (std::size_t y = x; y < g.node_count(); ++y) {
            BigInt w = x == y ? g.scaled_weight(x, x) : BigInt(g.scaled_weight(x, y) + g.scaled_weight(y, x));
            if (w == 0) continue;
            int u = static_cast<int>(x) + 1;
            int v = static_cast<int>(y) + 1;
            doc.clauses.push_back({w, {u, v}});
            doc.clauses.push_back({w, {-u, -v}});
        }
    }
    return doc;
}

inline void write_wcnf(std::ostream& out, const WcnfDocument& doc) {
    out << "c max-weight cut of the weighted neighbourhood graph, d=" << doc.degree << '\n';
    out << "c weights scaled by 4^" << doc.degree << "; x true <=> label a\n";
    for (int v = 1; v <= doc.variable_count; ++v) {
        out << "c var " << v << " = " << to_string(neighbourhood_at(doc.degree, static_cast<std::size_t>(v - 1)))
            << '\n';
    }
    out << "p wcnf " << doc.variable_count << ' ' << doc.clauses.size() << ' ' << doc.top() << '\n';
    for (const auto& c : doc.clauses) {
        out << c.weight;
        for (int lit : c.literals) out << ' ' << lit;
        out << " 0\n";
    }
}

/// Total weight of clauses satisfied by `assignment` (index v-1 holds x_v).
inline BigInt satisfied_weight(const WcnfDocument& doc, const std::vector<bool>& assignment) {
    BigInt s = 0;
    for (const auto& c : doc.clauses) {
        for (int lit : c.literals) {
            bool value = assignment.at(static_cast<std::size_t>(lit > 0 ? lit - 1 : -lit - 1));
            if (value == (lit > 0)) {
                s += c.weight;
                break;
            }
        }
    }
    return s;
}

inline CutAssignment decode_wcnf_assignment(const std::vector<bool>& assignment) {
    CutAssignment cut;
    cut.labels.reserve(assignment.size());
    for (bool x : assignment) cut.labels.push_back(x ? Side::a : Side::b);
    return cut;
}

struct MaxSatResult {
    std::vector<bool> assignment;
    BigInt weight;
};

/// Exhaustive weighted MaxSAT over every assignment. Only for small instances;
/// first maximiser in increasing-mask order wins (variable 1 most significant,
/// bit 1 = false so that x_1 = true, i.e. label a, comes first).
inline MaxSatResult exhaustive_max_sat(const WcnfDocument& doc) {
    const auto n = static_cast<std::size_t>(doc.variable_count);
    if (n > 30) throw std::invalid_argument("exhaustive MaxSAT limited to 30 variables");

    struct Packed {
        std::uint64_t weight;
        std::uint32_t pos = 0;
        std::uint32_t neg = 0;
    };
    std::vector<Packed> packed;
    packed.reserve(doc.clauses.size());
    for (const auto& c : doc.clauses) {
        Packed p{c.weight.convert_to<std::uint64_t>()};
        for (int lit : c.literals) {
            auto bit = std::uint32_t{1} << static_cast<unsigned>(lit > 0 ? lit - 1 : -lit - 1);
            (lit > 0 ? p.pos : p.neg) |= bit;
        }
        packed.push_back(p);
    }

    std::uint64_t best = 0;
    std::uint32_t best_truth = 0;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::uint32_t truth = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (!((mask >> (n - 1 - v)) & 1U)) truth |= std::uint32_t{1} << v;
        }
        std::uint64_t s = 0;
        for (const auto& p : packed) {
            if ((p.pos & truth) || (p.neg & ~truth)) s += p.weight;
        }
        if (!have || s > best) {
            best = s;
            best_truth = truth;
            have = true;
        }
    }
    MaxSatResult r;
    r.weight = best;
    r.assignment.resize(n);
    for (std::size_t v = 0; v < n; ++v) r.assignment[v] = (best_truth >> v) & 1U;
    return r;
}

} // namespace localcut
