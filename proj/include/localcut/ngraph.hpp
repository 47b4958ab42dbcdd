#pragma once

// Weighted neighbourhood graph of one-round algorithms on d-regular
// triangle-free graphs.
//
// A node of the input graph sees its own random label and the number of
// neighbours that drew the same label ("like-minded" neighbours, counted with
// equality c(u) == c(v)). For degree d there are 2d+2 such views. The weight of
// the ordered pair (N1, N2) is the probability that the two endpoints of an
// arbitrary edge observe N1 and N2 under a uniform random cut:
//
//   w((k1,i1),(k2,i2)) = C(d-1, i1)   C(d-1, i2)   / 4^d   if k1 != k2
//                      = C(d-1, i1-1) C(d-1, i2-1) / 4^d   if k1 == k2
//
// Weights are kept as integer numerators over the common denominator 4^d.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "localcut/rational.hpp"

namespace localcut {

enum class Side : unsigned char { a = 0, b = 1 };

constexpr Side flip(Side s) noexcept { return s == Side::a ? Side::b : Side::a; }
constexpr char side_char(Side s) noexcept { return s == Side::a ? 'a' : 'b'; }

inline Side parse_side(char c) {
    if (c == 'a') return Side::a;
    if (c == 'b') return Side::b;
    throw std::invalid_argument(std::string("unknown side label '") + c + "'");
}

struct Neighbourhood {
    Side side = Side::a;
    int like_count = 0;

    friend bool operator==(const Neighbourhood&, const Neighbourhood&) = default;
};

inline std::string to_string(const Neighbourhood& n) {
    return std::string("(") + side_char(n.side) + "," + std::to_string(n.like_count) + ")";
}

inline void check_degree(int d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2, got " + std::to_string(d));
}

inline void check_neighbourhood(int d, const Neighbourhood& n) {
    if (n.like_count < 0 || n.like_count > d) {
        throw std::out_of_range("like-count " + std::to_string(n.like_count) +
                                " outside [0, " + std::to_string(d) + "]");
    }
}

// Node order used everywhere: (a,0), ..., (a,d), (b,0), ..., (b,d).
constexpr std::size_t neighbourhood_count(int d) noexcept { return 2 * static_cast<std::size_t>(d) + 2; }

constexpr std::size_t index_of(int d, const Neighbourhood& n) noexcept {
    return (n.side == Side::a ? 0 : static_cast<std::size_t>(d) + 1) + static_cast<std::size_t>(n.like_count);
}

constexpr Neighbourhood neighbourhood_at(int d, std::size_t index) noexcept {
    auto half = static_cast<std::size_t>(d) + 1;
    return index < half ? Neighbourhood{Side::a, static_cast<int>(index)}
                        : Neighbourhood{Side::b, static_cast<int>(index - half)};
}

/// Numerator of w(n1, n2) over 4^d. Inputs must already be validated.
inline BigInt scaled_edge_weight(int d, const Neighbourhood& n1, const Neighbourhood& n2) {
    int shift = n1.side == n2.side ? 1 : 0;
    return binomial(d - 1, n1.like_count - shift) * binomial(d - 1, n2.like_count - shift);
}

inline Rational edge_weight(int d, const Neighbourhood& n1, const Neighbourhood& n2) {
    check_degree(d);
    check_neighbourhood(d, n1);
    check_neighbourhood(d, n2);
    return make_rational(scaled_edge_weight(d, n1, n2), pow4(static_cast<unsigned>(d)));
}

class WeightedNgraph {
public:
    explicit WeightedNgraph(int d) : degree_(d) {
        check_degree(d);
        const std::size_t n = neighbourhood_count(d);
        auto row = binomial_row(d - 1);
        auto c = [&](int k) -> const BigInt& {
            static const BigInt zero = 0;
            return (k < 0 || k > d - 1) ? zero : row[static_cast<std::size_t>(k)];
        };
        scaled_.resize(n * n);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                auto n1 = neighbourhood_at(d, x);
                auto n2 = neighbourhood_at(d, y);
                int shift = n1.side == n2.side ? 1 : 0;
                scaled_[x * n + y] = c(n1.like_count - shift) * c(n2.like_count - shift);
            }
        }
        denominator_ = pow4(static_cast<unsigned>(d));
    }

    int degree() const noexcept { return degree_; }
    std::size_t node_count() const noexcept { return neighbourhood_count(degree_); }

    /// Common denominator 4^d of every weight.
    const BigInt& denominator() const noexcept { return denominator_; }

    const BigInt& scaled_weight(std::size_t from, std::size_t to) const {
        return scaled_.at(from * node_count() + to);
    }

    Rational weight(std::size_t from, std::size_t to) const {
        return make_rational(scaled_weight(from, to), denominator_);
    }

    Rational weight(const Neighbourhood& n1, const Neighbourhood& n2) const {
        check_neighbourhood(degree_, n1);
        check_neighbourhood(degree_, n2);
        return weight(index_of(degree_, n1), index_of(degree_, n2));
    }

    /// Sum over all ordered pairs; equals 1 for every valid graph.
    Rational total_weight() const {
        BigInt sum = 0;
        for (const auto& w : scaled_) sum += w;
        return make_rational(sum, denominator_);
    }

private:
    int degree_;
    BigInt denominator_;
    std::vector<BigInt> scaled_;
};

inline WeightedNgraph build_ngraph(int d) { return WeightedNgraph(d); }

/// Text table: header `d=<d>`, then `side1 i1 side2 i2 num den` per ordered pair.
inline void write_ngraph_text(std::ostream& out, const WeightedNgraph& g) {
    const int d = g.degree();
    out << "d=" << d << '\n';
    for (std::size_t x = 0; x < g.node_count(); ++x) {
        for (std::size_t y = 0; y < g.node_count(); ++y) {
            auto n1 = neighbourhood_at(d, x);
            auto n2 = neighbourhood_at(d, y);
            Rational w = g.weight(x, y);
            out << side_char(n1.side) << ' ' << n1.like_count << ' ' << side_char(n2.side) << ' '
                << n2.like_count << ' ' << numerator(w) << ' ' << denominator(w) << '\n';
        }
    }
}

inline nlohmann::json ngraph_to_json(const WeightedNgraph& g) {
    const int d = g.degree();
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t x = 0; x < g.node_count(); ++x) {
        for (std::size_t y = 0; y < g.node_count(); ++y) {
            auto n1 = neighbourhood_at(d, x);
            auto n2 = neighbourhood_at(d, y);
            edges.push_back({{"from", {std::string(1, side_char(n1.side)), n1.like_count}},
                             {"to", {std::string(1, side_char(n2.side)), n2.like_count}},
                             {"weight", to_fraction_string(g.weight(x, y))}});
        }
    }
    return {{"d", d},
            {"nodes", g.node_count()},
            {"denominator", g.denominator().str()},
            {"normalisation", to_fraction_string(g.total_weight())},
            {"edges", std::move(edges)}};
}

} // namespace localcut
