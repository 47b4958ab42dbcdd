#pragma once

// Counter-based random bits: the bit for (seed, trial, node, stream) is a hash
// of the four coordinates, so trials and nodes can be evaluated in any order
// and in parallel while staying reproducible.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace localcut {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Bits a node may draw are addressed by a small stream index: stream 0 is the
/// node's own uniform bit, further streams are extra bits (Shearer's c2/c3 or
/// virtual neighbours).
template <typename T>
concept BitSource = requires(T& src, int node, int stream) {
    { src.bit(node, stream) } -> std::convertible_to<bool>;
};

class CounterBits {
public:
    CounterBits(std::uint64_t seed, std::uint64_t trial) noexcept
        : key_(splitmix64(splitmix64(seed) ^ (trial * 0xD1B54A32D192ED03ULL))) {}

    bool bit(int node, int stream) const noexcept {
        std::uint64_t x = key_ ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(node)) << 32) ^
                          static_cast<std::uint64_t>(static_cast<std::uint32_t>(stream));
        return (splitmix64(splitmix64(x)) >> 63) != 0;
    }

private:
    std::uint64_t key_;
};

/// Wraps a source and counts how many bits each node drew.
template <BitSource Source>
class CountingBits {
public:
    CountingBits(Source src, std::size_t node_count) : src_(std::move(src)), counts_(node_count, 0) {}

    bool bit(int node, int stream) {
        ++counts_.at(static_cast<std::size_t>(node));
        return src_.bit(node, stream);
    }

    const std::vector<int>& counts() const noexcept { return counts_; }

private:
    Source src_;
    std::vector<int> counts_;
};

} // namespace localcut
