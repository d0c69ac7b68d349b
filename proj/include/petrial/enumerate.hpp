#ifndef PETRIAL_ENUMERATE_HPP
#define PETRIAL_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "petrial/graph.hpp"

namespace petrial {

// Visits every perfect matching of 2n points in one canonical order: the
// smallest unpaired point is paired with each larger free point, partners
// ascending, recursing on the rest. The callback receives the matching as a
// double-occurrence word whose labels are numbered by first appearance.
// n = 0 visits the single empty matching.
void for_each_matching(std::size_t n,
                       const std::function<void(const std::vector<std::size_t>&)>& visit);

// (2n-1)!! = the number of perfect matchings of 2n points; 1 for n = 0.
// Refuses n > 17, where the product leaves 64 bits.
std::uint64_t double_factorial_odd(std::size_t n);

// Visits all 2^(n(n-1)/2) labeled simple graphs on vertices 0..n-1 in
// edge-mask order: bit 0 is the pair (0,1), then (0,2), ..., (0,n-1),
// (1,2), ... lexicographically. The callback also receives the mask, which
// doubles as a deduplication key. Refuses n > 11 (the mask leaves 64 bits).
void for_each_labeled_graph(
    std::size_t n, const std::function<void(const SimpleGraph&, std::uint64_t)>& visit);

// 1-based slice i of k of any enumeration: element `index` (0-based) belongs
// to the shard when index mod k = i - 1. The k shards are disjoint and cover
// everything.
struct Shard {
    std::size_t index = 1;
    std::size_t count = 1;
    bool contains(std::uint64_t i) const { return i % count == index - 1; }
    // How many of `total` consecutive elements fall in this shard.
    std::uint64_t expected(std::uint64_t total) const {
        return total / count + (index - 1 < total % count ? 1 : 0);
    }
};

// splitmix64 step: advances `state` and returns the next value. Used to
// derive reproducible per-trial randomness from (seed + trial).
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace petrial

#endif
