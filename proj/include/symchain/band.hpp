#pragma once

#include <cstdint>
#include <vector>

#include "symchain/vertex.hpp"

namespace symchain {

/// Dense indexing of the levels lo..hi of Q_n (n <= 62). Within a level the
/// order is colex on the raw word, so rank() needs no lookup table.
class BandIndex {
public:
    BandIndex(int n, int lo, int hi);

    int dimension() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t size() const { return vertices_.size(); }
    bool contains(const Vertex& v) const;
    std::uint32_t rank(const Vertex& v) const;
    const Vertex& vertex(std::uint32_t r) const { return vertices_[r]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

private:
    int n_, lo_, hi_;
    std::vector<std::vector<std::uint64_t>> binom_;
    std::vector<std::uint64_t> offset_;
    std::vector<Vertex> vertices_;
};

std::uint64_t binomial(int n, int k);

// Cycles of a 2-regular graph given by neighbour pairs over a band. Each cycle
// starts at its lexicographically smallest vertex and heads to the smaller of
// its two neighbours; cycles are sorted by (length, first vertex).
std::vector<std::vector<Vertex>> extract_cycles(const BandIndex& band,
                                                const std::vector<std::array<std::uint32_t, 2>>& adjacency);

}  // namespace symchain
