#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symchain/lexical.hpp"
#include "symchain/vertex.hpp"

namespace symchain {

using Chain = std::vector<Vertex>;

/// Chains of Q_n. Stored bottom-up and sorted by first vertex, so two
/// decompositions with the same chains compare equal.
class ChainDecomposition {
public:
    ChainDecomposition() = default;
    ChainDecomposition(int dimension, std::vector<Chain> chains);

    int dimension() const { return dimension_; }
    const std::vector<Chain>& chains() const { return chains_; }
    std::size_t size() const { return chains_.size(); }

    friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;

private:
    int dimension_ = 0;
    std::vector<Chain> chains_;
};

struct Check {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool ok() const;
    void add(std::string name, bool passed, std::string witness = {});
    std::string to_text() const;
};

// Partition of all 2^n vertices, chains are paths in Q_n, each chain runs
// from level k to n-k, and the chain count is C(n, floor(n/2)).
VerificationReport verify_scd(const ChainDecomposition& d);

// Chain edges as (lower vertex, flipped position), sorted.
std::vector<std::pair<Vertex, int>> chain_edges(const ChainDecomposition& d);
bool edge_disjoint(const ChainDecomposition& a, const ChainDecomposition& b);

// Neighbours in the parenthesis construction (0 opens, 1 closes).
std::optional<Vertex> d0_up(const Vertex& x);
std::optional<Vertex> d0_down(const Vertex& x);

ChainDecomposition scd_d0_paren(int n);
ChainDecomposition scd_d0_marker(int n);
ChainDecomposition scd_d1(int n);

// Chains through a middle-level vertex x (n even) by the marker rules.
Chain d0_marker_chain(const Vertex& x);
Chain d1_marker_chain(const Vertex& x);
// Flip positions chosen by the marker rules going up from x.
std::vector<int> d0_marker_up_flips(const Vertex& x);
std::vector<int> d0_marker_down_flips(const Vertex& x);
std::vector<int> d1_marker_up_flips(const Vertex& x);
std::vector<int> d1_marker_down_flips(const Vertex& x);

// Union of M^{i_k}_{n,k} over k = 0..n-1; i_seq has n entries.
ChainDecomposition scd_from_lexical(int n, const std::vector<int>& i_seq);
ChainDecomposition complement_scd(const ChainDecomposition& d);

// Vertex-and-chain text format: one chain per line, vertices space separated.
std::string to_text(const ChainDecomposition& d);
ChainDecomposition parse_scd_text(const std::string& text);

}  // namespace symchain
