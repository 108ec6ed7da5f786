#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symchain/scd.hpp"

namespace symchain {

// Lexicographically smallest rotation.
Vertex necklace_rep(const Vertex& v);
// Left rotation by s: result position p holds v at position ((p-1+s) mod n)+1.
Vertex rotate(const Vertex& v, int s);

/// Necklace graph N_n restricted to levels 1..n-1. An edge instance is a
/// lower necklace together with the position (in its representative) of the
/// 0 that is flipped, so parallel edges stay distinct.
class NecklaceGraph {
public:
    struct Instance {
        int lower;     // node index
        int upper;     // node index
        int position;  // 1-based position in the representative of `lower`
    };

    explicit NecklaceGraph(int n);

    int dimension() const { return n_; }
    int node_count() const { return static_cast<int>(reps_.size()); }
    const Vertex& rep(int node) const { return reps_[static_cast<std::size_t>(node)]; }
    int level(int node) const { return reps_[static_cast<std::size_t>(node)].weight(); }
    int node_of(const Vertex& rep) const;
    const std::vector<int>& nodes_at(int level) const { return levels_[static_cast<std::size_t>(level)]; }
    const std::vector<Instance>& instances() const { return instances_; }
    const std::vector<int>& up_instances(int node) const { return up_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& down_instances(int node) const { return down_[static_cast<std::size_t>(node)]; }
    // Number of parallel instances between two nodes.
    int multiplicity(int lower, int upper) const;

private:
    int n_;
    std::vector<Vertex> reps_;
    std::vector<std::vector<int>> levels_;
    std::vector<Instance> instances_;
    std::vector<std::vector<int>> up_, down_;
};

/// Symmetric chain decomposition of N_n: every chain is a sequence of nodes
/// joined by edge instances, running from level k to n-k.
struct NecklaceChain {
    std::vector<int> nodes;
    std::vector<int> instances;  // nodes.size() - 1 entries
};

struct NecklaceScd {
    std::vector<NecklaceChain> chains;
};

VerificationReport verify_necklace_scd(const NecklaceGraph& g, const NecklaceScd& d);
bool necklace_edge_disjoint(const NecklaceScd& a, const NecklaceScd& b);

enum class SearchStatus { Found, Impossible, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::Impossible;
    std::vector<NecklaceScd> scds;
    std::uint64_t nodes_explored = 0;
};

// Exhaustive backtracking for k pairwise edge-disjoint SCDs of N_n; n prime.
// `budget` bounds the number of search nodes.
SearchResult search_necklace_scds(const NecklaceGraph& g, int k, std::uint64_t budget);

// The Q_n chains of one necklace chain started at rotation s of its first
// representative.
Chain lift_chain(const NecklaceGraph& g, const NecklaceChain& c, int s);

// All rotations of all chains, with the rotation `extend_rotation` of the
// level-1..n-1 chain extended by 0^n and 1^n.
ChainDecomposition lift_to_cube(const NecklaceGraph& g, const NecklaceScd& d, int extend_rotation = 0);

// Lifts a family, choosing extension rotations (smallest tuple) so that the
// extension edges of different members are distinct.
std::vector<ChainDecomposition> lift_family(const NecklaceGraph& g, const std::vector<NecklaceScd>& scds);

// Text form: each chain as the Q_n path of its rotation-0 lift, so parallel
// edges are identified by the flipped position.
std::string necklace_scd_to_text(const NecklaceGraph& g, const NecklaceScd& d);
NecklaceScd parse_necklace_scd_text(const NecklaceGraph& g, const std::string& text);

}  // namespace symchain
