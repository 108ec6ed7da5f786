#pragma once

#include <vector>

#include "symchain/scd.hpp"

namespace symchain {

// How a grid of two chains is cut into symmetric chains. With chains
// x_1..x_a and y_1..y_b:
//   FirstCoordinate: C_j walks x_1..x_{a-j+1} at y_j, then y_{j+1}..y_b.
//   LastCoordinate:  C_j walks y_1..y_{b-j+1} at x_j, then x_{j+1}..x_a.
enum class GridRule { FirstCoordinate, LastCoordinate };

// SCD of Q_{a+b}; vertices are (left part from `a`, right part from `b`).
ChainDecomposition product_scd(const ChainDecomposition& a, const ChainDecomposition& b, GridRule rule);

// Pairs left[i] with right[i]. Edge-disjoint inputs on each side give
// pairwise edge-disjoint outputs. Both families must have the same size.
std::vector<ChainDecomposition> product_scd_family(const std::vector<ChainDecomposition>& left,
                                                   const std::vector<ChainDecomposition>& right,
                                                   GridRule rule = GridRule::FirstCoordinate);

// Q_{2n+1} as Q_3 x Q_2 x ... x Q_2 (n-1 factors of Q_2, left-associated)
// with FirstCoordinate grids and D_0 on every factor, or the complement of
// D_0 on every factor. The two results are edge-disjoint. n >= 1.
ChainDecomposition iterated_d0_product(int n, bool complemented = false);

}  // namespace symchain
