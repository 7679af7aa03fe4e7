#pragma once

#include "udg/graph.hpp"

#include <vector>

namespace udg {

/// All maximal cliques, by pivoting Bron-Kerbosch over adjacency bitsets.
/// Cliques are returned as sorted index vectors, in deterministic order.
/// In a planar unit-distance graph every clique has at most 3 vertices.
std::vector<std::vector<std::size_t>> maximal_cliques(const UDGraph& g);

/// All induced Moser spindles (7 vertices, 11 edges), found geometrically:
/// pairs of unit rhombi hinged at a common apex whose far vertices are at
/// distance 1, filtered by the induced edge count. Sorted, deduplicated.
/// Requires a geometric graph; abstract graphs yield the empty list.
std::vector<std::vector<std::size_t>> moser_spindles(const UDGraph& g);

/// Exact maximum-weight independent set weight by exhaustive branching.
/// Test oracle; enforces |V| <= 30.
Rat alpha_brute(const UDGraph& g, const std::vector<Rat>& weights);

/// The standard 7-point Moser spindle (two rhombi spindled at cos θ = 5/6).
std::vector<Point> moser_spindle_points();

}  // namespace udg
