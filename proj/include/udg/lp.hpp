#pragma once

#include "udg/field.hpp"
#include "udg/symmetry.hpp"

#include <vector>

namespace udg {

enum class RowType { LessEq, Eq };

struct SimplexResult {
    std::vector<Rat> x;
    Rat objective;
    std::vector<Rat> dual;  // one multiplier per row
};

/// Dense exact-rational primal simplex with Bland's anti-cycling rule.
///   minimize cᵀx  subject to  A x {≤,=} b,  x ≥ 0,  with b ≥ 0.
/// Optimality is certified before returning: primal feasibility, dual
/// feasibility and strong duality are all re-checked as exact inequalities.
/// Throws std::runtime_error on infeasible or unbounded input.
SimplexResult simplex_min(const std::vector<std::vector<Rat>>& a, const std::vector<RowType>& types,
                          const std::vector<Rat>& b, const std::vector<Rat>& c);

/// Per-orbit weights w_1..w_p with Σ w_j·|O_j| = 1.
struct WeightDist {
    std::vector<Rat> orbit_weight;

    /// Expands to per-vertex weights under the given partition.
    std::vector<Rat> per_vertex(const OrbitPartition& orbits) const;
};

struct P1Solution {
    WeightDist weights;
    Rat objective;  // M: the minimized maximum set weight
};

/// The weighting LP: over symmetric weightings w normalized to total weight
/// 1, minimize the maximum weight M of the given independent sets
/// (constraints Σ_j |S_i ∩ O_j| w_j ≤ M). With no sets, returns the uniform
/// weighting 1/|V| and M = 0 (the loop's defined starting point).
P1Solution solve_p1(const std::vector<std::vector<std::size_t>>& sets, const OrbitPartition& orbits);

/// Same LP under the all-singletons partition (correctness fallback).
P1Solution solve_p1_vertexwise(const std::vector<std::vector<std::size_t>>& sets, std::size_t n_vertices);

}  // namespace udg
