#pragma once

#include "udg/graph.hpp"

#include <cstddef>
#include <vector>

namespace udg {

/// A partition of the vertices into symmetry orbits.
struct OrbitPartition {
    std::vector<std::size_t> orbit_of;   // vertex index -> orbit index in [0, p)
    std::vector<std::size_t> orbit_sizes;

    std::size_t num_orbits() const { return orbit_sizes.size(); }
    std::size_t num_vertices() const { return orbit_of.size(); }

    /// Lowest-index representative per orbit.
    std::vector<std::size_t> representatives() const;

    /// True when every block of *this is contained in a block of coarser.
    bool refines(const OrbitPartition& coarser) const;
};

/// One orbit per vertex; always a valid (finest) partition.
OrbitPartition singleton_orbits(std::size_t n);

/// Vertex permutations of the nonidentity dihedral isometries (rotations by
/// kπ/3 about the origin, optionally composed with reflection across the
/// x-axis) that map the vertex set onto itself. Empty for abstract graphs.
std::vector<std::vector<std::size_t>> geometric_symmetries(const UDGraph& g);

/// Orbits under the isometries generated by rotation by π/3 about the origin
/// and reflection across the x-axis, restricted to those that map the vertex
/// set onto itself (each of the 12 candidates is tested exactly).
/// Requires a geometric graph; abstract graphs get singleton orbits.
OrbitPartition geometric_orbits(const UDGraph& g);

/// Orbits under the full abstract automorphism group, via iterated degree
/// refinement and a backtracking search for automorphisms. When the node
/// budget is exhausted the result falls back to whatever orbits were merged
/// so far (still a valid refinement of the true partition).
OrbitPartition automorphism_orbits(const UDGraph& g, std::size_t node_budget = 5'000'000);

/// Checks that fine-grained weights constant on `part` orbits make sense for
/// g: every pair claimed to share an orbit is related by a checked
/// automorphism. Used in audit mode / tests.
bool verify_orbits(const UDGraph& g, const OrbitPartition& part, std::size_t node_budget = 5'000'000);

}  // namespace udg
