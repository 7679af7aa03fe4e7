#pragma once

#include "udg/graph.hpp"
#include "udg/structures.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace udg {

class InfeasibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MwisResult {
    Bitset set;
    Rat weight;  // exact: sum of the rational weights over the set
};

/**
 * Exact maximum-weight independent set by branch-and-bound over bitsets.
 *
 * Rational weights are scaled to a common denominator once per solve, so all
 * incumbent comparisons are exact integer comparisons. Depth-first search
 * with a global incumbent (primed by a greedy solution); the upper bound is
 * a greedy weighted clique cover (each clique contributes its heaviest
 * vertex), tightened by a packing of vertex-disjoint Moser spindles (each
 * contributes its two heaviest vertices). Reductions applied at every node:
 * zero-weight removal, neighborhood removal, and weighted neighborhood
 * domination.
 *
 * Branching is deterministic (maximum residual weight-degree, lowest index
 * on ties), so the returned set is identical across runs.
 */
class MwisSolver {
public:
    struct Options {
        bool use_spindle_bounds = true;
    };

    explicit MwisSolver(const UDGraph& g);
    MwisSolver(const UDGraph& g, Options opt);

    MwisResult solve(const std::vector<Rat>& weights) const;
    MwisResult solve(const std::vector<Rat>& weights, const Bitset& forced_in,
                     const Bitset& forced_out) const;

    /**
     * Exact solve with a pruning floor: if the true optimum exceeds
     * `prune_floor` (total weight, forced_in included), the result is the
     * exact optimum. Otherwise the search only certifies optimum <=
     * prune_floor and returns the best set it encountered. A negative floor
     * disables pruning.
     */
    MwisResult solve(const std::vector<Rat>& weights, const Bitset& forced_in,
                     const Bitset& forced_out, const Rat& prune_floor) const;

    /// Search statistics of the last solve (nodes expanded).
    std::uint64_t last_nodes() const { return nodes_; }

private:
    const UDGraph& g_;
    Options opt_;
    std::vector<Bitset> clique_masks_;
    std::vector<Bitset> spindle_masks_;
    mutable std::uint64_t nodes_ = 0;
};

/// One-shot helpers over a freshly built solver.
MwisResult mwis_solve(const UDGraph& g, const std::vector<Rat>& weights);
MwisResult mwis_solve(const UDGraph& g, const std::vector<Rat>& weights, const Bitset& forced_in,
                      const Bitset& forced_out);

/// MWIS among sets containing `include` and avoiding `exclude`.
MwisResult mwis_solve_excluding_including(const UDGraph& g, const std::vector<Rat>& weights,
                                          std::size_t exclude, std::size_t include);

}  // namespace udg
