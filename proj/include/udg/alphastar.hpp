#pragma once

#include "udg/graph.hpp"
#include "udg/lp.hpp"
#include "udg/mwis.hpp"
#include "udg/symmetry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace udg {

/**
 * The result of the cut-generation loop: an optimal symmetric weighting, the
 * exact rational α*, and the witness independent sets that make the value
 * independently re-checkable.
 */
struct AlphaStarCertificate {
    std::uint64_t graph_hash = 0;
    OrbitPartition orbits;
    WeightDist weights;  // per orbit, normalized to total weight 1
    Rat alpha_star;
    std::vector<std::vector<std::size_t>> witness_sets;

    Rat chi_f() const { return Rat(1) / alpha_star; }
    std::vector<Rat> per_vertex_weights() const { return weights.per_vertex(orbits); }
};

struct AlphaStarIteration {
    Rat optup, optlow;
    std::size_t num_sets;
    std::uint64_t mwis_nodes;
};

struct AlphaStarOutcome {
    bool converged = false;
    Rat optup;   // valid upper bound on α* even when not converged
    Rat optlow;  // valid lower bound
    AlphaStarCertificate certificate;  // complete only when converged; always
                                       // carries the best weighting seen
    std::vector<AlphaStarIteration> history;
};

struct AlphaStarOptions {
    double time_budget_seconds = 0;  // 0 = run to convergence
    std::vector<std::vector<std::size_t>> warm_sets;  // revalidated against g
    std::ostream* log = nullptr;
};

/// The iterative MWIS / weighting-LP loop. Alternates an exact
/// maximum-weight independent set under the current symmetric weighting
/// (whose ratio is an upper bound on α*) with the exact weighting LP over
/// the accumulated sets (whose objective is a lower bound), until the two
/// rationals are equal.
AlphaStarOutcome alpha_star(const UDGraph& g, const OrbitPartition& orbits,
                            const AlphaStarOptions& options = {});

/// Independent re-check of a certificate: graph binding, partition shape,
/// normalization, witness independence, and a fresh MWIS solve under the
/// certified weighting that must hit α* exactly. On failure `why` explains.
bool verify_certificate(const UDGraph& g, const AlphaStarCertificate& cert,
                        std::string* why = nullptr);

class EmptyReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReduceResult {
    UDGraph graph;
    Rat epsilon;  // deleted weight fraction; (1-ε)·α*(G') ≤ α*(G)
};

/// Deletes every orbit whose per-vertex weight is ≤ tau (τ = 0 deletes
/// exactly the zero-weight orbits, provably lossless). Throws
/// EmptyReductionError when nothing survives.
ReduceResult reduce(const UDGraph& g, const AlphaStarCertificate& cert, const Rat& tau);

class NoSpindlingPairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The spindling-pair heuristic: v is the canonical-lowest vertex of a
/// maximum-weight orbit; u minimizes the MWIS weight over sets containing u
/// and avoiding v (ties to the lowest index), skipping candidates whose
/// spindling would be degenerate or leave the field. With
/// one_per_orbit, candidates u are restricted to orbit representatives.
std::pair<std::size_t, std::size_t> pick_spindling_pair(const UDGraph& g,
                                                        const AlphaStarCertificate& cert,
                                                        bool one_per_orbit = false);

struct BoundsReport {
    std::string alpha_star_exact;   // "p/q"
    std::string m1_upper_decimal;   // 10 places, rounded up (valid bound as printed)
    std::string chi_f_exact;        // "q/p"
    std::string chi_f_lower_decimal;  // 10 places, rounded down
};

BoundsReport report_bounds(const AlphaStarCertificate& cert);

/// Decimal rendering of a nonnegative rational to `places` digits, rounding
/// up or down so the printed number is itself a valid bound.
std::string decimal_round_up(const Rat& r, unsigned places);
std::string decimal_round_down(const Rat& r, unsigned places);

/// Certificate JSON (weights as "p/q" strings, witness sets as index arrays,
/// graph content hash for binding).
std::string certificate_to_json(const AlphaStarCertificate& cert);
AlphaStarCertificate certificate_from_json(const std::string& text);

}  // namespace udg
