#include "udg/alphastar.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <set>

namespace udg {

namespace {

std::vector<std::size_t> to_sorted_indices(const Bitset& b) {
    return b.to_indices();  // already ascending
}

// Greedy maximal independent set containing `start`; the rest of the graph
// is filled in following `order`.
std::vector<std::size_t> greedy_independent_set(const UDGraph& g, std::size_t start,
                                                const std::vector<std::size_t>& order) {
    Bitset blocked(g.num_vertices());
    Bitset chosen(g.num_vertices());
    auto take = [&](std::size_t v) {
        chosen.set(v);
        blocked |= g.neighbors(v);
        blocked.set(v);
    };
    take(start);
    for (auto v : order)
        if (!blocked.test(v)) take(v);
    return chosen.to_indices();
}

bool orbits_shape_valid(const UDGraph& g, const OrbitPartition& orbits) {
    if (orbits.orbit_of.size() != g.num_vertices()) return false;
    std::vector<std::size_t> sizes(orbits.num_orbits(), 0);
    for (auto o : orbits.orbit_of) {
        if (o >= orbits.num_orbits()) return false;
        ++sizes[o];
    }
    return sizes == orbits.orbit_sizes;
}

}  // namespace

AlphaStarOutcome alpha_star(const UDGraph& g, const OrbitPartition& orbits,
                            const AlphaStarOptions& options) {
    const std::size_t n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("alpha_star: empty graph");
    if (!orbits_shape_valid(g, orbits)) throw std::invalid_argument("alpha_star: invalid orbit partition");

    const auto started = std::chrono::steady_clock::now();
    auto out_of_budget = [&] {
        if (options.time_budget_seconds <= 0) return false;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        return elapsed.count() > options.time_budget_seconds;
    };

    MwisSolver solver(g);

    // Warm start: carry over sets that are still independent in g.
    std::vector<std::vector<std::size_t>> sets;
    std::set<std::vector<std::size_t>> seen;
    for (auto s : options.warm_sets) {
        std::sort(s.begin(), s.end());
        if (!s.empty() && s.back() >= n) continue;
        if (!g.is_independent(s)) continue;
        if (seen.insert(s).second) sets.push_back(std::move(s));
    }

    // With an empty family P1 returns the uniform weighting, turning the
    // first oracle call into a pure maximum-independent-set instance that is
    // hopeless on large graphs. Seeding one greedy maximal independent set
    // per orbit covers every vertex with at least one constraint, so the
    // first weighting is already informative. Seeds are ordinary family
    // members; they do not change the computed value.
    if (sets.empty()) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
        for (auto r : orbits.representatives()) {
            auto s = greedy_independent_set(g, r, order);
            if (seen.insert(s).second) sets.push_back(std::move(s));
        }
    }

    AlphaStarOutcome out;
    out.optup = 1;
    out.optlow = 0;
    out.certificate.graph_hash = g.content_hash();
    out.certificate.orbits = orbits;

    P1Solution p1 = solve_p1(sets, orbits);
    out.optlow = p1.objective;
    WeightDist current = p1.weights;

    const Bitset no_force(n);
    for (;;) {
        const std::vector<Rat> wv = current.per_vertex(orbits);
        // Every normalized weighting has maximum set weight >= alpha* >=
        // optlow, so the oracle may prune at optlow: a solve that cannot
        // beat the floor proves the maximum equals optlow — convergence.
        MwisResult best = solver.solve(wv, no_force, no_force, out.optlow);
        // Total weight is normalized to 1, so the set weight is the ratio.
        const bool at_floor = best.weight <= out.optlow;
        const Rat up = at_floor ? out.optlow : best.weight;

        if (up < out.optup) {
            out.optup = up;
            out.certificate.weights = current;  // best weighting seen so far
        }
        if (out.optlow > out.optup) throw std::logic_error("alpha_star: bound crossing");
        out.history.push_back({out.optup, out.optlow, sets.size(), solver.last_nodes()});
        if (options.log)
            *options.log << "iter " << out.history.size() << ": optlow=" << rat_to_string(out.optlow)
                         << " optup=" << rat_to_string(out.optup) << " sets=" << sets.size()
                         << " nodes=" << solver.last_nodes() << '\n';

        if (at_floor) {
            // The weighting under which this MWIS was solved is optimal.
            out.converged = true;
            out.certificate.weights = current;
            out.certificate.alpha_star = up;
            out.certificate.witness_sets = sets;
            if (best.weight == up) {
                out.certificate.witness_sets.push_back(to_sorted_indices(best.set));
            } else {
                // The pruned search did not surface a set achieving the
                // optimum; the LP guarantees a binding set in the family.
                bool bound_found = false;
                for (const auto& s : sets) {
                    Rat ws = 0;
                    for (auto v : s) ws += wv[v];
                    if (ws == up) {
                        bound_found = true;
                        break;
                    }
                }
                if (!bound_found)
                    throw std::logic_error("alpha_star: no binding set at convergence");
            }
            return out;
        }

        auto indices = to_sorted_indices(best.set);
        if (!seen.insert(indices).second)
            throw std::logic_error("alpha_star: stalled (repeated set without convergence)");
        sets.push_back(std::move(indices));

        if (out_of_budget()) {
            out.certificate.alpha_star = out.optup;
            out.certificate.witness_sets = sets;
            return out;
        }

        p1 = solve_p1(sets, orbits);
        if (p1.objective < out.optlow) throw std::logic_error("alpha_star: lower bound regressed");
        out.optlow = p1.objective;
        current = p1.weights;
    }
}

bool verify_certificate(const UDGraph& g, const AlphaStarCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cert.graph_hash != g.content_hash()) return fail("graph hash mismatch");
    if (!orbits_shape_valid(g, cert.orbits)) return fail("orbit partition malformed");
    if (cert.weights.orbit_weight.size() != cert.orbits.num_orbits())
        return fail("weight count does not match orbit count");

    Rat total = 0;
    for (std::size_t j = 0; j < cert.weights.orbit_weight.size(); ++j) {
        const Rat& w = cert.weights.orbit_weight[j];
        if (w < 0) return fail("negative orbit weight");
        total += w * static_cast<long>(cert.orbits.orbit_sizes[j]);
    }
    if (total != 1) return fail("weights not normalized to total 1");

    for (const auto& s : cert.witness_sets)
        if (!g.is_independent(s)) return fail("witness set is not independent");

    if (cert.alpha_star <= 0 || cert.alpha_star > 1) return fail("alpha* out of range");

    // Exact recheck in two halves. Lower half: some witness set must achieve
    // the claimed value under the certified weighting (all witnesses were
    // just checked independent).
    const std::vector<Rat> wv = cert.per_vertex_weights();
    bool achieved = false;
    for (const auto& s : cert.witness_sets) {
        Rat ws = 0;
        for (auto v : s) ws += wv[v];
        if (ws > cert.alpha_star)
            return fail("witness set of weight " + rat_to_string(ws) +
                        " exceeds the claimed alpha* " + rat_to_string(cert.alpha_star));
        if (ws == cert.alpha_star) achieved = true;
    }
    if (!achieved) return fail("no witness set achieves the claimed alpha*");

    // Upper half: a fresh exact search, pruned at the claim, must fail to
    // beat it. Together the halves prove MWIS(w) == alpha* exactly.
    MwisSolver solver(g);
    const Bitset none(g.num_vertices());
    MwisResult best = solver.solve(wv, none, none, cert.alpha_star);
    if (best.weight > cert.alpha_star)
        return fail("MWIS under certified weighting reaches " + rat_to_string(best.weight) +
                    ", certificate claims " + rat_to_string(cert.alpha_star));
    return true;
}

ReduceResult reduce(const UDGraph& g, const AlphaStarCertificate& cert, const Rat& tau) {
    const std::vector<Rat> wv = cert.per_vertex_weights();
    Bitset keep(g.num_vertices());
    Rat deleted = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (wv[v] <= tau)
            deleted += wv[v];
        else
            keep.set(v);
    }
    if (keep.none()) throw EmptyReductionError("reduce: threshold deletes every orbit");
    return {g.induced_subgraph(keep), deleted};  // total weight is 1
}

std::pair<std::size_t, std::size_t> pick_spindling_pair(const UDGraph& g,
                                                        const AlphaStarCertificate& cert,
                                                        bool one_per_orbit) {
    if (!g.geometric()) throw NoSpindlingPairError("spindling needs a geometric graph");
    const std::vector<Rat> wv = cert.per_vertex_weights();

    // v: canonical-lowest vertex whose orbit has the greatest per-vertex weight.
    Rat best_w = -1;
    std::size_t v = g.num_vertices();
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        if (wv[i] > best_w) {
            best_w = wv[i];
            v = i;
        }
    }

    std::vector<std::size_t> candidates;
    if (one_per_orbit) {
        for (auto r : cert.orbits.representatives())
            if (r != v) candidates.push_back(r);
    } else {
        for (std::size_t i = 0; i < g.num_vertices(); ++i)
            if (i != v) candidates.push_back(i);
    }

    MwisSolver solver(g);
    Rat best_val;
    std::size_t u = g.num_vertices();
    const FieldElem quarter{Rat(1, 4)};
    for (auto cand : candidates) {
        // Spindling preconditions: 2d >= 1 and sin θ in the field.
        const FieldElem d2 = dist2(g.point(cand), g.point(v));
        if (d2.is_zero() || sign(d2 - quarter) < 0) continue;
        const FieldElem cos_t = FieldElem::one() - inverse(d2 + d2);
        if (!sqrt(FieldElem::one() - cos_t * cos_t)) continue;

        Bitset in(g.num_vertices()), ex(g.num_vertices());
        in.set(cand);
        ex.set(v);
        Rat val = solver.solve(wv, in, ex).weight;
        if (u == g.num_vertices() || val < best_val) {
            best_val = val;
            u = cand;
        }
    }
    if (u == g.num_vertices()) throw NoSpindlingPairError("no spindleable candidate vertex");
    return {u, v};
}

std::string decimal_round_up(const Rat& r, unsigned places) {
    if (r < 0) throw std::invalid_argument("decimal rounding expects nonnegative input");
    Int scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    const Int num = numerator(r) * scale;
    const Int den = denominator(r);
    Int q = num / den;
    if (q * den < num) ++q;  // ceil
    std::string digits = q.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return digits;
}

std::string decimal_round_down(const Rat& r, unsigned places) {
    if (r < 0) throw std::invalid_argument("decimal rounding expects nonnegative input");
    Int scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    const Int q = (numerator(r) * scale) / denominator(r);  // floor for nonnegative
    std::string digits = q.str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return digits;
}

BoundsReport report_bounds(const AlphaStarCertificate& cert) {
    BoundsReport r;
    r.alpha_star_exact = rat_to_string(cert.alpha_star);
    r.m1_upper_decimal = decimal_round_up(cert.alpha_star, 10);
    const Rat chif = cert.chi_f();
    r.chi_f_exact = rat_to_string(chif);
    r.chi_f_lower_decimal = decimal_round_down(chif, 10);
    return r;
}

std::string certificate_to_json(const AlphaStarCertificate& cert) {
    nlohmann::json j;
    j["type"] = "alphastar-certificate";
    j["graph_hash"] = cert.graph_hash;
    j["orbit_of"] = cert.orbits.orbit_of;
    auto& w = j["orbit_weights"] = nlohmann::json::array();
    for (const auto& r : cert.weights.orbit_weight) w.push_back(rat_to_string(r));
    j["alpha_star"] = rat_to_string(cert.alpha_star);
    j["chi_f"] = rat_to_string(cert.chi_f());
    j["witness_sets"] = cert.witness_sets;
    return j.dump(1);
}

AlphaStarCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AlphaStarCertificate cert;
    cert.graph_hash = j.at("graph_hash").get<std::uint64_t>();
    cert.orbits.orbit_of = j.at("orbit_of").get<std::vector<std::size_t>>();
    std::size_t p = 0;
    for (auto o : cert.orbits.orbit_of) p = std::max(p, o + 1);
    cert.orbits.orbit_sizes.assign(p, 0);
    for (auto o : cert.orbits.orbit_of) ++cert.orbits.orbit_sizes[o];
    for (const auto& s : j.at("orbit_weights"))
        cert.weights.orbit_weight.push_back(parse_rat(s.get<std::string>()));
    cert.alpha_star = parse_rat(j.at("alpha_star").get<std::string>());
    cert.witness_sets = j.at("witness_sets").get<std::vector<std::vector<std::size_t>>>();
    return cert;
}

}  // namespace udg
