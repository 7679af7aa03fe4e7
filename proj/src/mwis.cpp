#include "udg/mwis.hpp"

#include <algorithm>
#include <utility>

namespace udg {

namespace {

// The branch-and-bound core, parameterized over the scaled weight type.
// Normalized weightings scale to integers bounded by the denominator lcm, so
// whenever the lcm fits comfortably in 64 bits the whole search runs on
// native integers; otherwise the same code runs on arbitrary-precision ones.
// All partial sums are bounded by the total weight (= lcm), so the native
// path cannot overflow below 2^62.
template <typename W>
struct SearchContext {
    const UDGraph& g;
    std::vector<W> w;                   // weights scaled to a common denominator
    std::vector<Bitset> closed;         // closed neighborhoods
    std::vector<Bitset> cover_cliques;  // maximal cliques, largest first
    std::vector<Bitset> spindle_pack;   // vertex-disjoint spindles within the root residual
    std::vector<W> spindle_top2;        // per packed spindle: sum of its two heaviest weights
    W prune_floor = -1;                 // subtrees that cannot beat this are skipped
    W best_val = -1;                    // weight of the best independent set found
    Bitset best_set;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> scratch;           // bound() remainder buffer
    std::vector<std::uint32_t> weight_order;      // vertices by descending weight
    std::vector<std::vector<std::uint32_t>> cliques_of;  // per vertex: cover clique indices

    // Sum of weights over the bits of a & b, allocation-free.
    W weight_and(const Bitset& a, const Bitset& b) const {
        const auto& aw = a.words();
        const auto& bw = b.words();
        W total = 0;
        for (std::size_t i = 0; i < aw.size(); ++i) {
            std::uint64_t m = aw[i] & bw[i];
            while (m) {
                total += w[(i << 6) + std::countr_zero(m)];
                m &= m - 1;
            }
        }
        return total;
    }

    // Upper bound: disjoint spindles contribute their two heaviest vertices,
    // everything else is covered greedily by maximal cliques (one vertex each).
    W bound(const Bitset& r) {
        const auto& rw = r.words();
        scratch.assign(rw.begin(), rw.end());
        W total = 0;
        std::size_t left = r.count();
        for (std::size_t k = 0; k < spindle_pack.size() && left >= 7; ++k) {
            const auto& pw = spindle_pack[k].words();
            bool subset = true;
            for (std::size_t i = 0; i < pw.size() && subset; ++i)
                if (pw[i] & ~scratch[i]) subset = false;
            if (!subset) continue;
            total += spindle_top2[k];
            for (std::size_t i = 0; i < pw.size(); ++i) scratch[i] &= ~pw[i];
            left -= 7;
        }
        // Cover the rest greedily, heaviest uncovered vertex first: that
        // vertex is the maximum of whatever cell covers it, and the clique
        // chosen for it is the one absorbing the most uncovered weight.
        for (const std::uint32_t v : weight_order) {
            if (!left) break;
            if (!((scratch[v >> 6] >> (v & 63)) & 1)) continue;
            total += w[v];
            const std::vector<std::uint32_t>& qs = cliques_of[v];
            if (qs.empty()) {  // vertex in no clique: its own singleton cell
                scratch[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
                --left;
                continue;
            }
            std::size_t best_q = qs[0];
            if (qs.size() > 1) {
                W best_cov = -1;
                for (const std::uint32_t qi : qs) {
                    const auto& qw = cover_cliques[qi].words();
                    W cov = 0;
                    for (std::size_t i = 0; i < qw.size(); ++i) {
                        std::uint64_t m = qw[i] & scratch[i];
                        while (m) {
                            cov += w[(i << 6) + std::countr_zero(m)];
                            m &= m - 1;
                        }
                    }
                    if (cov > best_cov) {
                        best_cov = cov;
                        best_q = qi;
                    }
                }
            }
            const auto& qw = cover_cliques[best_q].words();
            for (std::size_t i = 0; i < qw.size(); ++i) {
                std::uint64_t m = qw[i] & scratch[i];
                if (!m) continue;
                left -= std::popcount(m);
                scratch[i] &= ~m;
            }
        }
        return total;
    }

    // Greedy independent set (max weight first, lowest index on ties) to
    // prime the incumbent before the exact search.
    void greedy_seed(const Bitset& root) {
        Bitset r = root;
        Bitset chosen(g.num_vertices());
        W val = 0;
        while (r.any()) {
            std::size_t pick = g.num_vertices();
            r.for_each([&](std::size_t v) {
                if (pick == g.num_vertices() || w[v] > w[pick]) pick = v;
            });
            chosen.set(pick);
            val += w[pick];
            r -= closed[pick];
        }
        if (val > best_val) {
            best_val = val;
            best_set = std::move(chosen);
        }
    }

    // Deterministic local improvement of the incumbent: bring in a vertex
    // whenever it outweighs the neighbors it evicts, then re-maximalize.
    void local_improve(const Bitset& root) {
        Bitset s = best_set;
        W val = best_val;
        for (int pass = 0; pass < 50; ++pass) {
            bool improved = false;
            root.for_each([&](std::size_t v) {
                if (s.test(v)) return;
                const W evicted = weight_and(g.neighbors(v), s);
                if (w[v] <= evicted) return;
                s -= g.neighbors(v);
                s.set(v);
                val += w[v] - evicted;
                improved = true;
            });
            if (!improved) break;
            // Re-maximalize: add any vertex that now fits (heaviest first).
            for (;;) {
                std::size_t pick = g.num_vertices();
                root.for_each([&](std::size_t v) {
                    if (s.test(v) || g.neighbors(v).intersects(s)) return;
                    if (pick == g.num_vertices() || w[v] > w[pick]) pick = v;
                });
                if (pick == g.num_vertices()) break;
                s.set(pick);
                val += w[pick];
            }
        }
        if (val > best_val) {
            best_val = val;
            best_set = std::move(s);
        }
    }

    W target() const { return best_val > prune_floor ? best_val : prune_floor; }

    // Depth-first branch-and-bound with global incumbent pruning. Exact as
    // long as the optimum exceeds prune_floor; otherwise only certifies that
    // the optimum is <= prune_floor (best_val then holds the best set found,
    // which may be suboptimal).
    void dfs(Bitset r, Bitset chosen, W cur) {
        ++nodes;

        // Reductions to a fixpoint: neighborhood removal, then domination.
        for (bool changed = true; changed;) {
            changed = false;
            const auto& rw = r.words();
            for (std::size_t i = 0; i < rw.size(); ++i) {
                std::uint64_t m = rw[i];
                while (m) {
                    const std::size_t v = (i << 6) + std::countr_zero(m);
                    m &= m - 1;
                    if (!r.test(v)) continue;
                    if (w[v] >= weight_and(g.neighbors(v), r)) {  // isolated vertices too
                        chosen.set(v);
                        cur += w[v];
                        r -= closed[v];
                        changed = true;
                        m &= rw[i];  // bits of this word may have been cleared
                    }
                }
            }
            for (std::size_t i = 0; i < rw.size(); ++i) {
                std::uint64_t m = rw[i];
                while (m) {
                    const std::size_t v = (i << 6) + std::countr_zero(m);
                    m &= m - 1;
                    const auto& nv = g.neighbors(v).words();
                    bool dominated = false;
                    for (std::size_t j = 0; j < nv.size() && !dominated; ++j) {
                        std::uint64_t um = nv[j] & rw[j];
                        while (um && !dominated) {
                            const std::size_t u = (j << 6) + std::countr_zero(um);
                            um &= um - 1;
                            if (w[u] < w[v]) continue;
                            // v is dominated by u when N(u) ∩ r ⊆ N(v) ∪ {v}.
                            const auto& nu = g.neighbors(u).words();
                            bool covers = true;
                            for (std::size_t t = 0; t < nu.size() && covers; ++t) {
                                std::uint64_t extra = nu[t] & rw[t] & ~nv[t];
                                if (t == (v >> 6)) extra &= ~(std::uint64_t(1) << (v & 63));
                                if (extra) covers = false;
                            }
                            dominated = covers;
                        }
                    }
                    if (dominated) {
                        r.reset(v);
                        changed = true;
                    }
                }
            }
        }

        if (cur > best_val) {
            best_val = cur;
            best_set = chosen;
        }
        if (!r.any()) return;
        if (cur + bound(r) <= target()) return;

        // Branch vertex: maximum residual weight-degree, lowest index on ties.
        std::size_t branch = g.num_vertices();
        W best_score = 0;
        r.for_each([&](std::size_t v) {
            W score = weight_and(g.neighbors(v), r);
            if (branch == g.num_vertices() || score > best_score) {
                branch = v;
                best_score = score;
            }
        });

        Bitset with = chosen;
        with.set(branch);
        dfs(r - closed[branch], std::move(with), cur + w[branch]);

        Bitset without = r;
        without.reset(branch);
        if (cur + bound(without) > target()) dfs(std::move(without), std::move(chosen), cur);
    }
};

using I128 = __int128;

I128 to_i128(const Int& x) {
    const bool neg = x < 0;
    const Int a = neg ? Int(-x) : x;
    const std::uint64_t lo = Int(a & Int(0xFFFFFFFFFFFFFFFFull)).convert_to<std::uint64_t>();
    const std::uint64_t hi = Int(a >> 64).convert_to<std::uint64_t>();
    const I128 r = (static_cast<I128>(hi) << 64) | static_cast<I128>(lo);
    return neg ? -r : r;
}

std::pair<std::vector<Int>, Int> scale_weights(const std::vector<Rat>& weights) {
    Int lcm = 1;
    for (const auto& r : weights) {
        if (r < 0) throw std::invalid_argument("mwis: negative weight");
        lcm = boost::multiprecision::lcm(lcm, Int(denominator(r)));
    }
    std::vector<Int> w;
    w.reserve(weights.size());
    for (const auto& r : weights) w.push_back(Int(numerator(r)) * (lcm / Int(denominator(r))));
    return {std::move(w), lcm};
}

}  // namespace

MwisSolver::MwisSolver(const UDGraph& g) : MwisSolver(g, Options{}) {}

MwisSolver::MwisSolver(const UDGraph& g, Options opt) : g_(g), opt_(opt) {
    auto cliques = maximal_cliques(g);
    std::stable_sort(cliques.begin(), cliques.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& q : cliques) {
        Bitset mask(g.num_vertices());
        for (auto v : q) mask.set(v);
        clique_masks_.push_back(std::move(mask));
    }
    if (opt_.use_spindle_bounds && g.geometric()) {
        for (const auto& s : moser_spindles(g)) {
            Bitset mask(g.num_vertices());
            for (auto v : s) mask.set(v);
            spindle_masks_.push_back(std::move(mask));
        }
    }
}

MwisResult MwisSolver::solve(const std::vector<Rat>& weights) const {
    Bitset none(g_.num_vertices());
    return solve(weights, none, none);
}

MwisResult MwisSolver::solve(const std::vector<Rat>& weights, const Bitset& forced_in,
                             const Bitset& forced_out) const {
    return solve(weights, forced_in, forced_out, Rat(-1));
}

namespace {

template <typename W>
MwisResult run_search(const UDGraph& g, const std::vector<Rat>& weights, std::vector<W> scaled,
                      const W& scaled_floor, const Bitset& forced_in, const Bitset& residual,
                      const std::vector<Bitset>& cliques, const std::vector<Bitset>& spindles,
                      bool use_spindles, std::uint64_t& nodes_out) {
    const std::size_t n = g.num_vertices();
    SearchContext<W> ctx{g,  std::move(scaled), {}, {}, {}, {},
                         scaled_floor, -1, Bitset(n), 0,  {}, {}, {}};
    ctx.closed.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        Bitset c = g.neighbors(v);
        c.set(v);
        ctx.closed.push_back(std::move(c));
    }
    ctx.cover_cliques = cliques;
    ctx.weight_order.resize(n);
    for (std::size_t v = 0; v < n; ++v) ctx.weight_order[v] = static_cast<std::uint32_t>(v);
    std::stable_sort(ctx.weight_order.begin(), ctx.weight_order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return ctx.w[a] > ctx.w[b]; });
    ctx.cliques_of.assign(n, {});
    for (std::size_t qi = 0; qi < cliques.size(); ++qi)
        cliques[qi].for_each(
            [&](std::size_t v) { ctx.cliques_of[v].push_back(static_cast<std::uint32_t>(qi)); });

    // Greedy disjoint spindle packing inside the root residual, heaviest
    // spindles first: each packed spindle caps its 7 vertices at the sum of
    // its two heaviest, so packing the heavy ones saves the most.
    if (use_spindles) {
        std::vector<std::pair<W, std::size_t>> keyed;
        keyed.reserve(spindles.size());
        for (std::size_t i = 0; i < spindles.size(); ++i) {
            W sum = 0;
            spindles[i].for_each([&](std::size_t v) { sum += ctx.w[v]; });
            keyed.emplace_back(std::move(sum), i);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        Bitset free = residual;
        for (const auto& [sum, i] : keyed) {
            const Bitset& s = spindles[i];
            if (!s.is_subset_of(free)) continue;
            std::vector<W> ws;
            s.for_each([&](std::size_t v) { ws.push_back(ctx.w[v]); });
            std::partial_sort(ws.begin(), ws.begin() + 2, ws.end(), std::greater<>());
            ctx.spindle_pack.push_back(s);
            ctx.spindle_top2.push_back(ws[0] + ws[1]);
            free -= s;
        }
    }

    ctx.greedy_seed(residual);
    ctx.local_improve(residual);
    ctx.dfs(residual, Bitset(n), 0);
    Bitset set = ctx.best_set;
    set |= forced_in;
    nodes_out = ctx.nodes;

    MwisResult result{set, Rat(0)};
    set.for_each([&](std::size_t v) { result.weight += weights[v]; });
    return result;
}

}  // namespace

MwisResult MwisSolver::solve(const std::vector<Rat>& weights, const Bitset& forced_in,
                             const Bitset& forced_out, const Rat& prune_floor) const {
    const std::size_t n = g_.num_vertices();
    if (weights.size() != n) throw std::invalid_argument("mwis: weight count mismatch");
    if (forced_in.intersects(forced_out))
        throw InfeasibleError("mwis: forced_in and forced_out overlap");
    if (!g_.is_independent(forced_in)) throw InfeasibleError("mwis: forced_in is not independent");

    auto [scaled, lcm] = scale_weights(weights);

    Bitset residual(n);
    residual.set_all();
    residual -= forced_out;
    forced_in.for_each([&](std::size_t v) {
        residual -= g_.neighbors(v);
        residual.reset(v);
    });

    // Zero-weight vertices never change the optimum value; dropping them up
    // front keeps the search on the support of the weighting.
    for (std::size_t v = 0; v < n; ++v)
        if (scaled[v] == 0) residual.reset(v);

    // Translate the floor (total weight, forced_in included) into the scaled
    // integer units of the residual search: the search may stop proving
    // optimality once cur + bound <= floor - w(forced_in).
    Int floor_scaled = -1;
    if (prune_floor >= 0) {
        Int in_weight = 0;
        forced_in.for_each([&](std::size_t v) { in_weight += scaled[v]; });
        const Rat f = prune_floor * Rat(lcm) - Rat(in_weight);
        // cur + bound is an integer, so <= f iff <= floor(f).
        const Int num = Int(numerator(f));
        const Int den = Int(denominator(f));
        Int q = num / den;
        if (q * den > num) --q;  // floor for negative values
        floor_scaled = q;
    }

    // All partial sums in the search are bounded by the total scaled weight,
    // so pick the narrowest integer type that cannot overflow: 64-bit,
    // 128-bit, then arbitrary precision.
    Int total = 0;
    for (const auto& x : scaled) total += x;
    Int magnitude = total;
    if (floor_scaled > magnitude) magnitude = floor_scaled;
    if (-floor_scaled > magnitude) magnitude = -floor_scaled;

    if (magnitude < (Int(1) << 62)) {
        std::vector<long long> sw(n);
        for (std::size_t v = 0; v < n; ++v) sw[v] = static_cast<long long>(scaled[v]);
        return run_search<long long>(g_, weights, std::move(sw),
                                     static_cast<long long>(floor_scaled), forced_in, residual,
                                     clique_masks_, spindle_masks_, opt_.use_spindle_bounds,
                                     nodes_);
    }
    if (magnitude < (Int(1) << 125)) {
        std::vector<I128> sw(n);
        for (std::size_t v = 0; v < n; ++v) sw[v] = to_i128(scaled[v]);
        return run_search<I128>(g_, weights, std::move(sw), to_i128(floor_scaled), forced_in,
                                residual, clique_masks_, spindle_masks_, opt_.use_spindle_bounds,
                                nodes_);
    }
    return run_search<Int>(g_, weights, std::move(scaled), floor_scaled, forced_in, residual,
                           clique_masks_, spindle_masks_, opt_.use_spindle_bounds, nodes_);
}

MwisResult mwis_solve(const UDGraph& g, const std::vector<Rat>& weights) {
    return MwisSolver(g).solve(weights);
}

MwisResult mwis_solve(const UDGraph& g, const std::vector<Rat>& weights, const Bitset& forced_in,
                      const Bitset& forced_out) {
    return MwisSolver(g).solve(weights, forced_in, forced_out);
}

MwisResult mwis_solve_excluding_including(const UDGraph& g, const std::vector<Rat>& weights,
                                          std::size_t exclude, std::size_t include) {
    if (exclude == include) throw std::invalid_argument("mwis: exclude == include");
    Bitset in(g.num_vertices()), out(g.num_vertices());
    in.set(include);
    out.set(exclude);
    return mwis_solve(g, weights, in, out);
}

}  // namespace udg
