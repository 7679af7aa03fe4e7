#include "udg/structures.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace udg {

namespace {

void bron_kerbosch(const UDGraph& g, std::vector<std::size_t>& r, Bitset p, Bitset x,
                   std::vector<std::vector<std::size_t>>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P∪X with most neighbors in P, lowest index on ties.
    std::size_t pivot = g.num_vertices(), best = 0;
    (p | x).for_each([&](std::size_t u) {
        std::size_t cnt = (p & g.neighbors(u)).count();
        if (pivot == g.num_vertices() || cnt > best) {
            pivot = u;
            best = cnt;
        }
    });
    Bitset candidates = p;
    if (pivot != g.num_vertices()) candidates -= g.neighbors(pivot);
    candidates.for_each([&](std::size_t v) {
        r.push_back(v);
        bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    });
}

std::size_t induced_edge_count(const UDGraph& g, const Bitset& mask) {
    std::size_t twice = 0;
    mask.for_each([&](std::size_t i) { twice += (g.neighbors(i) & mask).count(); });
    return twice / 2;
}

Rat brute_rec(const UDGraph& g, const std::vector<Rat>& w, Bitset p) {
    if (p.none()) return Rat(0);
    // Branch on the highest-degree remaining vertex.
    std::size_t v = g.num_vertices(), best = 0;
    p.for_each([&](std::size_t u) {
        std::size_t deg = (p & g.neighbors(u)).count();
        if (v == g.num_vertices() || deg > best) {
            v = u;
            best = deg;
        }
    });
    Bitset without = p;
    without.reset(v);
    Rat skip = brute_rec(g, w, without);
    Bitset take_p = without - g.neighbors(v);
    Rat take = w[v] + brute_rec(g, w, take_p);
    return std::max(skip, take);
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const UDGraph& g) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t n = g.num_vertices();
    if (n == 0) return out;
    Bitset p(n), x(n);
    p.set_all();
    std::vector<std::size_t> r;
    bron_kerbosch(g, r, p, x, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> moser_spindles(const UDGraph& g) {
    if (!g.geometric()) return {};
    const std::size_t n = g.num_vertices();

    // Unit rhombi as (apex u, far vertex c, shared edge {a,b}): two unit
    // triangles over a common edge; the two apexes sit at squared distance 3.
    struct Rhombus { std::size_t far, a, b; };
    std::vector<std::vector<Rhombus>> hinged(n);  // indexed by apex
    for (std::size_t a = 0; a < n; ++a) {
        g.neighbors(a).for_each([&](std::size_t b) {
            if (b <= a) return;
            auto common = (g.neighbors(a) & g.neighbors(b)).to_indices();
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = 0; j < common.size(); ++j)
                    if (i != j) hinged[common[i]].push_back({common[j], a, b});
        });
    }

    std::set<std::vector<std::size_t>> found;
    for (std::size_t u = 0; u < n; ++u) {
        const auto& rh = hinged[u];
        for (std::size_t i = 0; i < rh.size(); ++i) {
            for (std::size_t j = i + 1; j < rh.size(); ++j) {
                if (!is_unit(g.point(rh[i].far), g.point(rh[j].far))) continue;
                std::vector<std::size_t> s{u, rh[i].far, rh[i].a, rh[i].b,
                                           rh[j].far, rh[j].a, rh[j].b};
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                if (s.size() != 7) continue;
                Bitset mask(n);
                for (auto v : s) mask.set(v);
                if (induced_edge_count(g, mask) != 11) continue;
                found.insert(std::move(s));
            }
        }
    }
    return {found.begin(), found.end()};
}

Rat alpha_brute(const UDGraph& g, const std::vector<Rat>& weights) {
    const std::size_t n = g.num_vertices();
    if (n > 30) throw std::invalid_argument("alpha_brute: graph too large (|V| > 30)");
    if (weights.size() != n) throw std::invalid_argument("alpha_brute: weight count mismatch");
    Bitset p(n);
    p.set_all();
    return brute_rec(g, weights, p);
}

std::vector<Point> moser_spindle_points() {
    const FieldElem half{Rat(1, 2)};
    const FieldElem s3_2{Rat(0), Rat(1, 2)};  // sqrt3 / 2
    std::vector<Point> rhombus{
        {FieldElem::zero(), FieldElem::zero()},
        {FieldElem::one(), FieldElem::zero()},
        {half, s3_2},
        {half + FieldElem::one(), s3_2},
    };
    const RotationSpec rot{FieldElem{Rat(5, 6)}, FieldElem{Rat(0), Rat(0), Rat(1, 6)}};
    std::vector<Point> pts = rhombus;
    for (const auto& p : rhombus) pts.push_back(rotate(p, rhombus[0], rot));
    return pts;
}

}  // namespace udg
