#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udg/ops.hpp"
#include "udg/structures.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace udg;
using testutil::fe;
using testutil::pt;

namespace {

// Exhaustive maximal-clique oracle for small graphs (cliques here have <= 3
// vertices, so subsets up to size 4 suffice to refute maximality too).
std::set<std::vector<std::size_t>> cliques_by_force(const UDGraph& g) {
    const std::size_t n = g.num_vertices();
    auto is_clique = [&](const std::vector<std::size_t>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.adjacent(s[i], s[j])) return false;
        return true;
    };
    std::set<std::vector<std::size_t>> out;
    std::vector<std::size_t> s;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!s.empty()) {
            bool maximal = true;
            for (std::size_t v = 0; v < n && maximal; ++v) {
                if (std::find(s.begin(), s.end(), v) != s.end()) continue;
                bool all = true;
                for (auto u : s) all = all && g.adjacent(u, v);
                if (all) maximal = false;
            }
            if (maximal) out.insert(s);
        }
        if (s.size() == 4) return;
        for (std::size_t v = from; v < n; ++v) {
            s.push_back(v);
            if (is_clique(s)) self(self, v + 1);
            s.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("maximal cliques on fixed graphs") {
    CHECK(maximal_cliques(UDGraph::from_points({})).empty());

    auto tri = maximal_cliques(testutil::triangle());
    REQUIRE(tri.size() == 1);
    CHECK(tri[0] == std::vector<std::size_t>{0, 1, 2});

    UDGraph spindle = testutil::moser();
    auto got = maximal_cliques(spindle);
    std::set<std::vector<std::size_t>> got_set(got.begin(), got.end());
    CHECK(got_set == cliques_by_force(spindle));
    std::size_t triangles = 0;
    for (const auto& q : got) {
        CHECK(q.size() <= 3);
        if (q.size() == 3) ++triangles;
    }
    CHECK(triangles == 4);
}

TEST_CASE("maximal cliques match the oracle on random graphs") {
    std::mt19937 rng(73);
    for (int t = 0; t < 40; ++t) {
        UDGraph g = testutil::random_lattice_graph(rng, 20);
        auto got = maximal_cliques(g);
        std::set<std::vector<std::size_t>> got_set(got.begin(), got.end());
        CHECK(got_set.size() == got.size());  // no duplicates
        CHECK(got_set == cliques_by_force(g));
    }
}

TEST_CASE("moser spindle detection") {
    CHECK(moser_spindles(testutil::moser()).size() == 1);
    CHECK(moser_spindles(testutil::moser())[0] == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});

    UDGraph hex = circle(UDGraph::from_points({pt(fe(1), fe(0))}));
    CHECK(moser_spindles(hex).empty());

    CHECK(moser_spindles(testutil::c5()).empty());  // abstract graph

    // Six rotated copies of the spindle hinged at the origin.
    UDGraph ring = circle(testutil::moser());
    auto found = moser_spindles(ring);
    CHECK(found.size() >= 6);
    for (const auto& s : found) {
        REQUIRE(s.size() == 7);
        UDGraph sub = ring.induced_subgraph(s);
        CHECK(sub.num_edges() == 11);
        CHECK(alpha_brute(sub, std::vector<Rat>(7, Rat(1))) == Rat(2));
    }
    CHECK(found == moser_spindles(ring));  // deterministic
}

TEST_CASE("alpha_brute") {
    std::vector<Rat> unit3(3, Rat(1)), unit7(7, Rat(1)), unit5(5, Rat(1));
    CHECK(alpha_brute(testutil::p3(), unit3) == Rat(2));
    CHECK(alpha_brute(testutil::moser(), unit7) == Rat(2));
    CHECK(alpha_brute(testutil::c5(), unit5) == Rat(2));
    CHECK(alpha_brute(testutil::p3(), {Rat(1, 4), Rat(1, 2), Rat(1, 4)}) == Rat(1, 2));

    UDGraph big = UDGraph::from_edges(31, {});
    CHECK_THROWS_AS(alpha_brute(big, std::vector<Rat>(31, Rat(1))), std::invalid_argument);
}

TEST_CASE("moser_spindle_points builds the standard spindle") {
    UDGraph g = UDGraph::from_points(moser_spindle_points());
    CHECK(g.num_vertices() == 7);
    CHECK(g.num_edges() == 11);
}
