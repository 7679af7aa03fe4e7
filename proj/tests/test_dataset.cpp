#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "udg/dataset.hpp"
#include "udg/ops.hpp"
#include "udg/symmetry.hpp"
#include "test_util.hpp"

using namespace udg;
using testutil::fe;
using testutil::fq;
using testutil::pt;

TEST_CASE("the embedded 102-point list") {
    auto pts = final_102();
    REQUIRE(pts.size() == 102);
    CHECK(pts.front() == Point::origin());
    CHECK(pts[1] == pt(fq(1, 2, 0, 1, 0, 1, -1, 6), fe(0)));
    // The raw text parses to the same list every time.
    CHECK(parse_point_list_text(final_102_text()) == pts);
}

TEST_CASE("the list holds one representative per rotation orbit") {
    auto pts = final_102();
    std::vector<Point> offenders;
    CHECK(polar_angle_check(pts, &offenders));
    CHECK(offenders.empty());

    // Origin alone passes (it is skipped), the unit x-direction passes...
    CHECK(polar_angle_check({Point::origin(), pt(fe(1), fe(0))}));
    // ...but adding a kπ/3-rotated copy of a listed point fails.
    std::vector<Point> with_copy = pts;
    with_copy.push_back(rotate(pts[5], Point::origin(), rot_pi_3()));
    CHECK_FALSE(polar_angle_check(with_copy, &offenders));
    CHECK_FALSE(offenders.empty());
    // A duplicate point fails as well (its own trivial rotation).
    CHECK_FALSE(polar_angle_check({pt(fe(1), fe(0)), pt(fe(1), fe(0))}));
}

TEST_CASE("circling regenerates the 607-vertex graph deterministically") {
    UDGraph g = final_graph();
    CHECK(g.num_vertices() == 607);
    CHECK(g.num_edges() == UDGraph::from_points(g.points()).num_edges());

    // The origin appears exactly once.
    std::size_t at_origin = 0;
    for (const auto& p : g.points())
        if (p == Point::origin()) ++at_origin;
    CHECK(at_origin == 1);

    // Same construction, same graph.
    UDGraph again = circle(UDGraph::from_points(final_102()));
    CHECK(again.num_vertices() == 607);
    CHECK(again.points() == g.points());
    CHECK(again.edge_list() == g.edge_list());
    CHECK(again.content_hash() == g.content_hash());
}

TEST_CASE("the 607-vertex graph is rotation invariant with dihedral orbits") {
    UDGraph g = final_graph();

    // Rotating the whole point set by pi/3 permutes it.
    for (const auto& p : g.points())
        CHECK(g.find(rotate(p, Point::origin(), rot_pi_3())) < g.num_vertices());

    OrbitPartition orbits = geometric_orbits(g);
    const std::size_t origin_idx = g.find(Point::origin());
    REQUIRE(origin_idx < g.num_vertices());
    CHECK(orbits.orbit_sizes[orbits.orbit_of[origin_idx]] == 1);
    for (auto s : orbits.orbit_sizes) CHECK(12 % s == 0);
    CHECK(orbits.num_orbits() < 607);
}
