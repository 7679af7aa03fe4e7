#include "udg/dataset.hpp"

#include "udg/ops.hpp"

#include <set>
#include <stdexcept>

namespace udg {

namespace {

// The 102 sector vertices, verbatim in the (a, b, c, d) = a+b√3+c√11+d√33
// quadruple notation, one point per line.
constexpr const char* kFinal102 = R"raw(
((0, 0, 0, 0), (0, 0, 0, 0)),
((1/2, 0, 0, -1/6), (0, 0, 0, 0)),
((3/2, 0, 0, -1/6), (0, 0, 0, 0)),
((-1/2, 0, 0, 1/6), (0, 1/3, 0, 0)),
((-1/4, 0, 0, 1/12), (0, 7/12, -1/4, 0)),
((-1/12, 0, 0, 1/12), (0, 1/12, 1/12, 0)),
((0, 0, 0, 1/6), (0, 1/6, 0, 0)),
((0, 0, 0, 1/6), (0, 1/2, 0, 0)),
((0, 0, 0, 1/6), (0, 5/6, 0, 0)),
((1/4, 0, 0, 1/12), (0, -5/12, 1/4, 0)),
((1/4, 0, 0, 1/12), (0, -1/12, 1/4, 0)),
((1/4, 0, 0, 1/12), (0, 1/4, 1/4, 0)),
((1/4, 0, 0, 1/12), (0, 3/4, -1/4, 0)),
((1/4, 0, 0, 1/12), (0, 13/12, -1/4, 0)),
((5/12, 0, 0, 1/12), (0, 7/12, 1/12, 0)),
((1/2, 0, 0, 0), (0, 1/6, 0, 0)),
((1/2, 0, 0, 0), (0, 1/2, 0, 0)),
((1/2, 0, 0, 1/6), (0, 1/3, 0, 0)),
((1/2, 0, 0, 1/6), (0, 2/3, 0, 0)),
((1/2, 0, 0, 1/6), (0, 1, 0, 0)),
((1/2, 0, 0, 1/6), (0, 4/3, 0, 0)),
((7/12, 0, 0, 1/12), (0, 7/12, -1/12, 0)),
((2/3, 0, 0, 0), (0, 1/2, -1/6, 0)),
((3/4, 0, 0, -1/12), (0, -5/12, 1/4, 0)),
((3/4, 0, 0, 1/12), (0, -1/4, 1/4, 0)),
((3/4, 0, 0, 1/12), (0, 1/12, 1/4, 0)),
((3/4, 0, 0, 1/12), (0, 5/12, 1/4, 0)),
((3/4, 0, 0, 1/12), (0, 7/12, -1/4, 0)),
((3/4, 0, 0, 1/12), (0, 3/4, 1/4, 0)),
((3/4, 0, 0, 1/12), (0, 11/12, -1/4, 0)),
((3/4, 0, 0, 1/12), (0, 5/4, -1/4, 0)),
((5/6, 0, 0, 0), (0, 0, 1/6, 0)),
((11/12, 0, 0, -1/12), (0, -1/12, 1/12, 0)),
((11/12, 0, 0, 1/12), (0, 1/12, 1/12, 0)),
((1, 0, 0, 0), (0, 1/3, 0, 0)),
((1, 0, 0, 0), (0, 2/3, 0, 0)),
((1, 0, 0, 0), (0, 1, 0, 0)),
((1, 0, 0, 1/6), (0, 1/6, 0, 0)),
((1, 0, 0, 1/6), (0, 1/2, 0, 0)),
((1, 0, 0, 1/6), (0, 5/6, 0, 0)),
((1, 0, 0, 1/6), (0, 7/6, 0, 0)),
((5/4, 0, 0, -1/12), (0, -1/4, 1/4, 0)),
((5/4, 0, 0, -1/12), (0, 1/12, 1/4, 0)),
((5/4, 0, 0, -1/12), (0, 7/12, -1/4, 0)),
((5/4, 0, 0, -1/12), (0, 11/12, -1/4, 0)),
((5/4, 0, 0, 1/12), (0, -5/12, 1/4, 0)),
((5/4, 0, 0, 1/12), (0, -1/12, 1/4, 0)),
((5/4, 0, 0, 1/12), (0, 1/4, 1/4, 0)),
((5/4, 0, 0, 1/12), (0, 7/12, 1/4, 0)),
((5/4, 0, 0, 1/12), (0, 3/4, -1/4, 0)),
((5/4, 0, 0, 1/12), (0, 11/12, 1/4, 0)),
((5/4, 0, 0, 1/12), (0, 13/12, -1/4, 0)),
((4/3, 0, 0, 0), (0, 1/2, 1/6, 0)),
((17/12, 0, 0, -1/12), (0, 5/12, 1/12, 0)),
((17/12, 0, 0, 1/12), (0, 7/12, 1/12, 0)),
((3/2, 0, 0, -1/6), (0, 1/3, 0, 0)),
((3/2, 0, 0, 0), (0, 1/6, 0, 0)),
((3/2, 0, 0, 0), (0, 1/2, 0, 0)),
((3/2, 0, 0, 0), (0, 5/6, 0, 0)),
((3/2, 0, 0, 0), (0, 7/6, 0, 0)),
((3/2, 0, 0, 1/6), (0, 1/3, 0, 0)),
((3/2, 0, 0, 1/6), (0, 2/3, 0, 0)),
((3/2, 0, 0, 1/6), (0, 1, 0, 0)),
((19/12, 0, 0, -1/12), (0, 5/12, -1/12, 0)),
((19/12, 0, 0, 1/12), (0, 7/12, -1/12, 0)),
((5/3, 0, 0, 0), (0, 1/2, -1/6, 0)),
((7/4, 0, 0, -1/12), (0, -5/12, 1/4, 0)),
((7/4, 0, 0, -1/12), (0, -1/12, 1/4, 0)),
((7/4, 0, 0, -1/12), (0, 1/4, 1/4, 0)),
((7/4, 0, 0, -1/12), (0, 7/12, 1/4, 0)),
((7/4, 0, 0, -1/12), (0, 3/4, -1/4, 0)),
((7/4, 0, 0, 1/12), (0, -1/4, 1/4, 0)),
((7/4, 0, 0, 1/12), (0, 1/12, 1/4, 0)),
((7/4, 0, 0, 1/12), (0, 5/12, 1/4, 0)),
((7/4, 0, 0, 1/12), (0, 7/12, -1/4, 0)),
((7/4, 0, 0, 1/12), (0, 3/4, 1/4, 0)),
((7/4, 0, 0, 1/12), (0, 11/12, -1/4, 0)),
((11/6, 0, 0, 0), (0, 0, 1/6, 0)),
((23/12, 0, 0, -1/12), (0, -1/12, 1/12, 0)),
((23/12, 0, 0, -1/12), (0, 11/12, 1/12, 0)),
((23/12, 0, 0, 1/12), (0, 1/12, 1/12, 0)),
((2, 0, 0, -1/6), (0, 1/6, 0, 0)),
((2, 0, 0, -1/6), (0, 1/2, 0, 0)),
((2, 0, 0, -1/6), (0, 5/6, 0, 0)),
((2, 0, 0, 0), (0, 1/3, 0, 0)),
((2, 0, 0, 0), (0, 2/3, 0, 0)),
((2, 0, 0, 0), (0, 1, 0, 0)),
((2, 0, 0, 1/6), (0, 1/6, 0, 0)),
((2, 0, 0, 1/6), (0, 1/2, 0, 0)),
((2, 0, 0, 1/6), (0, 5/6, 0, 0)),
((9/4, 0, 0, -1/12), (0, -1/4, 1/4, 0)),
((9/4, 0, 0, -1/12), (0, 1/12, 1/4, 0)),
((9/4, 0, 0, -1/12), (0, 5/12, 1/4, 0)),
((9/4, 0, 0, -1/12), (0, 7/12, -1/4, 0)),
((9/4, 0, 0, 1/12), (0, -5/12, 1/4, 0)),
((9/4, 0, 0, 1/12), (0, -1/12, 1/4, 0)),
((9/4, 0, 0, 1/12), (0, 1/4, 1/4, 0)),
((9/4, 0, 0, 1/12), (0, 7/12, 1/4, 0)),
((9/4, 0, 0, 1/12), (0, 3/4, -1/4, 0)),
((7/3, 0, 0, 0), (0, 1/2, 1/6, 0)),
((5/2, 0, 0, 0), (0, 1/6, 0, 0)),
((5/2, 0, 0, 0), (0, 1/2, 0, 0)).
)raw";

}  // namespace

const std::string& final_102_text() {
    static const std::string text = kFinal102;
    return text;
}

std::vector<Point> final_102() {
    auto pts = parse_point_list_text(final_102_text());
    if (pts.size() != 102)
        throw std::logic_error("embedded sector list parsed to " + std::to_string(pts.size()) +
                               " points, expected 102");
    return pts;
}

UDGraph final_graph() {
    UDGraph sector = UDGraph::from_points(final_102());
    UDGraph g = circle(sector);
    if (g.num_vertices() != 607)
        throw std::logic_error("circled sector graph has " + std::to_string(g.num_vertices()) +
                               " vertices, expected 607 (101 non-origin orbits of size 6 plus the origin)");
    return g;
}

bool polar_angle_check(const std::vector<Point>& points, std::vector<Point>* offenders) {
    // The list is meant to describe one sixth of a rotation-symmetric graph,
    // so what circling actually requires is that it holds exactly one
    // representative of every orbit under rotation by kπ/3. A strict angular
    // test on the nominal [0, π/3) sector would reject valid lists: a few
    // entries legitimately sit on the sector's boundary ray or on a rotated
    // axis while their five rotations are all absent. Hence the orbit test.
    std::set<std::vector<Rat>> seen;
    auto key = [](const Point& p) {
        return std::vector<Rat>{p.x.a, p.x.b, p.x.c, p.x.d, p.y.a, p.y.b, p.y.c, p.y.d};
    };
    bool ok = true;
    for (const auto& p : points) {
        if (p == Point::origin()) continue;
        bool clash = false;
        Point q = p;
        for (int k = 0; k < 6; ++k) {
            if (seen.count(key(q))) clash = true;
            q = rotate(q, Point::origin(), rot_pi_3());
        }
        if (clash) {
            ok = false;
            if (offenders) offenders->push_back(p);
        }
        seen.insert(key(p));
    }
    return ok;
}

}  // namespace udg
