#include "udg/ops.hpp"

#include <cassert>

namespace udg {

namespace {

void require_geometric(const UDGraph& g, const char* what) {
    if (!g.geometric()) throw NotGeometricError(std::string(what) + " requires a geometric graph");
}

}  // namespace

UDGraph minkowski_sum(const UDGraph& g, const UDGraph& h, std::size_t center) {
    require_geometric(g, "minkowski_sum");
    require_geometric(h, "minkowski_sum");
    if (center >= h.num_vertices()) throw std::invalid_argument("minkowski_sum: center not a vertex of h");
    const Point& c = h.point(center);
    std::vector<Point> pts;
    pts.reserve(g.num_vertices() * h.num_vertices());
    for (const auto& v : h.points()) {
        const Point shift = v - c;
        for (const auto& p : g.points()) pts.push_back(p + shift);
    }
    return UDGraph::from_points(std::move(pts));
}

FieldElem spindle_cos(const FieldElem& d2) {
    return FieldElem::one() - inverse(d2 + d2);
}

UDGraph spindle(const UDGraph& g, std::size_t u, std::size_t v) {
    require_geometric(g, "spindle");
    if (u >= g.num_vertices() || v >= g.num_vertices() || u == v)
        throw std::invalid_argument("spindle: u, v must be distinct vertices");

    const Point& pu = g.point(u);
    const Point& pv = g.point(v);
    const FieldElem d2 = dist2(pu, pv);
    // A chord of length 1 on the circle of radius d about u needs 2d >= 1;
    // d2 = 1/4 gives the half-turn chord, still exact.
    if (sign(d2 * FieldElem{4} - FieldElem::one()) < 0)
        throw DegeneratePairError("spindle: pair at squared distance " + to_string(d2) +
                                  " admits no unit chord (need 2d >= 1)");

    const FieldElem cos_t = spindle_cos(d2);
    const FieldElem sin2 = FieldElem::one() - cos_t * cos_t;
    auto sin_t = sqrt(sin2);
    if (!sin_t)
        throw FieldClosureError("spindle: sin theta = sqrt" + to_string(sin2) +
                                " does not lie in Q(sqrt3, sqrt11)");
    const RotationSpec rot{cos_t, *sin_t};

    std::vector<Point> pts = g.points();
    pts.reserve(2 * pts.size());
    for (const auto& p : g.points()) pts.push_back(rotate(p, pu, rot));

    // |v - v'| = 1 must hold exactly by construction.
    assert(is_unit(pv, rotate(pv, pu, rot)));

    return UDGraph::from_points(std::move(pts));
}

UDGraph trim(const UDGraph& g, const FieldElem& r2) {
    require_geometric(g, "trim");
    if (sign(r2) < 0) throw std::invalid_argument("trim: negative squared radius");
    std::vector<Point> pts;
    for (const auto& p : g.points())
        if (sign(dist2(p, Point::origin()) - r2) <= 0) pts.push_back(p);
    return UDGraph::from_points(std::move(pts));
}

UDGraph circle(const UDGraph& g) {
    require_geometric(g, "circle");
    const RotationSpec r60 = rot_pi_3();
    std::vector<Point> pts;
    pts.reserve(6 * g.num_vertices());
    for (const auto& p : g.points()) {
        Point q = p;
        for (int k = 0; k < 6; ++k) {
            pts.push_back(q);
            q = rotate(q, Point::origin(), r60);
        }
    }
    return UDGraph::from_points(std::move(pts));
}

}  // namespace udg
