#pragma once

#include "udg/graph.hpp"

#include <string>
#include <vector>

namespace udg {

/// The embedded 102-vertex list (the sector of the 607-vertex certificate
/// graph with polar angle in [0, π/3)), parsed from its published text form.
const std::string& final_102_text();
std::vector<Point> final_102();

/// circle(build(final_102())): the 607-vertex certificate graph.
/// Throws std::logic_error with diagnostics if the vertex count is off.
UDGraph final_graph();

/// Exact check that the list is a valid one-sixth sector description: no
/// non-origin point is a kπ/3-rotation of another listed point, so circling
/// multiplies the non-origin count by exactly 6. (A strict angular test of
/// the nominal [0, π/3) sector would reject lists with entries on the
/// boundary ray; what circling needs is one representative per orbit.)
/// Offending points, if any, are appended to `offenders`.
bool polar_angle_check(const std::vector<Point>& points, std::vector<Point>* offenders = nullptr);

}  // namespace udg
