#pragma once

#include "udg/graph.hpp"

#include <stdexcept>

namespace udg {

/// Raised when an operation would need a coordinate outside Q(√3,√11),
/// e.g. a spindling whose sin θ has no square root in the field.
class FieldClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a spindling pair is too close (2d < 1): no unit chord exists.
class DegeneratePairError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation requires coordinates but the graph is abstract.
class NotGeometricError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Minkowski sum: V(g) translated by v - center for every v in h, edges
/// recomputed exactly (the sum can gain edges the Cartesian product lacks).
UDGraph minkowski_sum(const UDGraph& g, const UDGraph& h, std::size_t center);

/// Adjoins the rotation of g about u that carries v to distance exactly 1
/// from its image: cos θ = 1 - 1/(2d²), sin θ = +sqrt(1 - cos²θ).
/// Throws FieldClosureError when sin θ leaves the field, DegeneratePairError
/// when d² ≤ 1/4 or u = v.
UDGraph spindle(const UDGraph& g, std::size_t u, std::size_t v);

/// cos θ for the spindling of a pair at squared distance d2 (chord identity).
FieldElem spindle_cos(const FieldElem& d2);

/// Keeps exactly the vertices with squared norm ≤ r2 (boundary kept: the
/// operation removes norms strictly greater than r).
UDGraph trim(const UDGraph& g, const FieldElem& r2);

/// Union of the six rotations of g by kπ/3 about the origin.
UDGraph circle(const UDGraph& g);

}  // namespace udg
