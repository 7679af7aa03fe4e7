#pragma once

#include "udg/field.hpp"

#include <string>
#include <string_view>

namespace udg {

/**
 * A plane point with coordinates in Q(√3,√11), identified with the complex
 * number x + iy for rotations.
 */
struct Point {
    FieldElem x, y;

    bool operator==(const Point&) const = default;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }

    static const Point& origin();
};

/// Exact complex multiplication of p and q read as x + iy.
inline Point cmul(const Point& p, const Point& q) {
    return {p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x};
}

/**
 * A rotation carried as its exact cosine and sine, which must satisfy
 * cos² + sin² = 1. Angles themselves never appear: the constructions only
 * ever use rotations whose cosine and sine live in the field, and carrying
 * the pair makes closure failures explicit instead of approximated.
 */
struct RotationSpec {
    FieldElem cos, sin;

    bool valid() const { return cos * cos + sin * sin == FieldElem::one(); }
    bool operator==(const RotationSpec&) const = default;
};

/// Rotation by π/3 (counterclockwise).
RotationSpec rot_pi_3();

/// Squared Euclidean distance, exact.
inline FieldElem dist2(const Point& p, const Point& q) {
    const FieldElem dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

/// The unit-distance predicate: ||p - q|| = 1 exactly.
inline bool is_unit(const Point& p, const Point& q) { return dist2(p, q) == FieldElem::one(); }

/// center + (p - center)·(cos + i·sin).
inline Point rotate(const Point& p, const Point& center, const RotationSpec& r) {
    return center + cmul(p - center, Point{r.cos, r.sin});
}

/// Reflection across the x-axis.
inline Point conj(const Point& p) { return {p.x, -p.y}; }

/// Canonical total order: lexicographic on the 8 rational components.
inline int compare(const Point& p, const Point& q) {
    if (int c = lex_compare(p.x, q.x)) return c;
    return lex_compare(p.y, q.y);
}

inline bool point_less(const Point& p, const Point& q) { return compare(p, q) < 0; }

/// Text form "((a, b, c, d), (a, b, c, d))", matching the vertex-list notation.
std::string to_string(const Point& p);
Point parse_point(std::string_view text);

}  // namespace udg
