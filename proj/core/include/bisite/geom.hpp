#pragma once

#include <cmath>
#include <limits>

#include "bisite/errors.hpp"

namespace bisite {

// A site or query point in the plane. Coordinates are expected to be finite.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double dist2(Point2 a, Point2 b) { return dot(a - b, a - b); }
inline double dist(Point2 a, Point2 b) { return std::sqrt(dist2(a, b)); }

enum class Orientation { CounterClockwise, Clockwise, Collinear };

// Sign of the signed area of triangle abc, decided by an adaptively exact
// predicate: a floating-point filter followed by exact rational arithmetic
// when the filter is inconclusive. Collinear is returned iff the signed
// area is exactly zero.
Orientation orient(Point2 a, Point2 b, Point2 c);

// Exact sign (-1, 0, +1) of the orientation determinant. orient() is a thin
// wrapper over this.
int orient_sign(Point2 a, Point2 b, Point2 c);

// Exact sign of the in-circle determinant for a CCW triangle (p, q, r):
// +1 if d lies strictly inside the circumcircle, 0 if cocircular, -1 outside.
// For a CW triangle the sign is flipped.
int incircle_sign(Point2 p, Point2 q, Point2 r, Point2 d);

// In-circle with index-based symbolic perturbation: cocircular ties are
// resolved as if every point i were lowered on the lifting paraboloid by
// delta_i, with delta strictly decreasing in the site index. Never returns 0
// for four distinct points. Indices must be distinct.
int incircle_sign_perturbed(Point2 p, Point2 q, Point2 r, Point2 d,
                            int ip, int iq, int ir, int id);

// Exact sign of cross(b - a, d - c); used for caliper direction comparisons.
int cross_sign_of_edges(Point2 a, Point2 b, Point2 c, Point2 d);

// A circle. The collinear-degenerate case is encoded as radius = +infinity,
// in which case the center is meaningless.
struct Circle {
    Point2 center{std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN()};
    double radius = 0.0;

    bool degenerate() const { return std::isinf(radius); }

    static Circle line_degenerate() {
        Circle c;
        c.radius = std::numeric_limits<double>::infinity();
        return c;
    }
};

// Circle through three pairwise distinct points. Collinear inputs yield the
// degenerate circle with radius +infinity (the "circle" is the line itself).
// Throws DuplicatePoint if any two inputs coincide.
Circle circumcircle(Point2 p, Point2 q, Point2 r);

// Minimum-radius circle containing the three points. Equals the circumcircle
// for acute/right triangles; for obtuse triangles it is the circle whose
// diameter is the longest edge. Coincident/collinear cases reduce to the
// circle on the farthest pair. Throws AllCoincident if p = q = r.
//
// Right-vs-obtuse classification uses relative tolerance 1e-9 on squared edge
// lengths; ties take the circumcircle branch (the two agree in the limit).
Circle min_enclosing_circle_3(Point2 p, Point2 q, Point2 r);

// |signed area| of triangle abc; zero iff collinear.
inline double triangle_area(Point2 a, Point2 b, Point2 c) {
    return 0.5 * std::abs(cross(b - a, c - a));
}

// Euclidean distance from x to the closed segment ab.
// Throws DegenerateSegment if a = b.
double point_segment_distance(Point2 x, Point2 a, Point2 b);

}  // namespace bisite
