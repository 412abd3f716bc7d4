#include "bisite/geom.hpp"

#include <algorithm>
#include <array>

namespace bisite {

Circle circumcircle(Point2 p, Point2 q, Point2 r) {
    if (p == q || p == r || q == r) throw DuplicatePoint("circumcircle: two input points coincide");
    if (orient_sign(p, q, r) == 0) return Circle::line_degenerate();

    // Perpendicular-bisector intersection, translated to p for stability.
    const Point2 b = q - p;
    const Point2 c = r - p;
    const double d = 2.0 * cross(b, c);
    const double b2 = dot(b, b);
    const double c2 = dot(c, c);
    const double ux = (c.y * b2 - b.y * c2) / d;
    const double uy = (b.x * c2 - c.x * b2) / d;
    Circle out;
    out.center = {p.x + ux, p.y + uy};
    out.radius = std::sqrt(ux * ux + uy * uy);
    return out;
}

namespace {

Circle diameter_circle(Point2 a, Point2 b) {
    Circle c;
    c.center = {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    c.radius = 0.5 * dist(a, b);
    return c;
}

}  // namespace

Circle min_enclosing_circle_3(Point2 p, Point2 q, Point2 r) {
    if (p == q && q == r) throw AllCoincident("min_enclosing_circle_3: all points coincide");
    if (p == q) return diameter_circle(p, r);
    if (p == r || q == r) return diameter_circle(p, q);

    const std::array<double, 3> e2{dist2(q, r), dist2(p, r), dist2(p, q)};  // opposite p, q, r
    const int longest = static_cast<int>(std::max_element(e2.begin(), e2.end()) - e2.begin());
    const double a2 = e2[longest];
    const double rest = e2[0] + e2[1] + e2[2] - a2;

    // Obtuse iff longest^2 > sum of the others; tolerance band counts as right.
    if (a2 > rest * (1.0 + 1e-9)) {
        switch (longest) {
            case 0: return diameter_circle(q, r);
            case 1: return diameter_circle(p, r);
            default: return diameter_circle(p, q);
        }
    }
    if (orient_sign(p, q, r) == 0) {
        // Collinear: farthest pair is the longest edge.
        switch (longest) {
            case 0: return diameter_circle(q, r);
            case 1: return diameter_circle(p, r);
            default: return diameter_circle(p, q);
        }
    }
    return circumcircle(p, q, r);
}

double point_segment_distance(Point2 x, Point2 a, Point2 b) {
    if (a == b) throw DegenerateSegment("point_segment_distance: a = b");
    const Point2 ab = b - a;
    const double t = dot(x - a, ab) / dot(ab, ab);
    if (t <= 0.0) return dist(x, a);
    if (t >= 1.0) return dist(x, b);
    const Point2 foot{a.x + t * ab.x, a.y + t * ab.y};
    return dist(x, foot);
}

}  // namespace bisite
