#include <array>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "bisite/geom.hpp"

// Adaptively exact predicates: a standard floating-point filter with
// Shewchuk-style error bounds, falling back to exact rational arithmetic
// when the filtered result cannot be trusted.

namespace bisite {
namespace {

using rational = boost::multiprecision::cpp_rational;

constexpr double kEps = 1.1102230246251565e-16;        // 2^-53
const double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
const double kIncErrBound = (10.0 + 96.0 * kEps) * kEps;

inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

template <typename T>
inline int sign_of_exact(const T& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

int orient_exact(Point2 a, Point2 b, Point2 c) {
    const rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const rational det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return sign_of_exact(det);
}

// Exact sign of the 4x4 lifted determinant with rows [x, y, x^2+y^2, 1] for
// (p, q, r, d), computed in its translated 3x3 form (exact in rationals).
int incircle_exact(Point2 p, Point2 q, Point2 r, Point2 d) {
    const rational adx = rational(p.x) - rational(d.x);
    const rational ady = rational(p.y) - rational(d.y);
    const rational bdx = rational(q.x) - rational(d.x);
    const rational bdy = rational(q.y) - rational(d.y);
    const rational cdx = rational(r.x) - rational(d.x);
    const rational cdy = rational(r.y) - rational(d.y);

    const rational alift = adx * adx + ady * ady;
    const rational blift = bdx * bdx + bdy * bdy;
    const rational clift = cdx * cdx + cdy * cdy;

    const rational det = alift * (bdx * cdy - cdx * bdy) +
                         blift * (cdx * ady - adx * cdy) +
                         clift * (adx * bdy - bdx * ady);
    return sign_of_exact(det);
}

}  // namespace

int orient_sign(Point2 a, Point2 b, Point2 c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double detsum = std::abs(detleft) + std::abs(detright);
    if (det != 0.0 && std::abs(det) > kCcwErrBound * detsum) return sign_of(det);
    return orient_exact(a, b, c);
}

Orientation orient(Point2 a, Point2 b, Point2 c) {
    switch (orient_sign(a, b, c)) {
        case 1: return Orientation::CounterClockwise;
        case -1: return Orientation::Clockwise;
        default: return Orientation::Collinear;
    }
}

int incircle_sign(Point2 p, Point2 q, Point2 r, Point2 d) {
    const double adx = p.x - d.x, ady = p.y - d.y;
    const double bdx = q.x - d.x, bdy = q.y - d.y;
    const double cdx = r.x - d.x, cdy = r.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    if (det != 0.0 && std::abs(det) > kIncErrBound * permanent) return sign_of(det);
    return incircle_exact(p, q, r, d);
}

int incircle_sign_perturbed(Point2 p, Point2 q, Point2 r, Point2 d,
                            int ip, int iq, int ir, int id) {
    const int s = incircle_sign(p, q, r, d);
    if (s != 0) return s;

    // Cocircular. Perturb the lift: z_i = x_i^2 + y_i^2 - delta_i with
    // delta_i strictly decreasing in the site index, so the row holding the
    // smallest index dominates the expansion. Its z-cofactor in row k
    // (1-based) contributes sign (-1)^k * orient(other three rows in order).
    // Four distinct cocircular points never have three collinear, so the
    // dominant minor is nonzero.
    const std::array<Point2, 4> pt{p, q, r, d};
    const std::array<int, 4> idx{ip, iq, ir, id};
    int k = 0;
    for (int t = 1; t < 4; ++t)
        if (idx[t] < idx[k]) k = t;
    std::array<Point2, 3> rest;
    int m = 0;
    for (int t = 0; t < 4; ++t)
        if (t != k) rest[m++] = pt[t];
    const int minor = orient_sign(rest[0], rest[1], rest[2]);
    return ((k + 1) % 2 == 0) ? minor : -minor;
}

int cross_sign_of_edges(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double t1 = (b.x - a.x) * (d.y - c.y);
    const double t2 = (b.y - a.y) * (d.x - c.x);
    const double det = t1 - t2;
    const double detsum = std::abs(t1) + std::abs(t2);
    if (det != 0.0 && std::abs(det) > kCcwErrBound * detsum) return sign_of(det);

    const rational ex = rational(b.x) - rational(a.x);
    const rational ey = rational(b.y) - rational(a.y);
    const rational fx = rational(d.x) - rational(c.x);
    const rational fy = rational(d.y) - rational(c.y);
    return sign_of_exact(ex * fy - ey * fx);
}

}  // namespace bisite
