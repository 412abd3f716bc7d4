#include "bisite/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "bisite/distances.hpp"
#include "bisite/rng.hpp"

namespace bisite {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::TwoLine: return "two-line";
        case Provenance::CollinearUnit: return "collinear-unit";
        case Provenance::ConvexPosition: return "convex-position";
        case Provenance::RandomGeneral: return "random-general";
    }
    return "?";
}

namespace {

struct CircleCrossing {
    int count = 0;  // 0, 1 (tangent), or 2
    Point2 p0, p1;
};

CircleCrossing circle_crossing(const Circle& c1, const Circle& c2, double tol) {
    CircleCrossing out;
    const double d = dist(c1.center, c2.center);
    if (d <= tol && std::abs(c1.radius - c2.radius) <= tol) return out;  // same circle
    if (d > c1.radius + c2.radius + tol) return out;                     // separate
    if (d < std::abs(c1.radius - c2.radius) - tol) return out;           // nested
    const Point2 ex{(c2.center.x - c1.center.x) / d, (c2.center.y - c1.center.y) / d};
    const double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    const double h2 = c1.radius * c1.radius - a * a;
    const Point2 mid{c1.center.x + a * ex.x, c1.center.y + a * ex.y};
    if (h2 <= tol * tol) {
        out.count = 1;
        out.p0 = mid;
        return out;
    }
    const double h = std::sqrt(h2);
    out.count = 2;
    out.p0 = {mid.x - h * ex.y, mid.y + h * ex.x};
    out.p1 = {mid.x + h * ex.y, mid.y - h * ex.x};
    return out;
}

}  // namespace

std::vector<Circle> two_line_circles(const ConstructionSet& set) {
    if (set.provenance != Provenance::TwoLine)
        throw GeometryError("two_line_circles: requires a two-line construction");
    const int n = static_cast<int>(set.sites.size());
    const int m1 = (n + 1) / 2;  // bottom sites come first
    std::vector<Circle> circles;
    circles.reserve(static_cast<std::size_t>(m1) * (n - m1));
    for (int i = 0; i < m1; ++i) {
        for (int j = m1; j < n; ++j) {
            Circle c;
            c.center = {0.5 * (set.sites[i].x + set.sites[j].x),
                        0.5 * (set.sites[i].y + set.sites[j].y)};
            c.radius = 0.5 * dist(set.sites[i], set.sites[j]);
            circles.push_back(c);
        }
    }
    return circles;
}

ConstructionSet gen_two_line_set(int n, double d, double spread, std::uint64_t seed) {
    if (n < 4) throw GeometryError("gen_two_line_set: n >= 4 required");
    if (!(d > 0.0) || spread > d / 100.0)
        throw GeometryError("gen_two_line_set: require d > 0 and spread <= d/100");

    Rng rng(seed);
    const double tol = 1e-9 * d;
    const int m1 = (n + 1) / 2;

    for (int attempt = 0; attempt < 100; ++attempt) {
        ConstructionSet set;
        set.provenance = Provenance::TwoLine;
        set.seed = seed;
        set.sites.reserve(n);
        for (int i = 0; i < m1; ++i) set.sites.push_back({rng.uniform(0.0, spread), 0.0});
        for (int i = m1; i < n; ++i) set.sites.push_back({rng.uniform(0.0, spread), d});

        const std::vector<Circle> circles = two_line_circles(set);
        const int m = static_cast<int>(circles.size());
        bool ok = true;

        // Each circle passes through exactly its two defining sites.
        std::vector<std::pair<int, int>> defs;
        defs.reserve(m);
        for (int i = 0; i < m1 && ok; ++i)
            for (int j = m1; j < n; ++j) defs.push_back({i, j});
        for (int c = 0; c < m && ok; ++c) {
            for (int s = 0; s < n; ++s) {
                const bool defining = (s == defs[c].first || s == defs[c].second);
                const double gap = std::abs(dist(circles[c].center, set.sites[s]) - circles[c].radius);
                if (defining ? gap > tol : gap < 100.0 * tol) {
                    ok = false;
                    break;
                }
            }
        }

        // All circle pairs cross properly, and no third circle passes
        // through a crossing point away from the structural coincidences.
        // The diameter circle over (p, q) always passes through the
        // perpendicular projections of p and q onto the opposite line (the
        // angle there is a right angle), so all circles sharing a site meet
        // again at that site's projection; those points are unavoidable and
        // excluded from the triple test along with the sites themselves.
        std::vector<Point2> expected_coincident = set.sites;
        for (int s = 0; s < n; ++s)
            expected_coincident.push_back({set.sites[s].x, s < m1 ? d : 0.0});
        std::vector<Point2> crossings;
        for (int a = 0; a < m && ok; ++a) {
            for (int b = a + 1; b < m && ok; ++b) {
                const CircleCrossing cr = circle_crossing(circles[a], circles[b], tol);
                if (cr.count != 2) {
                    ok = false;
                    break;
                }
                for (const Point2 p : {cr.p0, cr.p1}) {
                    bool structural = false;
                    for (const Point2& s : expected_coincident)
                        if (dist(p, s) < 100.0 * tol) structural = true;
                    if (!structural) crossings.push_back(p);
                }
            }
        }
        for (std::size_t t = 0; t < crossings.size() && ok; ++t) {
            int through = 0;
            for (int c = 0; c < m; ++c)
                if (std::abs(dist(circles[c].center, crossings[t]) - circles[c].radius) < tol)
                    ++through;
            if (through > 2) ok = false;
        }

        if (ok) return set;
    }
    throw GenericityFailure("gen_two_line_set: genericity not reached in 100 attempts");
}

ConstructionSet gen_collinear_unit(int n) {
    if (n < 2) throw GeometryError("gen_collinear_unit: n >= 2 required");
    ConstructionSet set;
    set.provenance = Provenance::CollinearUnit;
    for (int i = 0; i < n; ++i) set.sites.push_back({static_cast<double>(i), 0.0});
    return set;
}

ConstructionSet gen_convex_position(int n, std::uint64_t seed) {
    if (n < 3) throw GeometryError("gen_convex_position: n >= 3 required");
    Rng rng(seed);
    ConstructionSet set;
    set.provenance = Provenance::ConvexPosition;
    set.seed = seed;
    std::vector<double> ang;
    for (;;) {
        ang.clear();
        for (int i = 0; i < n; ++i) ang.push_back(rng.uniform(0.0, 2.0 * 3.141592653589793));
        std::sort(ang.begin(), ang.end());
        bool ok = ang.front() + 2.0 * 3.141592653589793 - ang.back() > 1e-6;
        for (int i = 0; i + 1 < n && ok; ++i) ok = ang[i + 1] - ang[i] > 1e-6;
        if (ok) break;
    }
    for (double a : ang) set.sites.push_back({std::cos(a), std::sin(a)});
    return set;
}

ConstructionSet gen_random_general(int n, std::uint64_t seed) {
    if (n < 1) throw GeometryError("gen_random_general: n >= 1 required");
    Rng rng(seed);
    ConstructionSet set;
    set.provenance = Provenance::RandomGeneral;
    set.seed = seed;
    for (int i = 0; i < n; ++i) {
        const double x = rng.next_double();
        const double y = rng.next_double();
        set.sites.push_back({x, y});
    }
    return set;
}

CircleIntersectionCount count_circle_intersections(const ConstructionSet& set) {
    const std::vector<Circle> circles = two_line_circles(set);
    double scale = 1.0;
    for (const Circle& c : circles) scale = std::max(scale, c.radius);
    const double tol = 1e-9 * scale;

    CircleIntersectionCount out;
    const int m = static_cast<int>(circles.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            const CircleCrossing cr = circle_crossing(circles[a], circles[b], tol);
            if (cr.count == 0) continue;
            ++out.pairs_intersecting;
            out.distinct_points += cr.count;
        }
    }
    return out;
}

std::int64_t count_segment_intersections(const std::vector<Point2>& sites) {
    const int n = static_cast<int>(sites.size());
    if (n < 4) throw GeometryError("count_segment_intersections: n >= 4 required");
    std::vector<SitePair> segs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) segs.push_back({i, j});

    std::int64_t count = 0;
    const int m = static_cast<int>(segs.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            const SitePair s = segs[a], t = segs[b];
            if (s.i == t.i || s.i == t.j || s.j == t.i || s.j == t.j) continue;
            const int o1 = orient_sign(sites[s.i], sites[s.j], sites[t.i]);
            const int o2 = orient_sign(sites[s.i], sites[s.j], sites[t.j]);
            const int o3 = orient_sign(sites[t.i], sites[t.j], sites[s.i]);
            const int o4 = orient_sign(sites[t.i], sites[t.j], sites[s.j]);
            if (o1 * o2 < 0 && o3 * o4 < 0) ++count;
        }
    }
    return count;
}

std::int64_t count_line_intersections(const std::vector<Point2>& sites) {
    const int n = static_cast<int>(sites.size());
    if (n < 3) throw GeometryError("count_line_intersections: n >= 3 required");

    // Normalize site coordinates to the unit box; dedup happens there.
    double lo_x = sites[0].x, hi_x = sites[0].x, lo_y = sites[0].y, hi_y = sites[0].y;
    for (const Point2& p : sites) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    const double scale = std::max({hi_x - lo_x, hi_y - lo_y, 1e-300});
    const auto norm = [&](Point2 p) -> Point2 {
        return {(p.x - lo_x) / scale, (p.y - lo_y) / scale};
    };
    constexpr double kTol = 1e-9;

    struct Ln {
        double a, b, c;
    };
    std::vector<Ln> lines;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Point2 p = norm(sites[i]), q = norm(sites[j]);
            double a = p.y - q.y, b = q.x - p.x;
            const double len = std::hypot(a, b);
            a /= len;
            b /= len;
            lines.push_back({a, b, -(a * p.x + b * p.y)});
        }
    }

    std::vector<Point2> pts;
    const int m = static_cast<int>(lines.size());
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
            const double det = lines[u].a * lines[v].b - lines[v].a * lines[u].b;
            if (std::abs(det) < 1e-12) continue;  // parallel or identical
            const Point2 p{(lines[u].b * lines[v].c - lines[v].b * lines[u].c) / det,
                           (lines[v].a * lines[u].c - lines[u].a * lines[v].c) / det};
            bool at_site = false;
            for (int s = 0; s < n && !at_site; ++s) {
                const Point2 q = norm(sites[s]);
                at_site = std::abs(p.x - q.x) <= kTol && std::abs(p.y - q.y) <= kTol;
            }
            if (!at_site) pts.push_back(p);
        }
    }

    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::int64_t distinct = 0;
    std::vector<bool> merged(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (merged[i]) continue;
        ++distinct;
        for (std::size_t j = i + 1; j < pts.size() && pts[j].x - pts[i].x <= kTol; ++j) {
            if (!merged[j] && std::abs(pts[j].y - pts[i].y) <= kTol) merged[j] = true;
        }
    }
    return distinct;
}

}  // namespace bisite
