#include "bisite/neighbors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace bisite {

bool Triangulation::has_edge(SitePair e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool AntipodalPairs::contains(SitePair e) const {
    return std::binary_search(pairs.begin(), pairs.end(), e);
}

HullSide classify_against_hull(const Hull& hull, const std::vector<Point2>& sites, Point2 v) {
    bool on_boundary = false;
    const int k = hull.k();
    for (int t = 0; t < k; ++t) {
        const Point2 a = sites[hull.vertices[t]];
        const Point2 b = sites[hull.vertices[(t + 1) % k]];
        const int s = orient_sign(a, b, v);
        if (s < 0) return HullSide::Outside;
        if (s == 0) on_boundary = true;
    }
    return on_boundary ? HullSide::Boundary : HullSide::Inside;
}

Hull convex_hull(const std::vector<Point2>& sites) {
    const int n = static_cast<int>(sites.size());
    if (n < 3) throw DegenerateInput("convex_hull: need at least 3 sites");

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (sites[a].x != sites[b].x) return sites[a].x < sites[b].x;
        return sites[a].y < sites[b].y;
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int a, int b) { return sites[a] == sites[b]; }),
              idx.end());

    const int m = static_cast<int>(idx.size());
    std::vector<int> h(2 * m);
    int top = 0;
    // Lower hull, then upper hull; strict left turns only, so collinear
    // in-between vertices are dropped.
    for (int t = 0; t < m; ++t) {
        const int i = idx[t];
        while (top >= 2 && orient_sign(sites[h[top - 2]], sites[h[top - 1]], sites[i]) <= 0) --top;
        h[top++] = i;
    }
    const int lower = top + 1;
    for (int t = m - 2; t >= 0; --t) {
        const int i = idx[t];
        while (top >= lower && orient_sign(sites[h[top - 2]], sites[h[top - 1]], sites[i]) <= 0) --top;
        h[top++] = i;
    }
    Hull hull;
    hull.vertices.assign(h.begin(), h.begin() + top - 1);
    if (hull.k() < 3) throw DegenerateInput("convex_hull: all sites collinear");
    return hull;
}

namespace {

constexpr int kGhost = -1;

struct Tri {
    int a, b, c;  // c == kGhost for ghost triangles; finite triangles CCW

    bool ghost() const { return c == kGhost; }
};

// Conflict test for point d (site index id) against a triangle.
// Ghost (u, v, kGhost) covers the open half-plane strictly left of u->v
// (outside the hull; v->u is the CCW hull edge) plus the open edge (u, v).
bool conflicts(const Tri& t, const std::vector<Point2>& pts, Point2 d, int id) {
    if (!t.ghost())
        return incircle_sign_perturbed(pts[t.a], pts[t.b], pts[t.c], d, t.a, t.b, t.c, id) > 0;
    const Point2 u = pts[t.a];
    const Point2 v = pts[t.b];
    const int s = orient_sign(u, v, d);
    if (s != 0) return s > 0;
    if (u.x != v.x) return (u.x < d.x) != (v.x < d.x);
    return (u.y < d.y) != (v.y < d.y);
}

}  // namespace

Triangulation delaunay(const std::vector<Point2>& sites) {
    const int n = static_cast<int>(sites.size());
    if (n < 3) throw DegenerateInput("delaunay: need at least 3 sites");
    {
        std::set<std::pair<double, double>> seen;
        for (const Point2& p : sites)
            if (!seen.insert({p.x, p.y}).second)
                throw DegenerateInput("delaunay: duplicate sites");
    }

    // Seed with the first non-collinear triple (0, 1, k).
    int k = -1;
    for (int i = 2; i < n; ++i) {
        if (orient_sign(sites[0], sites[1], sites[i]) != 0) {
            k = i;
            break;
        }
    }
    if (k < 0) throw DegenerateInput("delaunay: all sites collinear");

    std::vector<Tri> tris;
    {
        int a = 0, b = 1, c = k;
        if (orient_sign(sites[a], sites[b], sites[c]) < 0) std::swap(b, c);
        tris.push_back({a, b, c});
        // One ghost per hull edge: edge x->y CCW on the hull is stored (y, x, kGhost).
        tris.push_back({b, a, kGhost});
        tris.push_back({c, b, kGhost});
        tris.push_back({a, c, kGhost});
    }

    std::vector<Tri> bad, keep;
    std::vector<std::pair<int, int>> cavity;
    for (int d = 2; d < n; ++d) {
        if (d == k) continue;
        bad.clear();
        keep.clear();
        for (const Tri& t : tris)
            (conflicts(t, sites, sites[d], d) ? bad : keep).push_back(t);
        assert(!bad.empty());

        // Cavity boundary: directed edges of conflicting triangles whose
        // reverse is not itself an edge of a conflicting triangle.
        cavity.clear();
        for (const Tri& t : bad) {
            cavity.push_back({t.a, t.b});
            cavity.push_back({t.b, t.c});
            cavity.push_back({t.c, t.a});
        }
        std::set<std::pair<int, int>> edge_set(cavity.begin(), cavity.end());
        tris = std::move(keep);
        for (const auto& [u, v] : cavity) {
            if (edge_set.count({v, u})) continue;
            // Re-triangulate: connect d to every boundary edge.
            if (u == kGhost)
                tris.push_back({v, d, kGhost});       // hull edge d->v
            else if (v == kGhost)
                tris.push_back({d, u, kGhost});       // hull edge u->d
            else if (d != u && d != v)
                tris.push_back({u, v, d});
        }
    }

    Triangulation out;
    std::set<SitePair> edges;
    for (const Tri& t : tris) {
        if (t.ghost()) continue;
        std::array<int, 3> tri{t.a, t.b, t.c};
        // Canonical rotation: smallest index first, orientation preserved.
        const int rot = static_cast<int>(std::min_element(tri.begin(), tri.end()) - tri.begin());
        std::rotate(tri.begin(), tri.begin() + rot, tri.end());
        out.triangles.push_back(tri);
        edges.insert(SitePair::make(tri[0], tri[1]));
        edges.insert(SitePair::make(tri[1], tri[2]));
        edges.insert(SitePair::make(tri[0], tri[2]));
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

AntipodalPairs antipodal_pairs(const Hull& hull, const std::vector<Point2>& sites) {
    const int k = hull.k();
    const auto pt = [&](int t) { return sites[hull.vertices[((t % k) + k) % k]]; };

    std::set<SitePair> out;
    const auto record = [&](int a, int b) {
        out.insert(SitePair::make(hull.vertices[a % k], hull.vertices[b % k]));
    };

    // Rotating calipers: start with horizontal supporting lines through the
    // bottom and top extreme vertices and sweep half a turn; at each step the
    // caliper aligns with whichever edge comes first, compared exactly via
    // the cross sign of the two current edges.
    int i = 0, j = 0;
    for (int t = 1; t < k; ++t) {
        const Point2 a = pt(t), lo = pt(i), hi = pt(j);
        if (a.y < lo.y || (a.y == lo.y && a.x < lo.x)) i = t;
        if (a.y > hi.y || (a.y == hi.y && a.x > hi.x)) j = t;
    }

    record(i, j);
    int advances = 0;
    while (advances < k) {
        const int s = cross_sign_of_edges(pt(i), pt(i + 1), pt(j), pt(j + 1));
        if (s < 0) {
            i = (i + 1) % k;
            ++advances;
        } else if (s > 0) {
            j = (j + 1) % k;
            ++advances;
        } else {
            // Parallel edges: both calipers align simultaneously; the four
            // endpoint combinations are all antipodal.
            record(i, j + 1);
            record(i + 1, j);
            i = (i + 1) % k;
            j = (j + 1) % k;
            advances += 2;
        }
        record(i, j);
    }

    AntipodalPairs res;
    res.pairs.assign(out.begin(), out.end());
    return res;
}

}  // namespace bisite
