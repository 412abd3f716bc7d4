#pragma once

#include <array>
#include <vector>

#include "bisite/distances.hpp"
#include "bisite/geom.hpp"

namespace bisite {

// Strictly convex hull: site indices in counterclockwise order, starting at
// the lexicographically smallest vertex. No three consecutive vertices are
// collinear.
struct Hull {
    std::vector<int> vertices;

    int k() const { return static_cast<int>(vertices.size()); }
};

enum class HullSide { Inside, Boundary, Outside };

// Exact classification of a point against a CCW convex polygon.
HullSide classify_against_hull(const Hull& hull, const std::vector<Point2>& sites, Point2 v);

// Delaunay triangulation: CCW triangles plus the undirected edge set, both
// sorted lexicographically so outputs are reproducible.
struct Triangulation {
    std::vector<std::array<int, 3>> triangles;
    std::vector<SitePair> edges;  // sorted ascending

    bool has_edge(SitePair e) const;
};

// Antipodal vertex pairs of the hull (site-index pairs, sorted).
struct AntipodalPairs {
    std::vector<SitePair> pairs;

    bool contains(SitePair e) const;
};

// CCW strictly convex hull of the sites. Throws DegenerateInput if fewer
// than 3 sites or all sites collinear.
Hull convex_hull(const std::vector<Point2>& sites);

// Delaunay triangulation via incremental insertion with ghost triangles and
// exact predicates. Cocircular ties are broken by index-based symbolic
// perturbation, so the result is deterministic. Throws DegenerateInput for
// fewer than 3 sites, duplicate sites, or all-collinear input.
Triangulation delaunay(const std::vector<Point2>& sites);

// All antipodal pairs of hull vertices, by rotating calipers.
AntipodalPairs antipodal_pairs(const Hull& hull, const std::vector<Point2>& sites);

}  // namespace bisite
