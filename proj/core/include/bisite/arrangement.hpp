#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bisite/distances.hpp"
#include "bisite/geom.hpp"
#include "bisite/neighbors.hpp"

namespace bisite {

// Oriented line ax + by + c = 0, normalized so a^2 + b^2 = 1 and the leading
// nonzero of (a, b) is positive. `source` names the hull edge it supports.
struct Line {
    double a = 0.0, b = 0.0, c = 0.0;
    SitePair source{-1, -1};

    static Line through(Point2 p, Point2 q, SitePair source = {-1, -1});

    double signed_dist(Point2 v) const { return a * v.x + b * v.y + c; }
    Point2 direction() const { return {-b, a}; }
    Point2 base() const { return {-c * a, -c * b}; }  // closest point to origin
    Point2 at(double t) const {
        const Point2 o = base(), d = direction();
        return {o.x + t * d.x, o.y + t * d.y};
    }
};

struct ArrVertex {
    Point2 p;
    std::pair<int, int> witness;  // lowest-index line pair that created it
    std::vector<int> lines;       // all incident lines, ascending
};

// Maximal piece of a line between consecutive vertices; -1 marks an
// unbounded end (ray / full line).
struct ArrEdge {
    int line = -1;
    int v0 = -1;
    int v1 = -1;
};

struct ArrFace {
    std::vector<std::int8_t> signs;  // side of each line: -1 or +1
    Point2 rep;                      // strictly interior representative point
    bool bounded = false;
    std::optional<SitePair> label;
    bool label_tied = false;
};

// Planar line arrangement. Faces are identified by their sign vectors and
// carry representative points computed by clipping a large box against the
// face's half-planes.
struct Arrangement {
    std::vector<Line> lines;
    std::vector<ArrVertex> vertices;
    std::vector<ArrEdge> edges;
    std::vector<ArrFace> faces;

    // Index of the face containing v, located by sign vector. Returns -1 if
    // v is within `margin` of some line (ambiguous) or the face is unknown.
    int face_index_of(Point2 v, double margin) const;

    // Euler relation for the arrangement compactified with one vertex at
    // infinity: (V + 1) - E + F == 2.
    bool euler_ok() const;

private:
    friend Arrangement build_arrangement(std::vector<Line> lines);
    std::map<std::vector<std::int8_t>, int> face_by_signs_;
};

// Supporting lines of the hull edges, in hull order.
std::vector<Line> hull_support_lines(const Hull& hull, const std::vector<Point2>& sites);

// Build the full arrangement: pairwise intersections merged within absolute
// tolerance 1e-9 (concurrent and near-concurrent crossings become one
// vertex), per-line edges, and faces enumerated from offset samples along
// every edge.
Arrangement build_arrangement(std::vector<Line> lines);

// Label every face whose representative point lies strictly outside the hull
// with the pair maximizing the view angle there (full pair enumeration);
// faces inside the hull stay unlabeled. Ties pick the lexicographically
// smallest pair and set label_tied.
void label_outer_cells(Arrangement& arr, const std::vector<Point2>& sites, const Hull& hull);

// SVG export: lines, vertices, and face labels as text anchors.
void write_svg(std::ostream& out, const Arrangement& arr);
void write_svg_file(const std::string& path, const Arrangement& arr);

}  // namespace bisite
