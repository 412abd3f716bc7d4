#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <string>

#include "bisite/geom.hpp"

namespace bisite {

// The eight 2-site distance functions.
enum class DistanceKind {
    Circumradius,     // radius of the circle through v, p, q
    ContainingRadius, // radius of the minimum circle containing v, p, q
    ViewAngle,        // angle pvq
    InscribedRadius,  // inradius of triangle vpq
    CccSegmentDist,   // distance from the circumcenter of (v,p,q) to segment pq
    CccArea,          // area of the triangle (circumcenter, p, q)
    CccPerimeter,     // perimeter of the triangle (circumcenter, p, q)
    ParamPerimeter,   // |vp| + |vq| + c*|pq|
};

// Selector for one distance function; c applies to ParamPerimeter only and
// must be >= -1 there (smaller values would yield negative distances).
struct DistanceSpec {
    DistanceKind kind = DistanceKind::ParamPerimeter;
    double c = 1.0;

    static DistanceSpec make(DistanceKind kind, double c = 1.0) {
        if (kind == DistanceKind::ParamPerimeter && !(c >= -1.0))
            throw GeometryError("ParamPerimeter requires c >= -1");
        return DistanceSpec{kind, c};
    }

    bool uses_c() const { return kind == DistanceKind::ParamPerimeter; }
};

// CLI-facing names: circumradius | containing | viewangle | inradius |
// ccc-dist | ccc-area | ccc-perimeter | param-perimeter.
std::string kind_name(DistanceKind kind);
std::optional<DistanceKind> kind_from_name(const std::string& name);

// An evaluated distance: a value in [0, +inf], or undefined at the finitely
// many singular points (v coinciding with a site, for kinds where the value
// has no meaningful extension).
struct DistanceValue {
    double value = 0.0;
    bool defined = false;

    static DistanceValue of(double v) { return {v, true}; }
    static DistanceValue infinite() { return {std::numeric_limits<double>::infinity(), true}; }
    static DistanceValue undefined() { return {0.0, false}; }
};

// Unordered pair of site indices, stored with i < j.
struct SitePair {
    int i = 0;
    int j = 0;

    static SitePair make(int a, int b) {
        return a < b ? SitePair{a, b} : SitePair{b, a};
    }
    friend auto operator<=>(const SitePair&, const SitePair&) = default;
};

// Evaluate one 2-site distance at query point v for the site pair (p, q).
// Throws CoincidentSites if p = q. Degenerate behavior per kind:
//   Circumradius:  +inf when v,p,q collinear; undefined at v in {p,q}.
//   ContainingRadius: total (defined everywhere, including v in {p,q}).
//   ViewAngle:     exactly pi on the open segment pq, exactly 0 on the line
//                  beyond the closed segment; undefined at v in {p,q}.
//   InscribedRadius: 0 when collinear and at v in {p,q}.
//   Ccc*:          +inf when collinear (circumcenter at infinity);
//                  undefined at v in {p,q}.
//   ParamPerimeter: total.
DistanceValue eval(const DistanceSpec& spec, Point2 v, Point2 p, Point2 q);

// Evaluator bound to one site pair, for dense evaluation: terms that depend
// only on the pair (|pq|, |pq|^2, c*|pq|) are hoisted out of the per-point
// path. Produces bit-identical results to eval().
class PairEvaluator {
public:
    PairEvaluator(const DistanceSpec& spec, Point2 p, Point2 q);

    DistanceValue operator()(Point2 v) const;

private:
    DistanceKind kind_;
    Point2 p_, q_;
    double pq2_ = 0.0;
    double pq_ = 0.0;
    double c_pq_ = 0.0;
};

}  // namespace bisite
