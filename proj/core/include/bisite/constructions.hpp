#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bisite/geom.hpp"

namespace bisite {

enum class Provenance { TwoLine, CollinearUnit, ConvexPosition, RandomGeneral };

std::string provenance_name(Provenance p);

// A generated site set together with the construction that produced it.
struct ConstructionSet {
    std::vector<Point2> sites;
    Provenance provenance = Provenance::RandomGeneral;
    std::uint64_t seed = 0;
};

// Points split across two horizontal lines y=0 and y=d (ceil(n/2) below,
// floor(n/2) above), jittered within `spread` along x. The construction is
// re-drawn (up to 100 attempts) until the diameter circles over cross-line
// pairs are generic: every circle passes through exactly its two defining
// sites, all circle pairs properly intersect, and no third circle passes
// through a crossing point off the sites. Throws GenericityFailure when the
// retry budget is exhausted, and GeometryError if spread > d/100 or n < 4.
ConstructionSet gen_two_line_set(int n, double d, double spread, std::uint64_t seed);

// Collinear unit-spaced points (0,0), (1,0), ..., (n-1,0).
ConstructionSet gen_collinear_unit(int n);

// n points in strictly convex position (on a unit circle at sorted random
// angles).
ConstructionSet gen_convex_position(int n, std::uint64_t seed);

// n uniform random points in the unit square.
ConstructionSet gen_random_general(int n, std::uint64_t seed);

// Diameter circles over cross-line pairs of a two-line construction.
std::vector<Circle> two_line_circles(const ConstructionSet& set);

struct CircleIntersectionCount {
    std::int64_t pairs_intersecting = 0;
    // Intersection points summed over circle pairs (a tangency counts once).
    // Under the construction's genericity conditions all points off the
    // sites are distinct across pairs, so for a fully generic set this is
    // twice the number of properly crossing pairs.
    std::int64_t distinct_points = 0;
};

// Count intersections among the diameter circles of a two-line construction.
// Requires TwoLine provenance.
CircleIntersectionCount count_circle_intersections(const ConstructionSet& set);

// Properly crossing pairs among all n-choose-2 closed segments spanned by the
// sites (crossings interior to both segments; pairs sharing an endpoint are
// excluded). Coincident crossing points are counted per pair, so the result
// is exactly C(n,4) for sites in convex position.
std::int64_t count_segment_intersections(const std::vector<Point2>& sites);

// Distinct intersection points of the n-choose-2 site lines that are not
// sites themselves (deduplicated within absolute tolerance 1e-9 after
// normalizing the coordinates to the unit box).
std::int64_t count_line_intersections(const std::vector<Point2>& sites);

}  // namespace bisite
