#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bisite/distances.hpp"
#include "bisite/geom.hpp"
#include "bisite/raster.hpp"

namespace bisite {

// Machine-readable result of one structural check. `passed` is fully
// determined by `counts` per the check's stated criterion; thresholds in use
// are echoed in `details`.
struct Report {
    std::string theorem;
    bool passed = false;
    std::map<std::string, double> counts;
    std::vector<std::string> details;
    std::uint64_t seed = 0;
    int n = 0;
    GridSpec grid;
    bool has_grid = false;
};

// {theorem, passed, counts{...}, details[...], seed, n, grid}
std::string report_json(const Report& report);

// Nearest-diagram pruning: every pair owning cells in the full-candidate
// nearest raster must be a Delaunay edge, for ContainingRadius or
// ParamPerimeter with c >= 0. counts.mismatchCells additionally reports the
// cell-level difference between the pruned and full rasters.
Report check_delaunay_pruning(const std::vector<Point2>& sites, const DistanceSpec& spec,
                              const GridSpec& grid, std::uint64_t seed = 0, int threads = 0);

// Same check against an arbitrary candidate edge set; used for negative
// controls with randomized edge sets.
Report check_delaunay_pruning_against_edges(const std::vector<Point2>& sites,
                                            const DistanceSpec& spec, const GridSpec& grid,
                                            const std::vector<SitePair>& edges,
                                            std::uint64_t seed = 0, int threads = 0);

// ParamPerimeter collapse: for large c every non-sentinel cell must be owned
// by the unique closest pair. Throws NoUniqueClosestPair.
Report check_pc_limit(const std::vector<Point2>& sites, double c, const GridSpec& grid,
                      std::uint64_t seed = 0, int threads = 0);

// Outside the hull, the furthest view-angle raster must agree with the
// labeled supporting-line arrangement on >= 99.9% of cells that are strictly
// outside the hull and at least two cell diagonals from every line.
Report check_viewangle_outer(const std::vector<Point2>& sites, const GridSpec& grid,
                             std::uint64_t seed = 0, int threads = 0);

// Far field of the furthest inscribed-radius diagram: at 720 directions and
// distance radius_multiplier * diameter from the centroid, the owning pair
// must be an antipodal hull pair.
Report check_far_field_antipodal(const std::vector<Point2>& sites, double radius_multiplier,
                                 std::uint64_t seed = 0);

// Collinear unit-spaced construction: on each consecutive pair's diameter
// circle the nearest circumcenter-perimeter value is 2 (within 1e-9) with
// that pair as owner, any other pair stays strictly above 2, and at least
// n-1 regions are non-empty in the raster.
Report check_ppcirc_collinear(int n, const GridSpec& grid, int threads = 0);

// Furthest circumradius line locus: points sampled on each site line (away
// from other lines and sites) must be owned by that line's pair. Throws
// PreconditionError if the sites contain a collinear triple.
Report check_line_locus_furthest_c(const std::vector<Point2>& sites, const GridSpec& grid,
                                   std::uint64_t seed = 0);

}  // namespace bisite
