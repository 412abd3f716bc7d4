#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bisite/distances.hpp"
#include "bisite/geom.hpp"

namespace bisite {

enum class Mode { Nearest, Furthest };

std::string mode_name(Mode mode);

// Sampling grid over an axis-aligned bounding box. The sample point of cell
// (row, col) is the cell center: (xmin + (col+0.5)dx, ymin + (row+0.5)dy).
// With `jitter` enabled, any sample that coincides exactly with a site is
// nudged by a sub-cell offset until it is clear of all sites, so no cell is
// left undefined merely because it hit a site.
struct GridSpec {
    double xmin = 0.0, ymin = 0.0, xmax = 1.0, ymax = 1.0;
    int width = 512;
    int height = 512;
    bool jitter = true;

    double dx() const { return (xmax - xmin) / width; }
    double dy() const { return (ymax - ymin) / height; }
    Point2 cell_center(int row, int col) const {
        return {xmin + (col + 0.5) * dx(), ymin + (row + 0.5) * dy()};
    }

    // Site bounding box inflated by `inflate` per side (default 25%); a
    // degenerate span falls back to the other axis (or 1.0).
    static GridSpec fit(const std::vector<Point2>& sites, int width = 512, int height = 512,
                        double inflate = 0.25);
};

// Dense argmin/argmax sampling of a 2-site Voronoi diagram.
//
// Per cell: `winner` holds the index into `candidates` of the owning pair
// (lexicographically smallest among near-optimal ones), or kUndefined when
// every candidate is undefined at the sample. `tie` marks cells where a
// second pair matches the winning value within relative tolerance 1e-12;
// such cells count as TIE in statistics while rendering uses the winner.
//
// Comparison semantics: undefined values never compete; +inf wins any
// furthest comparison and loses nearest comparisons against finite values;
// two +inf values tie.
struct RasterDiagram {
    static constexpr std::int32_t kUndefined = -1;

    Mode mode = Mode::Nearest;
    DistanceSpec spec;
    GridSpec grid;
    std::vector<SitePair> candidates;
    std::vector<std::int32_t> winner;  // height*width, row-major
    std::vector<std::uint8_t> tie;

    std::int32_t winner_at(int row, int col) const { return winner[row * grid.width + col]; }
    bool tie_at(int row, int col) const { return tie[row * grid.width + col] != 0; }

    // Owning pair of a cell, or {-1,-1} for undefined cells.
    SitePair pair_at(int row, int col) const {
        const std::int32_t w = winner_at(row, col);
        return w < 0 ? SitePair{-1, -1} : candidates[w];
    }

    // True iff both rasters resolve every cell to the same pair (or sentinel)
    // with the same tie flag; candidate lists may differ.
    bool same_labels(const RasterDiagram& other) const;
};

// Candidate pairs for a diagram: Delaunay edges where the pruning theorems
// apply — (ContainingRadius, Nearest) and (ParamPerimeter with c >= 0,
// Nearest) — otherwise all n-choose-2 pairs. Sorted lexicographically.
std::vector<SitePair> candidate_pairs(const std::vector<Point2>& sites, const DistanceSpec& spec,
                                      Mode mode);

bool pruning_applies(const DistanceSpec& spec, Mode mode);

// Evaluate the diagram over the grid with the given candidates (row-parallel;
// the result is independent of the thread count). Throws EmptyCandidates.
RasterDiagram compute_raster(const std::vector<Point2>& sites, const DistanceSpec& spec, Mode mode,
                             const GridSpec& grid, std::vector<SitePair> candidates,
                             int threads = 0);

// Convenience overload using candidate_pairs().
RasterDiagram compute_raster(const std::vector<Point2>& sites, const DistanceSpec& spec, Mode mode,
                             const GridSpec& grid, int threads = 0);

// Region statistics of a raster.
struct RegionStats {
    struct PerPair {
        SitePair pair;
        std::int64_t cells = 0;      // non-tie cells owned by the pair
        std::int64_t components = 0; // 4-connected components of those cells
    };
    std::vector<PerPair> per_pair;   // non-empty pairs only, sorted by pair
    std::int64_t non_empty_pairs = 0;
    std::int64_t tie_cells = 0;
    std::int64_t undefined_cells = 0;
    // 2x2 windows whose resolved labels contain >= 3 distinct values; a
    // sampling proxy for diagram vertices.
    std::int64_t raster_vertices = 0;
};

RegionStats region_stats(const RasterDiagram& raster);

// Stats JSON: {spec, mode, n, grid, nonEmptyPairs, tieCells, undefinedCells,
// rasterVertices, perPair:[{i,j,cells,components}]}.
std::string stats_json(const RasterDiagram& raster, const RegionStats& stats, int n_sites);

// Binary PPM (P6) export. Pair colors are hashed from (i, j); undefined
// cells are white; sites are overdrawn as black disks of 2-cell radius.
// Rows are written top (ymax) first.
void write_ppm(std::ostream& out, const RasterDiagram& raster, const std::vector<Point2>& sites);
void write_ppm_file(const std::string& path, const RasterDiagram& raster,
                    const std::vector<Point2>& sites);

}  // namespace bisite
