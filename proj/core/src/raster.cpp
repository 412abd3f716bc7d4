#include "bisite/raster.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "bisite/neighbors.hpp"
#include "bisite/parallel.hpp"

namespace bisite {

namespace {

constexpr double kTieRelTol = 1e-12;

// Relative near-equality; +inf ties with +inf.
bool near_equal(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= kTieRelTol * std::max(std::abs(a), std::abs(b));
}

struct PointHash {
    std::size_t operator()(const Point2& p) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](double v) {
            std::uint64_t bits;
            static_assert(sizeof(bits) == sizeof(v));
            std::memcpy(&bits, &v, sizeof(bits));
            h = (h ^ bits) * 0x100000001b3ULL;
        };
        mix(p.x);
        mix(p.y);
        return static_cast<std::size_t>(h);
    }
};

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::string mode_name(Mode mode) {
    return mode == Mode::Nearest ? "nearest" : "furthest";
}

GridSpec GridSpec::fit(const std::vector<Point2>& sites, int width, int height, double inflate) {
    GridSpec g;
    g.width = width;
    g.height = height;
    double xmin = sites[0].x, xmax = sites[0].x, ymin = sites[0].y, ymax = sites[0].y;
    for (const Point2& p : sites) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double sx = xmax - xmin;
    const double sy = ymax - ymin;
    const double px = inflate * (sx > 0.0 ? sx : (sy > 0.0 ? sy : 1.0));
    const double py = inflate * (sy > 0.0 ? sy : (sx > 0.0 ? sx : 1.0));
    g.xmin = xmin - px;
    g.xmax = xmax + px;
    g.ymin = ymin - py;
    g.ymax = ymax + py;
    return g;
}

bool pruning_applies(const DistanceSpec& spec, Mode mode) {
    if (mode != Mode::Nearest) return false;
    if (spec.kind == DistanceKind::ContainingRadius) return true;
    return spec.kind == DistanceKind::ParamPerimeter && spec.c >= 0.0;
}

std::vector<SitePair> candidate_pairs(const std::vector<Point2>& sites, const DistanceSpec& spec,
                                      Mode mode) {
    const int n = static_cast<int>(sites.size());
    if (pruning_applies(spec, mode) && n >= 3) {
        return delaunay(sites).edges;  // already sorted
    }
    std::vector<SitePair> all;
    all.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    return all;
}

bool RasterDiagram::same_labels(const RasterDiagram& other) const {
    if (grid.width != other.grid.width || grid.height != other.grid.height) return false;
    const std::size_t cells = winner.size();
    for (std::size_t c = 0; c < cells; ++c) {
        if (tie[c] != other.tie[c]) return false;
        const std::int32_t a = winner[c];
        const std::int32_t b = other.winner[c];
        if ((a < 0) != (b < 0)) return false;
        if (a >= 0 && candidates[a] != other.candidates[b]) return false;
    }
    return true;
}

RasterDiagram compute_raster(const std::vector<Point2>& sites, const DistanceSpec& spec, Mode mode,
                             const GridSpec& grid, std::vector<SitePair> candidates, int threads) {
    if (sites.size() < 2) throw DegenerateInput("compute_raster: need at least 2 sites");
    if (candidates.empty()) throw EmptyCandidates("compute_raster: no candidate pairs");
    std::sort(candidates.begin(), candidates.end());

    RasterDiagram out;
    out.mode = mode;
    out.spec = spec;
    out.grid = grid;
    out.candidates = std::move(candidates);
    out.winner.assign(static_cast<std::size_t>(grid.width) * grid.height, RasterDiagram::kUndefined);
    out.tie.assign(out.winner.size(), 0);

    const int ncand = static_cast<int>(out.candidates.size());
    const bool furthest = (mode == Mode::Furthest);

    std::vector<PairEvaluator> evals;
    evals.reserve(ncand);
    for (const SitePair pr : out.candidates) evals.emplace_back(spec, sites[pr.i], sites[pr.j]);

    // Samples that coincide exactly with a site are rare; find them up front
    // so the hot loop stays branch-light.
    std::set<std::pair<int, int>> colliding;
    if (grid.jitter) {
        std::unordered_set<Point2, PointHash> site_set(sites.begin(), sites.end());
        for (const Point2& s : sites) {
            const int col = static_cast<int>(std::floor((s.x - grid.xmin) / grid.dx()));
            const int row = static_cast<int>(std::floor((s.y - grid.ymin) / grid.dy()));
            for (int r = row - 1; r <= row + 1; ++r) {
                for (int c = col - 1; c <= col + 1; ++c) {
                    if (r < 0 || r >= grid.height || c < 0 || c >= grid.width) continue;
                    if (site_set.count(grid.cell_center(r, c))) colliding.insert({r, c});
                }
            }
        }
    }

    parallel_for(0, grid.height, resolve_threads(threads), [&](int row) {
        std::vector<double> vals(ncand);
        for (int col = 0; col < grid.width; ++col) {
            Point2 v = grid.cell_center(row, col);
            if (!colliding.empty() && colliding.count({row, col})) {
                double step = 1.0;
                bool hit = true;
                while (hit) {
                    step *= 0.5;
                    v = {v.x + step * grid.dx() * 0x1.0p-10, v.y + step * grid.dy() * 0x1.0p-10};
                    hit = false;
                    for (const Point2& s : sites) hit |= (v == s);
                }
            }

            bool any = false;
            double opt = 0.0;
            for (int c = 0; c < ncand; ++c) {
                const DistanceValue dv = evals[c](v);
                if (!dv.defined) {
                    vals[c] = std::numeric_limits<double>::quiet_NaN();
                    continue;
                }
                vals[c] = dv.value;
                if (!any || (furthest ? dv.value > opt : dv.value < opt)) opt = dv.value;
                any = true;
            }
            const std::size_t cell = static_cast<std::size_t>(row) * grid.width + col;
            if (!any) continue;  // stays undefined
            std::int32_t best = RasterDiagram::kUndefined;
            bool tied = false;
            for (int c = 0; c < ncand; ++c) {
                if (std::isnan(vals[c]) || !near_equal(vals[c], opt)) continue;
                if (best < 0)
                    best = c;
                else
                    tied = true;
            }
            out.winner[cell] = best;
            out.tie[cell] = tied ? 1 : 0;
        }
    });
    return out;
}

RasterDiagram compute_raster(const std::vector<Point2>& sites, const DistanceSpec& spec, Mode mode,
                             const GridSpec& grid, int threads) {
    return compute_raster(sites, spec, mode, grid, candidate_pairs(sites, spec, mode), threads);
}

RegionStats region_stats(const RasterDiagram& raster) {
    RegionStats stats;
    const int w = raster.grid.width;
    const int h = raster.grid.height;
    const auto idx = [w](int r, int c) { return static_cast<std::size_t>(r) * w + c; };

    std::vector<std::int64_t> cells_per(raster.candidates.size(), 0);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const std::size_t cell = idx(r, c);
            if (raster.winner[cell] < 0) {
                ++stats.undefined_cells;
            } else if (raster.tie[cell]) {
                ++stats.tie_cells;
            } else {
                ++cells_per[raster.winner[cell]];
            }
        }
    }

    // 4-connected components per owning pair, over non-tie cells.
    std::vector<std::int64_t> comps_per(raster.candidates.size(), 0);
    std::vector<std::uint8_t> seen(raster.winner.size(), 0);
    std::vector<std::pair<int, int>> stack;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const std::size_t cell = idx(r, c);
            if (seen[cell] || raster.winner[cell] < 0 || raster.tie[cell]) continue;
            const std::int32_t label = raster.winner[cell];
            ++comps_per[label];
            seen[cell] = 1;
            stack.push_back({r, c});
            while (!stack.empty()) {
                const auto [cr, cc] = stack.back();
                stack.pop_back();
                constexpr int dr[4] = {1, -1, 0, 0};
                constexpr int dc[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int nr = cr + dr[d], nc = cc + dc[d];
                    if (nr < 0 || nr >= h || nc < 0 || nc >= w) continue;
                    const std::size_t ncell = idx(nr, nc);
                    if (seen[ncell] || raster.tie[ncell] || raster.winner[ncell] != label) continue;
                    seen[ncell] = 1;
                    stack.push_back({nr, nc});
                }
            }
        }
    }

    for (std::size_t i = 0; i < raster.candidates.size(); ++i) {
        if (cells_per[i] == 0) continue;
        stats.per_pair.push_back({raster.candidates[i], cells_per[i], comps_per[i]});
    }
    stats.non_empty_pairs = static_cast<std::int64_t>(stats.per_pair.size());

    // Raster vertices: 2x2 windows with >= 3 distinct resolved labels
    // (undefined counts as its own label; ties resolve to the winner).
    for (int r = 0; r + 1 < h; ++r) {
        for (int c = 0; c + 1 < w; ++c) {
            const std::int32_t a = raster.winner[idx(r, c)];
            const std::int32_t b = raster.winner[idx(r, c + 1)];
            const std::int32_t d = raster.winner[idx(r + 1, c)];
            const std::int32_t e = raster.winner[idx(r + 1, c + 1)];
            int distinct = 1;
            if (b != a) ++distinct;
            if (d != a && d != b) ++distinct;
            if (e != a && e != b && e != d) ++distinct;
            if (distinct >= 3) ++stats.raster_vertices;
        }
    }
    return stats;
}

std::string stats_json(const RasterDiagram& raster, const RegionStats& stats, int n_sites) {
    nlohmann::json spec_j;
    spec_j["kind"] = kind_name(raster.spec.kind);
    if (raster.spec.uses_c()) spec_j["c"] = raster.spec.c;

    nlohmann::json j;
    j["spec"] = spec_j;
    j["mode"] = mode_name(raster.mode);
    j["n"] = n_sites;
    j["grid"] = {{"width", raster.grid.width},
                 {"height", raster.grid.height},
                 {"bbox", {raster.grid.xmin, raster.grid.ymin, raster.grid.xmax, raster.grid.ymax}}};
    j["nonEmptyPairs"] = stats.non_empty_pairs;
    j["tieCells"] = stats.tie_cells;
    j["undefinedCells"] = stats.undefined_cells;
    j["rasterVertices"] = stats.raster_vertices;
    j["perPair"] = nlohmann::json::array();
    for (const auto& pp : stats.per_pair) {
        j["perPair"].push_back({{"i", pp.pair.i},
                                {"j", pp.pair.j},
                                {"cells", pp.cells},
                                {"components", pp.components}});
    }
    return j.dump(2) + "\n";
}

void write_ppm(std::ostream& out, const RasterDiagram& raster, const std::vector<Point2>& sites) {
    const int w = raster.grid.width;
    const int h = raster.grid.height;
    std::vector<std::uint8_t> img(static_cast<std::size_t>(w) * h * 3, 255);

    const auto color_of = [&](std::int32_t winner) -> std::array<std::uint8_t, 3> {
        if (winner < 0) return {255, 255, 255};
        const SitePair p = raster.candidates[winner];
        const std::uint64_t hsh =
            splitmix((static_cast<std::uint64_t>(p.i) << 32) | static_cast<std::uint32_t>(p.j));
        // Channels kept in [56, 230] so regions never collide with the black
        // site markers or the white undefined cells.
        return {static_cast<std::uint8_t>(56 + (hsh & 0xff) % 175),
                static_cast<std::uint8_t>(56 + ((hsh >> 8) & 0xff) % 175),
                static_cast<std::uint8_t>(56 + ((hsh >> 16) & 0xff) % 175)};
    };

    for (int r = 0; r < h; ++r) {
        const int img_row = h - 1 - r;  // top row = largest y
        for (int c = 0; c < w; ++c) {
            const auto rgb = color_of(raster.winner[static_cast<std::size_t>(r) * w + c]);
            const std::size_t o = (static_cast<std::size_t>(img_row) * w + c) * 3;
            img[o] = rgb[0];
            img[o + 1] = rgb[1];
            img[o + 2] = rgb[2];
        }
    }

    // Sites as black disks of 2-cell radius.
    for (const Point2& s : sites) {
        const double fc = (s.x - raster.grid.xmin) / raster.grid.dx() - 0.5;
        const double fr = (s.y - raster.grid.ymin) / raster.grid.dy() - 0.5;
        const int cr = static_cast<int>(std::lround(fr));
        const int cc = static_cast<int>(std::lround(fc));
        for (int r = cr - 2; r <= cr + 2; ++r) {
            for (int c = cc - 2; c <= cc + 2; ++c) {
                if (r < 0 || r >= h || c < 0 || c >= w) continue;
                if ((r - fr) * (r - fr) + (c - fc) * (c - fc) > 4.0) continue;
                const std::size_t o = (static_cast<std::size_t>(h - 1 - r) * w + c) * 3;
                img[o] = img[o + 1] = img[o + 2] = 0;
            }
        }
    }

    out << "P6\n" << w << " " << h << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data()), static_cast<std::streamsize>(img.size()));
}

void write_ppm_file(const std::string& path, const RasterDiagram& raster,
                    const std::vector<Point2>& sites) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw GeometryError("cannot open output file: " + path);
    write_ppm(f, raster, sites);
}

}  // namespace bisite
