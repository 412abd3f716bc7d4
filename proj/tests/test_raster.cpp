#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bisite/neighbors.hpp"
#include "bisite/raster.hpp"
#include "bisite/rng.hpp"
#include "test_util.hpp"

using namespace bisite;
using testutil::close;

TEST_CASE("candidate pairs: pruning on and off") {
    const auto sites = testutil::random_sites(10, 5);

    const auto pruned =
        candidate_pairs(sites, DistanceSpec::make(DistanceKind::ContainingRadius), Mode::Nearest);
    CHECK(static_cast<int>(pruned.size()) <= 3 * 10 - 6);
    CHECK(pruned == delaunay(sites).edges);

    const auto full =
        candidate_pairs(sites, DistanceSpec::make(DistanceKind::ViewAngle), Mode::Furthest);
    CHECK(full.size() == 45);

    // c = -1 is outside the pruning theorem.
    const auto pc_neg =
        candidate_pairs(sites, DistanceSpec::make(DistanceKind::ParamPerimeter, -1.0), Mode::Nearest);
    CHECK(pc_neg.size() == 45);

    const auto pc_zero =
        candidate_pairs(sites, DistanceSpec::make(DistanceKind::ParamPerimeter, 0.0), Mode::Nearest);
    CHECK(pc_zero == delaunay(sites).edges);
}

TEST_CASE("two sites: every cell belongs to the unique pair") {
    const std::vector<Point2> sites{{0, 0}, {1, 0}};
    const GridSpec grid = GridSpec::fit(sites, 32, 32);
    for (const Mode mode : {Mode::Nearest, Mode::Furthest}) {
        const RasterDiagram r =
            compute_raster(sites, DistanceSpec::make(DistanceKind::ParamPerimeter, 1.0), mode, grid);
        for (int row = 0; row < 32; ++row)
            for (int col = 0; col < 32; ++col) CHECK(r.pair_at(row, col) == SitePair{0, 1});
    }
}

TEST_CASE("spot check: argmin owner at a hand-computed sample") {
    // Sample (0.02, 0.01): pair (a,b) wins with 1.00241 vs 1.01256 vs 1.97.
    const std::vector<Point2> sites{{0, 0}, {1, 0}, {0, 1}};
    GridSpec grid;
    grid.xmin = 0;
    grid.ymin = 0;
    grid.xmax = 1;
    grid.ymax = 1;
    grid.width = 25;
    grid.height = 50;
    CHECK(grid.cell_center(0, 0).x == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(grid.cell_center(0, 0).y == doctest::Approx(0.01).epsilon(1e-12));
    const RasterDiagram r = compute_raster(
        sites, DistanceSpec::make(DistanceKind::ParamPerimeter, 0.0), Mode::Nearest, grid);
    CHECK(r.pair_at(0, 0) == SitePair{0, 1});
}

TEST_CASE("collinear sites with full candidates: view-angle pi locus on the segments") {
    const std::vector<Point2> sites{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    const DistanceSpec va = DistanceSpec::make(DistanceKind::ViewAngle);

    // A single row of cells exactly on the line: every pair whose open
    // segment contains the sample sees it under exactly pi, so those cells
    // tie at pi and resolve to the lexicographically smallest spanning pair.
    GridSpec on_line;
    on_line.xmin = -0.5;
    on_line.xmax = 3.5;
    on_line.ymin = -0.5;
    on_line.ymax = 0.5;
    on_line.width = 64;
    on_line.height = 1;
    const RasterDiagram r0 = compute_raster(sites, va, Mode::Furthest, on_line);
    // x = 0.46875 lies inside segments (0,1), (0,2), (0,3).
    const int col_left = 15;
    CHECK(on_line.cell_center(0, col_left).y == 0.0);
    CHECK(r0.tie_at(0, col_left));
    CHECK(r0.pair_at(0, col_left) == SitePair{0, 1});
    // x = 1.46875 lies inside (0,2), (0,3), (1,2), (1,3).
    const int col_mid = 31;
    CHECK(r0.tie_at(0, col_mid));
    CHECK(r0.pair_at(0, col_mid) == SitePair{0, 2});

    // Just off the line the angle deficit is proportional to
    // 1/d_left + 1/d_right, so the widest spanning pair (0,3) owns the band
    // near the run's interior.
    GridSpec off_line = on_line;
    off_line.ymin = 0.01;
    off_line.ymax = 0.03;
    const RasterDiagram r1 = compute_raster(sites, va, Mode::Furthest, off_line);
    for (const int col : {col_left, col_mid}) {
        CHECK_FALSE(r1.tie_at(0, col));
        CHECK(r1.pair_at(0, col) == SitePair{0, 3});
    }
}

TEST_CASE("jitter controls undefined cells at site-coincident samples") {
    const std::vector<Point2> sites{{0, 0}, {1, 0}};
    GridSpec grid;
    grid.xmin = -0.5;
    grid.ymin = -0.5;
    grid.xmax = 0.5;
    grid.ymax = 0.5;
    grid.width = 1;
    grid.height = 1;  // single sample, exactly at site (0,0)
    grid.jitter = false;
    const DistanceSpec spec = DistanceSpec::make(DistanceKind::ViewAngle);
    const RasterDiagram r0 = compute_raster(sites, spec, Mode::Nearest, grid);
    CHECK(r0.winner_at(0, 0) == RasterDiagram::kUndefined);
    CHECK(region_stats(r0).undefined_cells == 1);

    grid.jitter = true;
    const RasterDiagram r1 = compute_raster(sites, spec, Mode::Nearest, grid);
    CHECK(r1.winner_at(0, 0) != RasterDiagram::kUndefined);
    CHECK(region_stats(r1).undefined_cells == 0);
}

TEST_CASE("raster is byte-identical across thread counts") {
    const auto sites = testutil::random_sites(9, 77);
    const GridSpec grid = GridSpec::fit(sites, 96, 80);
    for (const DistanceKind kind : {DistanceKind::Circumradius, DistanceKind::ViewAngle,
                                    DistanceKind::ContainingRadius}) {
        for (const Mode mode : {Mode::Nearest, Mode::Furthest}) {
            const DistanceSpec spec = DistanceSpec::make(kind);
            const RasterDiagram a = compute_raster(sites, spec, mode, grid, 1);
            const RasterDiagram b = compute_raster(sites, spec, mode, grid, 5);
            CHECK(a.winner == b.winner);
            CHECK(a.tie == b.tie);
        }
    }
}

TEST_CASE("pruning soundness at small scale: pruned equals full, owners are DT edges") {
    for (const std::uint64_t seed : {4ULL, 8ULL}) {
        const auto sites = testutil::random_sites(12, seed);
        const GridSpec grid = GridSpec::fit(sites, 128, 128);
        for (const auto& spec :
             {DistanceSpec::make(DistanceKind::ContainingRadius),
              DistanceSpec::make(DistanceKind::ParamPerimeter, 1.0)}) {
            std::vector<SitePair> full;
            for (int i = 0; i < 12; ++i)
                for (int j = i + 1; j < 12; ++j) full.push_back({i, j});
            const RasterDiagram rf = compute_raster(sites, spec, Mode::Nearest, grid, full);
            const RasterDiagram rp = compute_raster(sites, spec, Mode::Nearest, grid);
            CHECK(rf.same_labels(rp));

            const Triangulation dt = delaunay(sites);
            for (const auto& pp : region_stats(rf).per_pair) CHECK(dt.has_edge(pp.pair));
        }
    }
}

TEST_CASE("labels are invariant under translation and uniform scaling of sites+bbox") {
    const auto sites = testutil::random_sites(7, 12);
    const GridSpec grid = GridSpec::fit(sites, 64, 64);
    for (const DistanceKind kind :
         {DistanceKind::Circumradius, DistanceKind::ContainingRadius, DistanceKind::ViewAngle,
          DistanceKind::InscribedRadius, DistanceKind::CccSegmentDist, DistanceKind::CccArea,
          DistanceKind::CccPerimeter, DistanceKind::ParamPerimeter}) {
        const DistanceSpec spec = DistanceSpec::make(kind, 0.5);
        for (const Mode mode : {Mode::Nearest, Mode::Furthest}) {
            const RasterDiagram base = compute_raster(sites, spec, mode, grid);

            const auto transform = [&](double s, Point2 shift) {
                std::vector<Point2> t;
                for (const Point2& p : sites) t.push_back({s * p.x + shift.x, s * p.y + shift.y});
                GridSpec g = grid;
                g.xmin = s * grid.xmin + shift.x;
                g.xmax = s * grid.xmax + shift.x;
                g.ymin = s * grid.ymin + shift.y;
                g.ymax = s * grid.ymax + shift.y;
                return compute_raster(t, spec, mode, g);
            };

            // Power-of-two scale and dyadic shift keep the arithmetic exact,
            // so the comparison is label-for-label.
            const RasterDiagram shifted = transform(1.0, {4.0, -2.0});
            const RasterDiagram scaled = transform(4.0, {0.0, 0.0});
            CHECK(base.winner == shifted.winner);
            CHECK(base.winner == scaled.winner);
        }
    }
}

TEST_CASE("argmin/argmax order is invariant under rotation (eval level)") {
    Rng rng(91);
    const double ca = std::cos(0.7), sa = std::sin(0.7);
    const auto rot = [&](Point2 p) { return Point2{ca * p.x - sa * p.y, sa * p.x + ca * p.y}; };
    for (int t = 0; t < 300; ++t) {
        const Point2 v{rng.next_double(), rng.next_double()};
        const Point2 p{rng.next_double(), rng.next_double()};
        const Point2 q{rng.next_double(), rng.next_double()};
        const Point2 s{rng.next_double(), rng.next_double()};
        const Point2 u{rng.next_double(), rng.next_double()};
        for (const DistanceKind kind :
             {DistanceKind::Circumradius, DistanceKind::ViewAngle, DistanceKind::InscribedRadius,
              DistanceKind::CccArea, DistanceKind::ParamPerimeter}) {
            const DistanceSpec spec = DistanceSpec::make(kind, 1.0);
            const DistanceValue a1 = eval(spec, v, p, q);
            const DistanceValue a2 = eval(spec, v, s, u);
            const DistanceValue b1 = eval(spec, rot(v), rot(p), rot(q));
            const DistanceValue b2 = eval(spec, rot(v), rot(s), rot(u));
            if (!a1.defined || !a2.defined || !b1.defined || !b2.defined) continue;
            if (std::abs(a1.value - a2.value) <
                1e-9 * std::max(std::abs(a1.value), std::abs(a2.value)))
                continue;  // too close to compare across rounding
            CHECK((a1.value < a2.value) == (b1.value < b2.value));
        }
    }
}

TEST_CASE("region stats: counts, components, vertex proxy") {
    const std::vector<Point2> sites{{0, 0}, {1, 0}};
    const GridSpec grid = GridSpec::fit(sites, 32, 16);
    const RasterDiagram r =
        compute_raster(sites, DistanceSpec::make(DistanceKind::ParamPerimeter, 1.0), Mode::Nearest,
                       grid);
    const RegionStats st = region_stats(r);
    CHECK(st.non_empty_pairs == 1);
    REQUIRE(st.per_pair.size() == 1);
    CHECK(st.per_pair[0].cells == 32 * 16);
    CHECK(st.per_pair[0].components == 1);
    CHECK(st.raster_vertices == 0);

    // Cell-count conservation on a multi-pair raster.
    const auto sites2 = testutil::random_sites(8, 3);
    const GridSpec grid2 = GridSpec::fit(sites2, 64, 64);
    const RasterDiagram r2 =
        compute_raster(sites2, DistanceSpec::make(DistanceKind::ViewAngle), Mode::Nearest, grid2);
    const RegionStats st2 = region_stats(r2);
    std::int64_t sum = st2.tie_cells + st2.undefined_cells;
    for (const auto& pp : st2.per_pair) sum += pp.cells;
    CHECK(sum == 64 * 64);
}

TEST_CASE("ppm export is deterministic and well-formed") {
    const auto sites = testutil::random_sites(5, 21);
    const GridSpec grid = GridSpec::fit(sites, 40, 30);
    const RasterDiagram r =
        compute_raster(sites, DistanceSpec::make(DistanceKind::InscribedRadius), Mode::Nearest, grid);
    std::ostringstream a, b;
    write_ppm(a, r, sites);
    write_ppm(b, r, sites);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 2) == "P6");
    CHECK(a.str().size() > static_cast<std::size_t>(40 * 30 * 3));

    const RegionStats st = region_stats(r);
    const std::string js = stats_json(r, st, 5);
    CHECK(js.find("\"nonEmptyPairs\"") != std::string::npos);
    CHECK(js == stats_json(r, st, 5));
}
