#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "bisite/constructions.hpp"
#include "bisite/neighbors.hpp"
#include "bisite/rng.hpp"
#include "bisite/verify.hpp"
#include "test_util.hpp"

using namespace bisite;

TEST_CASE("delaunay pruning check passes for admissible specs") {
    const auto sites = gen_random_general(12, 1).sites;
    const GridSpec grid = GridSpec::fit(sites, 128, 128);

    const Report r1 =
        check_delaunay_pruning(sites, DistanceSpec::make(DistanceKind::ContainingRadius), grid, 1);
    CHECK(r1.passed);
    CHECK(r1.counts.at("offendingPairs") == 0);
    CHECK(r1.counts.at("mismatchCells") == 0);

    const Report r2 = check_delaunay_pruning(
        sites, DistanceSpec::make(DistanceKind::ParamPerimeter, 0.0), grid, 1);
    CHECK(r2.passed);
    CHECK(r2.counts.at("mismatchCells") == 0);

    CHECK_THROWS_AS(check_delaunay_pruning(
                        sites, DistanceSpec::make(DistanceKind::ParamPerimeter, -1.0), grid, 1),
                    PreconditionError);
    CHECK_THROWS_AS(
        check_delaunay_pruning(sites, DistanceSpec::make(DistanceKind::ViewAngle), grid, 1),
        PreconditionError);
}

TEST_CASE("delaunay pruning negative control: randomized edge set fails") {
    const auto sites = gen_random_general(12, 1).sites;
    const GridSpec grid = GridSpec::fit(sites, 128, 128);
    const Triangulation dt = delaunay(sites);

    // Random edge set of the same size, drawn from the non-Delaunay pairs
    // first so real owners are excluded.
    std::vector<SitePair> non_dt;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            if (!dt.has_edge({i, j})) non_dt.push_back({i, j});
    Rng rng(99);
    std::vector<SitePair> control;
    std::set<std::size_t> used;
    while (control.size() < dt.edges.size() && used.size() < non_dt.size()) {
        const std::size_t pick = rng.below(non_dt.size());
        if (used.insert(pick).second) control.push_back(non_dt[pick]);
    }
    const Report r = check_delaunay_pruning_against_edges(
        sites, DistanceSpec::make(DistanceKind::ContainingRadius), grid, control, 1);
    CHECK_FALSE(r.passed);
    CHECK(r.counts.at("offendingPairs") > 0);
}

TEST_CASE("pc-limit: large c collapses to the closest pair; c=0 does not") {
    const auto sites = gen_random_general(8, 2).sites;
    const GridSpec grid = GridSpec::fit(sites, 128, 128);

    const Report collapsed = check_pc_limit(sites, 1e6, grid, 2);
    CHECK(collapsed.passed);
    CHECK(collapsed.counts.at("otherOwned") == 0);

    const Report spread = check_pc_limit(sites, 0.0, grid, 2);
    CHECK_FALSE(spread.passed);
    CHECK(spread.counts.at("otherOwned") > 0);
}

TEST_CASE("pc-limit: n = 2 passes trivially; ties are rejected") {
    const std::vector<Point2> two{{0, 0}, {1, 0}};
    const Report r = check_pc_limit(two, 3.0, GridSpec::fit(two, 32, 32), 0);
    CHECK(r.passed);

    // Symmetric distances: no unique closest pair.
    const std::vector<Point2> tie{{0, 0}, {1, 0}, {0.5, 10}, {0.5, 11}};
    CHECK_THROWS_AS(check_pc_limit(tie, 10.0, GridSpec::fit(tie, 16, 16), 0),
                    NoUniqueClosestPair);
}

TEST_CASE("viewangle-outer agreement with the arrangement") {
    SUBCASE("triangle") {
        const std::vector<Point2> sites{{0, 0}, {4, 0}, {1, 3}};
        const Report r = check_viewangle_outer(sites, GridSpec::fit(sites, 160, 160), 0);
        CHECK(r.passed);
        CHECK(r.counts.at("comparedCells") > 0);
        CHECK(r.counts.at("faces") == 7);
    }
    SUBCASE("random 10 sites") {
        const auto sites = gen_random_general(10, 3).sites;
        const Report r = check_viewangle_outer(sites, GridSpec::fit(sites, 160, 160), 3);
        CHECK(r.passed);
        CHECK(r.counts.at("agreement") >= 0.999);
    }
    SUBCASE("grid fully inside the hull is vacuous") {
        const auto square = testutil::unit_square();
        GridSpec g;
        g.xmin = 0.4;
        g.xmax = 0.6;
        g.ymin = 0.4;
        g.ymax = 0.6;
        g.width = 16;
        g.height = 16;
        const Report r = check_viewangle_outer(square, g, 0);
        CHECK(r.passed);
        CHECK(r.counts.at("comparedCells") == 0);
        bool flagged = false;
        for (const auto& d : r.details) flagged |= d.find("vacuous") != std::string::npos;
        CHECK(flagged);
    }
}

TEST_CASE("far-field antipodal ownership") {
    SUBCASE("regular pentagon") {
        const auto pentagon = testutil::regular_polygon(5);
        const Report r = check_far_field_antipodal(pentagon, 1e3, 0);
        CHECK(r.passed);
        CHECK(r.counts.at("nonAntipodalOwners") == 0);
    }
    SUBCASE("random 12 sites") {
        const auto sites = gen_random_general(12, 4).sites;
        const Report r = check_far_field_antipodal(sites, 1e3, 4);
        CHECK(r.passed);
    }
    SUBCASE("near field is flagged as non-probative") {
        const auto sites = gen_random_general(12, 4).sites;
        const Report r = check_far_field_antipodal(sites, 1.0, 4);
        bool flagged = false;
        for (const auto& d : r.details) flagged |= d.find("non-probative") != std::string::npos;
        CHECK(flagged);
    }
}

TEST_CASE("ppcirc-collinear: n-1 consecutive regions, value exactly 2") {
    for (const int n : {3, 8}) {
        const auto sites = gen_collinear_unit(n).sites;
        const Report r = check_ppcirc_collinear(n, GridSpec::fit(sites, 256, 128));
        CHECK(r.passed);
        CHECK(r.counts.at("consecutiveRegions") == n - 1);
        CHECK(r.counts.at("badValueSamples") == 0);
        CHECK(r.counts.at("minOtherPairValue") > 2.0);
    }
}

TEST_CASE("line-locus of the furthest circumradius diagram") {
    const auto sites = gen_random_general(5, 6).sites;
    const GridSpec grid = GridSpec::fit(sites, 64, 64);
    const Report r = check_line_locus_furthest_c(sites, grid, 6);
    CHECK(r.passed);
    CHECK(r.counts.at("samples") > 0);
    CHECK(r.counts.at("ownedByLinePair") + r.counts.at("tieSamples") == r.counts.at("samples"));

    // Collinear triple: precondition violation.
    const std::vector<Point2> bad{{0, 0}, {1, 0}, {2, 0}, {0.3, 1}, {0.9, 2}};
    CHECK_THROWS_AS(check_line_locus_furthest_c(bad, GridSpec::fit(bad, 32, 32), 0),
                    PreconditionError);
}

TEST_CASE("reports are reproducible and serialize to well-formed JSON") {
    const auto sites = gen_random_general(8, 5).sites;
    const GridSpec grid = GridSpec::fit(sites, 96, 96);
    const Report a = check_pc_limit(sites, 1e6, grid, 5);
    const Report b = check_pc_limit(sites, 1e6, grid, 5);
    CHECK(report_json(a) == report_json(b));

    const nlohmann::json j = nlohmann::json::parse(report_json(a));
    CHECK(j.at("theorem") == "pc-limit");
    CHECK(j.at("passed").is_boolean());
    CHECK(j.at("counts").is_object());
    CHECK(j.at("details").is_array());
    CHECK(j.at("seed") == 5);
    CHECK(j.at("n") == 8);
    CHECK(j.at("grid").at("width") == 96);
}
