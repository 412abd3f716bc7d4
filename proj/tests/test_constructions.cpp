#include <doctest.h>

#include <cmath>

#include "bisite/constructions.hpp"
#include "bisite/distances.hpp"
#include "test_util.hpp"

using namespace bisite;
using testutil::close;

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("two-line generator: structure and circle counts") {
    const ConstructionSet s4 = gen_two_line_set(4, 10.0, 0.05, 1);
    CHECK(s4.sites.size() == 4);
    CHECK(two_line_circles(s4).size() == 4);  // 2 * 2

    const ConstructionSet s6 = gen_two_line_set(6, 10.0, 0.05, 2);
    CHECK(two_line_circles(s6).size() == 9);  // 3 * 3

    const ConstructionSet s8 = gen_two_line_set(8, 10.0, 0.05, 3);
    CHECK(two_line_circles(s8).size() == 16);  // 4 * 4

    // Split: ceil(n/2) on y=0 first, rest on y=d.
    for (int i = 0; i < 2; ++i) CHECK(s4.sites[i].y == 0.0);
    for (int i = 2; i < 4; ++i) CHECK(s4.sites[i].y == 10.0);

    CHECK_THROWS(gen_two_line_set(3, 10.0, 0.05, 1));
    CHECK_THROWS(gen_two_line_set(8, 10.0, 1.0, 1));  // spread > d/100
}

TEST_CASE("two-line generator: every circle passes through exactly its two sites") {
    const ConstructionSet set = gen_two_line_set(8, 10.0, 0.05, 5);
    const auto circles = two_line_circles(set);
    const int n = static_cast<int>(set.sites.size());
    const int m1 = (n + 1) / 2;
    int ci = 0;
    for (int i = 0; i < m1; ++i) {
        for (int j = m1; j < n; ++j, ++ci) {
            for (int s = 0; s < n; ++s) {
                const double gap =
                    std::abs(dist(circles[ci].center, set.sites[s]) - circles[ci].radius);
                if (s == i || s == j)
                    CHECK(gap <= 1e-9 * 10.0);
                else
                    CHECK(gap > 1e-7 * 10.0);
            }
        }
    }
}

TEST_CASE("circle intersection counts on two-line constructions") {
    const ConstructionSet s4 = gen_two_line_set(4, 10.0, 0.05, 1);
    const CircleIntersectionCount c4 = count_circle_intersections(s4);
    CHECK(c4.pairs_intersecting == 6);
    CHECK(c4.distinct_points == 12);

    const ConstructionSet s8 = gen_two_line_set(8, 10.0, 0.05, 3);
    const CircleIntersectionCount c8 = count_circle_intersections(s8);
    CHECK(c8.pairs_intersecting == 120);  // all C(16,2) pairs cross
    CHECK(c8.distinct_points == 240);     // 2 per crossing pair
}

TEST_CASE("degenerate two-line set: coincident circles do not count") {
    ConstructionSet set;
    set.provenance = Provenance::TwoLine;
    set.sites = {{0, 0}, {0, 0}, {0, 10}, {0, 10}};  // all circles identical
    const CircleIntersectionCount c = count_circle_intersections(set);
    CHECK(c.pairs_intersecting == 0);
    CHECK(c.distinct_points == 0);
}

TEST_CASE("segment intersections: convex position gives C(n,4)") {
    for (const int n : {4, 5, 6, 8, 10}) {
        const ConstructionSet set = gen_convex_position(n, 17 + n);
        CHECK(count_segment_intersections(set.sites) == choose(n, 4));
    }
}

TEST_CASE("segment intersections: explicit small cases") {
    // Convex quadrilateral: one diagonal crossing.
    CHECK(count_segment_intersections(testutil::unit_square()) == 1);
    // One point inside the triangle of the others: no crossings among
    // endpoint-disjoint segments.
    CHECK(count_segment_intersections({{0, 0}, {4, 0}, {2, 3}, {2, 1}}) == 0);
}

TEST_CASE("line intersections: small exact counts and the generic identity") {
    // Triangle: the three lines meet only at the sites.
    CHECK(count_line_intersections({{0, 0}, {4, 0}, {1, 3}}) == 0);

    // Generic four points: the three diagonal points of the complete
    // quadrilateral.
    CHECK(count_line_intersections({{0, 0}, {4, 0}, {1, 3}, {3, 2}}) == 3);

    // Generic n: C(m,2) - n*C(n-1,2) distinct non-site points, m = C(n,2).
    for (const int n : {4, 5, 6, 7}) {
        const auto sites = testutil::random_sites(n, 1000 + n);
        const std::int64_t m = choose(n, 2);
        CHECK(count_line_intersections(sites) == choose(m, 2) - n * choose(n - 1, 2));
    }
}

TEST_CASE("collinear unit construction") {
    const ConstructionSet s2 = gen_collinear_unit(2);
    CHECK(s2.sites.size() == 2);
    CHECK(s2.sites[0] == Point2{0, 0});
    CHECK(s2.sites[1] == Point2{1, 0});

    const ConstructionSet s5 = gen_collinear_unit(5);
    for (int i = 0; i < 5; ++i) {
        CHECK(s5.sites[i].x == static_cast<double>(i));
        CHECK(s5.sites[i].y == 0.0);
    }

    // On the diameter circle of a consecutive pair the perimeter-of-
    // circumcenter-triangle distance is exactly 2.
    const DistanceSpec ppc = DistanceSpec::make(DistanceKind::CccPerimeter);
    for (int n : {3, 6}) {
        const ConstructionSet set = gen_collinear_unit(n);
        for (int i = 0; i + 1 < n; ++i) {
            const Point2 center{i + 0.5, 0.0};
            for (const double ang : {0.3, 1.1, 2.0, 4.2}) {
                const Point2 v{center.x + 0.5 * std::cos(ang), center.y + 0.5 * std::sin(ang)};
                const DistanceValue dv = eval(ppc, v, set.sites[i], set.sites[i + 1]);
                CHECK(dv.defined);
                CHECK(close(dv.value, 2.0, 1e-12, 1e-12));
            }
        }
    }
}

TEST_CASE("convex and random generators") {
    const ConstructionSet cv = gen_convex_position(12, 3);
    CHECK(cv.sites.size() == 12);
    CHECK(cv.provenance == Provenance::ConvexPosition);
    // Strict convexity: every consecutive triple turns the same way.
    for (int i = 0; i < 12; ++i) {
        const int o = orient_sign(cv.sites[i], cv.sites[(i + 1) % 12], cv.sites[(i + 2) % 12]);
        CHECK(o == 1);
    }

    const ConstructionSet r1 = gen_random_general(20, 4);
    const ConstructionSet r2 = gen_random_general(20, 4);
    CHECK(r1.sites == r2.sites);  // deterministic
    const ConstructionSet r3 = gen_random_general(20, 5);
    CHECK(r1.sites != r3.sites);
}
