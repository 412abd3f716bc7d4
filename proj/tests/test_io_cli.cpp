#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bisite/points_io.hpp"
#include "test_util.hpp"

using namespace bisite;

TEST_CASE("points file parsing") {
    std::istringstream in(
        "# header comment\n"
        "0 0\n"
        "1.5 -2.25  # trailing comment\n"
        "\n"
        "   3e-2   4.0\n");
    const auto pts = read_points(in);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == Point2{0, 0});
    CHECK(pts[1] == Point2{1.5, -2.25});
    CHECK(pts[2] == Point2{0.03, 4.0});
}

TEST_CASE("points file errors carry line numbers") {
    std::istringstream one("0 0\n1\n");
    CHECK_THROWS_WITH_AS(static_cast<void>(read_points(one)), doctest::Contains("line 2"),
                         ParseError);
    std::istringstream junk("0 0\nfoo bar\n");
    CHECK_THROWS_AS(static_cast<void>(read_points(junk)), ParseError);
    std::istringstream extra("0 0 0\n");
    CHECK_THROWS_AS(static_cast<void>(read_points(extra)), ParseError);
    std::istringstream inf("1e400 0\n");
    CHECK_THROWS_AS(static_cast<void>(read_points(inf)), ParseError);
}

TEST_CASE("points round-trip at full precision") {
    const auto pts = testutil::random_sites(50, 8);
    std::stringstream buf;
    write_points(buf, pts);
    const auto back = read_points(buf);
    CHECK(back == pts);
}

namespace {

// CLI integration: the binary path is provided by CMake via BISITE_CLI_BIN.
const char* cli_bin() { return std::getenv("BISITE_CLI_BIN"); }

int run(const std::string& args, const std::string& out_file = "/dev/null") {
    const std::string cmd = std::string(cli_bin()) + " " + args + " >" + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli: compute, verify, bench, gen" * doctest::skip(false)) {
    REQUIRE(cli_bin() != nullptr);
    const std::string dir = "/tmp/bisite_cli_test";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());

    SUBCASE("compute writes image and stats; exit codes") {
        std::ofstream(dir + "/pts.txt") << "0 0\n3 0\n0 4\n1 1\n";
        CHECK(run("compute --distance viewangle --mode furthest --grid 64x64 " + dir +
                  "/pts.txt --out " + dir + "/a.ppm --stats " + dir + "/a.json") == 0);
        CHECK(slurp(dir + "/a.ppm").substr(0, 2) == "P6");
        const auto j = nlohmann::json::parse(slurp(dir + "/a.json"));
        CHECK(j.at("mode") == "furthest");
        CHECK(j.at("n") == 4);

        // Identical run, byte-identical outputs with different thread counts.
        CHECK(run("compute --distance param-perimeter --c 1 --mode nearest --grid 64x64 "
                  "--threads 1 " +
                  dir + "/pts.txt --out " + dir + "/t1.ppm --stats " + dir + "/t1.json") == 0);
        CHECK(run("compute --distance param-perimeter --c 1 --mode nearest --grid 64x64 "
                  "--threads 4 " +
                  dir + "/pts.txt --out " + dir + "/t4.ppm --stats " + dir + "/t4.json") == 0);
        CHECK(slurp(dir + "/t1.ppm") == slurp(dir + "/t4.ppm"));
        CHECK(slurp(dir + "/t1.json") == slurp(dir + "/t4.json"));

        // Parse error -> 2.
        std::ofstream(dir + "/bad.txt") << "0 0\nnope\n";
        CHECK(run("compute --distance viewangle " + dir + "/bad.txt") == 2);
        CHECK(run("compute --distance viewangle " + dir + "/missing.txt") == 2);

        // Degenerate input -> 3 (collinear sites with a pruning spec).
        std::ofstream(dir + "/line.txt") << "0 0\n1 0\n2 0\n3 0\n";
        CHECK(run("compute --distance containing --mode nearest --grid 32x32 " + dir +
                  "/line.txt --out " + dir + "/l.ppm --stats " + dir + "/l.json") == 3);
        // ...but full-candidate specs accept collinear sites.
        CHECK(run("compute --distance viewangle --mode furthest --grid 32x32 " + dir +
                  "/line.txt --out " + dir + "/l2.ppm --stats " + dir + "/l2.json") == 0);
    }

    SUBCASE("verify: passed reports exit 0 and emit JSON") {
        CHECK(run("verify delaunay-pruning --distance containing --n 12 --seed 1 --grid 96x96",
                  dir + "/r1.json") == 0);
        const auto r1 = nlohmann::json::parse(slurp(dir + "/r1.json"));
        CHECK(r1.at("theorem") == "delaunay-pruning");
        CHECK(r1.at("passed") == true);

        CHECK(run("verify pc-limit --c 1e6 --n 8 --seed 2 --grid 96x96", dir + "/r2.json") == 0);
        CHECK(run("verify ppcirc-collinear --n 8", dir + "/r3.json") == 0);
        const auto r3 = nlohmann::json::parse(slurp(dir + "/r3.json"));
        CHECK(r3.at("counts").at("consecutiveRegions") == 7);

        CHECK(run("verify viewangle-outer --n 10 --seed 3 --grid 128x128") == 0);
        CHECK(run("verify far-field-antipodal --n 12 --seed 4 --multiplier 1000") == 0);
        CHECK(run("verify line-locus-furthest-c --n 5 --seed 6") == 0);
    }

    SUBCASE("verify: precondition failures exit 4") {
        std::ofstream(dir + "/tie.txt") << "0 0\n1 0\n0.5 10\n0.5 11\n";
        CHECK(run("verify pc-limit --c 1e6 --input " + dir + "/tie.txt") == 4);

        std::ofstream(dir + "/coll.txt") << "0 0\n1 0\n2 0\n0.3 1\n0.9 2\n";
        CHECK(run("verify line-locus-furthest-c --input " + dir + "/coll.txt") == 4);
    }

    SUBCASE("bench emits timing JSON with pair counts") {
        CHECK(run("bench --n 12 --seed 1 --grid 64x64 --distance containing", dir + "/b.json") ==
              0);
        const auto b = nlohmann::json::parse(slurp(dir + "/b.json"));
        CHECK(b.at("pairs").at("full") == 66);
        CHECK(b.at("pairs").at("pruned") <= 3 * 12 - 6);
        CHECK(b.at("timingsMs").at("fullMaxThreads").is_number());
    }

    SUBCASE("gen writes loadable points files") {
        CHECK(run("gen collinear-unit --n 5 --out " + dir + "/cu.txt") == 0);
        const auto pts = read_points_file(dir + "/cu.txt");
        REQUIRE(pts.size() == 5);
        CHECK(pts[4] == Point2{4, 0});

        CHECK(run("gen two-line --n 8 --seed 3 --d 10 --out " + dir + "/tl.txt") == 0);
        CHECK(read_points_file(dir + "/tl.txt").size() == 8);

        CHECK(run("gen convex --n 9 --seed 1 --out " + dir + "/cx.txt") == 0);
        CHECK(read_points_file(dir + "/cx.txt").size() == 9);
    }
}
