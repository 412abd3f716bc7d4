#include <cstdio>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bisite/arrangement.hpp"
#include "bisite/constructions.hpp"
#include "bisite/distances.hpp"
#include "bisite/neighbors.hpp"
#include "bisite/parallel.hpp"
#include "bisite/points_io.hpp"
#include "bisite/raster.hpp"
#include "bisite/verify.hpp"

namespace {

using namespace bisite;

// Exit codes: 0 success (verify: passed), 1 verify ran but failed,
// 2 parse error (flags or points file), 3 degenerate input rejected by a
// module, 4 verification precondition failure.
constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitPrecondition = 4;

struct GridOpt {
    int width = 512;
    int height = 512;
    std::optional<std::array<double, 4>> bbox;
    bool no_jitter = false;

    GridSpec resolve(const std::vector<Point2>& sites) const {
        GridSpec g = GridSpec::fit(sites, width, height);
        if (bbox) {
            g.xmin = (*bbox)[0];
            g.ymin = (*bbox)[1];
            g.xmax = (*bbox)[2];
            g.ymax = (*bbox)[3];
        }
        g.jitter = !no_jitter;
        if (!(g.xmin < g.xmax && g.ymin < g.ymax))
            throw PreconditionError("invalid bbox: xmin < xmax and ymin < ymax required");
        return g;
    }
};

void add_grid_flags(CLI::App* cmd, GridOpt& grid) {
    cmd->add_option("--grid", [&grid](const std::vector<std::string>& vals) {
            int w = 0, h = 0;
            if (std::sscanf(vals[0].c_str(), "%dx%d", &w, &h) != 2 || w <= 0 || h <= 0)
                return false;
            grid.width = w;
            grid.height = h;
            return true;
        }, "Grid size as WxH (default 512x512)");
    cmd->add_option("--bbox", [&grid](const std::vector<std::string>& vals) {
            std::array<double, 4> b{};
            if (std::sscanf(vals[0].c_str(), "%lf,%lf,%lf,%lf", &b[0], &b[1], &b[2], &b[3]) != 4)
                return false;
            grid.bbox = b;
            return true;
        }, "Bounding box override as xmin,ymin,xmax,ymax (default: site bbox +25% per side)");
    cmd->add_flag("--no-jitter", grid.no_jitter, "Do not nudge samples off coincident sites");
}

DistanceSpec resolve_spec(const std::string& name, double c) {
    const auto kind = kind_from_name(name);
    if (!kind) throw CLI::ValidationError("--distance", "unknown distance kind '" + name + "'");
    if (*kind != DistanceKind::ParamPerimeter && c != 1.0)
        std::cerr << "warning: --c is ignored for distance kind '" << name << "'\n";
    return DistanceSpec::make(*kind, *kind == DistanceKind::ParamPerimeter ? c : 1.0);
}

std::string stem_of(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    const auto start = slash == std::string::npos ? 0 : slash + 1;
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || dot <= start) return path.substr(start);
    return path.substr(start, dot - start);
}

int run_compute(const std::string& input, const std::string& distance, double c,
                const std::string& mode_name_str, const GridOpt& grid_opt, int threads,
                std::string out_path, std::string stats_path) {
    const std::vector<Point2> sites = read_points_file(input);
    if (sites.size() < 2) throw DegenerateInput("need at least 2 sites");
    const DistanceSpec spec = resolve_spec(distance, c);
    const Mode mode = mode_name_str == "furthest" ? Mode::Furthest : Mode::Nearest;
    const GridSpec grid = grid_opt.resolve(sites);

    if (out_path.empty()) out_path = stem_of(input) + ".ppm";
    if (stats_path.empty()) stats_path = stem_of(input) + ".stats.json";

    const RasterDiagram raster = compute_raster(sites, spec, mode, grid, threads);
    const RegionStats stats = region_stats(raster);
    write_ppm_file(out_path, raster, sites);
    std::ofstream sf(stats_path);
    if (!sf) throw GeometryError("cannot open output file: " + stats_path);
    sf << stats_json(raster, stats, static_cast<int>(sites.size()));
    std::cerr << "wrote " << out_path << " and " << stats_path << " ("
              << raster.candidates.size() << " candidate pairs)\n";
    return kExitOk;
}

int run_verify(const std::string& theorem, std::optional<std::string> input, int n,
               std::uint64_t seed, const std::string& distance, double c, double multiplier,
               const GridOpt& grid_opt, int threads) {
    std::vector<Point2> sites;
    if (input)
        sites = read_points_file(*input);
    else if (theorem != "ppcirc-collinear")
        sites = gen_random_general(n, seed).sites;

    Report rep;
    if (theorem == "delaunay-pruning") {
        const DistanceSpec spec = resolve_spec(distance, c);
        rep = check_delaunay_pruning(sites, spec, grid_opt.resolve(sites), seed, threads);
    } else if (theorem == "pc-limit") {
        rep = check_pc_limit(sites, c, grid_opt.resolve(sites), seed, threads);
    } else if (theorem == "viewangle-outer") {
        rep = check_viewangle_outer(sites, grid_opt.resolve(sites), seed, threads);
    } else if (theorem == "far-field-antipodal") {
        rep = check_far_field_antipodal(sites, multiplier, seed);
        rep.n = static_cast<int>(sites.size());
    } else if (theorem == "ppcirc-collinear") {
        std::vector<Point2> pts = input ? sites : gen_collinear_unit(n).sites;
        GridOpt g = grid_opt;
        rep = check_ppcirc_collinear(static_cast<int>(pts.size()), g.resolve(pts), threads);
    } else if (theorem == "line-locus-furthest-c") {
        rep = check_line_locus_furthest_c(sites, grid_opt.resolve(sites), seed);
    } else {
        throw CLI::ValidationError("theorem", "unknown theorem id '" + theorem + "'");
    }
    std::cout << report_json(rep);
    return rep.passed ? kExitOk : kExitFailed;
}

int run_bench(int n, std::uint64_t seed, const std::string& distance, double c,
              const std::string& mode_name_str, const GridOpt& grid_opt) {
    const std::vector<Point2> sites = gen_random_general(n, seed).sites;
    const DistanceSpec spec = resolve_spec(distance, c);
    const Mode mode = mode_name_str == "furthest" ? Mode::Furthest : Mode::Nearest;
    const GridSpec grid = grid_opt.resolve(sites);

    const std::vector<SitePair> pruned = candidate_pairs(sites, spec, mode);
    std::vector<SitePair> full;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) full.push_back({i, j});

    const int max_threads = resolve_threads(0);
    const auto time_ms = [&](const std::vector<SitePair>& cand, int threads) {
        const auto t0 = std::chrono::steady_clock::now();
        const RasterDiagram r = compute_raster(sites, spec, mode, grid, cand, threads);
        const auto t1 = std::chrono::steady_clock::now();
        (void)r;
        return std::chrono::duration<double, std::milli>(t1 - t0).count();
    };

    nlohmann::json j;
    j["n"] = n;
    j["seed"] = seed;
    j["spec"] = {{"kind", kind_name(spec.kind)}};
    if (spec.uses_c()) j["spec"]["c"] = spec.c;
    j["mode"] = mode_name_str;
    j["grid"] = {{"width", grid.width}, {"height", grid.height}};
    j["pairs"] = {{"pruned", pruned.size()}, {"full", full.size()}};
    j["threads"] = {{"max", max_threads}};
    j["timingsMs"] = {{"prunedMaxThreads", time_ms(pruned, max_threads)},
                      {"fullMaxThreads", time_ms(full, max_threads)},
                      {"pruned1Thread", time_ms(pruned, 1)},
                      {"full1Thread", time_ms(full, 1)}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_gen(const std::string& kind, int n, std::uint64_t seed, double d, double spread,
            const std::string& out) {
    ConstructionSet set;
    if (kind == "two-line")
        set = gen_two_line_set(n, d, spread > 0 ? spread : d / 200.0, seed);
    else if (kind == "collinear-unit")
        set = gen_collinear_unit(n);
    else if (kind == "convex")
        set = gen_convex_position(n, seed);
    else if (kind == "random")
        set = gen_random_general(n, seed);
    else
        throw CLI::ValidationError("kind", "unknown construction '" + kind + "'");

    if (out.empty() || out == "-") {
        write_points(std::cout, set.sites);
    } else {
        write_points_file(out, set.sites);
        std::cerr << "wrote " << set.sites.size() << " sites (" << provenance_name(set.provenance)
                  << ") to " << out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-site Voronoi diagrams under geometric distance functions"};
    app.require_subcommand(1);

    // compute
    std::string input, distance = "param-perimeter", mode = "nearest", out_path, stats_path;
    double c = 1.0;
    int threads = 0;
    GridOpt grid;
    CLI::App* compute = app.add_subcommand("compute", "Rasterize a 2-site diagram to PPM + stats JSON");
    compute->add_option("input", input, "Points file (x y per line, # comments)")->required();
    compute->add_option("--distance", distance,
                        "circumradius|containing|viewangle|inradius|ccc-dist|ccc-area|ccc-perimeter|param-perimeter")
        ->required();
    compute->add_option("--c", c, "Parameter c for param-perimeter (>= -1)");
    compute->add_option("--mode", mode, "nearest|furthest")
        ->check(CLI::IsMember({"nearest", "furthest"}));
    compute->add_option("--threads", threads, "Worker threads (0 = auto; BISITE_THREADS overrides)");
    compute->add_option("--out", out_path, "Output PPM path (default <input stem>.ppm)");
    compute->add_option("--stats", stats_path, "Output stats JSON path (default <input stem>.stats.json)");
    add_grid_flags(compute, grid);

    // verify
    std::string theorem;
    std::optional<std::string> verify_input;
    int vn = 12;
    std::uint64_t seed = 0;
    std::string vdistance = "containing";
    double vc = 1.0, multiplier = 1000.0;
    int vthreads = 0;
    GridOpt vgrid;
    CLI::App* verify = app.add_subcommand("verify", "Run a structural check and print its JSON report");
    verify->add_option("theorem", theorem,
                       "delaunay-pruning|pc-limit|viewangle-outer|far-field-antipodal|ppcirc-collinear|line-locus-furthest-c")
        ->required();
    verify->add_option("--input", verify_input, "Points file (default: seeded random sites)");
    verify->add_option("--n", vn, "Number of generated sites");
    verify->add_option("--seed", seed, "Seed for generated sites");
    verify->add_option("--distance", vdistance, "For delaunay-pruning: containing|param-perimeter");
    verify->add_option("--c", vc, "c for param-perimeter / pc-limit");
    verify->add_option("--multiplier", multiplier, "Far-field radius multiplier");
    verify->add_option("--threads", vthreads, "Worker threads (0 = auto)");
    add_grid_flags(verify, vgrid);

    // bench
    int bn = 30;
    std::uint64_t bseed = 0;
    std::string bdistance = "containing", bmode = "nearest";
    double bc = 1.0;
    GridOpt bgrid;
    CLI::App* bench = app.add_subcommand("bench", "Time pruned vs full candidates and 1 vs max threads");
    bench->add_option("--n", bn, "Number of generated sites");
    bench->add_option("--seed", bseed, "Seed");
    bench->add_option("--distance", bdistance, "Distance kind");
    bench->add_option("--c", bc, "c for param-perimeter");
    bench->add_option("--mode", bmode, "nearest|furthest")
        ->check(CLI::IsMember({"nearest", "furthest"}));
    add_grid_flags(bench, bgrid);

    // gen
    std::string gkind, gout;
    int gn = 8;
    std::uint64_t gseed = 0;
    double gd = 10.0, gspread = 0.0;
    CLI::App* gen = app.add_subcommand("gen", "Generate a construction and write it as a points file");
    gen->add_option("kind", gkind, "two-line|collinear-unit|convex|random")->required();
    gen->add_option("--n", gn, "Number of sites");
    gen->add_option("--seed", gseed, "Seed");
    gen->add_option("--d", gd, "two-line: distance between the lines");
    gen->add_option("--spread", gspread, "two-line: intra-line spread (default d/200)");
    gen->add_option("--out", gout, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (*compute)
            return run_compute(input, distance, c, mode, grid, threads, out_path, stats_path);
        if (*verify)
            return run_verify(theorem, verify_input, vn, seed, vdistance, vc, multiplier, vgrid,
                              vthreads);
        if (*bench) return run_bench(bn, bseed, bdistance, bc, bmode, bgrid);
        if (*gen) return run_gen(gkind, gn, gseed, gd, gspread, gout);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NoUniqueClosestPair& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    }
    return kExitOk;
}
