// Command-line harness: fat Cantor set tables, measure-primitive
// sampling, constructed-function sampling, and the named verification
// suites. Exit codes: 0 success, 1 criterion failure, 2 usage or
// configuration error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lipone/estimators.hpp"
#include "lipone/measure_primitive.hpp"
#include "lipone/radial.hpp"
#include "lipone/set_json.hpp"
#include "lipone/suites.hpp"
#include "lipone/tent.hpp"

namespace {

using namespace lipone;

nlohmann::json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return nlohmann::json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open JSON file '" + arg + "'");
    return nlohmann::json::parse(in);
}

struct GridArg {
    double lo = 0.0, hi = 0.0, h = 0.0;
};

GridArg parse_grid(const std::string& s) {
    GridArg g;
    char extra;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf%c", &g.lo, &g.hi, &g.h, &extra) != 3)
        throw std::invalid_argument("--grid expects lo,hi,h");
    if (!(g.lo < g.hi) || !(g.h > 0)) throw std::invalid_argument("--grid expects lo < hi, h > 0");
    return g;
}

std::pair<double, int> parse_radii(const std::string& s) {
    double r = 0.0;
    int k = 0;
    char extra;
    if (std::sscanf(s.c_str(), "%lf,%d%c", &r, &k, &extra) != 2)
        throw std::invalid_argument("--radii expects R,K");
    return {r, k};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << content;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_cantor(const std::string& set_arg, int stage, const std::string& out_dir) {
    const SetSpec spec = parse_set_spec(load_json_arg(set_arg));
    const auto* c = std::get_if<CantorSet>(&spec);
    if (!c) throw std::invalid_argument("cantor: --set must describe a cantor set");
    if (stage < 0 || stage > c->max_stage())
        throw std::invalid_argument("cantor: --stage out of range for max_stage");

    const IntervalSet approx = c->stage(stage);
    std::ostringstream table;
    table << "stage,intervals,measure\n";
    for (int n = 0; n <= stage; ++n)
        table << n << "," << (std::int64_t{1} << n) << "," << fmt17(c->stage_measure(n)) << "\n";

    std::cout << "stage " << stage << ": " << approx.size()
              << " intervals, measure " << fmt17(approx.measure()) << "\n";
    std::cout << table.str();
    if (!out_dir.empty()) {
        write_file(std::filesystem::path(out_dir) / "stage.json",
                   to_json(approx).dump(2) + "\n");
        write_file(std::filesystem::path(out_dir) / "measures.csv", table.str());
    }
    return 0;
}

void write_grid_files(const GridFunction& g, double error_bound,
                      const std::filesystem::path& dir, const std::string& name) {
    auto header = g.header_json();
    header["error_bound"] = error_bound;
    write_file(dir / (name + ".json"), header.dump(2) + "\n");
    std::ostringstream csv;
    g.write_csv(csv);
    write_file(dir / (name + ".csv"), csv.str());
}

int cmd_primitive(const std::string& set_arg, double base, const GridArg& grid,
                  std::optional<int> stage, const std::string& out_dir) {
    const SetSpec spec = parse_set_spec(load_json_arg(set_arg));
    std::optional<MeasurePrimitive> prim;
    if (const auto* iv = std::get_if<IntervalSet>(&spec)) {
        prim.emplace(*iv, base);
    } else {
        const auto& c = std::get<CantorSet>(spec);
        prim.emplace(c, stage.value_or(c.max_stage()), base);
    }
    const GridFunction g =
        GridFunction::sample_1d(grid.lo, grid.hi, grid.h, [&](double t) { return prim->eval(t); });
    std::cout << "sampled " << g.num_points() << " points, bracket width "
              << fmt17(prim->error_bound()) << "\n";
    if (out_dir.empty()) throw std::invalid_argument("primitive: --out is required");
    write_grid_files(g, prim->error_bound(), out_dir, "primitive");
    return 0;
}

int cmd_sample(const std::string& fn, const std::string& set_arg, const std::string& balls_arg,
               double base, const std::vector<GridArg>& grids, std::optional<int> stage,
               const std::string& out_dir) {
    if (grids.empty()) throw std::invalid_argument("sample: --grid is required");
    if (out_dir.empty()) throw std::invalid_argument("sample: --out is required");
    const GridArg gx = grids[0];
    const GridArg gy = grids.size() > 1 ? grids[1] : grids[0];

    if (fn == "primitive") {
        return cmd_primitive(set_arg, base, gx, stage, out_dir);
    }
    if (fn == "tentsum") {
        if (balls_arg.empty()) throw std::invalid_argument("sample: tentsum needs --balls");
        const TentSum tent{BallFamily::from_json(load_json_arg(balls_arg))};
        const GridFunction g =
            GridFunction::sample_2d({gx.lo, gy.lo}, {gx.hi, gy.hi}, gx.h,
                                    [&](double x, double y) { return tent.eval(Vec2{x, y}); });
        std::cout << "sampled " << g.num_points() << " points\n";
        write_grid_files(g, 0.0, out_dir, "tentsum");
        return 0;
    }
    if (fn == "radial") {
        const SetSpec spec = parse_set_spec(load_json_arg(set_arg));
        const auto* c = std::get_if<CantorSet>(&spec);
        if (!c) throw std::invalid_argument("sample: radial needs a cantor --set");
        const RadialComposition f{MeasurePrimitive(*c, stage.value_or(c->max_stage()), base)};
        const GridFunction g =
            GridFunction::sample_2d({gx.lo, gy.lo}, {gx.hi, gy.hi}, gx.h,
                                    [&](double x, double y) { return f.eval(Vec2{x, y}); });
        std::cout << "sampled " << g.num_points() << " points, bracket width "
                  << fmt17(f.error_bound()) << "\n";
        write_grid_files(g, f.error_bound(), out_dir, "radial");
        return 0;
    }
    throw std::invalid_argument("sample: unknown --fn '" + fn + "'");
}

int cmd_verify(const std::string& suite, const suites::SuiteConfig& cfg) {
    const suites::SuiteResult result = suites::run_suite(suite, cfg);
    for (const auto& c : result.report.at("criteria")) {
        std::cout << (c.at("pass").get<bool>() ? "  [pass] " : "  [FAIL] ")
                  << c.at("name").get<std::string>() << "\n";
    }
    std::cout << "suite " << result.name << ": " << (result.pass ? "PASS" : "FAIL") << "\n";
    if (!cfg.out_dir.empty())
        std::cout << "report: " << (std::filesystem::path(cfg.out_dir) / "report.json").string()
                  << "\n";
    return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lipschitz-derivative toolkit: fat Cantor sets, measure primitives, "
                 "discrete lip/Lip estimators, quasi-density checks"};
    app.require_subcommand(1);

    std::string set_arg, balls_arg, out_dir, suite_name, fn_name;
    std::vector<std::string> grid_args;
    std::string radii_arg;
    double base = 0.0, tol = -1.0;
    int stage = -1, budget = -1, resolution = -1, threads = 0;
    std::uint64_t seed = 20260809;

    auto* cantor = app.add_subcommand("cantor", "stage intervals and per-stage measure table");
    cantor->add_option("--set", set_arg, "set spec (JSON file or inline)")->required();
    cantor->add_option("--stage", stage, "stage to materialize")->required();
    cantor->add_option("--out", out_dir, "output directory");

    auto* primitive = app.add_subcommand("primitive", "sample the measure primitive of a set");
    primitive->add_option("--set", set_arg)->required();
    primitive->add_option("--base", base, "base point a (default 0)");
    primitive->add_option("--grid", grid_args, "grid as lo,hi,h")->required();
    primitive->add_option("--stage", stage, "evaluation stage for cantor sets");
    primitive->add_option("--out", out_dir)->required();

    auto* sample = app.add_subcommand("sample", "sample a constructed function onto a grid");
    sample->add_option("--fn", fn_name, "primitive | tentsum | radial")->required();
    sample->add_option("--set", set_arg);
    sample->add_option("--balls", balls_arg, "ball family JSON (file or inline)");
    sample->add_option("--base", base);
    sample->add_option("--grid", grid_args, "grid lo,hi,h (repeat for the y axis)")->required();
    sample->add_option("--stage", stage);
    sample->add_option("--out", out_dir)->required();

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite_name, "one of the named suites")->required();
    verify->add_option("--set", set_arg, "optional set override");
    verify->add_option("--grid", grid_args);
    verify->add_option("--radii", radii_arg, "sweep as R,K");
    verify->add_option("--stage", stage);
    verify->add_option("--budget", budget);
    verify->add_option("--resolution", resolution);
    verify->add_option("--tol", tol);
    verify->add_option("--seed", seed);
    verify->add_option("--threads", threads);
    verify->add_option("--out", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cantor->parsed()) return cmd_cantor(set_arg, stage, out_dir);
        std::vector<GridArg> grids;
        for (const auto& s : grid_args) grids.push_back(parse_grid(s));
        if (primitive->parsed()) {
            return cmd_primitive(set_arg, base, grids.at(0),
                                 stage >= 0 ? std::optional<int>(stage) : std::nullopt, out_dir);
        }
        if (sample->parsed()) {
            return cmd_sample(fn_name, set_arg, balls_arg, base, grids,
                              stage >= 0 ? std::optional<int>(stage) : std::nullopt, out_dir);
        }
        suites::SuiteConfig cfg;
        cfg.out_dir = out_dir;
        cfg.seed = seed;
        cfg.threads = threads;
        if (!set_arg.empty()) cfg.set = parse_set_spec(load_json_arg(set_arg));
        if (stage >= 0) cfg.stage = stage;
        if (!grids.empty()) cfg.grid_h = grids[0].h;
        if (!radii_arg.empty()) {
            const auto [r, k] = parse_radii(radii_arg);
            cfg.radii_R = r;
            cfg.radii_K = k;
        }
        if (tol >= 0) cfg.tol = tol;
        if (budget >= 0) cfg.budget = budget;
        if (resolution >= 0) cfg.resolution = resolution;
        return cmd_verify(suite_name, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
