#include "lipone/suites.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "lipone/connectivity.hpp"
#include "lipone/density.hpp"
#include "lipone/estimators.hpp"
#include "lipone/measure_primitive.hpp"
#include "lipone/packing.hpp"
#include "lipone/radial.hpp"
#include "lipone/rng.hpp"
#include "lipone/tent.hpp"

namespace lipone::suites {

using nlohmann::ordered_json;

namespace {

CantorSet canonical_cantor(int max_stage) {
    return CantorSet(AlphaRule::geometric(0.25, 0.25), max_stage);
}

struct CriteriaLog {
    ordered_json items = ordered_json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, ordered_json details = {}) {
        ordered_json e;
        e["name"] = name;
        e["pass"] = pass;
        if (!details.is_null()) e["details"] = std::move(details);
        items.push_back(std::move(e));
        all_pass = all_pass && pass;
    }
};

std::int64_t field_ordering_violations(const LipField& field) {
    std::int64_t bad = 0;
    const std::int64_t n = field.num_points();
    for (std::size_t k = 0; k < field.radii.size(); ++k)
        for (std::int64_t i = 0; i < n; ++i) {
            const double little = field.at_little(k, i);
            const double big = field.at_big(k, i);
            const double llip = field.at_llip(k, i);
            if (!(little <= big && big <= llip)) ++bad;
        }
    return bad;
}

std::int64_t estimate_ordering_violations(const std::vector<LipEstimate>& es) {
    std::int64_t bad = 0;
    for (const LipEstimate& e : es)
        for (std::size_t k = 0; k < e.radii.size(); ++k)
            if (!(e.little_lip_at_r[k] <= e.big_lip_at_r[k] &&
                  e.big_lip_at_r[k] <= e.llip_at_r[k]))
                ++bad;
    return bad;
}

void write_artifact(const std::string& out_dir, const std::string& name,
                    const std::function<void(std::ostream&)>& body) {
    if (out_dir.empty()) return;
    std::filesystem::create_directories(out_dir);
    std::ofstream os(std::filesystem::path(out_dir) / name, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write artifact " + name + " under " + out_dir);
    body(os);
}

void finalize(SuiteResult& result, const SuiteConfig& cfg, CriteriaLog& log,
              ordered_json config_echo) {
    result.pass = log.all_pass;
    result.report["suite"] = result.name;
    result.report["pass"] = result.pass;
    result.report["seed"] = cfg.seed;
    result.report["config"] = std::move(config_echo);
    result.report["criteria"] = std::move(log.items);
    result.report["ordering_violations"] = result.ordering_violations;
    write_artifact(cfg.out_dir, "report.json",
                   [&](std::ostream& os) { os << result.report.dump(2) << "\n"; });
}

// Set queries for the one-set check, from either representation.
SetQueries queries_for(const IntervalSet& set) {
    return SetQueries{[set](double x, double) { return set.contains(x); },
                      [set](double x, double) { return set.distance(x); }};
}

SetQueries queries_for(const CantorSet& set, int stage) {
    const IntervalSet approx = set.stage(stage);
    return SetQueries{
        [set, stage](double x, double) { return set.contains(x, stage) == Membership::In; },
        [approx](double x, double) { return approx.distance(x); }};
}

// ---------------------------------------------------------------- thm4.1

SuiteResult suite_thm41(const SuiteConfig& cfg) {
    SuiteResult result;
    result.name = "thm4.1";

    const int stage = cfg.stage.value_or(14);
    const double h = cfg.grid_h.value_or(std::ldexp(1.0, -14));
    const double R = cfg.radii_R.value_or(0.25);
    const int K = cfg.radii_K.value_or(10);
    const double tol = cfg.tol.value_or(0.05);
    const std::vector<double> radii = geometric_radii(R, K);

    SetSpec set = cfg.set.value_or(SetSpec{canonical_cantor(std::max(stage, 14))});

    std::optional<MeasurePrimitive> prim;
    std::optional<SetQueries> queries;
    if (const auto* iv = std::get_if<IntervalSet>(&set)) {
        prim.emplace(*iv, 0.0);
        queries = queries_for(*iv);
    } else {
        const auto& c = std::get<CantorSet>(set);
        prim.emplace(c, stage, 0.0);
        queries = queries_for(c, stage);
    }

    const GridFunction f =
        GridFunction::sample_1d(-0.25, 1.25, h, [&](double t) { return prim->eval(t); });
    const LipField field = lip_field(f, radii, cfg.threads);
    const LipOneReport rep = check_lip_one_set(f, *queries, radii, tol, &field);

    CriteriaLog log;
    log.add("global-lipschitz", rep.global_lipschitz <= 1.0 + 1e-9,
            {{"max_pair_ratio", rep.global_lipschitz}, {"bound", 1.0 + 1e-9}});
    log.add("witness-points-llip-high", rep.n_in > 0 && rep.frac_in_pass() == 1.0,
            {{"n_witness", rep.n_in},
             {"n_pass", rep.n_in_pass},
             {"min_llip_final", rep.in_min_llip},
             {"threshold", 1.0 - tol}});

    // points farther than the largest radius from the set (none exist on
    // this grid for the canonical configuration; reported as vacuous)
    log.add("far-points-llip-zero", rep.frac_out_pass() == 1.0,
            {{"n_far", rep.n_out},
             {"max_llip_final", rep.out_max_llip},
             {"vacuous", rep.n_out == 0}});

    // sharper variant: beyond the smallest radius the sampled primitive
    // is locally constant, so the final estimate must vanish outright
    double supp_max = 0.0;
    std::int64_t supp_n = 0;
    for (std::int64_t i = 0; i < f.num_points(); ++i) {
        if (queries->distance(f.x(int(i)), 0.0) > radii.back()) {
            ++supp_n;
            supp_max = std::max(supp_max, field.llip_final[i]);
        }
    }
    log.add("past-smallest-radius-llip-zero", supp_n > 0 && supp_max <= 1e-9,
            {{"n_points", supp_n}, {"max_llip_final", supp_max}});

    result.ordering_violations = field_ordering_violations(field);
    log.add("estimator-ordering", result.ordering_violations == 0,
            {{"violations", result.ordering_violations}});

    write_artifact(cfg.out_dir, "points.csv",
                   [&](std::ostream& os) { write_field_csv(os, f, field); });

    finalize(result, cfg, log,
             {{"stage", stage},
              {"grid", {{"lo", -0.25}, {"hi", 1.25}, {"h", h}}},
              {"radii", radii},
              {"tol", tol},
              {"n_grid_points", f.num_points()}});
    return result;
}

// ------------------------------------------------- thm4.2 counterexample

SuiteResult suite_thm42(const SuiteConfig& cfg) {
    SuiteResult result;
    result.name = "thm4.2-counterexample";

    IntervalSet set = IntervalSet::from_pairs({{0, 0}, {1, 2}});
    if (cfg.set) {
        const auto* iv = std::get_if<IntervalSet>(&*cfg.set);
        if (!iv) throw std::invalid_argument("thm4.2-counterexample needs an interval set");
        set = *iv;
    }

    // sample every component: endpoints plus midpoints of fat pieces
    std::vector<double> samples;
    for (const Interval& iv : set.intervals()) {
        samples.push_back(iv.lo);
        if (!iv.is_point()) {
            samples.push_back((iv.lo + iv.hi) / 2.0);
            samples.push_back(iv.hi);
        }
    }
    const std::vector<double> qd_radii{0.5, 0.25};
    const QuasiDenseReport qd = is_quasi_dense(set, samples, qd_radii);

    CriteriaLog log;
    const bool refuted = qd.verdict == QuasiDenseVerdict::Refuted && qd.witness.has_value();
    log.add("quasi-density-refuted", refuted, to_json(qd));

    const bool default_set = !cfg.set.has_value();
    if (default_set)
        log.add("witness-is-zero-at-half-radius",
                qd.witness && qd.witness->first == 0.0 && qd.witness->second == 0.5);

    // the measure primitive is flat around the witness point
    const double h = cfg.grid_h.value_or(std::ldexp(1.0, -10));
    const std::vector<double> radii = geometric_radii(cfg.radii_R.value_or(1.0),
                                                      cfg.radii_K.value_or(8));
    const MeasurePrimitive prim(set, 0.0);
    const GridFunction f =
        GridFunction::sample_1d(-1.0, 3.0, h, [&](double t) { return prim.eval(t); });

    std::vector<LipEstimate> estimates;
    if (qd.witness) {
        const LipEstimate e = lip_estimate(f, f.index_of(qd.witness->first), radii);
        bool all_zero = e.llip_final == 0.0;
        for (double v : e.llip_at_r) all_zero = all_zero && v == 0.0;
        log.add("llip-vanishes-at-witness", all_zero,
                {{"x", qd.witness->first}, {"llip_final", e.llip_final}});
        estimates.push_back(e);
    } else {
        log.add("llip-vanishes-at-witness", false, {{"error", "no witness found"}});
    }

    const LipField field = lip_field(f, radii, cfg.threads);
    result.ordering_violations =
        field_ordering_violations(field) + estimate_ordering_violations(estimates);
    log.add("estimator-ordering", result.ordering_violations == 0,
            {{"violations", result.ordering_violations}});

    write_artifact(cfg.out_dir, "points.csv",
                   [&](std::ostream& os) { write_estimates_csv(os, f, estimates); });

    finalize(result, cfg, log,
             {{"set", to_json(set)},
              {"samples", samples},
              {"qd_radii", qd_radii},
              {"grid", {{"lo", -1.0}, {"hi", 3.0}, {"h", h}}},
              {"radii", radii}});
    return result;
}

// ------------------------------------------------------- prop3.3 cantor

SuiteResult suite_prop33(const SuiteConfig& cfg) {
    SuiteResult result;
    result.name = "prop3.3-cantor";

    CantorSet set = canonical_cantor(20);
    bool default_set = true;
    if (cfg.set) {
        const auto* c = std::get_if<CantorSet>(&*cfg.set);
        if (!c) throw std::invalid_argument("prop3.3-cantor needs a cantor set");
        set = *c;
        default_set = false;
    }
    const int stage = std::min(cfg.stage.value_or(set.max_stage()), set.max_stage());
    const int sample_stage = std::min(6, stage);

    std::vector<double> samples;
    const IntervalSet coarse = set.stage(sample_stage);
    for (const Interval& iv : coarse.intervals()) {
        samples.push_back(iv.lo);
        samples.push_back(iv.hi);
    }
    const std::vector<double> qd_radii{0.25, 0.0625, 0.015625};
    const QuasiDenseReport qd = is_quasi_dense(set, stage, samples, qd_radii);

    CriteriaLog log;
    bool all_positive = true;
    for (const auto& t : qd.tests) all_positive = all_positive && t.mu_lo > 0.0;
    log.add("endpoint-samples-quasi-dense", qd.verdict == QuasiDenseVerdict::Evidence &&
                                                all_positive && qd.undecided_members == 0,
            {{"n_samples", samples.size()},
             {"n_tests", qd.tests.size()},
             {"all_windows_positive", all_positive}});

    // witness balls against the closed-form ratio
    const double m_total = set.measure().first;
    auto formula_ratio = [&](int n) {
        double partial = 0.0, w = 1.0;
        for (int j = 1; j <= n; ++j, w *= 2.0) partial += w * set.rule().alpha(j);
        return m_total / (1.0 - partial);
    };
    const int levels = 12;
    double worst_gap = 0.0;
    std::vector<WitnessBall> at_zero = witness_balls(set, 0.0, levels);
    for (const WitnessBall& b : at_zero) {
        // level n lands on stage n for this family
        worst_gap = std::max(worst_gap, std::abs(b.ratio_lo - formula_ratio(b.level)));
    }
    log.add("witness-ratios-match-closed-form", worst_gap <= 1e-12,
            {{"levels", levels}, {"worst_gap", worst_gap}, {"balls", to_json(at_zero)}});

    if (default_set) {
        log.add("level-10-ratio-anchor",
                std::abs(at_zero[9].ratio_lo - 0.9990243902439024) <= 1e-12,
                {{"ratio", at_zero[9].ratio_lo}});
        const auto at_end = witness_balls(set, 0.375, levels);
        double gap = 0.0;
        for (int i = 0; i < levels; ++i)
            gap = std::max(gap, std::abs(at_end[i].ratio_lo - at_zero[i].ratio_lo));
        log.add("self-similar-across-endpoints", gap <= 1e-12, {{"worst_gap", gap}});
    }

    std::vector<double> prof_radii;
    for (int n = 1; n <= std::min(10, stage); ++n) prof_radii.push_back(set.stage_length(n));
    const DensityProfile prof = density_profile(set, stage, 0.0, prof_radii);
    double prof_gap = 0.0;
    for (std::size_t k = 0; k < prof_radii.size(); ++k)
        prof_gap = std::max(prof_gap,
                            std::abs(prof.ratio_lo[k] - 0.5 * formula_ratio(int(k) + 1)));
    log.add("density-profile-at-zero", prof_gap <= 1e-12,
            {{"worst_gap", prof_gap}, {"profile", to_json(prof)}});

    write_artifact(cfg.out_dir, "witness_balls.csv", [&](std::ostream& os) {
        os << "level,center,radius,ratio_lo,ratio_hi\n";
        char buf[160];
        for (const WitnessBall& b : at_zero) {
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", b.level, b.center,
                          b.radius, b.ratio_lo, b.ratio_hi);
            os << buf;
        }
    });
    write_artifact(cfg.out_dir, "density.csv", [&](std::ostream& os) {
        os << "x,r,ratio_lo,ratio_hi\n";
        char buf[160];
        for (std::size_t k = 0; k < prof.radii.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", prof.x, prof.radii[k],
                          prof.ratio_lo[k], prof.ratio_hi[k]);
            os << buf;
        }
    });

    finalize(result, cfg, log,
             {{"stage", stage}, {"sample_stage", sample_stage}, {"qd_radii", qd_radii}});
    return result;
}

// -------------------------------------------------- sec5 cantor square

SuiteResult suite_sec5(const SuiteConfig& cfg) {
    SuiteResult result;
    result.name = "sec5-cantor-square";

    const CantorSet set = canonical_cantor(10);
    CriteriaLog log;

    ordered_json stages = ordered_json::array();
    bool all_connected = true;
    for (int n = 1; n <= 8; ++n) {
        const int resolution = cfg.resolution.value_or(1 << (n + 3));
        const ConnectivityReport rep = complement_connected_product(set.stage(n), resolution);
        all_connected = all_connected && rep.components == 1 && rep.stable;
        ordered_json row = to_json(rep);
        row["stage"] = n;
        stages.push_back(std::move(row));
    }
    log.add("complement-connected-at-every-stage", all_connected, {{"stages", stages}});

    const ConnectivityReport annulus =
        complement_connected_annulus(Vec2{0.5, 0.5}, 0.2, 0.45, 64);
    log.add("annulus-control-two-components", annulus.components == 2 && annulus.stable,
            to_json(annulus));

    // square-window density evidence for the product set
    std::vector<double> radii;
    for (int n : {2, 4, 6}) radii.push_back(set.stage_length(n));
    const DensityProfile prof = density_profile_product(set, 10, Vec2{0, 0}, radii);
    bool positive = true;
    for (double lo : prof.ratio_lo) positive = positive && lo > 0.0;
    log.add("product-density-positive", positive, to_json(prof));

    finalize(result, cfg, log, {{"stages", "1..8"}, {"resolution_rule", "2^(n+3)"}});
    return result;
}

// -------------------------------------------------------- thm6.1 tent

SuiteResult suite_thm61(const SuiteConfig& cfg) {
    SuiteResult result;
    result.name = "thm6.1-tent";

    const int budget = cfg.budget.value_or(1000);
    const RegionOracle region = rect_region(Vec2{0, 0}, Vec2{1, 1});
    const PackResult packed = pack_regular_closed(region, BallBasisSpec{1, 256}, budget);

    CriteriaLog log;
    auto prefix_family = [&](int n) {
        BallFamily fam;
        const int m = std::min<int>(n, int(packed.family.size()));
        for (int i = 0; i < m; ++i) fam.push(packed.family.balls()[i]);
        return fam;
    };

    const int coverage_res = 1024;
    const double d10 = coverage_deficit(region, prefix_family(10), coverage_res);
    const double d100 = coverage_deficit(region, prefix_family(100), coverage_res);
    const double dfull = coverage_deficit(region, packed.family, coverage_res);
    log.add("coverage-deficit-strictly-decreasing",
            int(packed.family.size()) >= std::min(budget, 101) && d10 > d100 && d100 > dfull &&
                dfull == packed.deficit,
            {{"n_balls", packed.family.size()},
             {"deficit_10", d10},
             {"deficit_100", d100},
             {"deficit_full", dfull},
             {"coverage_resolution", coverage_res}});

    const BallFamily fam100 = prefix_family(100);
    const TentSum tent(fam100);

    // interior invariants of the accepted family
    bool inside_ok = true;
    for (const Ball& b : fam100.balls())
        inside_ok = inside_ok && region.dist_to_complement(b.center) >= b.radius;
    log.add("accepted-balls-inside-interior", inside_ok);

    Rng rng(cfg.seed);
    int lip_failures = 0;
    double worst_excess = 0.0;
    const int n_pairs = 10000;
    for (int t = 0; t < n_pairs; ++t) {
        const Vec2 p{rng.uniform(-0.25, 1.25), rng.uniform(-0.25, 1.25)};
        const Vec2 q{rng.uniform(-0.25, 1.25), rng.uniform(-0.25, 1.25)};
        const double excess = std::abs(tent.eval(p) - tent.eval(q)) - dist(p, q);
        worst_excess = std::max(worst_excess, excess);
        if (excess > 1e-12) ++lip_failures;
    }
    log.add("tent-sum-one-lipschitz-random-pairs", lip_failures == 0,
            {{"pairs", n_pairs}, {"worst_excess", worst_excess}, {"slack", 1e-12}});

    const double h = cfg.grid_h.value_or(std::ldexp(1.0, -6));
    const std::vector<double> radii =
        geometric_radii(cfg.radii_R.value_or(0.125), cfg.radii_K.value_or(1));
    const double tol = cfg.tol.value_or(0.05);
    const GridFunction f = GridFunction::sample_2d(
        {-0.25, -0.25}, {1.25, 1.25}, h, [&](double x, double y) { return tent.eval(Vec2{x, y}); });
    const LipField field = lip_field(f, radii, cfg.threads);

    const double band = radii.front();
    SetQueries q{[&fam100, band](double x, double y) {
                     const int id = fam100.find_open(Vec2{x, y});
                     if (id < 0) return false;
                     const Ball& b = fam100.balls()[id];
                     return b.radius - dist(Vec2{x, y}, b.center) > band;
                 },
                 [&fam100](double x, double y) { return fam100.distance(Vec2{x, y}); }};
    const LipOneReport rep = check_lip_one_set(f, q, radii, tol, &field);

    log.add("llip-high-deep-inside-balls", rep.n_in > 0 && rep.frac_in_pass() == 1.0,
            {{"n_deep_inside", rep.n_in},
             {"min_llip_final", rep.in_min_llip},
             {"threshold", 1.0 - tol}});
    log.add("llip-low-beyond-largest-radius",
            rep.n_out > 0 && rep.frac_out_pass() == 1.0 && rep.out_max_llip <= tol,
            {{"n_far_outside", rep.n_out}, {"max_llip_final", rep.out_max_llip}});

    result.ordering_violations = field_ordering_violations(field);
    log.add("estimator-ordering", result.ordering_violations == 0,
            {{"violations", result.ordering_violations}});

    write_artifact(cfg.out_dir, "balls.json",
                   [&](std::ostream& os) { os << fam100.to_json().dump(2) << "\n"; });
    write_artifact(cfg.out_dir, "points.csv",
                   [&](std::ostream& os) { write_field_csv(os, f, field); });

    finalize(result, cfg, log,
             {{"budget", budget},
              {"basis", {{"k_min", 1}, {"k_max", 256}}},
              {"grid", {{"lo", -0.25}, {"hi", 1.25}, {"h", h}}},
              {"radii", radii},
              {"tol", tol}});
    return result;
}

// ------------------------------------------------------ final example

SuiteResult suite_final_example(const SuiteConfig& cfg) {
    SuiteResult result;
    result.name = "final-example";

    const int stage = cfg.stage.value_or(14);
    const CantorSet set = canonical_cantor(std::max(stage, 14));
    const RadialComposition f2{MeasurePrimitive(set, stage, 0.0)};

    const double h = cfg.grid_h.value_or(std::ldexp(1.0, -9));
    const std::vector<double> radii = geometric_radii(cfg.radii_R.value_or(std::ldexp(1.0, -4)),
                                                      cfg.radii_K.value_or(3));
    const GridFunction f = GridFunction::sample_2d(
        {-1.25, -1.25}, {1.25, 1.25}, h, [&](double x, double y) { return f2.eval(Vec2{x, y}); });

    CriteriaLog log;

    const double va = f2.eval(Vec2{0.6, 0.8});
    const double vb = f2.eval(Vec2{1.0, 0.0});
    log.add("rotational-invariance-exact", va == vb, {{"f(0.6,0.8)", va}, {"f(1,0)", vb}});
    log.add("norm-one-value-in-bracket", std::abs(vb - 0.5) <= f2.error_bound(),
            {{"value", vb}, {"error_bound", f2.error_bound()}});

    std::vector<LipEstimate> estimates;
    auto axis_points = [&](double t) {
        std::vector<GridIndex> pts{f.index_of(t, 0.0)};
        if (t != 0.0) {
            pts.push_back(f.index_of(-t, 0.0));
            pts.push_back(f.index_of(0.0, t));
            pts.push_back(f.index_of(0.0, -t));
        }
        return pts;
    };

    // gap annuli: centers of removed gaps wide enough that the smallest
    // ball stays strictly inside (widths alpha_1 = 1/4 and alpha_2 = 1/16
    // against a smallest radius of 2^-7)
    const std::vector<double> gap_centers{0.5, 0.1875, 0.8125};
    double gap_max = 0.0;
    for (double g : gap_centers)
        for (const GridIndex& p : axis_points(g)) {
            estimates.push_back(lip_estimate(f, p, radii));
            gap_max = std::max(gap_max, estimates.back().llip_final);
        }
    // diagonal samples with norm near the center of the widest gap
    const int origin_idx = grid_steps(-1.25, 0.0, h);
    const int diag = int(std::lround(0.5 / (h * std::sqrt(2.0))));
    if (std::abs(diag * h * std::sqrt(2.0) - 0.5) <= 2.0 * h) {
        for (const GridIndex& p : {GridIndex{origin_idx + diag, origin_idx + diag},
                                   GridIndex{origin_idx - diag, origin_idx + diag}}) {
            estimates.push_back(lip_estimate(f, p, radii));
            gap_max = std::max(gap_max, estimates.back().llip_final);
        }
    }
    log.add("llip-low-on-gap-annuli", gap_max <= 0.05,
            {{"n_points", estimates.size()}, {"max_llip_final", gap_max}, {"bound", 0.05}});

    // stage-4 endpoints on the sampling lattice, four axis directions each
    const IntervalSet s4 = set.stage(4);
    std::vector<double> endpoint_ts;
    for (int idx : {0, 5, 10, 15}) {
        endpoint_ts.push_back(s4.intervals()[idx].lo);
        endpoint_ts.push_back(s4.intervals()[idx].hi);
    }
    double end_min = 2.0;
    std::size_t n_end = 0;
    for (double t : endpoint_ts)
        for (const GridIndex& p : axis_points(t)) {
            estimates.push_back(lip_estimate(f, p, radii));
            end_min = std::min(end_min, estimates.back().llip_final);
            ++n_end;
        }
    log.add("llip-high-at-cantor-radii", end_min >= 0.9,
            {{"n_points", n_end}, {"min_llip_final", end_min}, {"bound", 0.9}});

    result.ordering_violations = estimate_ordering_violations(estimates);
    log.add("estimator-ordering", result.ordering_violations == 0,
            {{"violations", result.ordering_violations}});

    write_artifact(cfg.out_dir, "points.csv",
                   [&](std::ostream& os) { write_estimates_csv(os, f, estimates); });

    finalize(result, cfg, log,
             {{"stage", stage},
              {"grid", {{"lo", -1.25}, {"hi", 1.25}, {"h", h}}},
              {"radii", radii},
              {"gap_centers", gap_centers},
              {"endpoint_radii", endpoint_ts}});
    return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"thm4.1",         "thm4.2-counterexample",
                                                "prop3.3-cantor", "sec5-cantor-square",
                                                "thm6.1-tent",    "final-example"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "thm4.1") return suite_thm41(cfg);
    if (name == "thm4.2-counterexample") return suite_thm42(cfg);
    if (name == "prop3.3-cantor") return suite_prop33(cfg);
    if (name == "sec5-cantor-square") return suite_sec5(cfg);
    if (name == "thm6.1-tent") return suite_thm61(cfg);
    if (name == "final-example") return suite_final_example(cfg);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace lipone::suites
