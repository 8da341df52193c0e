#include "lipone/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipone {

namespace {

void validate_radii_list(const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("density: empty radius list");
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (!(radii[k] > 0.0)) throw std::invalid_argument("density: radii must be positive");
        if (k > 0 && !(radii[k] < radii[k - 1]))
            throw std::invalid_argument("density: radii must be strictly decreasing");
    }
}

}  // namespace

DensityProfile density_profile(const IntervalSet& e, double x, const std::vector<double>& radii) {
    validate_radii_list(radii);
    DensityProfile p;
    p.dim = 1;
    p.x = x;
    p.radii = radii;
    for (double r : radii) {
        const double mu = intersection_measure(e, x - r, x + r);
        const double ratio = mu / (2.0 * r);
        p.ratio_lo.push_back(ratio);
        p.ratio_hi.push_back(ratio);
    }
    p.limit_estimate = p.ratio_lo.back();
    return p;
}

DensityProfile density_profile(const CantorSet& e, int stage, double x,
                               const std::vector<double>& radii) {
    validate_radii_list(radii);
    DensityProfile p;
    p.dim = 1;
    p.x = x;
    p.radii = radii;
    for (double r : radii) {
        const auto [lo, hi] = e.window_measure(x - r, x + r, stage);
        p.ratio_lo.push_back(lo / (2.0 * r));
        p.ratio_hi.push_back(std::min(1.0, hi / (2.0 * r)));
    }
    p.limit_estimate = 0.5 * (p.ratio_lo.back() + p.ratio_hi.back());
    return p;
}

DensityProfile density_profile_product(const CantorSet& e, int stage, Vec2 x,
                                       const std::vector<double>& radii) {
    validate_radii_list(radii);
    DensityProfile p;
    p.dim = 2;
    p.x = x.x;
    p.y = x.y;
    p.radii = radii;
    for (double r : radii) {
        // square window [x-r, x+r] x [y-r, y+r]; the product measure
        // factorizes axis by axis
        const auto [lx, hx] = e.window_measure(x.x - r, x.x + r, stage);
        const auto [ly, hy] = e.window_measure(x.y - r, x.y + r, stage);
        const double area = (2.0 * r) * (2.0 * r);
        p.ratio_lo.push_back(lx * ly / area);
        p.ratio_hi.push_back(std::min(1.0, hx * hy / area));
    }
    p.limit_estimate = 0.5 * (p.ratio_lo.back() + p.ratio_hi.back());
    return p;
}

QuasiDenseReport is_quasi_dense(const IntervalSet& f, const std::vector<double>& points,
                                const std::vector<double>& radii) {
    validate_radii_list(radii);
    QuasiDenseReport rep;
    for (double x : points) {
        if (!f.contains(x)) throw std::invalid_argument("is_quasi_dense: sample point not in F");
        for (double r : radii) {
            const double mu = intersection_measure(f, x - r, x + r);
            rep.tests.push_back(QuasiDenseTest{x, r, mu, mu});
            if (mu == 0.0 && !rep.witness) {
                rep.verdict = QuasiDenseVerdict::Refuted;
                rep.witness = std::make_pair(x, r);
            }
        }
    }
    return rep;
}

QuasiDenseReport is_quasi_dense(const CantorSet& f, int stage, const std::vector<double>& points,
                                const std::vector<double>& radii) {
    validate_radii_list(radii);
    QuasiDenseReport rep;
    bool any_undecided_measure = false;
    for (double x : points) {
        const Membership m = f.contains(x, stage);
        if (m == Membership::Out)
            throw std::invalid_argument("is_quasi_dense: sample point not in F");
        if (m == Membership::UndecidedAtStage) ++rep.undecided_members;
        for (double r : radii) {
            const auto [lo, hi] = f.window_measure(x - r, x + r, stage);
            rep.tests.push_back(QuasiDenseTest{x, r, lo, hi});
            if (hi == 0.0 && !rep.witness) {
                rep.verdict = QuasiDenseVerdict::Refuted;
                rep.witness = std::make_pair(x, r);
            } else if (lo == 0.0 && hi > 0.0) {
                any_undecided_measure = true;
            }
        }
    }
    if (rep.verdict != QuasiDenseVerdict::Refuted && any_undecided_measure)
        rep.verdict = QuasiDenseVerdict::IndeterminateAtStage;
    return rep;
}

std::vector<WitnessBall> witness_balls(const IntervalSet& f, double x, int count) {
    if (count < 1) throw std::invalid_argument("witness_balls: count must be >= 1");
    if (!f.contains(x)) throw std::invalid_argument("witness_balls: x not in F");
    // component of F containing x
    Interval comp{};
    for (const Interval& iv : f.intervals())
        if (iv.contains(x)) {
            comp = iv;
            break;
        }
    std::vector<WitnessBall> out;
    for (int n = 1; n <= count; ++n) {
        const double budget = 1.0 / n;
        WitnessBall wb;
        wb.level = n;
        if (comp.lo < x && x < comp.hi) {
            wb.radius = std::min({budget, x - comp.lo, comp.hi - x});
            wb.center = x;
        } else if (comp.length() > 0.0) {
            // endpoint of a fat component: slide the ball just inside
            const double d = std::min(budget, comp.length());
            wb.radius = d / 2.0;
            wb.center = x == comp.lo ? x + d / 2.0 : x - d / 2.0;
        } else {
            throw std::domain_error(
                "witness_balls: no ball with ratio >= 1 - 1/n exists near an isolated point");
        }
        wb.ratio_lo = wb.ratio_hi = 1.0;  // the ball lies inside the component
        out.push_back(wb);
    }
    return out;
}

namespace {

// Stage-m interval of the Cantor set containing x (by descent).
Interval containing_stage_interval(const CantorSet& c, double x, int m) {
    double lo = 0.0, hi = 1.0;
    for (int d = 0; d < m; ++d) {
        const double len = c.stage_length(d + 1);
        if (x <= lo + len) {
            hi = lo + len;
        } else if (x >= hi - len) {
            lo = hi - len;
        } else {
            throw std::domain_error("witness_balls: x escapes the Cantor set at stage " +
                                    std::to_string(d + 1));
        }
    }
    return Interval{lo, hi};
}

}  // namespace

std::vector<WitnessBall> witness_balls(const CantorSet& f, double x, int count) {
    if (count < 1) throw std::invalid_argument("witness_balls: count must be >= 1");
    if (f.contains(x, std::min(f.max_stage(), count)) == Membership::Out)
        throw std::invalid_argument("witness_balls: x not in F");
    std::vector<WitnessBall> out;
    for (int n = 1; n <= count; ++n) {
        const double target = 1.0 - 1.0 / n;
        bool found = false;
        for (int m = std::min(n, f.max_stage()); m <= f.max_stage(); ++m) {
            if (f.stage_length(m) > 1.0 / n) continue;
            const Interval iv = containing_stage_interval(f, x, m);
            const auto [mlo, mhi] = f.window_measure(iv.lo, iv.hi, m);
            const double ratio_lo = mlo / iv.length();
            if (ratio_lo >= target) {
                out.push_back(WitnessBall{n, (iv.lo + iv.hi) / 2.0, iv.length() / 2.0, ratio_lo,
                                          mhi / iv.length()});
                found = true;
                break;
            }
        }
        if (!found)
            throw std::domain_error("witness_balls: no stage interval reaches ratio 1 - 1/" +
                                    std::to_string(n) + " within max_stage");
    }
    return out;
}

IntervalSet quasi_dense_core(const IntervalSet& a) {
    std::vector<Interval> kept;
    for (const Interval& iv : a.intervals())
        if (!iv.is_point()) kept.push_back(iv);
    return IntervalSet::from_intervals(std::move(kept));
}

nlohmann::ordered_json to_json(const DensityProfile& p) {
    nlohmann::ordered_json j;
    j["dim"] = p.dim;
    j["point"] = p.dim == 2 ? std::vector<double>{p.x, p.y} : std::vector<double>{p.x};
    auto& rows = j["ratios"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < p.radii.size(); ++k)
        rows.push_back({{"r", p.radii[k]}, {"lo", p.ratio_lo[k]}, {"hi", p.ratio_hi[k]}});
    j["limit_estimate"] = p.limit_estimate;
    return j;
}

nlohmann::ordered_json to_json(const QuasiDenseReport& r) {
    nlohmann::ordered_json j;
    switch (r.verdict) {
        case QuasiDenseVerdict::Evidence: j["verdict"] = "quasi-dense-evidence"; break;
        case QuasiDenseVerdict::Refuted: j["verdict"] = "refuted"; break;
        case QuasiDenseVerdict::IndeterminateAtStage: j["verdict"] = "indeterminate-at-stage"; break;
    }
    if (r.witness) j["witness"] = {{"x", r.witness->first}, {"r", r.witness->second}};
    j["undecided_members"] = r.undecided_members;
    auto& rows = j["tests"] = nlohmann::ordered_json::array();
    for (const auto& t : r.tests)
        rows.push_back({{"x", t.x}, {"r", t.r}, {"mu_lo", t.mu_lo}, {"mu_hi", t.mu_hi}});
    return j;
}

nlohmann::ordered_json to_json(const std::vector<WitnessBall>& balls) {
    auto arr = nlohmann::ordered_json::array();
    for (const WitnessBall& b : balls)
        arr.push_back({{"level", b.level},
                       {"center", b.center},
                       {"radius", b.radius},
                       {"ratio_lo", b.ratio_lo},
                       {"ratio_hi", b.ratio_hi}});
    return arr;
}

}  // namespace lipone
