#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lipone/cantor_set.hpp"
#include "lipone/interval_set.hpp"
#include "lipone/tent.hpp"

namespace lipone {

/// Per-radius table of measure ratios mu(E ∩ B(x,r)) / mu(B(x,r)).
/// Exact sets give ratio_lo == ratio_hi; Cantor windows give rigorous
/// brackets. 2D product sets use square windows, where the measure
/// factorizes through the axes.
struct DensityProfile {
    int dim = 1;
    double x = 0.0, y = 0.0;
    std::vector<double> radii;
    std::vector<double> ratio_lo, ratio_hi;
    double limit_estimate = 0.0;  // midpoint at the smallest radius
};

DensityProfile density_profile(const IntervalSet& e, double x, const std::vector<double>& radii);
DensityProfile density_profile(const CantorSet& e, int stage, double x,
                               const std::vector<double>& radii);
DensityProfile density_profile_product(const CantorSet& e, int stage, Vec2 x,
                                       const std::vector<double>& radii);

enum class QuasiDenseVerdict { Evidence, Refuted, IndeterminateAtStage };

struct QuasiDenseTest {
    double x = 0.0, r = 0.0;
    double mu_lo = 0.0, mu_hi = 0.0;
};

struct QuasiDenseReport {
    QuasiDenseVerdict verdict = QuasiDenseVerdict::Evidence;
    /// Exact witness (x, r) with mu(F ∩ B(x, r)) = 0; refutes
    /// quasi-density of a closed set outright.
    std::optional<std::pair<double, double>> witness;
    std::vector<QuasiDenseTest> tests;
    int undecided_members = 0;  // samples whose membership is stage-undecided
};

/// Tests mu(F ∩ B(x, r)) > 0 for each sample point and radius: exactly
/// for interval sets, via the window bracket for Cantor sets. Evidence
/// at the sampled points only; a zero-measure ball is a definitive
/// refutation. Sample points outside F are rejected.
QuasiDenseReport is_quasi_dense(const IntervalSet& f, const std::vector<double>& points,
                                const std::vector<double>& radii);
QuasiDenseReport is_quasi_dense(const CantorSet& f, int stage, const std::vector<double>& points,
                                const std::vector<double>& radii);

struct WitnessBall {
    int level = 0;  // n: the ball satisfies ratio >= 1 - 1/n, radius <= 1/n
    double center = 0.0, radius = 0.0;
    double ratio_lo = 0.0, ratio_hi = 0.0;
};

/// A sequence of open balls shrinking to x whose measure ratios climb
/// toward 1. Balls need not be centered at x (an endpoint of a
/// component takes balls inside the component). For a Cantor set the
/// level-n ball is the deepest-needed stage interval containing x.
/// Throws std::domain_error if some level admits no qualifying ball.
std::vector<WitnessBall> witness_balls(const IntervalSet& f, double x, int count);
std::vector<WitnessBall> witness_balls(const CantorSet& f, double x, int count);

/// Removes every point with a neighborhood meeting A in measure zero:
/// for a finite interval union, exactly the degenerate components.
/// The result keeps the full measure of A and is idempotent.
IntervalSet quasi_dense_core(const IntervalSet& a);

nlohmann::ordered_json to_json(const DensityProfile& p);
nlohmann::ordered_json to_json(const QuasiDenseReport& r);
nlohmann::ordered_json to_json(const std::vector<WitnessBall>& balls);

}  // namespace lipone
