#pragma once

#include <optional>
#include <vector>

#include "lipone/interval_set.hpp"

namespace lipone {

/// Gap-length rule for a symmetric fat Cantor set. Two forms are
/// supported:
///   - geometric: alpha_n = c * q^(n-1) for n >= 1 (so alpha_1 = c);
///   - explicit prefix, optionally followed by a fresh geometric tail
///     for the terms after the prefix.
/// A prefix with no tail has no computable tail bound, so operations
/// that need the full infinite sum refuse on such rules.
class AlphaRule {
public:
    static AlphaRule geometric(double c, double q);
    static AlphaRule prefix(std::vector<double> values,
                            std::optional<std::pair<double, double>> tail = std::nullopt);

    /// alpha_n, n >= 1. Throws if n is past a tail-less prefix.
    double alpha(size_t n) const;

    /// Number of terms available (SIZE_MAX when a tail rule exists).
    size_t terms_available() const;

    /// Exact value of sum_{n>=1} 2^(n-1) alpha_n, when the rule has a
    /// closed-form tail; nullopt for a tail-less prefix.
    std::optional<double> weighted_total() const;

    /// sum_{n=1..m} 2^(n-1) alpha_n.
    double weighted_partial(size_t m) const;

    bool is_geometric() const { return values_.empty() && tail_.has_value(); }
    const std::vector<double>& prefix_values() const { return values_; }
    std::optional<std::pair<double, double>> tail() const { return tail_; }

private:
    AlphaRule() = default;
    std::vector<double> values_;                       // explicit prefix
    std::optional<std::pair<double, double>> tail_;    // (c, q) after prefix
};

enum class Membership { In, Out, UndecidedAtStage };

/// Symbolic fat Cantor set on [0, 1]: stage n removes from each of the
/// 2^(n-1) stage-(n-1) intervals the centered open gap of length
/// alpha_n, leaving 2^n closed intervals of equal length
/// L_n = (L_{n-1} - alpha_n) / 2.
///
/// Construction validates positivity of every reachable alpha_n, the
/// summability condition sum 2^(n-1) alpha_n < 1 (via the closed-form
/// tail when one exists), and per-stage feasibility alpha_n < L_{n-1}
/// up to max_stage. Immutable afterwards.
class CantorSet {
public:
    CantorSet(AlphaRule rule, int max_stage);

    int max_stage() const { return max_stage_; }
    const AlphaRule& rule() const { return rule_; }

    /// Common length L_n of the 2^n stage-n intervals.
    double stage_length(int n) const;

    /// Exact measure of the stage-n approximation: 1 - sum_{j<=n} 2^(j-1) alpha_j.
    double stage_measure(int n) const;

    /// The stage-n approximation C_n as 2^n disjoint closed intervals.
    /// C_0 = {[0,1]}. Refuses stages beyond max_stage or too deep to
    /// materialize (2^n intervals).
    IntervalSet stage(int n) const;

    /// (value, error_bound) for the measure of the full set:
    /// 1 - sum_{n>=1} 2^(n-1) alpha_n. Throws if the rule has no
    /// computable tail.
    std::pair<double, double> measure() const;

    /// Rigorous bracket for measure(C ∩ [u, v]) computed on the stage-s
    /// interval tree: the lower bound counts stage-s intervals fully
    /// inside the window at 2^(-s) * measure() each, the upper bound
    /// additionally counts partially overlapped ones at full weight.
    std::pair<double, double> window_measure(double u, double v, int stage) const;

    /// Tri-state membership of x decided at the given stage. "Out" is
    /// definitive (x escapes by that stage). "In" means x is an endpoint
    /// of a stage interval, which survives all removals.
    Membership contains(double x, int stage) const;

private:
    AlphaRule rule_;
    int max_stage_ = 0;
    std::vector<double> lengths_;   // L_0..L_max_stage
    std::vector<double> partials_;  // weighted partial sums, index 0..max_stage
};

}  // namespace lipone
