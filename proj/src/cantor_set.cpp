#include "lipone/cantor_set.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace lipone {

namespace {

void require_finite_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::invalid_argument(std::string("AlphaRule: ") + what + " must be positive and finite");
}

}  // namespace

AlphaRule AlphaRule::geometric(double c, double q) {
    require_finite_positive(c, "c");
    require_finite_positive(q, "q");
    if (q >= 1.0) throw std::invalid_argument("AlphaRule: q must lie in (0, 1)");
    AlphaRule r;
    r.tail_ = std::make_pair(c, q);
    return r;
}

AlphaRule AlphaRule::prefix(std::vector<double> values,
                            std::optional<std::pair<double, double>> tail) {
    if (values.empty()) throw std::invalid_argument("AlphaRule: empty prefix");
    for (double v : values) require_finite_positive(v, "prefix entry");
    if (tail) {
        require_finite_positive(tail->first, "tail c");
        require_finite_positive(tail->second, "tail q");
        if (tail->second >= 1.0) throw std::invalid_argument("AlphaRule: tail q must lie in (0, 1)");
    }
    AlphaRule r;
    r.values_ = std::move(values);
    r.tail_ = tail;
    return r;
}

double AlphaRule::alpha(size_t n) const {
    if (n == 0) throw std::invalid_argument("AlphaRule: alpha index starts at 1");
    if (n <= values_.size()) return values_[n - 1];
    if (!tail_) throw std::domain_error("AlphaRule: term past a tail-less prefix");
    const auto [c, q] = *tail_;
    // iterated product; exact for the dyadic rules used throughout
    double a = c;
    for (size_t j = values_.size() + 1; j < n; ++j) a *= q;
    return a;
}

size_t AlphaRule::terms_available() const {
    return tail_ ? std::numeric_limits<size_t>::max() : values_.size();
}

double AlphaRule::weighted_partial(size_t m) const {
    double sum = 0.0;
    double w = 1.0;
    for (size_t n = 1; n <= m; ++n, w *= 2.0) sum += w * alpha(n);
    return sum;
}

std::optional<double> AlphaRule::weighted_total() const {
    if (!tail_) return std::nullopt;
    const auto [c, q] = *tail_;
    if (2.0 * q >= 1.0) {
        // sum 2^(n-1) c q^(n-1) diverges
        return std::numeric_limits<double>::infinity();
    }
    const size_t m = values_.size();
    // prefix part plus 2^m * sum_{j>=1} 2^(j-1) c q^(j-1)
    return weighted_partial(m) + std::ldexp(c / (1.0 - 2.0 * q), static_cast<int>(m));
}

CantorSet::CantorSet(AlphaRule rule, int max_stage)
    : rule_(std::move(rule)), max_stage_(max_stage) {
    if (max_stage_ < 0 || max_stage_ > 60)
        throw std::invalid_argument("CantorSet: max_stage must lie in [0, 60]");
    if (static_cast<size_t>(max_stage_) > rule_.terms_available())
        throw std::invalid_argument("CantorSet: max_stage exceeds the terms the alpha rule provides");

    if (auto total = rule_.weighted_total()) {
        if (!(*total < 1.0))
            throw std::invalid_argument("CantorSet: summability violated, sum 2^(n-1) alpha_n >= 1");
    } else {
        // tail-less prefix: only the reachable partial sum can be checked
        if (!(rule_.weighted_partial(rule_.terms_available()) < 1.0))
            throw std::invalid_argument("CantorSet: summability violated on the explicit prefix");
    }

    lengths_.resize(max_stage_ + 1);
    partials_.resize(max_stage_ + 1);
    lengths_[0] = 1.0;
    partials_[0] = 0.0;
    double w = 1.0;
    for (int n = 1; n <= max_stage_; ++n, w *= 2.0) {
        const double a = rule_.alpha(static_cast<size_t>(n));
        if (!(a < lengths_[n - 1]))
            throw std::invalid_argument("CantorSet: infeasible stage " + std::to_string(n) +
                                        ", alpha_n does not fit in the stage interval");
        lengths_[n] = (lengths_[n - 1] - a) / 2.0;
        partials_[n] = partials_[n - 1] + w * a;
        if (!(lengths_[n] > 0.0))
            throw std::invalid_argument("CantorSet: stage length collapsed to zero at stage " +
                                        std::to_string(n));
    }
}

double CantorSet::stage_length(int n) const {
    if (n < 0 || n > max_stage_) throw std::out_of_range("CantorSet: stage out of range");
    return lengths_[n];
}

double CantorSet::stage_measure(int n) const {
    if (n < 0 || n > max_stage_) throw std::out_of_range("CantorSet: stage out of range");
    return 1.0 - partials_[n];
}

IntervalSet CantorSet::stage(int n) const {
    if (n < 0 || n > max_stage_) throw std::out_of_range("CantorSet: stage out of range");
    if (n > 24) throw std::invalid_argument("CantorSet: stage too deep to materialize");
    std::vector<Interval> cur{Interval{0.0, 1.0}};
    for (int d = 1; d <= n; ++d) {
        std::vector<Interval> next;
        next.reserve(cur.size() * 2);
        const double len = lengths_[d];
        for (const Interval& iv : cur) {
            next.push_back(Interval{iv.lo, iv.lo + len});
            next.push_back(Interval{iv.hi - len, iv.hi});
        }
        cur = std::move(next);
    }
    return IntervalSet::from_intervals(std::move(cur));
}

std::pair<double, double> CantorSet::measure() const {
    auto total = rule_.weighted_total();
    if (!total) throw std::domain_error("CantorSet: measure needs a summable tail rule");
    if (!std::isfinite(*total)) throw std::domain_error("CantorSet: tail is not summable");
    const double value = 1.0 - *total;
    // closed-form evaluation, error covers the handful of roundings
    const double err = 16.0 * std::numeric_limits<double>::epsilon() *
                       (1.0 + static_cast<double>(rule_.prefix_values().size()));
    return {value, err};
}

namespace {

struct WindowCount {
    std::int64_t full = 0;
    std::int64_t partial = 0;
};

// Counts stage-s descendants of the depth-d interval [lo, hi] that lie
// fully inside / partially overlap the window [u, v].
void count_window(double lo, double hi, int depth, int s, double u, double v,
                  const std::vector<double>& lengths, WindowCount& acc) {
    if (hi < u || lo > v) return;
    if (u <= lo && hi <= v) {
        acc.full += std::int64_t{1} << (s - depth);
        return;
    }
    if (depth == s) {
        acc.partial += 1;
        return;
    }
    const double len = lengths[depth + 1];
    count_window(lo, lo + len, depth + 1, s, u, v, lengths, acc);
    count_window(hi - len, hi, depth + 1, s, u, v, lengths, acc);
}

}  // namespace

std::pair<double, double> CantorSet::window_measure(double u, double v, int stage) const {
    if (!(u <= v)) throw std::invalid_argument("CantorSet: window needs u <= v");
    if (stage < 0 || stage > max_stage_) throw std::out_of_range("CantorSet: stage out of range");
    const double per = std::ldexp(measure().first, -stage);
    WindowCount acc;
    count_window(0.0, 1.0, 0, stage, u, v, lengths_, acc);
    const double lower = static_cast<double>(acc.full) * per;
    const double upper = static_cast<double>(acc.full + acc.partial) * per;
    return {lower, upper};
}

Membership CantorSet::contains(double x, int stage) const {
    if (stage < 0 || stage > max_stage_) throw std::out_of_range("CantorSet: stage out of range");
    double lo = 0.0, hi = 1.0;
    for (int d = 0; d < stage; ++d) {
        if (x < lo || x > hi) return Membership::Out;
        const double len = lengths_[d + 1];
        if (x <= lo + len) {
            hi = lo + len;
        } else if (x >= hi - len) {
            lo = hi - len;
        } else {
            return Membership::Out;  // inside the centered gap
        }
    }
    if (x < lo || x > hi) return Membership::Out;
    if (x == lo || x == hi) return Membership::In;
    return Membership::UndecidedAtStage;
}

}  // namespace lipone
