#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lipone/grid_function.hpp"

namespace lipone {

/// Geometric sweep R, R/2, ..., R/2^K (strictly decreasing).
std::vector<double> geometric_radii(double R, int K);

/// Default sweep: R = domain diameter / 4, halving down to the last
/// radius >= 4 * spacing.
std::vector<double> default_radii(const GridFunction& f);

/// Per-point radius-sweep record of the three discrete Lipschitz
/// derivative estimates. At each radius r (closed metric ball, grid
/// points only):
///   llip_at_r   = max |f(u)-f(v)| / dist(u,v) over pairs u != v in the ball,
///   big_lip_at_r= max |f(u)-f(x)| / dist(u,x) over u != x in the ball,
///   little_at_r = (1/r) * max |f(u)-f(x)| over u in the ball.
/// llip and big Lip take their value at the smallest radius; little lip
/// takes the minimum over the sweep.
struct LipEstimate {
    GridIndex point;
    std::vector<double> radii;
    std::vector<double> llip_at_r;
    std::vector<double> big_lip_at_r;
    std::vector<double> little_lip_at_r;
    double llip_final = 0.0;
    double big_lip_final = 0.0;
    double little_lip_final = 0.0;
};

/// Exhaustive enumeration over all grid pairs inside each ball.
LipEstimate lip_estimate(const GridFunction& f, GridIndex x, const std::vector<double>& radii);

/// Per-point estimates for every grid point. Layout: value(k, idx) for
/// radius k and flat point index idx. In 1D the pair maximum reduces
/// exactly to a maximum over adjacent-sample slopes (any difference
/// quotient is a length-weighted mean of them), which this exploits; in
/// 2D pairs are enumerated per ball rather than globally.
class LipField {
public:
    std::vector<double> radii;
    std::array<int, 2> shape{0, 1};
    std::vector<double> llip, big_lip, little_lip;     // size radii.size() * npoints
    std::vector<double> llip_final, big_lip_final, little_lip_final;  // per point

    std::int64_t num_points() const { return std::int64_t{1} * shape[0] * shape[1]; }
    double at_llip(std::size_t k, std::int64_t idx) const { return llip[k * num_points() + idx]; }
    double at_big(std::size_t k, std::int64_t idx) const { return big_lip[k * num_points() + idx]; }
    double at_little(std::size_t k, std::int64_t idx) const {
        return little_lip[k * num_points() + idx];
    }
};

LipField lip_field(const GridFunction& f, const std::vector<double>& radii, int threads = 0);

/// Exact in 1D (maximum over adjacent samples); in 2D the maximum over
/// axis-adjacent pairs plus n_random seeded random pairs.
double global_pair_lipschitz(const GridFunction& f, std::uint64_t seed = 1, int n_random = 100000);

/// Membership / distance queries a set must answer for the local
/// Lipschitz one check. `definitely_in` must only affirm points known
/// to lie in the set; `distance` may be any lower bound that is exact
/// far from the set.
struct SetQueries {
    std::function<bool(double, double)> definitely_in;
    std::function<double(double, double)> distance;
};

struct LipOneReport {
    double tol = 0.0;
    double largest_radius = 0.0;
    // (a) points of F: llip_final >= 1 - tol
    std::int64_t n_in = 0, n_in_pass = 0;
    double in_min_llip = 0.0;
    // (b) points with dist(x, F) > largest radius: llip_final <= tol
    std::int64_t n_out = 0, n_out_pass = 0;
    double out_max_llip = 0.0;
    // neither in F nor beyond the largest radius
    std::int64_t n_indeterminate = 0;
    // (c) max sampled pair ratio over the whole grid
    double global_lipschitz = 0.0;

    double frac_in_pass() const { return n_in ? double(n_in_pass) / double(n_in) : 1.0; }
    double frac_out_pass() const { return n_out ? double(n_out_pass) / double(n_out) : 1.0; }
};

/// Verifies the characteristic-function shape of the llip field against
/// a set: estimate ~1 on the set, ~0 far from it, with points within the
/// largest sweep radius of the set reported indeterminate. Pass a
/// precomputed field to avoid recomputation.
LipOneReport check_lip_one_set(const GridFunction& f, const SetQueries& q,
                               const std::vector<double>& radii, double tol,
                               const LipField* precomputed = nullptr);

/// CSV rows "ix,iy,x,y,r,llip,big_lip,little_lip" (header included by
/// the first writer).
void write_field_csv(std::ostream& os, const GridFunction& f, const LipField& field);
void write_estimates_csv(std::ostream& os, const GridFunction& f,
                         const std::vector<LipEstimate>& estimates);

}  // namespace lipone
