#include "lipone/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "lipone/rng.hpp"

namespace lipone {

namespace {

double euclid(double dx, double dy) { return std::sqrt(dx * dx + dy * dy); }

void validate_radii(const GridFunction& f, const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("estimator: empty radius sweep");
    if (f.dim() == 2 && f.spacing(0) != f.spacing(1))
        throw std::invalid_argument("estimator: 2D grids must have equal spacing per axis");
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (!(radii[k] > 0.0)) throw std::invalid_argument("estimator: radii must be positive");
        if (k > 0 && !(radii[k] < radii[k - 1]))
            throw std::invalid_argument("estimator: radii must be strictly decreasing");
    }
    if (radii.back() < 2.0 * f.spacing(0))
        throw std::invalid_argument("estimator: smallest radius must be >= 2 * spacing");
}

// 1D ball around index i: the contiguous index range whose positions lie
// within distance r. Expanding by scan keeps the membership rule
// identical to the pairwise distance expression.
struct IndexRange {
    int lo, hi;
    int count() const { return hi - lo + 1; }
};

IndexRange ball_range_1d(const GridFunction& f, int i, double r) {
    const double cx = f.x(i);
    int lo = i, hi = i;
    while (lo - 1 >= 0 && std::abs(f.x(lo - 1) - cx) <= r) --lo;
    while (hi + 1 < f.shape()[0] && std::abs(f.x(hi + 1) - cx) <= r) ++hi;
    return {lo, hi};
}

struct BallPoint {
    double px, py, val, dist;  // dist from the ball center
};

std::vector<BallPoint> ball_points_2d(const GridFunction& f, GridIndex c, double r) {
    const double cx = f.x(c.i), cy = f.y(c.j);
    const int w = static_cast<int>(std::ceil(r / f.spacing(0))) + 1;
    std::vector<BallPoint> pts;
    pts.reserve(std::size_t(2 * w + 1) * (2 * w + 1) * 3 / 4 + 4);
    const int ilo = std::max(0, c.i - w), ihi = std::min(f.shape()[0] - 1, c.i + w);
    const int jlo = std::max(0, c.j - w), jhi = std::min(f.shape()[1] - 1, c.j + w);
    for (int j = jlo; j <= jhi; ++j)
        for (int i = ilo; i <= ihi; ++i) {
            const double px = f.x(i), py = f.y(j);
            const double d = euclid(px - cx, py - cy);
            if (d <= r) pts.push_back(BallPoint{px, py, f.at(GridIndex{i, j}), d});
        }
    return pts;
}

struct PointSweep {
    std::vector<double> llip, big, little;
};

// Per-radius values at one grid point; `all_pairs` switches the llip
// computation between exhaustive pair enumeration and the 1D
// adjacent-slope reduction (identical maxima; the reduction is linear
// in the ball size).
PointSweep sweep_point(const GridFunction& f, GridIndex x, const std::vector<double>& radii,
                       bool all_pairs) {
    PointSweep out;
    out.llip.resize(radii.size());
    out.big.resize(radii.size());
    out.little.resize(radii.size());

    if (f.dim() == 1) {
        const double fx = f.at(x.i);
        const double cx = f.x(x.i);
        for (std::size_t k = 0; k < radii.size(); ++k) {
            const double r = radii[k];
            const IndexRange b = ball_range_1d(f, x.i, r);
            if (b.count() < 2) throw std::invalid_argument("estimator: ball holds < 2 grid points");
            double maxnum = 0.0, bigmax = 0.0, pairmax = 0.0;
            for (int u = b.lo; u <= b.hi; ++u) {
                const double num = std::abs(f.at(u) - fx);
                maxnum = std::max(maxnum, num);
                if (u != x.i) bigmax = std::max(bigmax, num / std::abs(f.x(u) - cx));
            }
            if (all_pairs) {
                for (int u = b.lo; u <= b.hi; ++u)
                    for (int v = u + 1; v <= b.hi; ++v)
                        pairmax = std::max(pairmax,
                                           std::abs(f.at(u) - f.at(v)) / std::abs(f.x(v) - f.x(u)));
            } else {
                for (int u = b.lo; u < b.hi; ++u)
                    pairmax = std::max(pairmax,
                                       std::abs(f.at(u + 1) - f.at(u)) / std::abs(f.x(u + 1) - f.x(u)));
                pairmax = std::max(pairmax, bigmax);
            }
            out.little[k] = maxnum / r;
            out.big[k] = bigmax;
            out.llip[k] = pairmax;
        }
        return out;
    }

    const double fx = f.at(x);
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const double r = radii[k];
        const std::vector<BallPoint> pts = ball_points_2d(f, x, r);
        if (pts.size() < 2) throw std::invalid_argument("estimator: ball holds < 2 grid points");
        double maxnum = 0.0, bigmax = 0.0, pairmax = 0.0;
        for (const BallPoint& p : pts) {
            const double num = std::abs(p.val - fx);
            maxnum = std::max(maxnum, num);
            if (p.dist > 0.0) bigmax = std::max(bigmax, num / p.dist);
        }
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                const double d = euclid(pts[a].px - pts[b].px, pts[a].py - pts[b].py);
                if (d > 0.0)
                    pairmax = std::max(pairmax, std::abs(pts[a].val - pts[b].val) / d);
            }
        out.little[k] = maxnum / r;
        out.big[k] = bigmax;
        out.llip[k] = pairmax;
    }
    return out;
}

void run_chunked(std::int64_t n, int threads, const std::function<void(std::int64_t, std::int64_t)>& body) {
    int t = threads > 0 ? threads : int(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    t = int(std::min<std::int64_t>(t, n));
    if (t <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (n + t - 1) / t;
    for (int w = 0; w < t; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<double> geometric_radii(double R, int K) {
    if (!(R > 0.0) || K < 0) throw std::invalid_argument("radii: need R > 0 and K >= 0");
    std::vector<double> radii(K + 1);
    for (int k = 0; k <= K; ++k) radii[k] = std::ldexp(R, -k);
    return radii;
}

std::vector<double> default_radii(const GridFunction& f) {
    const double ex = (f.shape()[0] - 1) * f.spacing(0);
    const double ey = f.dim() == 2 ? (f.shape()[1] - 1) * f.spacing(1) : 0.0;
    const double R = euclid(ex, ey) / 4.0;
    const double rmin = 4.0 * f.spacing(0);
    if (R < rmin) throw std::invalid_argument("radii: domain too small for the default sweep");
    int K = 0;
    while (std::ldexp(R, -(K + 1)) >= rmin) ++K;
    return geometric_radii(R, K);
}

LipEstimate lip_estimate(const GridFunction& f, GridIndex x, const std::vector<double>& radii) {
    validate_radii(f, radii);
    if (!f.in_range(x)) throw std::invalid_argument("estimator: point outside grid");
    PointSweep s = sweep_point(f, x, radii, /*all_pairs=*/true);
    LipEstimate e;
    e.point = x;
    e.radii = radii;
    e.llip_at_r = std::move(s.llip);
    e.big_lip_at_r = std::move(s.big);
    e.little_lip_at_r = std::move(s.little);
    e.llip_final = e.llip_at_r.back();
    e.big_lip_final = e.big_lip_at_r.back();
    e.little_lip_final = *std::min_element(e.little_lip_at_r.begin(), e.little_lip_at_r.end());
    return e;
}

LipField lip_field(const GridFunction& f, const std::vector<double>& radii, int threads) {
    validate_radii(f, radii);
    const std::int64_t n = f.num_points();
    LipField field;
    field.radii = radii;
    field.shape = f.shape();
    field.llip.resize(radii.size() * n);
    field.big_lip.resize(radii.size() * n);
    field.little_lip.resize(radii.size() * n);
    field.llip_final.resize(n);
    field.big_lip_final.resize(n);
    field.little_lip_final.resize(n);

    run_chunked(n, threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            const GridIndex p{int(idx % f.shape()[0]), int(idx / f.shape()[0])};
            PointSweep s = sweep_point(f, p, radii, /*all_pairs=*/false);
            double little_min = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < radii.size(); ++k) {
                field.llip[k * n + idx] = s.llip[k];
                field.big_lip[k * n + idx] = s.big[k];
                field.little_lip[k * n + idx] = s.little[k];
                little_min = std::min(little_min, s.little[k]);
            }
            field.llip_final[idx] = s.llip.back();
            field.big_lip_final[idx] = s.big.back();
            field.little_lip_final[idx] = little_min;
        }
    });
    return field;
}

double global_pair_lipschitz(const GridFunction& f, std::uint64_t seed, int n_random) {
    double best = 0.0;
    const int nx = f.shape()[0], ny = f.shape()[1];
    if (f.dim() == 1) {
        for (int i = 0; i + 1 < nx; ++i)
            best = std::max(best, std::abs(f.at(i + 1) - f.at(i)) / std::abs(f.x(i + 1) - f.x(i)));
        return best;
    }
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double v = f.at(GridIndex{i, j});
            if (i + 1 < nx)
                best = std::max(best, std::abs(f.at(GridIndex{i + 1, j}) - v) / f.spacing(0));
            if (j + 1 < ny)
                best = std::max(best, std::abs(f.at(GridIndex{i, j + 1}) - v) / f.spacing(1));
        }
    Rng rng(seed);
    for (int t = 0; t < n_random; ++t) {
        const GridIndex a{int(rng.below(nx)), int(rng.below(ny))};
        const GridIndex b{int(rng.below(nx)), int(rng.below(ny))};
        if (a == b) continue;
        const double d = euclid(f.x(a.i) - f.x(b.i), f.y(a.j) - f.y(b.j));
        best = std::max(best, std::abs(f.at(a) - f.at(b)) / d);
    }
    return best;
}

LipOneReport check_lip_one_set(const GridFunction& f, const SetQueries& q,
                               const std::vector<double>& radii, double tol,
                               const LipField* precomputed) {
    LipField local;
    if (!precomputed) {
        local = lip_field(f, radii);
        precomputed = &local;
    }
    LipOneReport rep;
    rep.tol = tol;
    rep.largest_radius = radii.front();
    rep.in_min_llip = std::numeric_limits<double>::infinity();
    rep.out_max_llip = 0.0;
    const std::int64_t n = f.num_points();
    for (std::int64_t idx = 0; idx < n; ++idx) {
        const GridIndex p{int(idx % f.shape()[0]), int(idx / f.shape()[0])};
        const double px = f.x(p.i), py = f.dim() == 2 ? f.y(p.j) : 0.0;
        const double v = precomputed->llip_final[idx];
        if (q.definitely_in(px, py)) {
            ++rep.n_in;
            rep.in_min_llip = std::min(rep.in_min_llip, v);
            if (v >= 1.0 - tol) ++rep.n_in_pass;
        } else if (q.distance(px, py) > rep.largest_radius) {
            ++rep.n_out;
            rep.out_max_llip = std::max(rep.out_max_llip, v);
            if (v <= tol) ++rep.n_out_pass;
        } else {
            ++rep.n_indeterminate;
        }
    }
    if (rep.n_in == 0) rep.in_min_llip = 0.0;
    rep.global_lipschitz = global_pair_lipschitz(f);
    return rep;
}

namespace {

void write_rows(std::ostream& os, const GridFunction& f, GridIndex p,
                const std::vector<double>& radii, const double* llip, const double* big,
                const double* little, std::int64_t stride, std::int64_t idx) {
    char buf[256];
    for (std::size_t k = 0; k < radii.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p.i, p.j,
                      f.x(p.i), f.dim() == 2 ? f.y(p.j) : 0.0, radii[k], llip[k * stride + idx],
                      big[k * stride + idx], little[k * stride + idx]);
        os << buf;
    }
}

}  // namespace

void write_field_csv(std::ostream& os, const GridFunction& f, const LipField& field) {
    os << "ix,iy,x,y,r,llip,big_lip,little_lip\n";
    const std::int64_t n = field.num_points();
    for (std::int64_t idx = 0; idx < n; ++idx) {
        const GridIndex p{int(idx % field.shape[0]), int(idx / field.shape[0])};
        write_rows(os, f, p, field.radii, field.llip.data(), field.big_lip.data(),
                   field.little_lip.data(), n, idx);
    }
}

void write_estimates_csv(std::ostream& os, const GridFunction& f,
                         const std::vector<LipEstimate>& estimates) {
    os << "ix,iy,x,y,r,llip,big_lip,little_lip\n";
    for (const LipEstimate& e : estimates)
        write_rows(os, f, e.point, e.radii, e.llip_at_r.data(), e.big_lip_at_r.data(),
                   e.little_lip_at_r.data(), 1, 0);
}

}  // namespace lipone
