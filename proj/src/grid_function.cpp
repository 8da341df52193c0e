#include "lipone/grid_function.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lipone {

int grid_steps(double lo, double hi, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("grid: spacing must be positive");
    if (!(lo < hi)) throw std::invalid_argument("grid: box needs lo < hi");
    const double steps = (hi - lo) / h;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, std::abs(steps)))
        throw std::invalid_argument("grid: spacing does not divide the box evenly");
    return static_cast<int>(rounded);
}

GridFunction GridFunction::sample_1d(double lo, double hi, double h,
                                     const std::function<double(double)>& fn) {
    const int n = grid_steps(lo, hi, h) + 1;
    GridFunction g;
    g.dim_ = 1;
    g.origin_ = {lo, 0.0};
    g.spacing_ = {h, 0.0};
    g.shape_ = {n, 1};
    g.values_.resize(n);
    for (int i = 0; i < n; ++i) {
        const double v = fn(g.x(i));
        if (!std::isfinite(v)) throw std::invalid_argument("grid: non-finite sample");
        g.values_[i] = v;
    }
    return g;
}

GridFunction GridFunction::sample_2d(std::array<double, 2> lo, std::array<double, 2> hi,
                                     double h, const std::function<double(double, double)>& fn) {
    const int nx = grid_steps(lo[0], hi[0], h) + 1;
    const int ny = grid_steps(lo[1], hi[1], h) + 1;
    GridFunction g;
    g.dim_ = 2;
    g.origin_ = lo;
    g.spacing_ = {h, h};
    g.shape_ = {nx, ny};
    g.values_.resize(std::size_t(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double v = fn(g.x(i), g.y(j));
            if (!std::isfinite(v)) throw std::invalid_argument("grid: non-finite sample");
            g.values_[std::size_t(j) * nx + i] = v;
        }
    return g;
}

GridFunction GridFunction::from_parts(int dim, std::array<double, 2> origin,
                                      std::array<double, 2> spacing, std::array<int, 2> shape,
                                      std::vector<double> values) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid: dim must be 1 or 2");
    if (shape[0] < 1 || shape[1] < 1) throw std::invalid_argument("grid: empty shape");
    if (dim == 1 && shape[1] != 1) throw std::invalid_argument("grid: 1D shape must be {n, 1}");
    if (values.size() != std::size_t(shape[0]) * shape[1])
        throw std::invalid_argument("grid: value count does not match shape");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("grid: non-finite sample");
    GridFunction g;
    g.dim_ = dim;
    g.origin_ = origin;
    g.spacing_ = spacing;
    g.shape_ = shape;
    g.values_ = std::move(values);
    return g;
}

GridIndex GridFunction::index_of(double px, double py) const {
    const double fi = (px - origin_[0]) / spacing_[0];
    const double fj = dim_ == 2 ? (py - origin_[1]) / spacing_[1] : 0.0;
    GridIndex p{static_cast<int>(std::lround(fi)), static_cast<int>(std::lround(fj))};
    if (!in_range(p) || std::abs(fi - p.i) > 1e-9 || std::abs(fj - p.j) > 1e-9)
        throw std::invalid_argument("grid: coordinates are not a grid point");
    return p;
}

nlohmann::ordered_json GridFunction::header_json() const {
    nlohmann::ordered_json j;
    j["dim"] = dim_;
    j["origin"] = dim_ == 1 ? std::vector<double>{origin_[0]}
                            : std::vector<double>{origin_[0], origin_[1]};
    j["spacing"] = dim_ == 1 ? std::vector<double>{spacing_[0]}
                             : std::vector<double>{spacing_[0], spacing_[1]};
    j["shape"] = dim_ == 1 ? std::vector<int>{shape_[0]} : std::vector<int>{shape_[0], shape_[1]};
    return j;
}

void GridFunction::write_csv(std::ostream& os) const {
    char buf[64];
    for (double v : values_) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        os << buf;
    }
}

GridFunction GridFunction::read(const nlohmann::json& header, std::istream& csv) {
    const int dim = header.at("dim").get<int>();
    auto vec = [&](const char* key) {
        auto v = header.at(key).get<std::vector<double>>();
        return std::array<double, 2>{v.at(0), v.size() > 1 ? v[1] : 0.0};
    };
    auto origin = vec("origin");
    auto spacing = vec("spacing");
    auto shp = header.at("shape").get<std::vector<int>>();
    std::array<int, 2> shape{shp.at(0), shp.size() > 1 ? shp[1] : 1};

    std::vector<double> values;
    values.reserve(std::size_t(shape[0]) * std::max(shape[1], 1));
    std::string line;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        values.push_back(std::stod(line));
    }
    return from_parts(dim, origin, spacing, shape, std::move(values));
}

}  // namespace lipone
