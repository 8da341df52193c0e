#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include <json.hpp>

namespace lipone {

struct GridIndex {
    int i = 0;
    int j = 0;
    friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

/// Real-valued samples on a uniform 1D or 2D grid. Values are stored
/// row-major (index j * nx + i); all samples must be finite.
class GridFunction {
public:
    static GridFunction sample_1d(double lo, double hi, double h,
                                  const std::function<double(double)>& fn);
    static GridFunction sample_2d(std::array<double, 2> lo, std::array<double, 2> hi,
                                  double h, const std::function<double(double, double)>& fn);

    /// Assembles a grid from raw parts (used by the file loader).
    static GridFunction from_parts(int dim, std::array<double, 2> origin,
                                   std::array<double, 2> spacing, std::array<int, 2> shape,
                                   std::vector<double> values);

    int dim() const { return dim_; }
    const std::array<int, 2>& shape() const { return shape_; }
    double spacing(int axis = 0) const { return spacing_[axis]; }
    double origin(int axis = 0) const { return origin_[axis]; }
    std::int64_t num_points() const { return std::int64_t{1} * shape_[0] * shape_[1]; }

    double x(int i) const { return origin_[0] + i * spacing_[0]; }
    double y(int j) const { return origin_[1] + j * spacing_[1]; }

    double at(GridIndex p) const { return values_[std::size_t(p.j) * shape_[0] + p.i]; }
    double at(int i) const { return values_[std::size_t(i)]; }
    const std::vector<double>& values() const { return values_; }

    bool in_range(GridIndex p) const {
        return p.i >= 0 && p.i < shape_[0] && p.j >= 0 && p.j < shape_[1];
    }

    /// Grid index of the sample at coordinates (px, py); throws if the
    /// point is not a grid point (within 1e-9 of one).
    GridIndex index_of(double px, double py = 0.0) const;

    nlohmann::ordered_json header_json() const;
    void write_csv(std::ostream& os) const;
    static GridFunction read(const nlohmann::json& header, std::istream& csv);

private:
    int dim_ = 1;
    std::array<double, 2> origin_{0.0, 0.0};
    std::array<double, 2> spacing_{0.0, 0.0};
    std::array<int, 2> shape_{0, 1};
    std::vector<double> values_;
};

/// Number of steps n such that lo + n*h == hi (within 1e-9 relative);
/// throws if h does not divide the box evenly.
int grid_steps(double lo, double hi, double h);

}  // namespace lipone
