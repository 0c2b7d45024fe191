#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kinspec/velocity_grid.hpp"

namespace kinspec {

enum class Wall { x_lo = 0, x_hi = 1, y_lo = 2, y_hi = 3 };

enum class BoundaryKind { periodic, specular, diffuse, maxwell_mix };

std::string to_string(BoundaryKind kind);
BoundaryKind boundary_kind_from_string(const std::string& name);

/// Wall model. The re-emitted distribution is (1 - alpha) specular + alpha diffuse.
struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::periodic;
  /// Accommodation coefficient; only read for maxwell_mix.
  double alpha = 0.0;
  double T_w = 1.0;
  /// Wall temperature is T_w + T_w_amplitude cos(2 pi s / T_w_period), s the
  /// coordinate along the wall.
  double T_w_amplitude = 0.0;
  double T_w_period = 1.0;
  Vec3 u_w{};

  double accommodation() const;
  double wall_temperature(double s) const;
  /// Throws InvalidArgument on inconsistent fields.
  void validate() const;

  static BoundarySpec periodic() { return {}; }
  static BoundarySpec specular() { return {BoundaryKind::specular, 0.0}; }
  static BoundarySpec diffuse(double T_w, const Vec3& u_w = {}) {
    return {BoundaryKind::diffuse, 1.0, T_w, 0.0, 1.0, u_w};
  }
};

/// Cell interface; the normal points from `left` to `right` along `axis`.
/// A boundary face has exactly one of left/right equal to kNone.
struct Face {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t left = kNone;
  std::size_t right = kNone;
  int axis = 0;
  double area = 1.0;
  bool periodic = false;
};

/// Uniform Cartesian mesh of an interval (dim 1) or rectangle (dim 2).
/// Cells are numbered with x slowest: index = ix * ny + iy.
class SpatialMesh {
 public:
  SpatialMesh(int dim, std::array<double, 2> lo, std::array<double, 2> hi, std::array<int, 2> cells,
              std::array<BoundarySpec, 4> walls);

  int dim() const { return dim_; }
  int cells(int axis) const { return cells_[static_cast<std::size_t>(axis)]; }
  double lo(int axis) const { return lo_[static_cast<std::size_t>(axis)]; }
  double hi(int axis) const { return hi_[static_cast<std::size_t>(axis)]; }
  double spacing(int axis) const { return dx_[static_cast<std::size_t>(axis)]; }
  double cell_measure() const { return measure_; }
  std::size_t size() const { return size_; }

  std::size_t index(int ix, int iy = 0) const;
  std::array<int, 2> coords(std::size_t cell) const;
  std::array<double, 2> center(std::size_t cell) const;

  const BoundarySpec& boundary(Wall w) const { return walls_[static_cast<std::size_t>(w)]; }
  bool periodic(int axis) const;

  const std::vector<Face>& faces() const { return faces_; }

 private:
  int dim_;
  std::array<double, 2> lo_;
  std::array<double, 2> hi_;
  std::array<int, 2> cells_;
  std::array<double, 2> dx_;
  double measure_;
  std::size_t size_;
  std::array<BoundarySpec, 4> walls_;
  std::vector<Face> faces_;
};

/// f per spatial cell per velocity node, cell-major.
struct DistributionField {
  DistributionField() = default;
  DistributionField(std::shared_ptr<const VelocityGrid> grid, std::size_t cells);

  std::shared_ptr<const VelocityGrid> grid;
  std::size_t cells = 0;
  std::vector<double> values;
  double time = 0.0;

  std::size_t slice_size() const { return grid->size(); }
  std::span<double> slice(std::size_t cell) {
    return std::span<double>(values).subspan(cell * grid->size(), grid->size());
  }
  std::span<const double> slice(std::size_t cell) const {
    return std::span<const double>(values).subspan(cell * grid->size(), grid->size());
  }
};

}  // namespace kinspec
