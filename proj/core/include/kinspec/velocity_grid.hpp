#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace kinspec {

inline constexpr double kPi = 3.14159265358979323846;

/// Densities at or below this value are treated as vacuum.
inline constexpr double kDefaultRhoFloor = 1e-12;

/// Clamp applied inside logarithms of entropy functionals.
inline constexpr double kEntropyFloor = 1e-30;

using Vec3 = std::array<double, 3>;

/// Uniform cell-centred lattice on [-L, L]^d.
///
/// Nodes are v_j = -L + (j + 1/2) dv with dv = 2L/n, so the lattice is
/// closed under v -> -v and under a sign flip of any single component.
/// Flat indices are row-major with axis 0 slowest.
class VelocityGrid {
 public:
  /// `truncation_radius` <= 0 selects default_truncation_radius(half_width).
  VelocityGrid(int dim, int nodes_per_axis, double half_width, double truncation_radius = 0.0);

  /// R = 2L / (2 + sqrt 2): a distribution supported in B_R never meets its own
  /// periodic image during one collision in either truncated representation.
  static double default_truncation_radius(double half_width);

  int dim() const { return dim_; }
  int nodes_per_axis() const { return n_; }
  double half_width() const { return half_width_; }
  double truncation_radius() const { return radius_; }
  double spacing() const { return spacing_; }
  /// dv^d
  double cell_volume() const { return cell_volume_; }
  std::size_t size() const { return size_; }

  /// Coordinate of node j along any axis.
  double node(int j) const { return axis_[static_cast<std::size_t>(j)]; }
  std::span<const double> axis_nodes() const { return axis_; }

  /// Per-axis indices of a flat node index (unused trailing entries are 0).
  std::array<int, 3> unflatten(std::size_t index) const;
  std::size_t flatten(const std::array<int, 3>& idx) const;

  /// Velocity vector of a flat node index (unused trailing entries are 0).
  Vec3 velocity(std::size_t index) const;

  /// Component `axis` of every node, laid out like a slice.
  std::span<const double> component(int axis) const {
    return std::span<const double>(components_[static_cast<std::size_t>(axis)]);
  }

  /// Flat index of the node obtained by negating component `axis`.
  std::size_t reflect(std::size_t index, int axis) const;

  bool operator==(const VelocityGrid& other) const;

 private:
  int dim_;
  int n_;
  double half_width_;
  double radius_;
  double spacing_;
  double cell_volume_;
  std::size_t size_;
  std::vector<double> axis_;
  std::array<std::vector<double>, 3> components_;
};

/// Macroscopic fields of one velocity slice (k_B = 1).
struct Moments {
  int dim = 2;
  double rho = 0.0;
  Vec3 u{};
  double T = 0.0;
  double p = 0.0;
  Vec3 q{};
};

/// Density, mean velocity, temperature, pressure and heat flux of f.
/// Throws DegenerateState when rho <= rho_floor.
Moments moments(const VelocityGrid& grid, std::span<const double> f,
                double rho_floor = kDefaultRhoFloor);

/// Discrete mass dv^d * sum f (never throws).
double mass(const VelocityGrid& grid, std::span<const double> f);

/// Nodal samples of M[rho, u, T]. Throws InvalidArgument for rho <= 0 or T <= 0.
std::vector<double> maxwellian(const VelocityGrid& grid, double rho, const Vec3& u, double T);
std::vector<double> maxwellian(const VelocityGrid& grid, const Moments& m);
void maxwellian_into(const VelocityGrid& grid, double rho, const Vec3& u, double T,
                     std::span<double> out);

/// Clamped kinetic entropy dv^d * sum c log c with c = max(f, floor).
double kinetic_entropy(const VelocityGrid& grid, std::span<const double> f,
                       double floor = kEntropyFloor);

}  // namespace kinspec
