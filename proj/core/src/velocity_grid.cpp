#include "kinspec/velocity_grid.hpp"

#include <cmath>
#include <string>

#include "kinspec/error.hpp"

namespace kinspec {

VelocityGrid::VelocityGrid(int dim, int nodes_per_axis, double half_width, double truncation_radius)
    : dim_(dim), n_(nodes_per_axis), half_width_(half_width) {
  if (dim != 2 && dim != 3) {
    throw InvalidArgument("velocity grid dimension must be 2 or 3, got " + std::to_string(dim));
  }
  if (nodes_per_axis < 2 || nodes_per_axis % 2 != 0) {
    throw InvalidArgument("nodes per velocity axis must be even and >= 2, got " +
                          std::to_string(nodes_per_axis));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidArgument("velocity half-width must be positive");
  }
  radius_ = truncation_radius > 0.0 ? truncation_radius : default_truncation_radius(half_width);
  spacing_ = 2.0 * half_width / n_;
  cell_volume_ = std::pow(spacing_, dim_);
  size_ = 1;
  for (int a = 0; a < dim_; ++a) size_ *= static_cast<std::size_t>(n_);

  axis_.resize(static_cast<std::size_t>(n_));
  // built from the centre outward so that node(n - 1 - j) == -node(j) exactly
  for (int j = n_ / 2; j < n_; ++j) {
    const double v = (j - n_ / 2 + 0.5) * spacing_;
    axis_[static_cast<std::size_t>(j)] = v;
    axis_[static_cast<std::size_t>(n_ - 1 - j)] = -v;
  }

  for (int a = 0; a < dim_; ++a) {
    auto& comp = components_[static_cast<std::size_t>(a)];
    comp.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) comp[i] = axis_[static_cast<std::size_t>(unflatten(i)[a])];
  }
}

double VelocityGrid::default_truncation_radius(double half_width) {
  return 2.0 * half_width / (2.0 + std::sqrt(2.0));
}

std::array<int, 3> VelocityGrid::unflatten(std::size_t index) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    idx[static_cast<std::size_t>(a)] = static_cast<int>(index % static_cast<std::size_t>(n_));
    index /= static_cast<std::size_t>(n_);
  }
  return idx;
}

std::size_t VelocityGrid::flatten(const std::array<int, 3>& idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim_; ++a) flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
  return flat;
}

Vec3 VelocityGrid::velocity(std::size_t index) const {
  Vec3 v{0.0, 0.0, 0.0};
  for (int a = 0; a < dim_; ++a) v[static_cast<std::size_t>(a)] = components_[static_cast<std::size_t>(a)][index];
  return v;
}

std::size_t VelocityGrid::reflect(std::size_t index, int axis) const {
  auto idx = unflatten(index);
  idx[static_cast<std::size_t>(axis)] = n_ - 1 - idx[static_cast<std::size_t>(axis)];
  return flatten(idx);
}

bool VelocityGrid::operator==(const VelocityGrid& other) const {
  return dim_ == other.dim_ && n_ == other.n_ && half_width_ == other.half_width_ &&
         radius_ == other.radius_;
}

double mass(const VelocityGrid& grid, std::span<const double> f) {
  double s = 0.0;
  for (double x : f) s += x;
  return s * grid.cell_volume();
}

Moments moments(const VelocityGrid& grid, std::span<const double> f, double rho_floor) {
  if (f.size() != grid.size()) throw InvalidArgument("slice size does not match velocity grid");
  const int d = grid.dim();
  Moments m;
  m.dim = d;

  double s0 = 0.0;
  Vec3 s1{};
  for (std::size_t j = 0; j < f.size(); ++j) {
    s0 += f[j];
    for (int a = 0; a < d; ++a) s1[static_cast<std::size_t>(a)] += grid.component(a)[j] * f[j];
  }
  const double w = grid.cell_volume();
  m.rho = w * s0;
  if (!(m.rho > rho_floor)) {
    throw DegenerateState("density " + std::to_string(m.rho) + " at or below floor");
  }
  for (int a = 0; a < d; ++a) m.u[static_cast<std::size_t>(a)] = w * s1[static_cast<std::size_t>(a)] / m.rho;

  double e = 0.0;
  Vec3 q{};
  for (std::size_t j = 0; j < f.size(); ++j) {
    Vec3 c{};
    double c2 = 0.0;
    for (int a = 0; a < d; ++a) {
      c[static_cast<std::size_t>(a)] = grid.component(a)[j] - m.u[static_cast<std::size_t>(a)];
      c2 += c[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(a)];
    }
    e += c2 * f[j];
    for (int a = 0; a < d; ++a) q[static_cast<std::size_t>(a)] += c[static_cast<std::size_t>(a)] * c2 * f[j];
  }
  m.T = w * e / (d * m.rho);
  m.p = m.rho * m.T;
  for (int a = 0; a < d; ++a) m.q[static_cast<std::size_t>(a)] = 0.5 * w * q[static_cast<std::size_t>(a)];
  return m;
}

void maxwellian_into(const VelocityGrid& grid, double rho, const Vec3& u, double T,
                     std::span<double> out) {
  if (!(rho > 0.0) || !(T > 0.0)) {
    throw InvalidArgument("Maxwellian requires rho > 0 and T > 0");
  }
  if (out.size() != grid.size()) throw InvalidArgument("slice size does not match velocity grid");
  const int d = grid.dim();
  const double norm = rho / std::pow(2.0 * kPi * T, 0.5 * d);
  const double inv2T = 1.0 / (2.0 * T);
  for (std::size_t j = 0; j < out.size(); ++j) {
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const double c = grid.component(a)[j] - u[static_cast<std::size_t>(a)];
      r2 += c * c;
    }
    out[j] = norm * std::exp(-r2 * inv2T);
  }
}

std::vector<double> maxwellian(const VelocityGrid& grid, double rho, const Vec3& u, double T) {
  std::vector<double> out(grid.size());
  maxwellian_into(grid, rho, u, T, out);
  return out;
}

std::vector<double> maxwellian(const VelocityGrid& grid, const Moments& m) {
  return maxwellian(grid, m.rho, m.u, m.T);
}

double kinetic_entropy(const VelocityGrid& grid, std::span<const double> f, double floor) {
  double s = 0.0;
  for (double x : f) {
    const double c = std::max(x, floor);
    s += c * std::log(c);
  }
  return s * grid.cell_volume();
}

}  // namespace kinspec
