#include "kinspec/mesh.hpp"

#include <cmath>

#include "kinspec/error.hpp"

namespace kinspec {

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::specular: return "specular";
    case BoundaryKind::diffuse: return "diffuse";
    case BoundaryKind::maxwell_mix: return "maxwell_mix";
  }
  return "periodic";
}

BoundaryKind boundary_kind_from_string(const std::string& name) {
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "specular") return BoundaryKind::specular;
  if (name == "diffuse") return BoundaryKind::diffuse;
  if (name == "maxwell_mix") return BoundaryKind::maxwell_mix;
  throw InvalidArgument("unknown boundary kind '" + name + "'");
}

double BoundarySpec::accommodation() const {
  switch (kind) {
    case BoundaryKind::specular: return 0.0;
    case BoundaryKind::diffuse: return 1.0;
    case BoundaryKind::maxwell_mix: return alpha;
    case BoundaryKind::periodic: return 0.0;
  }
  return 0.0;
}

double BoundarySpec::wall_temperature(double s) const {
  if (T_w_amplitude == 0.0) return T_w;
  return T_w + T_w_amplitude * std::cos(2.0 * kPi * s / T_w_period);
}

void BoundarySpec::validate() const {
  if (kind == BoundaryKind::maxwell_mix && !(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("accommodation coefficient must lie in [0, 1]");
  }
  if (kind == BoundaryKind::diffuse || kind == BoundaryKind::maxwell_mix) {
    if (!(T_w - std::abs(T_w_amplitude) > 0.0)) throw InvalidArgument("wall temperature must stay positive");
    if (!(T_w_period > 0.0)) throw InvalidArgument("wall temperature period must be positive");
  }
}

SpatialMesh::SpatialMesh(int dim, std::array<double, 2> lo, std::array<double, 2> hi, std::array<int, 2> cells,
                         std::array<BoundarySpec, 4> walls)
    : dim_(dim), lo_(lo), hi_(hi), cells_(cells), walls_(walls) {
  if (dim != 1 && dim != 2) throw InvalidArgument("spatial dimension must be 1 or 2");
  if (dim == 1) {
    cells_[1] = 1;
    lo_[1] = 0.0;
    hi_[1] = 1.0;
    walls_[2] = BoundarySpec::periodic();
    walls_[3] = BoundarySpec::periodic();
  }
  size_ = 1;
  measure_ = 1.0;
  for (int a = 0; a < dim; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    if (cells_[ua] < 1) throw InvalidArgument("mesh needs at least one cell per axis");
    if (!(hi_[ua] > lo_[ua])) throw InvalidArgument("mesh extent must be positive");
    dx_[ua] = (hi_[ua] - lo_[ua]) / cells_[ua];
    measure_ *= dx_[ua];
    size_ *= static_cast<std::size_t>(cells_[ua]);
    const bool plo = walls_[2 * ua].kind == BoundaryKind::periodic;
    const bool phi = walls_[2 * ua + 1].kind == BoundaryKind::periodic;
    if (plo != phi) throw InvalidArgument("periodic boundaries must be paired on an axis");
  }
  if (dim == 1) dx_[1] = 1.0;
  for (const auto& w : walls_) w.validate();

  for (int a = 0; a < dim; ++a) {
    const double area = dim == 1 ? 1.0 : dx_[static_cast<std::size_t>(1 - a)];
    const int n_along = cells_[static_cast<std::size_t>(a)];
    const int n_across = dim == 1 ? 1 : cells_[static_cast<std::size_t>(1 - a)];
    for (int t = 0; t < n_across; ++t) {
      auto cell = [&](int s) { return a == 0 ? index(s, t) : index(t, s); };
      for (int s = 0; s + 1 < n_along; ++s) faces_.push_back({cell(s), cell(s + 1), a, area, false});
      if (periodic(a)) {
        faces_.push_back({cell(n_along - 1), cell(0), a, area, true});
      } else {
        faces_.push_back({Face::kNone, cell(0), a, area, false});
        faces_.push_back({cell(n_along - 1), Face::kNone, a, area, false});
      }
    }
  }
}

bool SpatialMesh::periodic(int axis) const {
  return walls_[static_cast<std::size_t>(2 * axis)].kind == BoundaryKind::periodic;
}

std::size_t SpatialMesh::index(int ix, int iy) const {
  return static_cast<std::size_t>(ix) * static_cast<std::size_t>(cells_[1]) + static_cast<std::size_t>(iy);
}

std::array<int, 2> SpatialMesh::coords(std::size_t cell) const {
  const auto ny = static_cast<std::size_t>(cells_[1]);
  return {static_cast<int>(cell / ny), static_cast<int>(cell % ny)};
}

std::array<double, 2> SpatialMesh::center(std::size_t cell) const {
  const auto c = coords(cell);
  return {lo_[0] + (c[0] + 0.5) * dx_[0], dim_ == 2 ? lo_[1] + (c[1] + 0.5) * dx_[1] : 0.0};
}

DistributionField::DistributionField(std::shared_ptr<const VelocityGrid> g, std::size_t n_cells)
    : grid(std::move(g)), cells(n_cells) {
  if (!grid) throw InvalidArgument("distribution field needs a velocity grid");
  values.assign(cells * grid->size(), 0.0);
}

}  // namespace kinspec
