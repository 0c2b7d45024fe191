#include <cmath>

#include "kinspec/error.hpp"
#include "kinspec/transport.hpp"

namespace kinspec {

WallFaceResult boundary_face_distribution(const VelocityGrid& grid, std::span<const double> f_cell,
                                          const BoundarySpec& spec, int axis, int inward_sign,
                                          double wall_coordinate, std::span<double> face) {
  if (f_cell.size() != grid.size() || face.size() != grid.size()) {
    throw InvalidArgument("slice size does not match velocity grid");
  }
  if (axis < 0 || axis >= grid.dim()) throw InvalidArgument("wall normal axis outside velocity dimension");
  if (spec.kind == BoundaryKind::periodic) throw InvalidArgument("periodic sides have no wall distribution");

  const auto vn_axis = grid.component(axis);
  const double alpha = spec.accommodation();
  const double Tw = spec.wall_temperature(wall_coordinate);
  const int d = grid.dim();

  WallFaceResult res;
  double spec_den = 0.0;
  double diff_den = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double vn = inward_sign * vn_axis[j];
    if (vn < 0.0) {
      face[j] = f_cell[j];
      res.outgoing_flux -= vn * f_cell[j];
    } else {
      spec_den += vn * f_cell[grid.reflect(j, axis)];
      double r2 = 0.0;
      for (int a = 0; a < d; ++a) {
        const double c = grid.component(a)[j] - spec.u_w[static_cast<std::size_t>(a)];
        r2 += c * c;
      }
      const double m = std::exp(-r2 / (2.0 * Tw));
      face[j] = m;  // stash the wall Maxwellian shape
      diff_den += vn * m;
    }
  }

  const bool need_spec = alpha < 1.0;
  const bool need_diff = alpha > 0.0;
  if (res.outgoing_flux == 0.0) res.vacuum = true;
  if (need_spec) {
    if (spec_den != 0.0 && std::isfinite(spec_den)) {
      res.xi = res.outgoing_flux / spec_den;
    } else {
      res.vacuum = true;
    }
  }
  if (need_diff) {
    if (diff_den > 0.0 && std::isfinite(diff_den)) {
      res.mu = res.outgoing_flux / diff_den;
    } else {
      res.vacuum = true;
    }
  }
  if (res.vacuum) {
    res.xi = 0.0;
    res.mu = 0.0;
  }
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double vn = inward_sign * vn_axis[j];
    if (vn < 0.0) continue;
    double v = 0.0;
    if (need_spec) v += (1.0 - alpha) * res.xi * f_cell[grid.reflect(j, axis)];
    if (need_diff) v += alpha * res.mu * face[j];
    face[j] = v;
  }
  res.outgoing_flux *= grid.cell_volume();
  return res;
}

double normal_flux(const VelocityGrid& grid, std::span<const double> face, int axis, int sign) {
  const auto v = grid.component(axis);
  double s = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) s += v[j] * face[j];
  return sign * s * grid.cell_volume();
}

}  // namespace kinspec
