#include <cmath>

#include "kinspec/error.hpp"
#include "kinspec/transport.hpp"

namespace kinspec {

std::string to_string(ForceScheme scheme) {
  return scheme == ForceScheme::upwind ? "upwind" : "limited";
}

ForceScheme force_scheme_from_string(const std::string& name) {
  if (name == "upwind") return ForceScheme::upwind;
  if (name == "limited") return ForceScheme::limited;
  throw InvalidArgument("unknown force scheme '" + name + "'");
}

void force_increment(const VelocityGrid& grid, std::span<const double> f, double a, double dt, int axis,
                     std::span<double> out, ForceScheme scheme) {
  if (f.size() != grid.size() || out.size() != grid.size()) {
    throw InvalidArgument("slice size does not match velocity grid");
  }
  if (axis < 0 || axis >= grid.dim()) throw InvalidArgument("force axis outside velocity dimension");
  if (a == 0.0) return;
  const int n = grid.nodes_per_axis();
  const double dv = grid.spacing();
  const double nu = std::abs(a) * dt / dv;
  std::size_t stride = 1;
  for (int b = grid.dim() - 1; b > axis; --b) stride *= static_cast<std::size_t>(n);
  const std::size_t lines = grid.size() / static_cast<std::size_t>(n);

  std::vector<double> flux(static_cast<std::size_t>(n) + 1);
  for (std::size_t line = 0; line < lines; ++line) {
    // base offset of the line: split line into (outer, inner) around the axis
    const std::size_t inner = line % stride;
    const std::size_t outer = line / stride;
    const std::size_t base = outer * stride * static_cast<std::size_t>(n) + inner;
    auto at = [&](int j) -> double {
      if (j < 0 || j >= n) return 0.0;
      return f[base + static_cast<std::size_t>(j) * stride];
    };
    flux[0] = 0.0;
    flux[static_cast<std::size_t>(n)] = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
      // face between nodes j and j+1
      double up;
      if (a > 0.0) {
        up = scheme == ForceScheme::upwind ? at(j) : limited_face_value(at(j - 1), at(j), at(j + 1), Limiter::minmod, nu);
      } else {
        up = scheme == ForceScheme::upwind ? at(j + 1)
                                           : limited_face_value(at(j + 2), at(j + 1), at(j), Limiter::minmod, nu);
      }
      flux[static_cast<std::size_t>(j) + 1] = a * up;
    }
    for (int j = 0; j < n; ++j) {
      out[base + static_cast<std::size_t>(j) * stride] -=
          dt / dv * (flux[static_cast<std::size_t>(j) + 1] - flux[static_cast<std::size_t>(j)]);
    }
  }
}

double edge_mass_ratio(const VelocityGrid& grid, std::span<const double> f, int axis) {
  const int n = grid.nodes_per_axis();
  double edge = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    total += std::abs(f[j]);
    const int k = grid.unflatten(j)[static_cast<std::size_t>(axis)];
    if (k == 0 || k == n - 1) edge += std::abs(f[j]);
  }
  return total > 0.0 ? edge / total : 0.0;
}

}  // namespace kinspec
