#include "kinspec/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kinspec/error.hpp"

namespace kinspec {

std::string to_string(Limiter limiter) {
  switch (limiter) {
    case Limiter::minmod: return "minmod";
    case Limiter::van_leer: return "van_leer";
    case Limiter::superbee: return "superbee";
  }
  return "minmod";
}

Limiter limiter_from_string(const std::string& name) {
  if (name == "minmod") return Limiter::minmod;
  if (name == "van_leer") return Limiter::van_leer;
  if (name == "superbee") return Limiter::superbee;
  throw InvalidArgument("unknown limiter '" + name + "'");
}

double limit_slope(double backward, double forward, Limiter limiter) {
  if (backward * forward <= 0.0) return 0.0;
  const double s = backward > 0.0 ? 1.0 : -1.0;
  const double a = std::abs(backward);
  const double b = std::abs(forward);
  switch (limiter) {
    case Limiter::minmod: return s * std::min(a, b);
    case Limiter::van_leer: return 2.0 * backward * forward / (backward + forward);
    case Limiter::superbee: return s * std::max(std::min(2.0 * a, b), std::min(a, 2.0 * b));
  }
  return 0.0;
}

double limited_face_value(double f_prev, double f_i, double f_j, Limiter limiter, double courant) {
  return f_i + 0.5 * (1.0 - courant) * limit_slope(f_i - f_prev, f_j - f_i, limiter);
}

Transport::Transport(const VelocityGrid& grid, const SpatialMesh& mesh, TransportOptions options)
    : grid_(grid), mesh_(mesh), options_(options) {
  if (grid.dim() < mesh.dim()) throw InvalidArgument("velocity dimension below spatial dimension");
  for (int a = 0; a < mesh.dim(); ++a) {
    if (mesh.periodic(a)) continue;
    const int n_across = mesh.dim() == 1 ? 1 : mesh.cells(1 - a);
    const int n_along = mesh.cells(a);
    const Wall lo = a == 0 ? Wall::x_lo : Wall::y_lo;
    const Wall hi = a == 0 ? Wall::x_hi : Wall::y_hi;
    slot_[static_cast<std::size_t>(lo)].resize(static_cast<std::size_t>(n_across));
    slot_[static_cast<std::size_t>(hi)].resize(static_cast<std::size_t>(n_across));
    for (int t = 0; t < n_across; ++t) {
      const std::size_t first = a == 0 ? mesh.index(0, t) : mesh.index(t, 0);
      const std::size_t last = a == 0 ? mesh.index(n_along - 1, t) : mesh.index(t, n_along - 1);
      const double coord = mesh.dim() == 1 ? 0.0 : mesh.center(first)[static_cast<std::size_t>(1 - a)];
      slot_[static_cast<std::size_t>(lo)][static_cast<std::size_t>(t)] = wall_faces_.size();
      wall_faces_.push_back({lo, first, a, +1, coord});
      slot_[static_cast<std::size_t>(hi)][static_cast<std::size_t>(t)] = wall_faces_.size();
      wall_faces_.push_back({hi, last, a, -1, coord});
    }
  }
  wall_values_.assign(wall_faces_.size() * grid.size(), 0.0);
  wall_results_.resize(wall_faces_.size());
}

void Transport::update_walls(const DistributionField& f) { update_walls(f, 0, wall_faces_.size()); }

void Transport::update_walls(const DistributionField& f, std::size_t begin, std::size_t end) {
  const std::size_t S = grid_.size();
  for (std::size_t w = begin; w < end && w < wall_faces_.size(); ++w) {
    const auto& wf = wall_faces_[w];
    std::span<double> out(wall_values_.data() + w * S, S);
    wall_results_[w] = boundary_face_distribution(grid_, f.slice(wf.cell), mesh_.boundary(wf.wall), wf.axis,
                                                  wf.inward_sign, wf.coordinate, out);
    if (wall_results_[w].vacuum) vacuum_events_.fetch_add(1, std::memory_order_relaxed);
  }
}

std::size_t Transport::wall_slot(Wall wall, std::size_t cell) const {
  const auto c = mesh_.coords(cell);
  const int axis = (wall == Wall::x_lo || wall == Wall::x_hi) ? 0 : 1;
  const int t = mesh_.dim() == 1 ? 0 : c[static_cast<std::size_t>(1 - axis)];
  const auto& slots = slot_[static_cast<std::size_t>(wall)];
  if (static_cast<std::size_t>(t) >= slots.size()) throw InvalidArgument("no wall face on that side");
  return slots[static_cast<std::size_t>(t)];
}

std::span<const double> Transport::wall_distribution(Wall wall, std::size_t cell) const {
  const std::size_t S = grid_.size();
  return std::span<const double>(wall_values_.data() + wall_slot(wall, cell) * S, S);
}

const WallFaceResult& Transport::wall_result(Wall wall, std::size_t cell) const {
  return wall_results_[wall_slot(wall, cell)];
}

double Transport::courant_number(double dt) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < grid_.size(); ++j) {
    double s = 0.0;
    for (int a = 0; a < mesh_.dim(); ++a) s += std::abs(grid_.component(a)[j]) / mesh_.spacing(a);
    worst = std::max(worst, s);
  }
  return worst * dt;
}

void Transport::add_increment(const DistributionField& f, double dt, std::span<double> out, std::size_t begin,
                              std::size_t end) const {
  enum Kind { kCell, kWallLo, kWallHi };
  const std::size_t S = grid_.size();
  const Limiter lim = options_.limiter;
  for (std::size_t cell = begin; cell < end; ++cell) {
    const auto c = mesh_.coords(cell);
    double* dst = out.data() + cell * S;
    for (int a = 0; a < mesh_.dim(); ++a) {
      const int n = mesh_.cells(a);
      const int s0 = c[static_cast<std::size_t>(a)];
      const bool per = mesh_.periodic(a);
      const double dx = mesh_.spacing(a);
      // stencil offsets -2..2
      std::array<Kind, 5> kind{};
      std::array<const double*, 5> ptr{};
      for (int o = -2; o <= 2; ++o) {
        const auto uo = static_cast<std::size_t>(o + 2);
        int t = s0 + o;
        if (per) t = ((t % n) + n) % n;
        if (t < 0 || t >= n) {
          kind[uo] = t < 0 ? kWallLo : kWallHi;
          ptr[uo] = nullptr;
        } else {
          kind[uo] = kCell;
          auto cc = c;
          cc[static_cast<std::size_t>(a)] = t;
          ptr[uo] = f.values.data() + mesh_.index(cc[0], cc[1]) * S;
        }
      }
      const double* wlo = nullptr;
      const double* whi = nullptr;
      if (!per) {
        const Wall lo = a == 0 ? Wall::x_lo : Wall::y_lo;
        const Wall hi = a == 0 ? Wall::x_hi : Wall::y_hi;
        wlo = wall_distribution(lo, cell).data();
        whi = wall_distribution(hi, cell).data();
      }
      const auto v = grid_.component(a);
      for (std::size_t j = 0; j < S; ++j) {
        const double vel = v[j];
        const double nu = options_.time_centered ? std::abs(vel) * dt / dx : 0.0;
        auto value = [&](int o) {
          const auto uo = static_cast<std::size_t>(o + 2);
          return ptr[uo][j];
        };
        // neighbour value of cell o on side `side`, with the wall ghost 2 f_face - f_o
        auto neighbour = [&](int o, int side) {
          const auto un = static_cast<std::size_t>(o + side + 2);
          if (kind[un] == kCell) return ptr[un][j];
          const double w = kind[un] == kWallLo ? wlo[j] : whi[j];
          return 2.0 * w - value(o);
        };
        auto face_value = [&](int o, int toward) {
          const double fo = value(o);
          const double slope = limit_slope(fo - neighbour(o, -1), neighbour(o, +1) - fo, lim);
          return fo + toward * 0.5 * (1.0 - nu) * slope;
        };
        auto flux = [&](int left) {
          const auto ul = static_cast<std::size_t>(left + 2);
          const auto ur = static_cast<std::size_t>(left + 3);
          if (kind[ur] == kWallHi) return vel * whi[j];
          if (kind[ul] == kWallLo) return vel * wlo[j];
          return vel > 0.0 ? vel * face_value(left, +1) : vel * face_value(left + 1, -1);
        };
        dst[j] -= dt / dx * (flux(0) - flux(-1));
      }
    }
  }
}

}  // namespace kinspec
