#pragma once

#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kinspec/mesh.hpp"
#include "kinspec/velocity_grid.hpp"

namespace kinspec {

enum class Limiter { minmod, van_leer, superbee };

std::string to_string(Limiter limiter);
Limiter limiter_from_string(const std::string& name);

/// Limited slope from backward and forward differences.
double limit_slope(double backward, double forward, Limiter limiter = Limiter::minmod);

/// Face value reconstructed from the upwind cell i toward its neighbour j:
/// f_i + (1 - courant)/2 * limiter(f_i - f_prev, f_j - f_i), where f_prev is
/// the neighbour of i on the far side. courant = |v| dt / dx time-centres the
/// reconstruction; 0 gives the plain spatial interpolant.
double limited_face_value(double f_prev, double f_i, double f_j, Limiter limiter = Limiter::minmod,
                          double courant = 0.0);

struct WallFaceResult {
  double xi = 0.0;
  double mu = 0.0;
  double outgoing_flux = 0.0;
  bool vacuum = false;
};

/// Distribution on a wall face. `axis` is the wall-normal axis and
/// `inward_sign` the sign of the inward normal along it. Velocities leaving
/// the domain copy f_cell; entering ones get
/// (1 - alpha) xi f_cell(R v) + alpha mu exp(-|v - u_w|^2 / (2 T_w)), with xi
/// and mu fixed by zero net normal flux. `wall_coordinate` feeds the wall
/// temperature profile.
WallFaceResult boundary_face_distribution(const VelocityGrid& grid, std::span<const double> f_cell,
                                          const BoundarySpec& spec, int axis, int inward_sign,
                                          double wall_coordinate, std::span<double> face);

/// Net normal flux sum_j (v_j . n) face_j dv^d through a face with unit normal e_axis * sign.
double normal_flux(const VelocityGrid& grid, std::span<const double> face, int axis, int sign);

struct TransportOptions {
  Limiter limiter = Limiter::minmod;
  /// Scale the reconstruction slope by (1 - courant) for second order in time.
  bool time_centered = true;
};

/// Finite-volume transport increments -dt/m_i sum_faces F on a SpatialMesh.
///
/// Usage per step: update_walls(f) once (boundary phase), then
/// add_increment(f, dt, out, begin, end) over disjoint cell ranges.
class Transport {
 public:
  Transport(const VelocityGrid& grid, const SpatialMesh& mesh, TransportOptions options = {});

  const SpatialMesh& mesh() const { return mesh_; }
  const VelocityGrid& grid() const { return grid_; }

  /// Recomputes every wall face distribution from the current field.
  void update_walls(const DistributionField& f);
  /// Same, for the faces with index in [begin, end) of wall_faces().
  void update_walls(const DistributionField& f, std::size_t begin, std::size_t end);
  std::size_t wall_face_count() const { return wall_faces_.size(); }

  /// out[cell] += -dt/dx sum over faces of the cell, for cells in [begin, end).
  void add_increment(const DistributionField& f, double dt, std::span<double> out, std::size_t begin,
                     std::size_t end) const;

  /// Face distribution of the wall face adjacent to `cell` on `wall`.
  std::span<const double> wall_distribution(Wall wall, std::size_t cell) const;
  const WallFaceResult& wall_result(Wall wall, std::size_t cell) const;

  /// max over nodes of dt * sum_axes |v_axis| / dx_axis.
  double courant_number(double dt) const;
  /// Vacuum wall faces met since construction.
  std::size_t vacuum_events() const { return vacuum_events_; }

 private:
  struct WallFace {
    Wall wall;
    std::size_t cell;
    int axis;
    int inward_sign;
    double coordinate;
  };
  std::size_t wall_slot(Wall wall, std::size_t cell) const;

  const VelocityGrid& grid_;
  const SpatialMesh& mesh_;
  TransportOptions options_;
  std::vector<WallFace> wall_faces_;
  // face distributions, one slice per wall face
  std::vector<double> wall_values_;
  std::vector<WallFaceResult> wall_results_;
  // slot lookup: [wall][tangential index]
  std::array<std::vector<std::size_t>, 4> slot_;
  std::atomic<std::size_t> vacuum_events_{0};
};

enum class ForceScheme { upwind, limited };

std::string to_string(ForceScheme scheme);
ForceScheme force_scheme_from_string(const std::string& name);

/// out += -dt d(a f)/dv_axis, conservative in v with zero flux through the
/// edges of the velocity box.
void force_increment(const VelocityGrid& grid, std::span<const double> f, double a, double dt, int axis,
                     std::span<double> out, ForceScheme scheme = ForceScheme::upwind);

/// Fraction of the mass of f sitting on the two outermost node layers along `axis`.
double edge_mass_ratio(const VelocityGrid& grid, std::span<const double> f, int axis);

}  // namespace kinspec
