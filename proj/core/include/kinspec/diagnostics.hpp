#pragma once

#include <vector>

#include "kinspec/mesh.hpp"
#include "kinspec/velocity_grid.hpp"

namespace kinspec {

struct EntropyTriple {
  /// Relative to the global Maxwellian built from the discrete global totals.
  double Hg = 0.0;
  /// Relative to the local Maxwellian of each cell.
  double Hl = 0.0;
  /// Hydrodynamic part sum_i m_i rho_i log(rho_i / T_i^{d/2}) - Mass log(rho_bar / T_bar^{d/2}),
  /// so that Hg = Hl + Hh holds for the discrete sums.
  double Hh = 0.0;
};

/// Integrals over the domain: mass, momentum and kinetic energy (|v|^2 / 2).
struct Totals {
  double mass = 0.0;
  Vec3 momentum{};
  double energy = 0.0;
};

Totals totals(const DistributionField& f, const SpatialMesh& mesh);

/// Moments of every cell. Throws DegenerateState naming the cell.
std::vector<Moments> cell_moments(const DistributionField& f, const SpatialMesh& mesh,
                                  double rho_floor = kDefaultRhoFloor);

/// Relative entropies of the clamped field c = max(f, f_floor):
/// Hg = sum c log(c / M_g), Hl = sum c log(c / M_l), and the hydrodynamic part
/// Hh = sum rho log(rho / T^(d/2)) - Mass log(rho_bar / T_bar^(d/2)).
/// For a non-negative field Hg = Hl + Hh up to rounding.
EntropyTriple entropies(const DistributionField& f, const SpatialMesh& mesh, double rho_floor = kDefaultRhoFloor,
                        double f_floor = kEntropyFloor);

/// Global Maxwellian parameters (rho_bar, u_bar, T_bar) from domain totals.
/// Walls exchange normal momentum, so u_bar is zero along every non-periodic
/// space axis and that kinetic energy counts as heat.
Moments global_moments(const Totals& t, const SpatialMesh& mesh, int velocity_dim);

/// sum_i m_i dv^d sum_j |f - g| over the whole field.
double l1_distance(const DistributionField& f, const DistributionField& g, const SpatialMesh& mesh);

/// L1 distance between f and its local Maxwellian field.
double distance_to_local_maxwellian(const DistributionField& f, const SpatialMesh& mesh,
                                    double rho_floor = kDefaultRhoFloor);

}  // namespace kinspec
