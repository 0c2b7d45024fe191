#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "kinspec/collision.hpp"
#include "kinspec/mesh.hpp"
#include "kinspec/transport.hpp"

namespace kinspec {

enum class StepMode { explicit_euler, imex };

std::string to_string(StepMode mode);
StepMode step_mode_from_string(const std::string& name);

struct StepConfig {
  double dt = 1e-3;
  double epsilon = 1.0;
  StepMode mode = StepMode::imex;
  /// Penalty rate lambda = lambda_scale * rho * T^{gamma/2}.
  double lambda_scale = 2.0;
  double gamma = 0.0;
  double cfl_max = 1.0;
  /// Explicit collisions require dt <= stiffness_factor * epsilon / lambda.
  double stiffness_factor = 2.0;
  /// Heun corrector on the explicit collision stage.
  bool heun = false;
  /// Strang splitting (half collision, transport, half collision) in explicit mode.
  bool strang = false;
  bool collisions = true;
  bool transport = true;
  /// Uniform acceleration along velocity axis force_axis.
  double force = 0.0;
  int force_axis = 1;
  ForceScheme force_scheme = ForceScheme::upwind;
  double rho_floor = kDefaultRhoFloor;

  void validate() const;
};

/// lambda_scale * rho * T^{gamma/2}; zero in vacuum (rho <= 0).
double lambda_estimate(double rho, double T, double scale, double gamma = 0.0);
double lambda_estimate(const Moments& m, double scale, double gamma = 0.0);

struct CflBound {
  /// Largest admissible dt; +inf when `unbounded`.
  double dt = std::numeric_limits<double>::infinity();
  /// No node moves (no transport constraint).
  bool unbounded = true;
};

/// Largest dt with dt * max_v sum_axes |v_axis| / dx_axis <= cfl_max.
CflBound cfl_dt(const VelocityGrid& grid, const SpatialMesh& mesh, double cfl_max);

/// Wall-clock seconds spent per phase.
struct PhaseTimings {
  double collision = 0.0;
  double transport = 0.0;
  double boundary = 0.0;
  double diagnostics = 0.0;
  double total = 0.0;
};

/// Advances a DistributionField on a mesh.
///
/// imex: f^{n+1} = [eps f~ + dt (Q(f^n) - lambda (M^n - f^n)) + lambda dt M^{n+1}] / (eps + lambda dt),
/// where f~ is the transported state and M^{n+1}, lambda come from the moments of f~.
/// Both Maxwellians are rescaled to the discrete mass of their state.
/// explicit: f^{n+1} = f~ + dt/eps Q(f~) (Lie), optionally with a Heun corrector or Strang order.
class Stepper {
 public:
  Stepper(const SpatialMesh& mesh, std::shared_ptr<const CollisionOperator> collision, StepConfig config,
          int threads = 1, TransportOptions transport = {});

  void step(DistributionField& f);
  void imex_step(DistributionField& f);
  void explicit_step(DistributionField& f);

  const StepConfig& config() const { return config_; }
  /// Replaces the configuration (dt, epsilon, mode, ...); re-checks the CFL bound.
  void set_config(const StepConfig& config);
  double courant_number() const { return transport_.courant_number(config_.dt); }
  const Transport& transport() const { return transport_; }
  PhaseTimings& timings() { return timings_; }
  const PhaseTimings& timings() const { return timings_; }

 private:
  struct Worker {
    std::unique_ptr<CollisionWorkspace> collision;
    std::vector<double> q;
    std::vector<double> q2;
    std::vector<double> m_old;
    std::vector<double> m_new;
    std::vector<double> tmp;
  };
  void check_cfl() const;
  void check_stiffness(const DistributionField& f) const;
  void transport_pass(const DistributionField& f, std::vector<double>& out);
  void collide_cell(std::span<const double> f, std::span<double> out, double h, Worker& w) const;

  const SpatialMesh& mesh_;
  std::shared_ptr<const CollisionOperator> collision_;
  const VelocityGrid& grid_;
  StepConfig config_;
  int threads_;
  Transport transport_;
  std::vector<Worker> workers_;
  std::vector<double> tilde_;
  PhaseTimings timings_;
};

}  // namespace kinspec
