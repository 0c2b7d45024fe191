#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "kinspec/mesh.hpp"
#include "kinspec/time_integration.hpp"
#include "kinspec/transport.hpp"
#include "kinspec/velocity_grid.hpp"

namespace kinspec {

enum class InitialKind {
  /// Two counter-drifting Maxwellians with a modulated density and temperature.
  trend,
  /// Local Maxwellian with constant density and velocity and a temperature
  /// linear in x between temperature_lo and temperature_hi.
  local_maxwellian,
};

std::string to_string(InitialKind kind);
InitialKind initial_kind_from_string(const std::string& name);

struct InitialData {
  InitialKind kind = InitialKind::local_maxwellian;
  // trend
  double amplitude = 0.2;
  Vec3 drift{};
  double temperature = 1.0;
  double temperature_modulation = 0.1;
  /// Rescale velocities and amplitude so that mass = 1 and energy = 1.
  bool normalize = true;
  // local_maxwellian
  double density = 1.0;
  Vec3 velocity{};
  double temperature_lo = 1.0;
  double temperature_hi = 1.0;
};

struct SolverSettings {
  /// "fast" or "classical".
  std::string collision = "fast";
  /// Angular nodes of the fast kernel (M, or M1 in 3D).
  int angles = 8;
  int azimuth = 8;
  int padding = 0;
  double gamma = 0.0;
  StepMode mode = StepMode::imex;
  double lambda_scale = 2.0;
  double cfl_max = 1.0;
  double stiffness_factor = 2.0;
  bool heun = false;
  bool strang = false;
  Limiter limiter = Limiter::minmod;
  ForceScheme force_scheme = ForceScheme::upwind;
  int threads = 1;
};

struct OutputPolicy {
  std::string dir = "out";
  /// Steps between entropy/audit samples.
  int diagnostics_every = 10;
  /// Simulated time between profile dumps; 0 writes only the final profile.
  double profile_every = 0.0;
  /// Simulated time between checkpoints; 0 means every 10% of t_final.
  double checkpoint_every = 0.0;
};

/// Full description of a run.
struct ScenarioConfig {
  std::string scenario = "custom";
  int space_dim = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  std::array<int, 2> cells{64, 1};
  int velocity_dim = 2;
  int nv = 32;
  double half_width = 8.0;
  /// Truncation radius; 0 selects the default for half_width.
  double radius = 0.0;
  double epsilon = 1.0;
  double dt = 1e-3;
  double t_final = 1.0;
  /// x_lo, x_hi, y_lo, y_hi
  std::array<BoundarySpec, 4> walls{};
  InitialData initial{};
  double force = 0.0;
  int force_axis = 1;
  bool long_running = false;
  SolverSettings solver{};
  OutputPolicy output{};

  /// Throws ConfigError with the offending field path.
  void validate() const;
  int steps() const;
};

ScenarioConfig build_trend_to_equilibrium(double epsilon = 1.0);
ScenarioConfig build_temperature_gradient(double epsilon = 0.1);
ScenarioConfig build_poiseuille(double a = 0.5, double epsilon = 0.1);
/// `coarse` selects the CI-scale profile (25 x 25 cells, 16 velocity nodes).
ScenarioConfig build_ghost_effect(double epsilon = 0.02, bool coarse = false);

/// Named presets: trend, temperature_gradient, poiseuille, ghost, ghost_coarse.
/// `epsilon` <= 0 keeps the preset's own value.
ScenarioConfig preset(const std::string& name, double epsilon = 0.0);
std::vector<std::string> preset_names();

std::shared_ptr<const VelocityGrid> make_velocity_grid(const ScenarioConfig& c);
SpatialMesh make_mesh(const ScenarioConfig& c);
StepConfig make_step_config(const ScenarioConfig& c);

/// Initial distribution of the scenario on the given grid and mesh.
DistributionField initial_field(const ScenarioConfig& c, const SpatialMesh& mesh,
                                std::shared_ptr<const VelocityGrid> grid);

}  // namespace kinspec
