#include "kinspec/time_integration.hpp"

#include <cmath>

#include "kinspec/error.hpp"

namespace kinspec {

std::string to_string(StepMode mode) { return mode == StepMode::imex ? "imex" : "explicit"; }

StepMode step_mode_from_string(const std::string& name) {
  if (name == "imex") return StepMode::imex;
  if (name == "explicit") return StepMode::explicit_euler;
  throw InvalidArgument("unknown step mode '" + name + "'");
}

void StepConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be positive");
  if (!(cfl_max > 0.0 && cfl_max <= 1.0)) throw InvalidArgument("cfl_max must lie in (0, 1]");
  if (!(lambda_scale >= 0.0)) throw InvalidArgument("lambda_scale must be non-negative");
  if (!(stiffness_factor > 0.0)) throw InvalidArgument("stiffness_factor must be positive");
  if (!std::isfinite(force)) throw InvalidArgument("force must be finite");
  if (gamma < 0.0 || gamma > 1.0) throw InvalidArgument("gamma must lie in [0, 1]");
}

double lambda_estimate(double rho, double T, double scale, double gamma) {
  if (!(rho > 0.0)) return 0.0;
  if (gamma == 0.0) return scale * rho;
  if (!(T > 0.0)) throw DegenerateState("penalty rate needs a positive temperature");
  return scale * rho * std::pow(T, 0.5 * gamma);
}

double lambda_estimate(const Moments& m, double scale, double gamma) {
  return lambda_estimate(m.rho, m.T, scale, gamma);
}

CflBound cfl_dt(const VelocityGrid& grid, const SpatialMesh& mesh, double cfl_max) {
  double rate = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double s = 0.0;
    for (int a = 0; a < mesh.dim(); ++a) s += std::abs(grid.component(a)[j]) / mesh.spacing(a);
    rate = std::max(rate, s);
  }
  CflBound b;
  if (rate > 0.0) {
    b.dt = cfl_max / rate;
    b.unbounded = false;
  }
  return b;
}

}  // namespace kinspec
