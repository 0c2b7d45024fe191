#include "kinspec/scenarios.hpp"

#include <cmath>

#include "kinspec/diagnostics.hpp"
#include "kinspec/error.hpp"

namespace kinspec {

std::string to_string(InitialKind kind) { return kind == InitialKind::trend ? "trend" : "local_maxwellian"; }

InitialKind initial_kind_from_string(const std::string& name) {
  if (name == "trend") return InitialKind::trend;
  if (name == "local_maxwellian") return InitialKind::local_maxwellian;
  throw InvalidArgument("unknown initial data kind '" + name + "'");
}

namespace {

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw ConfigError(path + ": " + what);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(space_dim == 1 || space_dim == 2, "space.dim", "must be 1 or 2");
  for (int a = 0; a < space_dim; ++a) {
    const std::string idx = "[" + std::to_string(a) + "]";
    require(cells[static_cast<std::size_t>(a)] >= 1, "space.cells" + idx, "must be at least 1");
    require(hi[static_cast<std::size_t>(a)] > lo[static_cast<std::size_t>(a)], "space.hi" + idx,
            "must exceed space.lo" + idx);
  }
  require(velocity_dim == 2 || velocity_dim == 3, "velocity.dim", "must be 2 or 3");
  require(velocity_dim >= space_dim, "velocity.dim", "must be at least space.dim");
  require(nv >= 2 && nv % 2 == 0, "velocity.nodes", "must be even and at least 2");
  require(half_width > 0.0, "velocity.half_width", "must be positive");
  require(radius >= 0.0, "velocity.radius", "must be non-negative");
  require(epsilon > 0.0 && std::isfinite(epsilon), "physics.epsilon", "must be positive");
  require(dt > 0.0 && std::isfinite(dt), "time.dt", "must be positive");
  require(t_final >= 0.0 && std::isfinite(t_final), "time.t_final", "must be non-negative");
  require(std::isfinite(force), "physics.force", "must be finite");
  require(force_axis >= 0 && force_axis < velocity_dim, "physics.force_axis", "outside velocity dimension");
  const char* names[4] = {"x_lo", "x_hi", "y_lo", "y_hi"};
  for (int w = 0; w < 2 * space_dim; ++w) {
    try {
      walls[static_cast<std::size_t>(w)].validate();
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("boundaries.") + names[w] + ": " + e.what());
    }
  }
  for (int a = 0; a < space_dim; ++a) {
    const bool p0 = walls[static_cast<std::size_t>(2 * a)].kind == BoundaryKind::periodic;
    const bool p1 = walls[static_cast<std::size_t>(2 * a + 1)].kind == BoundaryKind::periodic;
    require(p0 == p1, std::string("boundaries.") + names[2 * a + 1], "periodic sides must be paired");
  }
  if (initial.kind == InitialKind::local_maxwellian) {
    require(initial.density > 0.0, "initial.density", "must be positive");
    require(initial.temperature_lo > 0.0, "initial.temperature_lo", "must be positive");
    require(initial.temperature_hi > 0.0, "initial.temperature_hi", "must be positive");
  } else {
    require(initial.temperature > 0.0, "initial.temperature", "must be positive");
    require(std::abs(initial.temperature_modulation) < 1.0, "initial.temperature_modulation",
            "must be below 1 in magnitude");
    require(std::abs(initial.amplitude) < 1.0, "initial.amplitude", "must be below 1 in magnitude");
  }
  require(solver.collision == "fast" || solver.collision == "classical", "solver.collision",
          "must be 'fast' or 'classical'");
  require(solver.collision == "fast" || velocity_dim == 2, "solver.collision", "classical path needs velocity.dim 2");
  require(solver.angles >= 1, "solver.angles", "must be at least 1");
  require(solver.azimuth >= 1, "solver.azimuth", "must be at least 1");
  require(solver.padding == 0 || solver.padding >= nv - 1, "solver.padding", "must be 0 or at least nodes - 1");
  require(solver.gamma >= 0.0 && solver.gamma <= 1.0, "solver.gamma", "must lie in [0, 1]");
  require(solver.collision == "classical" || solver.gamma == (velocity_dim == 3 ? 1.0 : 0.0) ||
              solver.gamma == 0.0,
          "solver.gamma", "fast path supports Maxwell molecules (2D) or hard spheres (3D) only");
  require(solver.lambda_scale >= 0.0, "solver.lambda_scale", "must be non-negative");
  require(solver.cfl_max > 0.0 && solver.cfl_max <= 1.0, "solver.cfl_max", "must lie in (0, 1]");
  require(solver.stiffness_factor > 0.0, "solver.stiffness_factor", "must be positive");
  require(solver.threads >= 1, "solver.threads", "must be at least 1");
  require(output.diagnostics_every >= 1, "output.diagnostics_every", "must be at least 1");
  require(output.profile_every >= 0.0, "output.profile_every", "must be non-negative");
  require(output.checkpoint_every >= 0.0, "output.checkpoint_every", "must be non-negative");
  require(!output.dir.empty(), "output.dir", "must not be empty");
}

int ScenarioConfig::steps() const { return static_cast<int>(std::llround(t_final / dt)); }

ScenarioConfig build_trend_to_equilibrium(double epsilon) {
  ScenarioConfig c;
  c.scenario = "trend";
  c.space_dim = 1;
  c.lo = {0.0, 0.0};
  c.hi = {1.0, 1.0};
  c.cells = {64, 1};
  c.nv = 32;
  c.half_width = 8.0;
  c.epsilon = epsilon;
  c.dt = 1e-3;
  c.t_final = 4.0;
  c.walls[0] = BoundarySpec::specular();
  c.walls[1] = BoundarySpec::specular();
  c.initial.kind = InitialKind::trend;
  c.initial.amplitude = 0.2;
  c.initial.drift = {1.0 / std::sqrt(5.0), 1.0 / std::sqrt(5.0), 0.0};
  c.initial.temperature = 2.0 / std::sqrt(5.0);
  c.initial.temperature_modulation = 0.1;
  c.initial.normalize = true;
  c.output.diagnostics_every = 10;
  return c;
}

ScenarioConfig build_temperature_gradient(double epsilon) {
  ScenarioConfig c;
  c.scenario = "temperature_gradient";
  c.space_dim = 1;
  c.lo = {-0.5, 0.0};
  c.hi = {0.5, 1.0};
  c.cells = {120, 1};
  c.nv = 32;
  c.half_width = 8.0;
  c.epsilon = epsilon;
  c.dt = 1e-3;
  c.t_final = 25.0;
  c.walls[0] = BoundarySpec::diffuse(0.56);
  c.walls[1] = BoundarySpec::diffuse(1.0);
  c.initial.kind = InitialKind::local_maxwellian;
  c.initial.density = 1.0;
  c.initial.temperature_lo = 0.56;
  c.initial.temperature_hi = 1.0;
  c.output.diagnostics_every = 100;
  return c;
}

ScenarioConfig build_poiseuille(double a, double epsilon) {
  ScenarioConfig c;
  c.scenario = "poiseuille";
  c.space_dim = 1;
  c.lo = {0.0, 0.0};
  c.hi = {1.0, 1.0};
  c.cells = {64, 1};
  c.nv = 32;
  c.half_width = 8.0;
  c.epsilon = epsilon;
  c.dt = 2e-3;
  c.t_final = 10.0;
  c.walls[0] = BoundarySpec::diffuse(1.0);
  c.walls[1] = BoundarySpec::diffuse(1.0);
  c.initial.kind = InitialKind::local_maxwellian;
  c.force = a;
  c.force_axis = 1;
  c.solver.force_scheme = ForceScheme::limited;
  c.output.diagnostics_every = 50;
  return c;
}

ScenarioConfig build_ghost_effect(double epsilon, bool coarse) {
  ScenarioConfig c;
  c.scenario = coarse ? "ghost_coarse" : "ghost";
  c.space_dim = 2;
  c.lo = {0.0, 0.0};
  c.hi = {1.0, 1.0};
  c.cells = coarse ? std::array<int, 2>{25, 25} : std::array<int, 2>{50, 50};
  c.nv = coarse ? 16 : 32;
  c.half_width = 7.0;
  c.epsilon = epsilon;
  c.dt = 1e-3;
  c.t_final = coarse ? 0.05 : 10.0;
  c.walls[0] = BoundarySpec::periodic();
  c.walls[1] = BoundarySpec::periodic();
  BoundarySpec wall = BoundarySpec::diffuse(1.0, {epsilon, 0.0, 0.0});
  wall.T_w_amplitude = -0.5;
  wall.T_w_period = 1.0;
  c.walls[2] = wall;
  c.walls[3] = wall;
  c.initial.kind = InitialKind::local_maxwellian;
  c.long_running = !coarse;
  c.output.diagnostics_every = 10;
  return c;
}

std::vector<std::string> preset_names() {
  return {"trend", "temperature_gradient", "poiseuille", "ghost", "ghost_coarse"};
}

ScenarioConfig preset(const std::string& name, double epsilon) {
  const bool own = epsilon <= 0.0;
  if (name == "trend") return build_trend_to_equilibrium(own ? 1.0 : epsilon);
  if (name == "temperature_gradient") return build_temperature_gradient(own ? 0.1 : epsilon);
  if (name == "poiseuille") return build_poiseuille(0.5, own ? 0.1 : epsilon);
  if (name == "ghost") return build_ghost_effect(own ? 0.02 : epsilon);
  if (name == "ghost_coarse") return build_ghost_effect(own ? 0.02 : epsilon, true);
  throw ConfigError("scenario: unknown preset '" + name + "'");
}

std::shared_ptr<const VelocityGrid> make_velocity_grid(const ScenarioConfig& c) {
  return std::make_shared<const VelocityGrid>(c.velocity_dim, c.nv, c.half_width, c.radius);
}

SpatialMesh make_mesh(const ScenarioConfig& c) {
  return SpatialMesh(c.space_dim, c.lo, c.hi, c.cells, c.walls);
}

StepConfig make_step_config(const ScenarioConfig& c) {
  StepConfig s;
  s.dt = c.dt;
  s.epsilon = c.epsilon;
  s.mode = c.solver.mode;
  s.lambda_scale = c.solver.lambda_scale;
  s.gamma = c.solver.gamma;
  s.cfl_max = c.solver.cfl_max;
  s.stiffness_factor = c.solver.stiffness_factor;
  s.heun = c.solver.heun;
  s.strang = c.solver.strang;
  s.force = c.force;
  s.force_axis = c.force_axis;
  s.force_scheme = c.solver.force_scheme;
  return s;
}

namespace {

void fill_trend(const InitialData& init, const SpatialMesh& mesh, const VelocityGrid& g, double scale,
                DistributionField& f) {
  const int d = g.dim();
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double x = mesh.center(i)[0];
    const double dens = 1.0 + init.amplitude * std::sin(2.0 * kPi * x);
    const double T = scale * scale * init.temperature * (1.0 + init.temperature_modulation * std::cos(2.0 * kPi * x));
    auto s = f.slice(i);
    for (std::size_t j = 0; j < g.size(); ++j) {
      double a2 = 0.0, b2 = 0.0;
      for (int k = 0; k < d; ++k) {
        const double v = g.component(k)[j];
        const double u = scale * init.drift[static_cast<std::size_t>(k)];
        a2 += (v - u) * (v - u);
        b2 += (v + u) * (v + u);
      }
      s[j] = dens * (std::exp(-a2 / (2.0 * T)) + std::exp(-b2 / (2.0 * T)));
    }
  }
}

}  // namespace

DistributionField initial_field(const ScenarioConfig& c, const SpatialMesh& mesh,
                                std::shared_ptr<const VelocityGrid> grid) {
  DistributionField f(grid, mesh.size());
  const VelocityGrid& g = *grid;
  const InitialData& init = c.initial;
  if (init.kind == InitialKind::local_maxwellian) {
    const double span = mesh.hi(0) - mesh.lo(0);
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      const double x = mesh.center(i)[0];
      const double T = init.temperature_lo + (init.temperature_hi - init.temperature_lo) * (x - mesh.lo(0)) / span;
      maxwellian_into(g, init.density, init.velocity, T, f.slice(i));
    }
    return f;
  }
  double scale = 1.0;
  fill_trend(init, mesh, g, scale, f);
  if (!init.normalize) {
    const double C = 1.0 / (2.0 * kPi * init.temperature);
    for (double& v : f.values) v *= C;
    return f;
  }
  // Unit energy per unit mass: the kinetic energy scales like scale^2.
  for (int it = 0; it < 50; ++it) {
    const Totals t = totals(f, mesh);
    const double ratio = t.energy / t.mass;
    if (std::abs(ratio - 1.0) < 1e-15) break;
    scale /= std::sqrt(ratio);
    fill_trend(init, mesh, g, scale, f);
  }
  const double m = totals(f, mesh).mass;
  for (double& v : f.values) v /= m;
  return f;
}

}  // namespace kinspec
