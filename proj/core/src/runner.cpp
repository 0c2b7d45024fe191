#include "kinspec/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <vector>

#include "kinspec/checkpoint.hpp"
#include "kinspec/diagnostics.hpp"
#include "kinspec/error.hpp"
#include "kinspec/io.hpp"
#include "kinspec/kernel_cache.hpp"
#include "kinspec/scenarios.hpp"
#include "kinspec/time_integration.hpp"

namespace kinspec {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string comment_block(const ScenarioConfig& c) {
  std::string out;
  std::istringstream in(config_to_json(c));
  for (std::string line; std::getline(in, line);) out += "# " + line + "\n";
  return out;
}

// Data rows of an existing series file up to time t (inclusive).
std::string rows_until(const fs::path& path, double t) {
  if (!fs::exists(path)) return {};
  std::istringstream in(read_file(path));
  std::string kept;
  bool header = true;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const double tr = std::strtod(line.c_str(), nullptr);
    if (tr <= t * (1.0 + 1e-12) + 1e-300) kept += line + "\n";
  }
  return kept;
}

bool all_finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

std::uint64_t cadence(double interval, double dt) {
  return static_cast<std::uint64_t>(std::max<long long>(1, std::llround(interval / dt)));
}

}  // namespace

std::shared_ptr<const CollisionOperator> make_collision(const ScenarioConfig& c,
                                                        std::shared_ptr<const VelocityGrid> grid) {
  if (c.solver.collision == "classical") {
    ClassicalKernelParams p;
    p.gamma = c.solver.gamma;
    return std::make_shared<ClassicalCollision>(*grid, classical_table(*grid, p));
  }
  if (c.solver.collision == "fast") {
    FastKernelParams p;
    p.angles = c.solver.angles;
    p.azimuth = c.solver.azimuth;
    p.padding = c.solver.padding;
    return std::make_shared<FastCollision>(*grid, fast_table(*grid, p));
  }
  throw ConfigError("solver.collision: must be 'fast' or 'classical'");
}

std::string profile_text(const DistributionField& f, const SpatialMesh& mesh, const ScenarioConfig& c) {
  const bool two = mesh.dim() == 2;
  std::string out = comment_block(c);
  out += "# t = " + num(f.time) + "\n";
  out += two ? "x y rho ux uy T p qx qy\n" : "x rho ux uy T p qx\n";
  const auto m = cell_moments(f, mesh);
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const auto x = mesh.center(i);
    const Moments& q = m[i];
    out += num(x[0]);
    if (two) out += " " + num(x[1]);
    for (double v : {q.rho, q.u[0], q.u[1], q.T, q.p, q.q[0]}) out += " " + num(v);
    if (two) out += " " + num(q.q[1]);
    out += "\n";
  }
  return out;
}

RunOutcome run(const RunManifest& manifest, std::ostream& log) {
  RunOutcome outcome;
  const ScenarioConfig& c = manifest.config;
  const auto wall_start = Clock::now();
  std::string warnings;
  auto warn = [&](const std::string& msg) {
    log << "warning: " << msg << "\n";
    warnings += "warning: " + msg + "\n";
  };

  std::unique_ptr<Stepper> stepper;
  std::shared_ptr<const VelocityGrid> grid;
  std::unique_ptr<SpatialMesh> mesh;
  DistributionField f;
  std::uint64_t step0 = 0;
  const std::uint64_t hash = manifest_hash(c);
  const fs::path dir = c.output.dir;
  std::string entropy_rows, audit_rows;

  try {
    c.validate();
    grid = make_velocity_grid(c);
    mesh = std::make_unique<SpatialMesh>(make_mesh(c));
    const CflBound bound = cfl_dt(*grid, *mesh, 1.0);
    const double courant = bound.unbounded ? 0.0 : c.dt / bound.dt;
    if (courant > c.solver.cfl_max)
      throw ConfigError("time.dt: Courant number " + num(courant) + " exceeds solver.cfl_max " +
                        num(c.solver.cfl_max) + " (largest stable dt " + num(bound.dt * c.solver.cfl_max) + ")");
    if (courant > 0.5)
      warn("Courant number " + num(courant) + " above 0.5 (dt bound at Courant 1 is " + num(bound.dt) + ")");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return {kExitFailure, "cannot create output directory " + dir.string() + ": " + ec.message(), 0, 0.0};
    if (!manifest.resume.empty()) {
      CheckpointState s = load_checkpoint(manifest.resume, grid, *mesh, hash, manifest.force_resume);
      if (s.manifest_hash != hash)
        warn("forced resume: checkpoint manifest " + hex64(s.manifest_hash) + ", run " + hex64(hash));
      f = std::move(s.field);
      step0 = s.step;
      f.time = static_cast<double>(step0) * c.dt;
      entropy_rows = rows_until(dir / "entropy.dat", f.time);
      audit_rows = rows_until(dir / "audit.dat", f.time);
      log << "resumed from " << manifest.resume << " at step " << step0 << "\n";
    } else {
      f = initial_field(c, *mesh, grid);
    }
  } catch (const ConfigError& e) {
    return {kExitConfig, e.what(), 0, 0.0};
  } catch (const InvalidArgument& e) {
    return {kExitConfig, e.what(), 0, 0.0};
  } catch (const FormatError& e) {
    return {kExitConfig, e.what(), 0, 0.0};
  }

  const bool vel3 = c.velocity_dim == 3;
  const std::string head = comment_block(c) + "# manifest hash " + hex64(hash) + "\n";
  const std::string entropy_head = head + "t Hg Hl Hh\n";
  const std::string audit_head = head + (vel3 ? "t mass px py pz energy\n" : "t mass px py energy\n");
  const std::uint64_t steps = static_cast<std::uint64_t>(c.steps());
  const std::uint64_t diag_every = static_cast<std::uint64_t>(c.output.diagnostics_every);
  const std::uint64_t ckpt_every =
      cadence(c.output.checkpoint_every > 0.0 ? c.output.checkpoint_every : 0.1 * c.t_final, c.dt);
  const std::uint64_t prof_every = c.output.profile_every > 0.0 ? cadence(c.output.profile_every, c.dt) : 0;
  bool edge_warned = false;

  auto flush_series = [&]() {
    atomic_write(dir / "entropy.dat", entropy_head + entropy_rows);
    atomic_write(dir / "audit.dat", audit_head + audit_rows);
  };
  double diag_seconds = 0.0;
  auto sample = [&]() {
    const auto t0 = Clock::now();
    const EntropyTriple h = entropies(f, *mesh);
    const Totals tot = totals(f, *mesh);
    entropy_rows += num(f.time) + " " + num(h.Hg) + " " + num(h.Hl) + " " + num(h.Hh) + "\n";
    audit_rows += num(f.time) + " " + num(tot.mass) + " " + num(tot.momentum[0]) + " " + num(tot.momentum[1]);
    if (vel3) audit_rows += " " + num(tot.momentum[2]);
    audit_rows += " " + num(tot.energy) + "\n";
    if (c.force != 0.0 && !edge_warned) {
      double worst = 0.0;
      for (std::size_t i = 0; i < mesh->size(); ++i)
        worst = std::max(worst, edge_mass_ratio(*grid, f.slice(i), c.force_axis));
      if (worst > 1e-6) {
        edge_warned = true;
        warn("edge mass ratio " + num(worst) + " along the force axis at t = " + num(f.time) +
             "; the velocity box may be too small for this force");
      }
    }
    diag_seconds += std::chrono::duration<double>(Clock::now() - t0).count();
  };

  std::uint64_t step = step0;
  try {
    stepper = std::make_unique<Stepper>(*mesh, make_collision(c, grid), make_step_config(c), c.solver.threads,
                                        TransportOptions{c.solver.limiter});
    atomic_write(dir / "manifest.json", config_to_json(c) + "\n");
    if (step0 == 0) sample();
    for (step = step0 + 1; step <= steps; ++step) {
      stepper->step(f);
      f.time = static_cast<double>(step) * c.dt;
      if (!all_finite(f.values)) throw NumericFailure("non-finite value at step " + std::to_string(step));
      if (step % diag_every == 0 || step == steps) sample();
      if (prof_every > 0 && step % prof_every == 0) {
        char name[40];
        std::snprintf(name, sizeof name, "profile_%08llu.dat", static_cast<unsigned long long>(step));
        atomic_write(dir / name, profile_text(f, *mesh, c));
      }
      if (step % ckpt_every == 0 && step != steps) {
        save_checkpoint(dir / "checkpoint.bin", f, *mesh, hash, step);
        flush_series();
      }
    }
    step = std::max(step0, steps);
    save_checkpoint(dir / "checkpoint.bin", f, *mesh, hash, step);
    atomic_write(dir / "profile_final.dat", profile_text(f, *mesh, c));
    flush_series();
    outcome.message = "completed " + std::to_string(step - step0) + " steps";
  } catch (const NumericFailure& e) {
    outcome = {kExitNumeric, e.what(), step, f.time};
  } catch (const DegenerateState& e) {
    outcome = {kExitNumeric, e.what(), step, f.time};
  } catch (const QuadratureError& e) {
    outcome = {kExitNumeric, e.what(), step, f.time};
  } catch (const StabilityError& e) {
    outcome = {kExitConfig, e.what(), step, f.time};
  } catch (const ConfigError& e) {
    outcome = {kExitConfig, e.what(), step, f.time};
  } catch (const InvalidArgument& e) {
    outcome = {kExitConfig, e.what(), step, f.time};
  } catch (const FormatError& e) {
    outcome = {kExitFailure, e.what(), step, f.time};
  }
  if (outcome.exit_code == kExitNumeric) {
    // keep the last good checkpoint; the series up to the failure is still useful
    try {
      flush_series();
    } catch (const FormatError&) {
    }
  }
  outcome.steps = step;
  outcome.time = f.time;

  std::ostringstream r;
  r << "scenario " << c.scenario << "\n";
  r << "manifest hash " << hex64(hash) << "\n";
  r << "status " << outcome.exit_code << " " << outcome.message << "\n";
  r << "steps " << step << " t " << num(f.time) << "\n";
  r << warnings;
  if (stepper) {
    PhaseTimings& t = stepper->timings();
    t.diagnostics += diag_seconds;
    t.total += diag_seconds;
    const double total = t.total > 0.0 ? t.total : 1.0;
    auto line = [&](const char* name, double s) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%-12s %12.6f s  %6.2f %%\n", name, s, 100.0 * s / total);
      r << buf;
    };
    r << "timings (threads " << c.solver.threads << ")\n";
    line("collision", t.collision);
    line("transport", t.transport);
    line("boundary", t.boundary);
    line("diagnostics", t.diagnostics);
    line("total", t.total);
    r << "vacuum wall faces " << stepper->transport().vacuum_events() << "\n";
  }
  r << "wall clock " << num(std::chrono::duration<double>(Clock::now() - wall_start).count()) << " s\n";
  try {
    atomic_write(dir / "run.log", r.str());
  } catch (const FormatError& e) {
    log << "error: " << e.what() << "\n";
    if (outcome.exit_code == kExitOk) outcome = {kExitFailure, e.what(), step, f.time};
  }
  return outcome;
}

}  // namespace kinspec
