#include <chrono>
#include <cmath>
#include <string>

#include "kinspec/error.hpp"
#include "kinspec/parallel.hpp"
#include "kinspec/time_integration.hpp"

namespace kinspec {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Sampled Maxwellian rescaled to the exact discrete mass rho, so that the
// penalty terms carry no mass on coarse velocity grids.
void discrete_maxwellian(const VelocityGrid& g, const Moments& m, std::span<double> out) {
  maxwellian_into(g, m.rho, m.u, m.T, out);
  const double total = mass(g, out);
  if (!(total > 0.0)) throw NumericFailure("local Maxwellian is not resolved by the velocity grid");
  const double s = m.rho / total;
  for (double& x : out) x *= s;
}

}  // namespace

Stepper::Stepper(const SpatialMesh& mesh, std::shared_ptr<const CollisionOperator> collision, StepConfig config,
                 int threads, TransportOptions transport)
    : mesh_(mesh),
      collision_(std::move(collision)),
      grid_(collision_ ? collision_->grid() : throw InvalidArgument("stepper needs a collision operator")),
      config_(config),
      threads_(threads < 1 ? 1 : threads),
      transport_(grid_, mesh, transport) {
  config_.validate();
  if (config_.force != 0.0 && (config_.force_axis < 0 || config_.force_axis >= grid_.dim())) {
    throw InvalidArgument("force axis outside velocity dimension");
  }
  workers_.resize(static_cast<std::size_t>(threads_));
  for (auto& w : workers_) {
    w.collision = collision_->make_workspace();
    w.q.resize(grid_.size());
    w.q2.resize(grid_.size());
    w.m_old.resize(grid_.size());
    w.m_new.resize(grid_.size());
    w.tmp.resize(grid_.size());
  }
  check_cfl();
}

void Stepper::set_config(const StepConfig& config) {
  config.validate();
  config_ = config;
  check_cfl();
}

void Stepper::check_cfl() const {
  if (!config_.transport) return;
  const double c = transport_.courant_number(config_.dt);
  if (c > config_.cfl_max) {
    const auto bound = cfl_dt(grid_, mesh_, config_.cfl_max);
    throw StabilityError("dt = " + std::to_string(config_.dt) + " violates the CFL bound (courant number " +
                         std::to_string(c) + " > " + std::to_string(config_.cfl_max) + "; admissible dt <= " +
                         std::to_string(bound.dt) + ")");
  }
}

void Stepper::check_stiffness(const DistributionField& f) const {
  if (!config_.collisions) return;
  double lam = 0.0;
  for (std::size_t i = 0; i < f.cells; ++i) {
    const auto s = f.slice(i);
    const double rho = mass(grid_, s);
    if (!(rho > config_.rho_floor)) continue;
    const Moments m = moments(grid_, s, config_.rho_floor);
    lam = std::max(lam, lambda_estimate(m, config_.lambda_scale, config_.gamma));
  }
  if (lam > 0.0 && config_.dt > config_.stiffness_factor * config_.epsilon / lam) {
    throw StabilityError("explicit collision step is stiff: dt = " + std::to_string(config_.dt) + " exceeds " +
                         std::to_string(config_.stiffness_factor * config_.epsilon / lam) +
                         " for epsilon = " + std::to_string(config_.epsilon) + "; use the imex mode");
  }
}

void Stepper::transport_pass(const DistributionField& f, std::vector<double>& out) {
  out = f.values;
  if (config_.transport && transport_.wall_face_count() > 0) {
    const auto t0 = Clock::now();
    parallel_for(transport_.wall_face_count(), threads_,
                 [&](std::size_t b, std::size_t e, int) { transport_.update_walls(f, b, e); });
    timings_.boundary += seconds_since(t0);
  }
  const auto t1 = Clock::now();
  const std::size_t S = grid_.size();
  parallel_for(f.cells, threads_, [&](std::size_t b, std::size_t e, int) {
    if (config_.transport) transport_.add_increment(f, config_.dt, out, b, e);
    if (config_.force != 0.0) {
      for (std::size_t i = b; i < e; ++i) {
        force_increment(grid_, f.slice(i), config_.force, config_.dt, config_.force_axis,
                        std::span<double>(out).subspan(i * S, S), config_.force_scheme);
      }
    }
  });
  timings_.transport += seconds_since(t1);
}

void Stepper::collide_cell(std::span<const double> f, std::span<double> out, double h, Worker& w) const {
  const std::size_t S = grid_.size();
  collision_->apply(f, w.q, *w.collision);
  if (!config_.heun) {
    for (std::size_t j = 0; j < S; ++j) out[j] = f[j] + h * w.q[j];
    return;
  }
  for (std::size_t j = 0; j < S; ++j) w.tmp[j] = f[j] + h * w.q[j];
  collision_->apply(w.tmp, w.q2, *w.collision);
  for (std::size_t j = 0; j < S; ++j) out[j] = f[j] + 0.5 * h * (w.q[j] + w.q2[j]);
}

void Stepper::step(DistributionField& f) {
  if (config_.mode == StepMode::imex) {
    imex_step(f);
  } else {
    explicit_step(f);
  }
}

void Stepper::explicit_step(DistributionField& f) {
  const auto t_start = Clock::now();
  check_stiffness(f);
  auto collide_all = [&](double h) {
    if (!config_.collisions) return;
    const auto t0 = Clock::now();
    parallel_for(f.cells, threads_, [&](std::size_t b, std::size_t e, int k) {
      Worker& w = workers_[static_cast<std::size_t>(k)];
      for (std::size_t i = b; i < e; ++i) {
        auto s = f.slice(i);
        if (!(mass(grid_, s) > config_.rho_floor)) continue;
        std::copy(s.begin(), s.end(), w.m_old.begin());
        collide_cell(w.m_old, s, h, w);
      }
    });
    timings_.collision += seconds_since(t0);
  };
  const double h = config_.dt / config_.epsilon;
  if (config_.strang) collide_all(0.5 * h);
  transport_pass(f, tilde_);
  f.values.swap(tilde_);
  collide_all(config_.strang ? 0.5 * h : h);
  f.time += config_.dt;
  timings_.total += seconds_since(t_start);
}

void Stepper::imex_step(DistributionField& f) {
  const auto t_start = Clock::now();
  transport_pass(f, tilde_);
  const std::size_t S = grid_.size();
  const double eps = config_.epsilon;
  const double dt = config_.dt;
  const auto t0 = Clock::now();
  if (!config_.collisions) {
    f.values.swap(tilde_);
  } else {
    parallel_for(f.cells, threads_, [&](std::size_t b, std::size_t e, int k) {
      Worker& w = workers_[static_cast<std::size_t>(k)];
      for (std::size_t i = b; i < e; ++i) {
        auto fn = f.slice(i);
        const std::span<const double> ft(tilde_.data() + i * S, S);
        const double rho_n = mass(grid_, fn);
        const double rho_t = mass(grid_, ft);
        if (!(rho_n > config_.rho_floor) || !(rho_t > config_.rho_floor)) {
          std::copy(ft.begin(), ft.end(), fn.begin());
          continue;
        }
        const Moments mn = moments(grid_, fn, config_.rho_floor);
        const Moments mt = moments(grid_, ft, config_.rho_floor);
        if (!(mn.T > 0.0) || !(mt.T > 0.0) || !std::isfinite(mn.T) || !std::isfinite(mt.T)) {
          throw NumericFailure("non-positive or non-finite temperature in cell " + std::to_string(i));
        }
        const double lam = lambda_estimate(mt, config_.lambda_scale, config_.gamma);
        collision_->apply(fn, w.q, *w.collision);
        discrete_maxwellian(grid_, mn, w.m_old);
        discrete_maxwellian(grid_, mt, w.m_new);
        const double denom = eps + lam * dt;
        for (std::size_t j = 0; j < S; ++j) {
          const double penalty = lam * (w.m_old[j] - fn[j]);
          fn[j] = (eps * ft[j] + dt * (w.q[j] - penalty) + lam * dt * w.m_new[j]) / denom;
        }
      }
    });
  }
  timings_.collision += seconds_since(t0);
  f.time += dt;
  timings_.total += seconds_since(t_start);
}

}  // namespace kinspec
