#include <algorithm>
#include <cmath>
#include <string>

#include "kinspec/error.hpp"
#include "kinspec/kernel_modes.hpp"
#include "kinspec/quadrature.hpp"

namespace kinspec {

namespace {

void require_2d(const VelocityGrid& grid) {
  if (grid.dim() != 2) throw InvalidArgument("classical kernel modes are implemented for d = 2");
}

void validate(const ClassicalKernelParams& p) {
  if (p.gamma < 0.0 || p.gamma > 1.0) throw InvalidArgument("VHS exponent must lie in [0, 1]");
  if (p.radial_points < 2 || p.angular_points < 4) throw InvalidArgument("quadrature too coarse");
  if (!(p.constant > 0.0)) throw InvalidArgument("kernel constant must be positive");
}

// Radial weights with the r^{1+gamma} C factor folded in, and per-|w|^2 angular factors.
struct RadialData {
  std::vector<double> r;
  std::vector<double> w;
};

RadialData radial(double R, const ClassicalKernelParams& p, int points) {
  auto gl = gauss_legendre(points, 0.0, R);
  RadialData d;
  d.r = gl.nodes;
  d.w.resize(gl.weights.size());
  for (std::size_t i = 0; i < d.r.size(); ++i) {
    d.w[i] = p.constant * gl.weights[i] * std::pow(d.r[i], 1.0 + p.gamma);
  }
  return d;
}

double beta_point(const RadialData& rad, double L, double wplus, double wminus, int angular) {
  double s = 0.0;
  for (std::size_t i = 0; i < rad.r.size(); ++i) {
    const double c = kPi * rad.r[i] / (2.0 * L);
    s += rad.w[i] * angular_factor(c * wplus, angular) * angular_factor(c * wminus, angular);
  }
  return s;
}

}  // namespace

double angular_factor(double a, int points) {
  double s = 0.0;
  const double h = 2.0 * kPi / points;
  for (int k = 0; k < points; ++k) s += std::cos(a * std::cos(k * h));
  return s * h;
}

ClassicalModeTable::ClassicalModeTable(const VelocityGrid& grid, const ClassicalKernelParams& params)
    : n_(grid.nodes_per_axis()),
      L_(grid.half_width()),
      R_(grid.truncation_radius()),
      params_(params),
      band_(2, grid.nodes_per_axis() / 2 - 1) {}

double ClassicalModeTable::at(const std::array<int, 3>& l, const std::array<int, 3>& m) const {
  const auto il = band_.index(l);
  const auto im = band_.index(m);
  if (il >= band_.size() || im >= band_.size()) throw InvalidArgument("mode outside table band");
  return (*this)(il, im);
}

ClassicalModeTable ClassicalModeTable::build(const VelocityGrid& grid, const ClassicalKernelParams& params) {
  require_2d(grid);
  validate(params);
  ClassicalModeTable t(grid, params);
  const int N = t.band_.half_modes();
  const std::size_t S = t.band_.size();

  const RadialData rad = radial(t.R_, params, params.radial_points);
  const std::size_t nr = rad.r.size();
  const int max_w2 = 8 * N * N;
  // G[w2 * nr + i] = angular factor at radius r_i and |w|^2 = w2
  std::vector<double> G(static_cast<std::size_t>(max_w2 + 1) * nr, 0.0);
  std::vector<char> needed(static_cast<std::size_t>(max_w2 + 1), 0);
  for (int a = -2 * N; a <= 2 * N; ++a) {
    for (int b = -2 * N; b <= 2 * N; ++b) needed[static_cast<std::size_t>(a * a + b * b)] = 1;
  }
  for (int w2 = 0; w2 <= max_w2; ++w2) {
    if (!needed[static_cast<std::size_t>(w2)]) continue;
    const double w = std::sqrt(static_cast<double>(w2));
    for (std::size_t i = 0; i < nr; ++i) {
      G[static_cast<std::size_t>(w2) * nr + i] =
          angular_factor(kPi * rad.r[i] * w / (2.0 * t.L_), params.angular_points);
    }
  }

  t.beta_.assign(S * S, 0.0);
  for (std::size_t il = 0; il < S; ++il) {
    const auto l = t.band_.mode(il);
    for (std::size_t im = il; im < S; ++im) {
      const auto m = t.band_.mode(im);
      const int p0 = l[0] + m[0], p1 = l[1] + m[1];
      const int q0 = l[0] - m[0], q1 = l[1] - m[1];
      const double* gp = &G[static_cast<std::size_t>(p0 * p0 + p1 * p1) * nr];
      const double* gq = &G[static_cast<std::size_t>(q0 * q0 + q1 * q1) * nr];
      double s = 0.0;
      for (std::size_t i = 0; i < nr; ++i) s += rad.w[i] * gp[i] * gq[i];
      t.beta_[il * S + im] = s;
      t.beta_[im * S + il] = s;
    }
  }

  // Doubling self-check on the extreme and a few intermediate pairs.
  const RadialData fine = radial(t.R_, params, 2 * params.radial_points);
  const double scale = std::max(std::abs(t.beta_[(S / 2) * S + S / 2]), 1e-300);
  const std::array<std::array<int, 4>, 4> probes{{{0, 0, 0, 0}, {N, N, -N, -N}, {N, -N, N, N}, {N / 2, 1, -1, N / 3}}};
  for (const auto& pr : probes) {
    const std::array<int, 3> l{pr[0], pr[1], 0};
    const std::array<int, 3> m{pr[2], pr[3], 0};
    const double wp = std::hypot(l[0] + m[0], l[1] + m[1]);
    const double wm = std::hypot(l[0] - m[0], l[1] - m[1]);
    const double ref = beta_point(fine, t.L_, wp, wm, 2 * params.angular_points);
    const double err = std::abs(ref - t.at(l, m));
    if (err > params.tolerance * scale) {
      throw QuadratureError("classical kernel-mode quadrature not converged: error " + std::to_string(err) +
                            " at refinement");
    }
  }
  t.diag_.resize(S);
  for (std::size_t m = 0; m < S; ++m) t.diag_[m] = t.beta_[m * S + m];
  return t;
}

ClassicalModeTable ClassicalModeTable::from_raw(const VelocityGrid& grid, const ClassicalKernelParams& params,
                                                std::vector<double> beta) {
  require_2d(grid);
  validate(params);
  ClassicalModeTable t(grid, params);
  const std::size_t S = t.band_.size();
  if (beta.size() != S * S) throw FormatError("classical kernel table has wrong size");
  t.beta_ = std::move(beta);
  t.diag_.resize(S);
  for (std::size_t m = 0; m < S; ++m) t.diag_[m] = t.beta_[m * S + m];
  return t;
}

}  // namespace kinspec
