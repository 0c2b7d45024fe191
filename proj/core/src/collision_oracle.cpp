#include <cmath>
#include <string>

#include "kinspec/collision.hpp"
#include "kinspec/error.hpp"
#include "kinspec/quadrature.hpp"

namespace kinspec {

namespace {

// Samples of f_N(v_j + s) for arbitrary shifts s.
class Shifter {
 public:
  Shifter(const VelocityGrid& grid, std::span<const double> f)
      : grid_(grid), transform_(grid), band_(grid.dim(), grid.nodes_per_axis() / 2 - 1), values_(grid.size()) {
    base_ = transform_.forward(f);
    // drop the unpaired -n/2 modes so that f_N is real
    for (std::size_t i = 0; i < base_.coeffs.size(); ++i) {
      std::size_t rem = i;
      bool in_band = true;
      for (int a = 0; a < grid.dim(); ++a) {
        const int idx = static_cast<int>(rem % static_cast<std::size_t>(grid.nodes_per_axis()));
        rem /= static_cast<std::size_t>(grid.nodes_per_axis());
        if (idx == 0) in_band = false;
      }
      if (!in_band) base_.coeffs[i] = Complex(0.0, 0.0);
    }
    work_ = base_;
  }

  const std::vector<double>& at(const Vec3& s) {
    const int d = grid_.dim();
    const int n = grid_.nodes_per_axis();
    const double L = grid_.half_width();
    std::array<std::vector<Complex>, 3> ph;
    for (int a = 0; a < d; ++a) {
      auto& p = ph[static_cast<std::size_t>(a)];
      p.resize(static_cast<std::size_t>(n));
      for (int k = -n / 2; k < n / 2; ++k) {
        p[static_cast<std::size_t>(k + n / 2)] = std::polar(1.0, kPi * k * s[static_cast<std::size_t>(a)] / L);
      }
    }
    const auto nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < base_.coeffs.size(); ++i) {
      std::size_t rem = i;
      Complex c = base_.coeffs[i];
      for (int a = d - 1; a >= 0; --a) {
        c *= ph[static_cast<std::size_t>(a)][rem % nn];
        rem /= nn;
      }
      work_.coeffs[i] = c;
    }
    transform_.inverse(work_, values_);
    return values_;
  }

  std::vector<double> base_values() {
    std::vector<double> v(grid_.size());
    transform_.inverse(base_, v);
    return v;
  }

 private:
  const VelocityGrid& grid_;
  SpectralTransform transform_;
  ModeBand band_;
  Spectrum base_;
  Spectrum work_;
  std::vector<double> values_;
};

std::vector<double> oracle_classical(const VelocityGrid& grid, Shifter& sh, const OracleParams& p) {
  const double C = p.constant > 0.0 ? p.constant : 1.0 / (2.0 * kPi);
  const double R = grid.truncation_radius();
  const std::size_t size = grid.size();
  const std::vector<double> f0 = sh.base_values();
  const auto rad = gauss_legendre(p.radial_points, 0.0, R);
  const int A = p.angular_points;
  const double h = 2.0 * kPi / A;

  std::vector<double> q(size, 0.0);
  std::vector<double> g1(size);
  for (std::size_t i = 0; i < rad.nodes.size(); ++i) {
    const double r = rad.nodes[i];
    const double wr = rad.weights[i] * r * C * std::pow(r, p.gamma);
    for (int a = 0; a < A; ++a) {
      const Vec3 u{r * std::cos(a * h), r * std::sin(a * h), 0.0};
      const double w = wr * h * h;
      // loss: sigma integral is trivial
      const auto& loss = sh.at({-u[0], -u[1], 0.0});
      for (std::size_t j = 0; j < size; ++j) q[j] -= w * A * f0[j] * loss[j];
      for (int b = 0; b < A; ++b) {
        const Vec3 sig{std::cos(b * h), std::sin(b * h), 0.0};
        const Vec3 s1{-(u[0] - r * sig[0]) / 2.0, -(u[1] - r * sig[1]) / 2.0, 0.0};
        const Vec3 s2{-(u[0] + r * sig[0]) / 2.0, -(u[1] + r * sig[1]) / 2.0, 0.0};
        g1 = sh.at(s1);
        const auto& g2 = sh.at(s2);
        for (std::size_t j = 0; j < size; ++j) q[j] += w * g1[j] * g2[j];
      }
    }
  }
  return q;
}

std::vector<double> oracle_carleman(const VelocityGrid& grid, Shifter& sh, const OracleParams& p) {
  const double C = p.constant > 0.0 ? p.constant : 1.0 / kPi;
  const double R = grid.truncation_radius();
  const std::size_t size = grid.size();
  const std::vector<double> f0 = sh.base_values();
  const auto line = gauss_legendre(p.radial_points, -R, R);
  const int A = p.angular_points;
  const double h = kPi / A;

  std::vector<double> q(size, 0.0);
  std::vector<double> along(size), across(size);
  for (int a = 0; a < A; ++a) {
    const Vec3 e{std::cos(a * h), std::sin(a * h), 0.0};
    const Vec3 ep{-e[1], e[0], 0.0};
    std::fill(along.begin(), along.end(), 0.0);
    std::fill(across.begin(), across.end(), 0.0);
    for (std::size_t i = 0; i < line.nodes.size(); ++i) {
      const double t = line.nodes[i];
      const double w = line.weights[i];
      const auto& y = sh.at({t * e[0], t * e[1], 0.0});
      for (std::size_t j = 0; j < size; ++j) along[j] += w * y[j];
      const auto& z = sh.at({t * ep[0], t * ep[1], 0.0});
      for (std::size_t j = 0; j < size; ++j) across[j] += w * z[j];
    }
    for (std::size_t j = 0; j < size; ++j) q[j] += C * h * along[j] * across[j];
    for (std::size_t i = 0; i < line.nodes.size(); ++i) {
      for (std::size_t k = 0; k < line.nodes.size(); ++k) {
        const double rho = line.nodes[i];
        const double t = line.nodes[k];
        const double w = C * h * line.weights[i] * line.weights[k];
        const auto& yz = sh.at({rho * e[0] + t * ep[0], rho * e[1] + t * ep[1], 0.0});
        for (std::size_t j = 0; j < size; ++j) q[j] -= w * f0[j] * yz[j];
      }
    }
  }
  return q;
}

}  // namespace

std::vector<double> collide_oracle(const VelocityGrid& grid, std::span<const double> f, const OracleParams& params) {
  if (grid.dim() != 2) throw InvalidArgument("collision oracle is implemented for d = 2");
  if (grid.nodes_per_axis() > params.max_nodes) {
    throw InvalidArgument("collision oracle refuses n = " + std::to_string(grid.nodes_per_axis()) +
                          " above cap " + std::to_string(params.max_nodes));
  }
  if (f.size() != grid.size()) throw InvalidArgument("slice size does not match velocity grid");
  if (params.radial_points < 2 || params.angular_points < 4) throw InvalidArgument("oracle quadrature too coarse");
  Shifter sh(grid, f);
  return params.form == OracleForm::classical ? oracle_classical(grid, sh, params) : oracle_carleman(grid, sh, params);
}

}  // namespace kinspec
