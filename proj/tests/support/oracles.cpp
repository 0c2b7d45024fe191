#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace kinspec::testing {

using boost::math::quadrature::gauss_kronrod;

namespace {

double integrate(const std::function<double(double)>& g, double a, double b, double tol = 1e-13) {
  return gauss_kronrod<double, 61>::integrate(g, a, b, 15, tol);
}

}  // namespace

double classical_beta_bessel(std::array<int, 2> l, std::array<int, 2> m, double L, double R, double gamma, double C) {
  const double a = std::hypot(l[0] + m[0], l[1] + m[1]) * kPi / (2.0 * L);
  const double b = std::hypot(l[0] - m[0], l[1] - m[1]) * kPi / (2.0 * L);
  auto g = [&](double r) {
    return std::pow(r, 1.0 + gamma) * std::cyl_bessel_j(0.0, a * r) * std::cyl_bessel_j(0.0, b * r);
  };
  // split the radial range so each piece holds a few oscillations
  const int pieces = 8;
  double s = 0.0;
  for (int k = 0; k < pieces; ++k) s += integrate(g, R * k / pieces, R * (k + 1) / pieces);
  return C * 4.0 * kPi * kPi * s;
}

double carleman_beta_direct(std::array<int, 2> l, std::array<int, 2> m, double L, double R, double C) {
  auto line = [&](double s) {
    // int_{-R}^{R} cos(pi rho s / L) drho; the sine part is odd
    auto h = [&](double rho) { return std::cos(kPi * rho * s / L); };
    return integrate(h, -R, 0.0) + integrate(h, 0.0, R);
  };
  auto g = [&](double theta) {
    const double c = std::cos(theta), sn = std::sin(theta);
    const double sl = l[0] * c + l[1] * sn;
    const double sm = -m[0] * sn + m[1] * c;
    return line(sl) * line(sm);
  };
  const int pieces = 8;
  double s = 0.0;
  for (int k = 0; k < pieces; ++k) s += integrate(g, kPi * k / pieces, kPi * (k + 1) / pieces, 1e-12);
  return C * s;
}

double phi3_direct(double R, double s) {
  auto h = [&](double rho) { return std::abs(rho) * std::cos(rho * s); };
  return integrate(h, -R, 0.0) + integrate(h, 0.0, R);
}

double psi3_direct(double R, double s) {
  auto g = [&](double theta) { return phi3_direct(R, s * std::cos(theta)); };
  return integrate(g, 0.0, 0.5 * kPi, 1e-12) + integrate(g, 0.5 * kPi, kPi, 1e-12);
}

FineMoments fine_moments_2d(const std::function<double(double, double)>& f, double L, int n) {
  const double h = 2.0 * L / n;
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, e = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -L + (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double y = -L + (j + 0.5) * h;
      const double v = f(x, y);
      m0 += v;
      m1 += x * v;
      m2 += y * v;
      e += (x * x + y * y) * v;
    }
  }
  FineMoments r;
  r.rho = m0 * h * h;
  r.u = {m1 / m0, m2 / m0};
  r.T = (e / m0 - r.u[0] * r.u[0] - r.u[1] * r.u[1]) / 2.0;
  return r;
}

std::vector<double> random_values(std::size_t count, unsigned seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(count);
  for (double& x : v) x = dist(rng);
  return v;
}

std::vector<double> bimodal(const VelocityGrid& g, double rho, double shift, double T) {
  auto a = maxwellian(g, 0.5 * rho, {shift, 0.3 * shift, 0.0}, T);
  auto b = maxwellian(g, 0.5 * rho, {-shift, -0.3 * shift, 0.0}, T);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return a;
}

std::vector<double> trig_polynomial(const VelocityGrid& g, int kmax, unsigned seed) {
  const double L = g.half_width();
  const auto c = random_values(static_cast<std::size_t>((2 * kmax + 1) * (2 * kmax + 1) * 2), seed, -1.0, 1.0);
  std::vector<double> f(g.size(), 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto v = g.velocity(j);
    double s = 0.0;
    std::size_t idx = 0;
    for (int a = -kmax; a <= kmax; ++a)
      for (int b = -kmax; b <= kmax; ++b, idx += 2) {
        const double ph = kPi * (a * v[0] + b * v[1]) / L;
        s += c[idx] * std::cos(ph) + c[idx + 1] * std::sin(ph);
      }
    f[j] = (1.0 + 0.05 * s) / (4.0 * L * L);
  }
  return f;
}

double rel_linf(std::span<const double> a, std::span<const double> b) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    num = std::max(num, std::abs(a[j] - b[j]));
    den = std::max(den, std::abs(b[j]));
  }
  return num / den;
}

DistributionField uniform_field(std::shared_ptr<const VelocityGrid> g, std::size_t cells,
                                std::span<const double> slice) {
  DistributionField f(std::move(g), cells);
  for (std::size_t i = 0; i < cells; ++i) std::copy(slice.begin(), slice.end(), f.slice(i).begin());
  return f;
}

}  // namespace kinspec::testing
