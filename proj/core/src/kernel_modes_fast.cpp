#include <algorithm>
#include <cmath>
#include <string>

#include "kinspec/error.hpp"
#include "kinspec/kernel_modes.hpp"

namespace kinspec {

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double phi2(double R, double s) { return 2.0 * R * sinc(R * s); }

double phi3(double R, double s) {
  const double h = sinc(0.5 * R * s);
  return R * R * (2.0 * sinc(R * s) - h * h);
}

double psi3(double R, double s, int points) {
  const double h = kPi / points;
  double acc = 0.5 * (phi3(R, s) + phi3(R, -s));
  for (int k = 1; k < points; ++k) acc += phi3(R, s * std::cos(k * h));
  return acc * h;
}

std::vector<double> fejer_sine_weights(int points) {
  std::vector<double> w(static_cast<std::size_t>(points));
  for (int p = 0; p < points; ++p) {
    const double theta = (p + 0.5) * kPi / points;
    double s = 1.0;
    for (int k = 1; k <= points / 2; ++k) s -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
    w[static_cast<std::size_t>(p)] = 2.0 * s / points;
  }
  return w;
}

FastModeTable::FastModeTable(const VelocityGrid& grid, const FastKernelParams& params)
    : dim_(grid.dim()),
      n_(grid.nodes_per_axis()),
      L_(grid.half_width()),
      R_(grid.truncation_radius()),
      params_(params),
      band_(grid.dim(), grid.nodes_per_axis() / 2 - 1),
      constant_(params.constant > 0.0 ? params.constant : 1.0 / kPi),
      fft_points_(params.padding > 0 ? params.padding : grid.nodes_per_axis()) {
  if (params.angles < 1 || (dim_ == 3 && params.azimuth < 1)) {
    throw InvalidArgument("fast kernel needs at least one angle per direction");
  }
  if (dim_ == 3 && params.psi_points < 2) throw InvalidArgument("psi quadrature too coarse");
  if (fft_points_ < band_.width()) {
    throw InvalidArgument("FFT padding " + std::to_string(fft_points_) + " is smaller than the mode band " +
                          std::to_string(band_.width()));
  }
  setup_directions();
}

void FastModeTable::setup_directions() {
  if (dim_ == 2) {
    const int M = params_.angles;
    for (int p = 0; p < M; ++p) {
      const double th = p * kPi / M;
      dirs_.push_back({std::cos(th), std::sin(th), 0.0});
      weights_.push_back(constant_ * kPi / M);
    }
    return;
  }
  const int M1 = params_.angles;
  const int M2 = params_.azimuth;
  const auto fw = fejer_sine_weights(M1);
  for (int p = 0; p < M1; ++p) {
    const double th = (p + 0.5) * kPi / M1;
    for (int q = 0; q < M2; ++q) {
      const double ph = q * kPi / M2;
      dirs_.push_back({std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)});
      weights_.push_back(constant_ * fw[static_cast<std::size_t>(p)] * kPi / M2);
    }
  }
}

void FastModeTable::finish() {
  const std::size_t S = band_.size();
  diag_.assign(S, 0.0);
  for (std::size_t p = 0; p < weights_.size(); ++p) {
    const double* ap = &alpha_prime_[p * S];
    const double* am = &alpha_[p * S];
    for (std::size_t m = 0; m < S; ++m) diag_[m] += weights_[p] * ap[m] * am[m];
  }
}

FastModeTable FastModeTable::build(const VelocityGrid& grid, const FastKernelParams& params) {
  FastModeTable t(grid, params);
  const std::size_t S = t.band_.size();
  const std::size_t P = t.weights_.size();
  const double xi = kPi / t.L_;
  t.alpha_prime_.resize(P * S);
  t.alpha_.resize(P * S);
  for (std::size_t p = 0; p < P; ++p) {
    const Vec3& e = t.dirs_[p];
    for (std::size_t i = 0; i < S; ++i) {
      const auto k = t.band_.mode(i);
      if (t.dim_ == 2) {
        const double along = xi * (k[0] * e[0] + k[1] * e[1]);
        const double across = xi * (-k[0] * e[1] + k[1] * e[0]);
        t.alpha_prime_[p * S + i] = phi2(t.R_, along);
        t.alpha_[p * S + i] = phi2(t.R_, across);
      } else {
        const double along = xi * (k[0] * e[0] + k[1] * e[1] + k[2] * e[2]);
        const double k2 = xi * xi * static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        const double across = std::sqrt(std::max(k2 - along * along, 0.0));
        t.alpha_prime_[p * S + i] = phi3(t.R_, along);
        t.alpha_[p * S + i] = psi3(t.R_, across, params.psi_points);
      }
    }
  }
  t.finish();
  return t;
}

FastModeTable FastModeTable::from_raw(const VelocityGrid& grid, const FastKernelParams& params,
                                      std::vector<double> alpha_prime, std::vector<double> alpha) {
  FastModeTable t(grid, params);
  const std::size_t expected = t.band_.size() * t.weights_.size();
  if (alpha_prime.size() != expected || alpha.size() != expected) {
    throw FormatError("fast kernel table has wrong size");
  }
  t.alpha_prime_ = std::move(alpha_prime);
  t.alpha_ = std::move(alpha);
  t.finish();
  return t;
}

std::span<const double> FastModeTable::alpha_prime(std::size_t p) const {
  return std::span<const double>(alpha_prime_).subspan(p * band_.size(), band_.size());
}

std::span<const double> FastModeTable::alpha(std::size_t p) const {
  return std::span<const double>(alpha_).subspan(p * band_.size(), band_.size());
}

double FastModeTable::beta(std::size_t l, std::size_t m) const {
  const std::size_t S = band_.size();
  double s = 0.0;
  for (std::size_t p = 0; p < weights_.size(); ++p) s += weights_[p] * alpha_prime_[p * S + l] * alpha_[p * S + m];
  return s;
}

double FastModeTable::beta(const std::array<int, 3>& l, const std::array<int, 3>& m) const {
  const auto il = band_.index(l);
  const auto im = band_.index(m);
  if (il >= band_.size() || im >= band_.size()) throw InvalidArgument("mode outside table band");
  return beta(il, im);
}

}  // namespace kinspec
