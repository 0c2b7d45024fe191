#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kinspec/spectrum.hpp"
#include "kinspec/velocity_grid.hpp"

namespace kinspec {

/// VHS kernel B = C |u|^gamma on the unit circle of directions (2D).
/// The default C = 1/(2 pi) makes the angular mass int B dsigma equal 1 at |u| = 1.
struct ClassicalKernelParams {
  double gamma = 0.0;
  double constant = 1.0 / (2.0 * kPi);
  int radial_points = 64;
  int angular_points = 128;
  /// Relative tolerance of the doubling self-check.
  double tolerance = 1e-9;
};

/// Dense table beta(l, m) over the band |l_a|, |m_a| <= N of a 2D grid.
///
/// beta(l, m) = int_{B_R} int_{S^1} B exp(-i pi/L (u.(l+m)/2 + |u| sigma.(m-l)/2)) dsigma du.
/// The integral is real for this kernel, so only real parts are stored.
class ClassicalModeTable {
 public:
  static ClassicalModeTable build(const VelocityGrid& grid, const ClassicalKernelParams& params = {});

  int dim() const { return 2; }
  int nodes_per_axis() const { return n_; }
  double half_width() const { return L_; }
  double radius() const { return R_; }
  const ClassicalKernelParams& params() const { return params_; }
  const ModeBand& band() const { return band_; }

  double operator()(std::size_t l, std::size_t m) const { return beta_[l * band_.size() + m]; }
  double at(const std::array<int, 3>& l, const std::array<int, 3>& m) const;
  /// beta(m, m)
  double diagonal(std::size_t m) const { return diag_[m]; }
  std::span<const double> diagonal() const { return diag_; }
  std::span<const double> raw() const { return beta_; }

  /// Restores a table from raw storage (used by the on-disk cache).
  static ClassicalModeTable from_raw(const VelocityGrid& grid, const ClassicalKernelParams& params,
                                     std::vector<double> beta);

 private:
  ClassicalModeTable(const VelocityGrid& grid, const ClassicalKernelParams& params);
  int n_;
  double L_;
  double R_;
  ClassicalKernelParams params_;
  ModeBand band_;
  std::vector<double> beta_;
  std::vector<double> diag_;
};

/// Single-angle factor: int_0^{2 pi} exp(i a cos phi) dphi by the uniform
/// trapezoid with `points` nodes (equals 2 pi J_0(a) to spectral accuracy).
double angular_factor(double a, int points);

/// Carleman-form kernel modes with decoupled angular factors.
///
/// 2D (Maxwell molecules): beta(l, m) ~ B (pi/M) sum_p phi2(l.e_p) phi2(m.e_p^perp),
///   phi2(s) = 2R Sinc(pi R s / L), e_p = (cos p pi/M, sin p pi/M).
/// 3D (hard spheres): beta(l, m) ~ B sum_{p,q} w_{p,q} phi3(l.e_pq) psi3(|m - (m.e_pq) e_pq|)
///   on a half-sphere grid of M1 polar by M2 azimuthal nodes.
struct FastKernelParams {
  /// Angles M (2D) or polar nodes M1 (3D).
  int angles = 8;
  /// Azimuthal nodes M2 (3D only).
  int azimuth = 8;
  /// Trapezoid nodes for psi3.
  int psi_points = 256;
  /// Carleman kernel constant; <= 0 selects 1/pi.
  double constant = 0.0;
  /// FFT grid per axis for the convolutions; 0 means n (no padding).
  int padding = 0;
};

class FastModeTable {
 public:
  static FastModeTable build(const VelocityGrid& grid, const FastKernelParams& params = {});

  int dim() const { return dim_; }
  int nodes_per_axis() const { return n_; }
  double half_width() const { return L_; }
  double radius() const { return R_; }
  const FastKernelParams& params() const { return params_; }
  const ModeBand& band() const { return band_; }
  double constant() const { return constant_; }
  /// FFT size per axis used by collide_fast.
  int fft_points() const { return fft_points_; }

  std::size_t directions() const { return weights_.size(); }
  /// Quadrature weight of direction p, including the kernel constant.
  double weight(std::size_t p) const { return weights_[p]; }
  /// Factor carried by the first index l.
  std::span<const double> alpha_prime(std::size_t p) const;
  /// Factor carried by the second index m.
  std::span<const double> alpha(std::size_t p) const;
  std::span<const double> diagonal() const { return diag_; }
  const std::vector<Vec3>& direction_vectors() const { return dirs_; }

  /// Dense reconstruction sum_p w_p alpha'_p(l) alpha_p(m).
  double beta(std::size_t l, std::size_t m) const;
  double beta(const std::array<int, 3>& l, const std::array<int, 3>& m) const;

  static FastModeTable from_raw(const VelocityGrid& grid, const FastKernelParams& params,
                                std::vector<double> alpha_prime, std::vector<double> alpha);
  std::span<const double> raw_alpha_prime() const { return alpha_prime_; }
  std::span<const double> raw_alpha() const { return alpha_; }

 private:
  FastModeTable(const VelocityGrid& grid, const FastKernelParams& params);
  void setup_directions();
  void finish();
  int dim_;
  int n_;
  double L_;
  double R_;
  FastKernelParams params_;
  ModeBand band_;
  double constant_;
  int fft_points_;
  std::vector<Vec3> dirs_;
  std::vector<double> weights_;
  std::vector<double> alpha_prime_;
  std::vector<double> alpha_;
  std::vector<double> diag_;
};

/// sin(x)/x with the removable singularity filled in.
double sinc(double x);
/// 2R Sinc(R s) (xi-space argument s).
double phi2(double R, double s);
/// R^2 (2 Sinc(R s) - Sinc^2(R s / 2)) (xi-space argument s).
double phi3(double R, double s);
/// int_0^pi phi3(s cos theta) dtheta by the trapezoid with `points` intervals.
double psi3(double R, double s, int points);

/// Fejer (first rule) weights for int_0^pi g(theta) sin(theta) dtheta at the
/// midpoint nodes theta_p = (p + 1/2) pi / M.
std::vector<double> fejer_sine_weights(int points);

}  // namespace kinspec
