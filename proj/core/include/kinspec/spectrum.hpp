#pragma once

#include <array>
#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "kinspec/fft.hpp"
#include "kinspec/velocity_grid.hpp"

namespace kinspec {

using Complex = std::complex<double>;

/// Fourier coefficients of a nodal slice in the basis e^{i pi k.v / L},
/// k in {-n/2, ..., n/2 - 1}^d. Storage is row-major over (k_a + n/2).
struct Spectrum {
  int dim = 2;
  int n = 0;
  std::vector<Complex> coeffs;

  Complex& at(const std::array<int, 3>& k);
  const Complex& at(const std::array<int, 3>& k) const;
};

/// Modes with |k_a| <= N = n/2 - 1 on every axis, indexed row-major over
/// (k_a + N). This is the range of the projection P_N.
class ModeBand {
 public:
  ModeBand(int dim, int half_modes);
  int dim() const { return dim_; }
  int half_modes() const { return N_; }
  int width() const { return 2 * N_ + 1; }
  std::size_t size() const { return size_; }
  std::array<int, 3> mode(std::size_t index) const;
  /// Returns size() when k lies outside the band.
  std::size_t index(const std::array<int, 3>& k) const;
  bool contains(const std::array<int, 3>& k) const;

 private:
  int dim_;
  int N_;
  std::size_t size_;
};

/// Forward and inverse transform pair for one VelocityGrid.
///
/// forward: f_hat_k = n^{-d} sum_j f_j e^{-i pi k.v_j / L}.
/// inverse: f_j = Re sum_k f_hat_k e^{i pi k.v_j / L}.
/// The pair is exact on all n^d modes. Not thread-safe; use one per thread.
class SpectralTransform {
 public:
  explicit SpectralTransform(const VelocityGrid& grid);

  Spectrum forward(std::span<const double> f);
  void forward(std::span<const double> f, Spectrum& out);
  std::vector<double> inverse(const Spectrum& s);
  void inverse(const Spectrum& s, std::span<double> f);
  /// Complex-valued inverse (no real part taken).
  void inverse_complex(const Spectrum& s, std::span<Complex> out);

  /// Phase e^{i pi k (1 - 1/n)} relating the node-indexed DFT to the v-basis on one axis.
  Complex axis_phase(int k) const { return phase_[static_cast<std::size_t>(k + n_ / 2)]; }

 private:
  int dim_;
  int n_;
  std::size_t size_;
  std::vector<Complex> phase_;
  std::unique_ptr<ComplexFft> fft_;
};

}  // namespace kinspec
