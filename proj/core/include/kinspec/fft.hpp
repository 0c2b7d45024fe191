#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace kinspec {

/// Real <-> half-complex FFTW plan pair on a P^d grid (d = 1, 2 or 3).
///
/// Owns aligned buffers; the plans always act on those buffers. Not copyable.
/// Creating one is serialized internally; executing distinct objects from
/// different threads is safe.
class RealFft {
 public:
  RealFft(int dim, int points_per_axis);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int dim() const { return dim_; }
  int points() const { return p_; }
  std::size_t real_size() const { return real_size_; }
  /// Last axis holds P/2 + 1 entries.
  std::size_t complex_size() const { return complex_size_; }
  int half_last() const { return p_ / 2 + 1; }

  double* real() { return real_; }
  std::complex<double>* spectrum() { return spectrum_; }

  /// real() -> spectrum(), unnormalized sum with e^{-2 pi i k j / P}.
  void forward();
  /// spectrum() -> real(), unnormalized sum with e^{+2 pi i k j / P}. Clobbers spectrum().
  void backward();

 private:
  int dim_;
  int p_;
  std::size_t real_size_;
  std::size_t complex_size_;
  double* real_ = nullptr;
  std::complex<double>* spectrum_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Complex <-> complex FFTW plan pair on an n^d grid.
class ComplexFft {
 public:
  ComplexFft(int dim, int points_per_axis);
  ~ComplexFft();
  ComplexFft(const ComplexFft&) = delete;
  ComplexFft& operator=(const ComplexFft&) = delete;

  std::size_t size() const { return size_; }
  std::complex<double>* data() { return data_; }
  void forward();
  void backward();

 private:
  std::size_t size_;
  std::complex<double>* data_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

}  // namespace kinspec
