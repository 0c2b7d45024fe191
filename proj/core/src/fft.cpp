#include "kinspec/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "kinspec/error.hpp"

namespace kinspec {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void check_shape(int dim, int p) {
  if (dim < 1 || dim > 3) throw InvalidArgument("FFT dimension must be 1, 2 or 3");
  if (p < 1) throw InvalidArgument("FFT size must be positive");
}

}  // namespace

RealFft::RealFft(int dim, int points_per_axis) : dim_(dim), p_(points_per_axis) {
  check_shape(dim, points_per_axis);
  real_size_ = 1;
  complex_size_ = 1;
  int dims[3];
  for (int a = 0; a < dim; ++a) {
    dims[a] = p_;
    real_size_ *= static_cast<std::size_t>(p_);
    complex_size_ *= static_cast<std::size_t>(a == dim - 1 ? p_ / 2 + 1 : p_);
  }
  std::lock_guard<std::mutex> lock(planner_mutex());
  real_ = fftw_alloc_real(real_size_);
  spectrum_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(complex_size_));
  if (!real_ || !spectrum_) throw NumericFailure("FFT buffer allocation failed");
  auto* c = reinterpret_cast<fftw_complex*>(spectrum_);
  forward_plan_ = fftw_plan_dft_r2c(dim, dims, real_, c, FFTW_ESTIMATE);
  backward_plan_ = fftw_plan_dft_c2r(dim, dims, c, real_, FFTW_ESTIMATE);
  if (!forward_plan_ || !backward_plan_) throw NumericFailure("FFTW planning failed");
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (forward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  if (backward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
  fftw_free(real_);
  fftw_free(spectrum_);
}

void RealFft::forward() { fftw_execute(static_cast<fftw_plan>(forward_plan_)); }
void RealFft::backward() { fftw_execute(static_cast<fftw_plan>(backward_plan_)); }

ComplexFft::ComplexFft(int dim, int points_per_axis) {
  check_shape(dim, points_per_axis);
  int dims[3];
  size_ = 1;
  for (int a = 0; a < dim; ++a) {
    dims[a] = points_per_axis;
    size_ *= static_cast<std::size_t>(points_per_axis);
  }
  std::lock_guard<std::mutex> lock(planner_mutex());
  data_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(size_));
  if (!data_) throw NumericFailure("FFT buffer allocation failed");
  auto* c = reinterpret_cast<fftw_complex*>(data_);
  forward_plan_ = fftw_plan_dft(dim, dims, c, c, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_plan_ = fftw_plan_dft(dim, dims, c, c, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!forward_plan_ || !backward_plan_) throw NumericFailure("FFTW planning failed");
}

ComplexFft::~ComplexFft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (forward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  if (backward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
  fftw_free(data_);
}

void ComplexFft::forward() { fftw_execute(static_cast<fftw_plan>(forward_plan_)); }
void ComplexFft::backward() { fftw_execute(static_cast<fftw_plan>(backward_plan_)); }

}  // namespace kinspec
