#include "kinspec/spectrum.hpp"

#include <cmath>

#include "kinspec/error.hpp"

namespace kinspec {

namespace {

std::size_t spectrum_offset(int dim, int n, const std::array<int, 3>& k) {
  std::size_t off = 0;
  for (int a = 0; a < dim; ++a) {
    const int idx = k[static_cast<std::size_t>(a)] + n / 2;
    if (idx < 0 || idx >= n) throw InvalidArgument("mode index outside spectrum");
    off = off * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx);
  }
  return off;
}

}  // namespace

Complex& Spectrum::at(const std::array<int, 3>& k) { return coeffs[spectrum_offset(dim, n, k)]; }

const Complex& Spectrum::at(const std::array<int, 3>& k) const {
  return coeffs[spectrum_offset(dim, n, k)];
}

ModeBand::ModeBand(int dim, int half_modes) : dim_(dim), N_(half_modes) {
  if (dim < 1 || dim > 3 || half_modes < 0) throw InvalidArgument("invalid mode band");
  size_ = 1;
  for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(width());
}

std::array<int, 3> ModeBand::mode(std::size_t index) const {
  std::array<int, 3> k{0, 0, 0};
  const auto w = static_cast<std::size_t>(width());
  for (int a = dim_ - 1; a >= 0; --a) {
    k[static_cast<std::size_t>(a)] = static_cast<int>(index % w) - N_;
    index /= w;
  }
  return k;
}

bool ModeBand::contains(const std::array<int, 3>& k) const {
  for (int a = 0; a < dim_; ++a) {
    if (std::abs(k[static_cast<std::size_t>(a)]) > N_) return false;
  }
  return true;
}

std::size_t ModeBand::index(const std::array<int, 3>& k) const {
  if (!contains(k)) return size_;
  std::size_t off = 0;
  for (int a = 0; a < dim_; ++a) {
    off = off * static_cast<std::size_t>(width()) + static_cast<std::size_t>(k[static_cast<std::size_t>(a)] + N_);
  }
  return off;
}

SpectralTransform::SpectralTransform(const VelocityGrid& grid)
    : dim_(grid.dim()), n_(grid.nodes_per_axis()), size_(grid.size()) {
  phase_.resize(static_cast<std::size_t>(n_));
  for (int k = -n_ / 2; k < n_ / 2; ++k) {
    // e^{-i pi k v_0 / L} with v_0 = -L + dv/2, times the DFT shift
    const double angle = kPi * k * (1.0 - 1.0 / n_);
    phase_[static_cast<std::size_t>(k + n_ / 2)] = std::polar(1.0, angle);
  }
  fft_ = std::make_unique<ComplexFft>(dim_, n_);
}

Spectrum SpectralTransform::forward(std::span<const double> f) {
  Spectrum s;
  forward(f, s);
  return s;
}

void SpectralTransform::forward(std::span<const double> f, Spectrum& out) {
  if (f.size() != size_) throw InvalidArgument("slice size does not match transform workspace");
  out.dim = dim_;
  out.n = n_;
  out.coeffs.assign(size_, Complex(0.0, 0.0));
  Complex* buf = fft_->data();
  for (std::size_t j = 0; j < size_; ++j) buf[j] = Complex(f[j], 0.0);
  fft_->forward();
  const double scale = 1.0 / static_cast<double>(size_);
  const auto n = static_cast<std::size_t>(n_);
  for (std::size_t j = 0; j < size_; ++j) {
    // j indexes DFT bins; recover signed modes per axis
    std::size_t rem = j;
    std::size_t dst = 0;
    std::size_t stride = 1;
    Complex ph(1.0, 0.0);
    for (int a = dim_ - 1; a >= 0; --a) {
      const int bin = static_cast<int>(rem % n);
      rem /= n;
      const int k = bin < n_ / 2 ? bin : bin - n_;
      ph *= phase_[static_cast<std::size_t>(k + n_ / 2)];
      dst += static_cast<std::size_t>(k + n_ / 2) * stride;
      stride *= n;
    }
    out.coeffs[dst] = scale * ph * buf[j];
  }
}

void SpectralTransform::inverse_complex(const Spectrum& s, std::span<Complex> out) {
  if (s.dim != dim_ || s.n != n_ || s.coeffs.size() != size_ || out.size() != size_) {
    throw InvalidArgument("spectrum size does not match transform workspace");
  }
  Complex* buf = fft_->data();
  const auto n = static_cast<std::size_t>(n_);
  for (std::size_t j = 0; j < size_; ++j) {
    std::size_t rem = j;
    std::size_t src = 0;
    std::size_t stride = 1;
    Complex ph(1.0, 0.0);
    for (int a = dim_ - 1; a >= 0; --a) {
      const int bin = static_cast<int>(rem % n);
      rem /= n;
      const int k = bin < n_ / 2 ? bin : bin - n_;
      ph *= std::conj(phase_[static_cast<std::size_t>(k + n_ / 2)]);
      src += static_cast<std::size_t>(k + n_ / 2) * stride;
      stride *= n;
    }
    buf[j] = ph * s.coeffs[src];
  }
  fft_->backward();
  for (std::size_t j = 0; j < size_; ++j) out[j] = buf[j];
}

std::vector<double> SpectralTransform::inverse(const Spectrum& s) {
  std::vector<double> f(size_);
  inverse(s, f);
  return f;
}

void SpectralTransform::inverse(const Spectrum& s, std::span<double> f) {
  if (f.size() != size_) throw InvalidArgument("slice size does not match transform workspace");
  std::vector<Complex> tmp(size_);
  inverse_complex(s, tmp);
  for (std::size_t j = 0; j < size_; ++j) f[j] = tmp[j].real();
}

}  // namespace kinspec
