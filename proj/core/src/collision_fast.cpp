#include <algorithm>
#include <cmath>

#include "kinspec/collision.hpp"
#include "kinspec/error.hpp"

namespace kinspec {

namespace {

struct FastWorkspace final : CollisionWorkspace {
  FastWorkspace(int dim, int n, int pad) : node(dim, n), padded(dim, pad) {}
  RealFft node;
  RealFft padded;
  std::vector<Complex> fhat;
  std::vector<double> first;
  std::vector<double> acc;
};

// Offset of mode k (k_last >= 0) in the half-complex layout of a P^d grid.
std::size_t half_offset(const std::array<int, 3>& k, int dim, int P) {
  std::size_t off = 0;
  for (int a = 0; a < dim; ++a) {
    const int ka = k[static_cast<std::size_t>(a)];
    const int extent = a == dim - 1 ? P / 2 + 1 : P;
    const int idx = ((ka % P) + P) % P;
    off = off * static_cast<std::size_t>(extent) + static_cast<std::size_t>(idx);
  }
  return off;
}

}  // namespace

FastCollision::FastCollision(VelocityGrid grid, std::shared_ptr<const FastModeTable> table)
    : grid_(std::move(grid)), table_(std::move(table)) {
  if (!table_) throw InvalidArgument("null kernel table");
  if (table_->dim() != grid_.dim() || table_->nodes_per_axis() != grid_.nodes_per_axis() ||
      table_->half_width() != grid_.half_width() || table_->radius() != grid_.truncation_radius()) {
    throw InvalidArgument("kernel table does not match velocity grid");
  }
  const int d = grid_.dim();
  const int n = grid_.nodes_per_axis();
  const int P = table_->fft_points();
  const ModeBand& band = table_->band();
  const SpectralTransform transform(grid_);
  for (std::size_t i = 0; i < band.size(); ++i) {
    const auto k = band.mode(i);
    if (k[static_cast<std::size_t>(d - 1)] < 0) continue;
    half_band_.push_back(i);
    off_pad_.push_back(half_offset(k, d, P));
    off_node_.push_back(half_offset(k, d, n));
    Complex ph(1.0, 0.0);
    for (int a = 0; a < d; ++a) ph *= transform.axis_phase(k[static_cast<std::size_t>(a)]);
    phase_.push_back(ph);
  }
  node_scale_ = 1.0 / static_cast<double>(grid_.size());
  pad_scale_ = 1.0 / std::pow(static_cast<double>(P), d);
}

std::unique_ptr<CollisionWorkspace> FastCollision::make_workspace() const {
  auto ws = std::make_unique<FastWorkspace>(grid_.dim(), grid_.nodes_per_axis(), table_->fft_points());
  ws->fhat.resize(half_band_.size());
  ws->first.resize(ws->padded.real_size());
  ws->acc.resize(ws->padded.real_size());
  return ws;
}

void FastCollision::apply(std::span<const double> f, std::span<double> out, CollisionWorkspace& base) const {
  if (f.size() != grid_.size() || out.size() != grid_.size()) {
    throw InvalidArgument("slice size does not match collision operator grid");
  }
  auto& ws = dynamic_cast<FastWorkspace&>(base);
  const std::size_t H = half_band_.size();

  std::copy(f.begin(), f.end(), ws.node.real());
  ws.node.forward();
  const Complex* F = ws.node.spectrum();
  for (std::size_t h = 0; h < H; ++h) ws.fhat[h] = node_scale_ * phase_[h] * F[off_node_[h]];

  RealFft& pad = ws.padded;
  Complex* A = pad.spectrum();
  const std::size_t csize = pad.complex_size();
  const std::size_t rsize = pad.real_size();
  double* x = pad.real();

  auto fill = [&](std::span<const double> factor) {
    std::fill(A, A + csize, Complex(0.0, 0.0));
    for (std::size_t h = 0; h < H; ++h) A[off_pad_[h]] = factor[half_band_[h]] * ws.fhat[h];
    pad.backward();
  };

  std::fill(ws.acc.begin(), ws.acc.end(), 0.0);
  for (std::size_t p = 0; p < table_->directions(); ++p) {
    fill(table_->alpha_prime(p));
    std::copy(x, x + rsize, ws.first.begin());
    fill(table_->alpha(p));
    const double w = table_->weight(p);
    for (std::size_t j = 0; j < rsize; ++j) ws.acc[j] += w * ws.first[j] * x[j];
  }
  fill(table_->diagonal());
  std::copy(x, x + rsize, ws.first.begin());
  std::fill(A, A + csize, Complex(0.0, 0.0));
  for (std::size_t h = 0; h < H; ++h) A[off_pad_[h]] = ws.fhat[h];
  pad.backward();
  for (std::size_t j = 0; j < rsize; ++j) ws.acc[j] -= ws.first[j] * x[j];

  std::copy(ws.acc.begin(), ws.acc.end(), x);
  pad.forward();

  Complex* Q = ws.node.spectrum();
  std::fill(Q, Q + ws.node.complex_size(), Complex(0.0, 0.0));
  for (std::size_t h = 0; h < H; ++h) Q[off_node_[h]] = pad_scale_ * std::conj(phase_[h]) * A[off_pad_[h]];
  ws.node.backward();
  std::copy(ws.node.real(), ws.node.real() + grid_.size(), out.begin());
}

}  // namespace kinspec
