#include <cmath>

#include "kinspec/collision.hpp"
#include "kinspec/error.hpp"

namespace kinspec {

namespace {

struct SpectralWorkspace final : CollisionWorkspace {
  explicit SpectralWorkspace(const VelocityGrid& g) : transform(g) {}
  SpectralTransform transform;
  Spectrum spec;
  std::vector<Complex> fhat;
  std::vector<Complex> qhat;
};

void check_slices(const VelocityGrid& grid, std::span<const double> f, std::span<double> out) {
  if (f.size() != grid.size() || out.size() != grid.size()) {
    throw InvalidArgument("slice size does not match collision operator grid");
  }
}

// qhat_k = sum_{l+m=k, all in band} [beta(l,m) - beta(m,m)] fhat_l fhat_m
template <class Beta>
void bilinear_sum(const ModeBand& band, const Beta& beta, std::span<const double> diag,
                  const std::vector<Complex>& fhat, std::vector<Complex>& qhat) {
  const std::size_t S = band.size();
  const int d = band.dim();
  const int N = band.half_modes();
  const auto w = static_cast<std::size_t>(band.width());
  qhat.assign(S, Complex(0.0, 0.0));
  std::vector<std::array<int, 3>> modes(S);
  for (std::size_t i = 0; i < S; ++i) modes[i] = band.mode(i);
  for (std::size_t il = 0; il < S; ++il) {
    const Complex fl = fhat[il];
    if (fl == Complex(0.0, 0.0)) continue;
    const auto& l = modes[il];
    for (std::size_t im = 0; im < S; ++im) {
      const auto& m = modes[im];
      std::size_t k = 0;
      bool inside = true;
      for (int a = 0; a < d; ++a) {
        const int ka = l[static_cast<std::size_t>(a)] + m[static_cast<std::size_t>(a)];
        if (ka < -N || ka > N) {
          inside = false;
          break;
        }
        k = k * w + static_cast<std::size_t>(ka + N);
      }
      if (!inside) continue;
      qhat[k] += (beta(il, im) - diag[im]) * fl * fhat[im];
    }
  }
}

void to_band(const ModeBand& band, const Spectrum& spec, std::vector<Complex>& out) {
  out.resize(band.size());
  for (std::size_t i = 0; i < band.size(); ++i) out[i] = spec.at(band.mode(i));
}

void from_band(const ModeBand& band, const std::vector<Complex>& in, int dim, int n, Spectrum& spec) {
  spec.dim = dim;
  spec.n = n;
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
  spec.coeffs.assign(total, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < band.size(); ++i) spec.at(band.mode(i)) = in[i];
}

}  // namespace

std::vector<double> CollisionOperator::operator()(std::span<const double> f) const {
  auto ws = make_workspace();
  std::vector<double> out(grid().size());
  apply(f, out, *ws);
  return out;
}

void band_coefficients(const VelocityGrid& grid, std::span<const double> f, std::vector<Complex>& out) {
  SpectralTransform t(grid);
  const Spectrum s = t.forward(f);
  to_band(ModeBand(grid.dim(), grid.nodes_per_axis() / 2 - 1), s, out);
}

ClassicalCollision::ClassicalCollision(VelocityGrid grid, std::shared_ptr<const ClassicalModeTable> table)
    : grid_(std::move(grid)), table_(std::move(table)) {
  if (!table_) throw InvalidArgument("null kernel table");
  if (table_->nodes_per_axis() != grid_.nodes_per_axis() || grid_.dim() != 2 ||
      table_->half_width() != grid_.half_width() || table_->radius() != grid_.truncation_radius()) {
    throw InvalidArgument("kernel table does not match velocity grid");
  }
}

std::unique_ptr<CollisionWorkspace> ClassicalCollision::make_workspace() const {
  return std::make_unique<SpectralWorkspace>(grid_);
}

void ClassicalCollision::apply(std::span<const double> f, std::span<double> out, CollisionWorkspace& base) const {
  check_slices(grid_, f, out);
  auto& ws = dynamic_cast<SpectralWorkspace&>(base);
  const ModeBand& band = table_->band();
  ws.transform.forward(f, ws.spec);
  to_band(band, ws.spec, ws.fhat);
  bilinear_sum(band, [this](std::size_t l, std::size_t m) { return (*table_)(l, m); }, table_->diagonal(), ws.fhat,
               ws.qhat);
  from_band(band, ws.qhat, grid_.dim(), grid_.nodes_per_axis(), ws.spec);
  ws.transform.inverse(ws.spec, out);
}

DenseCollision::DenseCollision(VelocityGrid grid, std::vector<double> beta)
    : grid_(std::move(grid)), band_(grid_.dim(), grid_.nodes_per_axis() / 2 - 1), beta_(std::move(beta)) {
  const std::size_t S = band_.size();
  if (beta_.size() != S * S) throw InvalidArgument("dense kernel table has wrong size");
  diag_.resize(S);
  for (std::size_t m = 0; m < S; ++m) diag_[m] = beta_[m * S + m];
}

std::unique_ptr<CollisionWorkspace> DenseCollision::make_workspace() const {
  return std::make_unique<SpectralWorkspace>(grid_);
}

void DenseCollision::apply(std::span<const double> f, std::span<double> out, CollisionWorkspace& base) const {
  check_slices(grid_, f, out);
  auto& ws = dynamic_cast<SpectralWorkspace&>(base);
  const std::size_t S = band_.size();
  ws.transform.forward(f, ws.spec);
  to_band(band_, ws.spec, ws.fhat);
  bilinear_sum(band_, [this, S](std::size_t l, std::size_t m) { return beta_[l * S + m]; }, diag_, ws.fhat, ws.qhat);
  from_band(band_, ws.qhat, grid_.dim(), grid_.nodes_per_axis(), ws.spec);
  ws.transform.inverse(ws.spec, out);
}

std::vector<double> dense_beta(const FastModeTable& table) {
  const std::size_t S = table.band().size();
  std::vector<double> beta(S * S);
  for (std::size_t l = 0; l < S; ++l) {
    for (std::size_t m = 0; m < S; ++m) beta[l * S + m] = table.beta(l, m);
  }
  return beta;
}

}  // namespace kinspec
