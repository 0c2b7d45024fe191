#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kinspec/kernel_modes.hpp"
#include "kinspec/spectrum.hpp"
#include "kinspec/velocity_grid.hpp"

namespace kinspec {

/// Per-thread scratch space of a collision operator.
class CollisionWorkspace {
 public:
  virtual ~CollisionWorkspace() = default;
};

/// Q^R_N(f) evaluated at the velocity nodes.
class CollisionOperator {
 public:
  virtual ~CollisionOperator() = default;
  virtual const VelocityGrid& grid() const = 0;
  virtual std::unique_ptr<CollisionWorkspace> make_workspace() const = 0;
  /// Writes Q(f) to `out`. `ws` must come from make_workspace() of this operator.
  virtual void apply(std::span<const double> f, std::span<double> out, CollisionWorkspace& ws) const = 0;
  virtual std::string name() const = 0;

  std::vector<double> operator()(std::span<const double> f) const;
};

/// Dense sum Q_k = sum_{l+m=k} [beta(l,m) - beta(m,m)] f_l f_m over the band.
/// Cost grows like the square of the number of modes.
class ClassicalCollision final : public CollisionOperator {
 public:
  ClassicalCollision(VelocityGrid grid, std::shared_ptr<const ClassicalModeTable> table);
  const VelocityGrid& grid() const override { return grid_; }
  std::unique_ptr<CollisionWorkspace> make_workspace() const override;
  void apply(std::span<const double> f, std::span<double> out, CollisionWorkspace& ws) const override;
  std::string name() const override { return "classical"; }
  const ClassicalModeTable& table() const { return *table_; }

 private:
  VelocityGrid grid_;
  std::shared_ptr<const ClassicalModeTable> table_;
};

/// Same bilinear sum with an arbitrary real kernel-mode function; used to
/// evaluate the dense reconstruction of a fast table.
class DenseCollision final : public CollisionOperator {
 public:
  /// beta is row-major over band x band.
  DenseCollision(VelocityGrid grid, std::vector<double> beta);
  const VelocityGrid& grid() const override { return grid_; }
  std::unique_ptr<CollisionWorkspace> make_workspace() const override;
  void apply(std::span<const double> f, std::span<double> out, CollisionWorkspace& ws) const override;
  std::string name() const override { return "dense"; }

 private:
  VelocityGrid grid_;
  ModeBand band_;
  std::vector<double> beta_;
  std::vector<double> diag_;
};

/// Decoupled evaluation: one pair of inverse FFTs per direction and a
/// pointwise product, followed by a single forward FFT.
class FastCollision final : public CollisionOperator {
 public:
  FastCollision(VelocityGrid grid, std::shared_ptr<const FastModeTable> table);
  const VelocityGrid& grid() const override { return grid_; }
  std::unique_ptr<CollisionWorkspace> make_workspace() const override;
  void apply(std::span<const double> f, std::span<double> out, CollisionWorkspace& ws) const override;
  std::string name() const override { return "fast"; }
  const FastModeTable& table() const { return *table_; }

 private:
  VelocityGrid grid_;
  std::shared_ptr<const FastModeTable> table_;
  // Band modes with k_last >= 0 and their offsets in the half-complex
  // layouts of the padded grid and of the node grid.
  std::vector<std::size_t> half_band_;
  std::vector<std::size_t> off_pad_;
  std::vector<std::size_t> off_node_;
  std::vector<Complex> phase_;
  double node_scale_;
  double pad_scale_;
};

/// Dense reconstruction of a fast table as a band x band matrix.
std::vector<double> dense_beta(const FastModeTable& table);

/// Band coefficients of the nodal slice (projection P_N), row-major over the band.
void band_coefficients(const VelocityGrid& grid, std::span<const double> f, std::vector<Complex>& out);

enum class OracleForm { classical, carleman };

struct OracleParams {
  OracleForm form = OracleForm::classical;
  double gamma = 0.0;
  /// Kernel constant; <= 0 selects 1/(2 pi) (classical) or 1/pi (Carleman).
  double constant = 0.0;
  int radial_points = 24;
  int angular_points = 48;
  /// Largest nodes_per_axis accepted.
  int max_nodes = 16;
};

/// Brute-force quadrature of the truncated periodized operator applied to the
/// band-limited interpolant f_N of the slice, sampled at the nodes.
std::vector<double> collide_oracle(const VelocityGrid& grid, std::span<const double> f,
                                   const OracleParams& params = {});

}  // namespace kinspec
