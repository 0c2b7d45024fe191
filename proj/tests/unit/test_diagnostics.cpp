#include <cmath>

#include <gtest/gtest.h>

#include "kinspec/diagnostics.hpp"
#include "kinspec/error.hpp"
#include "kinspec/scenarios.hpp"
#include "oracles.hpp"

namespace kinspec {
namespace {

using Walls = std::array<BoundarySpec, 4>;

SpatialMesh periodic_line(int cells) { return SpatialMesh(1, {0.0, 0.0}, {1.0, 0.0}, {cells, 1}, Walls{}); }

DistributionField local_maxwellians(std::shared_ptr<const VelocityGrid> g, const SpatialMesh& mesh) {
  DistributionField f(g, mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double x = mesh.center(i)[0];
    maxwellian_into(*g, 1.0 + 0.4 * std::sin(2 * kPi * x), {0.3 * std::cos(2 * kPi * x), 0.0, 0.0},
                    1.0 + 0.3 * std::cos(2 * kPi * x), f.slice(i));
  }
  return f;
}

TEST(Totals, MassMomentumEnergy) {
  auto g = std::make_shared<const VelocityGrid>(2, 32, 8.0);
  const auto mesh = periodic_line(10);
  const auto f = testing::uniform_field(g, mesh.size(), maxwellian(*g, 2.0, {0.5, -0.25, 0.0}, 1.5));
  const Totals t = totals(f, mesh);
  // tails beyond the box hold about 1e-9 of the mass at T = 1.5
  EXPECT_NEAR(t.mass, 2.0, 1e-8);
  EXPECT_NEAR(t.momentum[0], 1.0, 1e-8);
  EXPECT_NEAR(t.momentum[1], -0.5, 1e-8);
  // rho (|u|^2 + d T) / 2
  EXPECT_NEAR(t.energy, 2.0 * (0.3125 + 3.0) / 2.0, 1e-7);
}

TEST(GlobalMoments, WallAxesCarryNoMeanVelocity) {
  Totals t;
  t.mass = 2.0;
  t.momentum = {1.0, -0.5, 0.0};
  t.energy = 3.5;
  const SpatialMesh walled(1, {0.0, 0.0}, {2.0, 0.0}, {4, 1},
                           Walls{BoundarySpec::specular(), BoundarySpec::specular(), {}, {}});
  const Moments w = global_moments(t, walled, 2);
  EXPECT_DOUBLE_EQ(w.rho, 1.0);
  EXPECT_EQ(w.u[0], 0.0);
  EXPECT_DOUBLE_EQ(w.u[1], -0.25);
  EXPECT_DOUBLE_EQ(w.T, (3.5 - 0.0625) / 2.0);
  const SpatialMesh periodic(1, {0.0, 0.0}, {2.0, 0.0}, {4, 1}, Walls{});
  const Moments p = global_moments(t, periodic, 2);
  EXPECT_DOUBLE_EQ(p.u[0], 0.5);
  EXPECT_DOUBLE_EQ(p.T, (3.5 - 0.3125) / 2.0);
  t.mass = 0.0;
  EXPECT_THROW(global_moments(t, periodic, 2), DegenerateState);
}

TEST(Entropy, GlobalMaxwellianHasZeroEntropies) {
  auto g = std::make_shared<const VelocityGrid>(2, 32, 8.0);
  const auto mesh = periodic_line(8);
  const auto f = testing::uniform_field(g, mesh.size(), maxwellian(*g, 1.0, {0.2, 0.1, 0.0}, 1.2));
  const auto h = entropies(f, mesh);
  EXPECT_NEAR(h.Hg, 0.0, 1e-12);
  EXPECT_NEAR(h.Hl, 0.0, 1e-12);
  EXPECT_NEAR(h.Hh, 0.0, 1e-12);
}

TEST(Entropy, LocalMaxwelliansHaveOnlyHydrodynamicEntropy) {
  auto g = std::make_shared<const VelocityGrid>(2, 32, 8.0);
  const auto mesh = periodic_line(16);
  const auto f = local_maxwellians(g, mesh);
  const auto h = entropies(f, mesh);
  EXPECT_NEAR(h.Hl, 0.0, 1e-11);
  EXPECT_GT(h.Hg, 1e-3);
  EXPECT_NEAR(h.Hg, h.Hl + h.Hh, 1e-12);
}

TEST(Entropy, AdditivityOnTrendDatum) {
  ScenarioConfig c = build_trend_to_equilibrium();
  const auto g = make_velocity_grid(c);
  const auto mesh = make_mesh(c);
  const auto f = initial_field(c, mesh, g);
  const auto h = entropies(f, mesh);
  EXPECT_NEAR(h.Hg, h.Hl + h.Hh, 1e-3);
  EXPECT_NEAR(h.Hg, h.Hl + h.Hh, 1e-12);
  EXPECT_GT(h.Hl, 0.0);
  EXPECT_GT(h.Hh, 0.0);
}

TEST(Entropy, RelativeEntropiesAreNonNegative) {
  auto g = std::make_shared<const VelocityGrid>(2, 16, 6.0);
  const auto mesh = periodic_line(6);
  DistributionField f(g, mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const auto s = testing::bimodal(*g, 1.0 + 0.1 * i, 0.5 + 0.2 * i);
    std::copy(s.begin(), s.end(), f.slice(i).begin());
  }
  const auto h = entropies(f, mesh);
  EXPECT_GT(h.Hl, 0.0);
  EXPECT_GE(h.Hg, h.Hl);
}

TEST(Entropy, NegativeValuesAreClampedNotPropagated) {
  auto g = std::make_shared<const VelocityGrid>(2, 16, 8.0);
  const auto mesh = periodic_line(4);
  auto f = testing::uniform_field(g, mesh.size(), maxwellian(*g, 1.0, {}, 1.0));
  f.slice(2)[0] = -1e-6;
  const auto h = entropies(f, mesh);
  EXPECT_TRUE(std::isfinite(h.Hg));
  EXPECT_TRUE(std::isfinite(h.Hl));
  EXPECT_TRUE(std::isfinite(h.Hh));
  EXPECT_TRUE(std::isfinite(kinetic_entropy(*g, f.slice(2))));
}

TEST(Diagnostics, VacuumCellIsNamed) {
  auto g = std::make_shared<const VelocityGrid>(2, 8, 4.0);
  const auto mesh = periodic_line(3);
  auto f = testing::uniform_field(g, mesh.size(), maxwellian(*g, 1.0, {}, 1.0));
  std::fill(f.slice(1).begin(), f.slice(1).end(), 0.0);
  try {
    cell_moments(f, mesh);
    FAIL() << "expected DegenerateState";
  } catch (const DegenerateState& e) {
    EXPECT_NE(std::string(e.what()).find("cell 1"), std::string::npos);
  }
}

TEST(Diagnostics, L1Distances) {
  auto g = std::make_shared<const VelocityGrid>(2, 32, 8.0);
  const auto mesh = periodic_line(4);
  const auto f = local_maxwellians(g, mesh);
  auto h = f;
  for (double& x : h.values) x *= 1.5;
  EXPECT_NEAR(l1_distance(f, h, mesh), 0.5 * totals(f, mesh).mass, 1e-12);
  EXPECT_NEAR(distance_to_local_maxwellian(f, mesh), 0.0, 1e-10);
  DistributionField other(g, 3);
  EXPECT_THROW(l1_distance(f, other, mesh), InvalidArgument);
}

}  // namespace
}  // namespace kinspec
