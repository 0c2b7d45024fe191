#include <cmath>

#include <gtest/gtest.h>

#include "kinspec/error.hpp"
#include "kinspec/transport.hpp"
#include "oracles.hpp"

namespace kinspec {
namespace {

using Walls = std::array<BoundarySpec, 4>;

SpatialMesh periodic_line(int cells) {
  return SpatialMesh(1, {0.0, 0.0}, {1.0, 0.0}, {cells, 1}, Walls{});
}

SpatialMesh walled_line(int cells, const BoundarySpec& lo, const BoundarySpec& hi) {
  return SpatialMesh(1, {0.0, 0.0}, {1.0, 0.0}, {cells, 1}, Walls{lo, hi, {}, {}});
}

double field_mass(const DistributionField& f, const SpatialMesh& m) {
  double s = 0.0;
  for (double x : f.values) s += x;
  return s * m.cell_measure() * f.grid->cell_volume();
}

TEST(Limiter, SlopeValues) {
  EXPECT_DOUBLE_EQ(limit_slope(1.0, 3.0, Limiter::minmod), 1.0);
  EXPECT_DOUBLE_EQ(limit_slope(-2.0, -1.0, Limiter::minmod), -1.0);
  EXPECT_DOUBLE_EQ(limit_slope(1.0, -1.0, Limiter::minmod), 0.0);
  EXPECT_DOUBLE_EQ(limit_slope(1.0, 3.0, Limiter::van_leer), 1.5);
  EXPECT_DOUBLE_EQ(limit_slope(1.0, -1.0, Limiter::van_leer), 0.0);
  EXPECT_DOUBLE_EQ(limit_slope(1.0, 3.0, Limiter::superbee), 2.0);
  EXPECT_DOUBLE_EQ(limit_slope(1.0, 1.5, Limiter::superbee), 1.5);
  EXPECT_EQ(limiter_from_string("van_leer"), Limiter::van_leer);
  EXPECT_EQ(to_string(Limiter::superbee), "superbee");
  EXPECT_THROW(limiter_from_string("weno"), InvalidArgument);
}

TEST(Limiter, FaceValues) {
  for (auto lim : {Limiter::minmod, Limiter::van_leer, Limiter::superbee}) {
    EXPECT_DOUBLE_EQ(limited_face_value(2.0, 2.0, 2.0, lim), 2.0);
    // linear data: the face value is the midpoint
    EXPECT_DOUBLE_EQ(limited_face_value(1.0, 2.0, 3.0, lim), 2.5);
    // local extremum: first order
    EXPECT_DOUBLE_EQ(limited_face_value(1.0, 2.0, 1.5, lim), 2.0);
    EXPECT_DOUBLE_EQ(limited_face_value(1.0, 2.0, 3.0, lim, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(limited_face_value(1.0, 2.0, 3.0, lim, 0.5), 2.25);
  }
}

TEST(Transport, UniformPeriodicFieldIsStationary) {
  auto g = std::make_shared<const VelocityGrid>(2, 8, 4.0);
  const auto mesh = periodic_line(16);
  const auto m = maxwellian(*g, 1.0, {0.3, 0.0, 0.0}, 1.0);
  const auto f = testing::uniform_field(g, mesh.size(), m);
  Transport t(*g, mesh);
  std::vector<double> inc(f.values.size(), 0.0);
  t.add_increment(f, 1e-3, inc, 0, mesh.size());
  for (double x : inc) EXPECT_NEAR(x, 0.0, 1e-16);
}

TEST(Transport, PeriodicMassTelescopes) {
  auto g = std::make_shared<const VelocityGrid>(2, 8, 4.0);
  for (int dim : {1, 2}) {
    const SpatialMesh mesh = dim == 1 ? periodic_line(20)
                                      : SpatialMesh(2, {0.0, 0.0}, {1.0, 2.0}, {10, 7}, Walls{});
    DistributionField f(g, mesh.size());
    f.values = testing::random_values(f.values.size(), 9 + dim);
    Transport t(*g, mesh);
    std::vector<double> inc(f.values.size(), 0.0);
    t.add_increment(f, 1e-3, inc, 0, mesh.size());
    double s = 0.0, a = 0.0;
    for (double x : inc) {
      s += x;
      a += std::abs(x);
    }
    EXPECT_LE(std::abs(s), 1e-14 * a) << dim;
  }
}

TEST(Transport, SplitRangesMatchSinglePass) {
  auto g = std::make_shared<const VelocityGrid>(2, 8, 4.0);
  const SpatialMesh mesh(2, {0.0, 0.0}, {1.0, 1.0}, {6, 5}, Walls{BoundarySpec::diffuse(1.0), BoundarySpec::diffuse(1.5), BoundarySpec::specular(), BoundarySpec::specular()});
  DistributionField f(g, mesh.size());
  f.values = testing::random_values(f.values.size(), 4, 0.1, 1.0);
  Transport t(*g, mesh);
  t.update_walls(f);
  std::vector<double> a(f.values.size(), 0.0), b(f.values.size(), 0.0);
  t.add_increment(f, 1e-3, a, 0, mesh.size());
  t.add_increment(f, 1e-3, b, 0, 11);
  t.add_increment(f, 1e-3, b, 11, mesh.size());
  EXPECT_EQ(a, b);
}

TEST(Transport, PositivityAtHalfCourant) {
  auto g = std::make_shared<const VelocityGrid>(2, 8, 4.0);
  const auto mesh = periodic_line(40);
  DistributionField f(g, mesh.size());
  // blocks of zeros and ones: the hardest case for positivity
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    auto s = f.slice(i);
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = (i / 5 + j) % 2 == 0 ? 1.0 : 0.0;
  }
  for (auto lim : {Limiter::minmod, Limiter::van_leer, Limiter::superbee}) {
    Transport t(*g, mesh, {lim, true});
    const double dt = 0.5 / (t.courant_number(1.0));
    EXPECT_NEAR(t.courant_number(dt), 0.5, 1e-14);
    auto cur = f;
    for (int step = 0; step < 20; ++step) {
      std::vector<double> next = cur.values;
      t.add_increment(cur, dt, next, 0, mesh.size());
      cur.values = next;
    }
    for (double x : cur.values) EXPECT_GE(x, -1e-15) << to_string(lim);
  }
}

TEST(Transport, CourantNumberUsesLargestNode) {
  auto g = std::make_shared<const VelocityGrid>(2, 8, 4.0);
  const SpatialMesh mesh(2, {0.0, 0.0}, {1.0, 2.0}, {10, 10}, Walls{});
  Transport t(*g, mesh);
  const double vmax = g->node(7);
  EXPECT_NEAR(t.courant_number(1e-3), 1e-3 * (vmax / 0.1 + vmax / 0.2), 1e-15);
}

class WallFlux : public ::testing::TestWithParam<double> {};

TEST_P(WallFlux, NetNormalFluxVanishes) {
  const double alpha = GetParam();
  VelocityGrid g(2, 16, 6.0);
  BoundarySpec spec{BoundaryKind::maxwell_mix, alpha, 1.3, 0.0, 1.0, {0.0, 0.2, 0.0}};
  const auto cell = testing::bimodal(g, 1.0, 0.9, 0.7);
  std::vector<double> face(g.size());
  for (int axis : {0, 1}) {
    for (int sign : {1, -1}) {
      const auto r = boundary_face_distribution(g, cell, spec, axis, sign, 0.0, face);
      EXPECT_FALSE(r.vacuum);
      const double flux = normal_flux(g, face, axis, sign);
      EXPECT_NEAR(flux, 0.0, 1e-14 * std::abs(r.outgoing_flux)) << axis << " " << sign;
      EXPECT_GT(std::abs(r.outgoing_flux), 0.0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Accommodation, WallFlux, ::testing::Values(0.0, 0.5, 1.0));

TEST(Wall, SpecularCarriesNoShear) {
  VelocityGrid g(2, 16, 6.0);
  const auto cell = maxwellian(g, 1.0, {0.4, 0.7, 0.0}, 0.9);
  std::vector<double> face(g.size());
  const auto r = boundary_face_distribution(g, cell, BoundarySpec::specular(), 0, 1, 0.0, face);
  EXPECT_NEAR(r.xi, 1.0, 1e-14);
  double shear = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto v = g.velocity(j);
    shear += v[0] * v[1] * face[j];
    scale += std::abs(v[0] * v[1] * face[j]);
  }
  EXPECT_LE(std::abs(shear), 1e-14 * scale);
}

TEST(Wall, SpecularReflectionIsAnInvolution) {
  VelocityGrid g(3, 6, 2.0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (int a = 0; a < 3; ++a) {
      const std::size_t k = g.reflect(j, a);
      EXPECT_EQ(g.reflect(k, a), j);
      const auto v = g.velocity(j);
      const auto w = g.velocity(k);
      for (int b = 0; b < 3; ++b) EXPECT_DOUBLE_EQ(w[b], b == a ? -v[b] : v[b]);
    }
  }
}

TEST(Wall, DiffuseEmitsWallMaxwellian) {
  VelocityGrid g(2, 16, 6.0);
  const auto cell = testing::bimodal(g);
  std::vector<double> face(g.size());
  const auto spec = BoundarySpec::diffuse(0.7, {0.0, 0.3, 0.0});
  const auto r = boundary_face_distribution(g, cell, spec, 0, 1, 0.0, face);
  const auto mw = maxwellian(g, 1.0, {0.0, 0.3, 0.0}, 0.7);
  double ratio = -1.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double vx = g.velocity(j)[0];
    if (vx < 0.0) {
      EXPECT_DOUBLE_EQ(face[j], cell[j]);
    } else if (mw[j] > 1e-3) {
      if (ratio < 0.0) ratio = face[j] / mw[j];
      EXPECT_NEAR(face[j] / mw[j], ratio, 1e-12 * ratio);
    }
  }
  EXPECT_GT(r.mu, 0.0);
}

TEST(Wall, VariableWallTemperature) {
  BoundarySpec s = BoundarySpec::diffuse(1.0);
  s.T_w_amplitude = -0.5;
  s.T_w_period = 2.0;
  EXPECT_DOUBLE_EQ(s.wall_temperature(0.0), 0.5);
  EXPECT_NEAR(s.wall_temperature(1.0), 1.5, 1e-15);
  s.T_w_amplitude = 1.0;
  EXPECT_THROW(s.validate(), InvalidArgument);
}

TEST(Wall, VacuumFaceEmitsNothing) {
  VelocityGrid g(2, 8, 4.0);
  std::vector<double> cell(g.size(), 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g.velocity(j)[0] > 0.0) cell[j] = 1.0;  // everything moves away from the x_lo wall
  }
  std::vector<double> face(g.size(), 7.0);
  const auto r = boundary_face_distribution(g, cell, BoundarySpec::diffuse(1.0), 0, 1, 0.0, face);
  EXPECT_TRUE(r.vacuum);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g.velocity(j)[0] > 0.0) {
      EXPECT_EQ(face[j], 0.0);
    } else {
      EXPECT_EQ(face[j], cell[j]);
    }
  }
  auto gp = std::make_shared<const VelocityGrid>(g);
  const auto mesh = walled_line(4, BoundarySpec::diffuse(1.0), BoundarySpec::diffuse(1.0));
  const auto f = testing::uniform_field(gp, mesh.size(), cell);
  Transport t(*gp, mesh);
  t.update_walls(f);
  EXPECT_TRUE(t.wall_result(Wall::x_lo, 0).vacuum);
  EXPECT_EQ(t.vacuum_events(), 1u);
}

TEST(Wall, PeriodicSideHasNoWallDistribution) {
  VelocityGrid g(2, 8, 4.0);
  std::vector<double> cell(g.size(), 1.0), face(g.size());
  EXPECT_THROW(boundary_face_distribution(g, cell, BoundarySpec::periodic(), 0, 1, 0.0, face), InvalidArgument);
  EXPECT_THROW(walled_line(4, BoundarySpec::periodic(), BoundarySpec::specular()), InvalidArgument);
}

TEST(Transport, ClosedBoxConservesMass) {
  auto g = std::make_shared<const VelocityGrid>(2, 8, 4.0);
  for (const auto& w : {BoundarySpec::specular(), BoundarySpec::diffuse(1.4),
                        BoundarySpec{BoundaryKind::maxwell_mix, 0.3, 0.8, 0.0, 1.0, {}}}) {
    const SpatialMesh mesh(2, {0.0, 0.0}, {1.0, 1.0}, {6, 6}, Walls{w, w, w, w});
    DistributionField f(g, mesh.size());
    f.values = testing::random_values(f.values.size(), 2, 0.1, 1.0);
    Transport t(*g, mesh);
    const double m0 = field_mass(f, mesh);
    const double dt = 0.4 / t.courant_number(1.0);
    for (int step = 0; step < 10; ++step) {
      t.update_walls(f);
      std::vector<double> next = f.values;
      t.add_increment(f, dt, next, 0, mesh.size());
      f.values = next;
    }
    EXPECT_NEAR(field_mass(f, mesh), m0, 1e-13 * m0) << to_string(w.kind);
  }
}

TEST(Force, ZeroForceLeavesSliceUnchanged) {
  VelocityGrid g(2, 16, 6.0);
  const auto f = testing::bimodal(g);
  std::vector<double> out(g.size(), 0.0);
  force_increment(g, f, 0.0, 1e-2, 1, out);
  for (double x : out) EXPECT_EQ(x, 0.0);
}

TEST(Force, ConservesMassAndAddsMomentum) {
  VelocityGrid g(2, 24, 7.0);
  const auto f = maxwellian(g, 1.0, {0.0, 0.0, 0.0}, 1.0);
  for (auto scheme : {ForceScheme::upwind, ForceScheme::limited}) {
    for (double a : {0.5, -0.5}) {
      std::vector<double> out(g.size(), 0.0);
      const double dt = 1e-2;
      force_increment(g, f, a, dt, 1, out, scheme);
      double dm = 0.0, dp = 0.0, scale = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        dm += out[j];
        dp += g.velocity(j)[1] * out[j];
        scale += std::abs(out[j]);
      }
      dm *= g.cell_volume();
      dp *= g.cell_volume();
      EXPECT_LE(std::abs(dm), 1e-15 * scale) << to_string(scheme);
      EXPECT_NEAR(dp, a * dt, 1e-2 * std::abs(a) * dt) << to_string(scheme);
    }
  }
}

TEST(Force, EdgeMassRatio) {
  VelocityGrid g(2, 16, 6.0);
  const auto m = maxwellian(g, 1.0, {}, 1.0);
  EXPECT_LT(edge_mass_ratio(g, m, 1), 1e-6);
  std::vector<double> edge(g.size(), 0.0);
  edge[g.flatten({3, 0, 0})] = 1.0;
  EXPECT_DOUBLE_EQ(edge_mass_ratio(g, edge, 1), 1.0);
  EXPECT_EQ(force_scheme_from_string("limited"), ForceScheme::limited);
  EXPECT_THROW(force_scheme_from_string("central"), InvalidArgument);
}

}  // namespace
}  // namespace kinspec
