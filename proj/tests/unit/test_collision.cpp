#include <cmath>
#include <fstream>
#include <json.hpp>

#include <gtest/gtest.h>

#include "kinspec/collision.hpp"
#include "kinspec/error.hpp"
#include "kinspec/kernel_cache.hpp"
#include "oracles.hpp"

namespace kinspec {
namespace {

std::shared_ptr<ClassicalCollision> classical(const VelocityGrid& g, double gamma = 0.0) {
  ClassicalKernelParams p;
  p.gamma = gamma;
  return std::make_shared<ClassicalCollision>(g, classical_table(g, p, {}));
}

std::shared_ptr<FastCollision> fast(const VelocityGrid& g, int angles = 8, int padding = 0) {
  FastKernelParams p;
  p.angles = angles;
  p.padding = padding;
  return std::make_shared<FastCollision>(g, fast_table(g, p, {}));
}

struct Conservation {
  double mass = 0.0, px = 0.0, py = 0.0, energy = 0.0;
};

Conservation conservation(const VelocityGrid& g, std::span<const double> q) {
  Conservation c;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto v = g.velocity(j);
    c.mass += q[j];
    c.px += v[0] * q[j];
    c.py += v[1] * q[j];
    c.energy += 0.5 * (v[0] * v[0] + v[1] * v[1]) * q[j];
  }
  const double w = g.cell_volume();
  return {c.mass * w, c.px * w, c.py * w, c.energy * w};
}

// Band-limited resampling of a slice onto a grid with the same box.
std::vector<double> resample(const VelocityGrid& from, std::span<const double> f, const VelocityGrid& to) {
  std::vector<Complex> coeffs;
  band_coefficients(from, f, coeffs);
  const ModeBand band(2, from.nodes_per_axis() / 2 - 1);
  std::vector<double> out(to.size(), 0.0);
  for (std::size_t j = 0; j < to.size(); ++j) {
    const auto v = to.velocity(j);
    Complex s = 0.0;
    for (std::size_t i = 0; i < band.size(); ++i) {
      const auto k = band.mode(i);
      s += coeffs[i] * std::polar(1.0, kPi * (k[0] * v[0] + k[1] * v[1]) / from.half_width());
    }
    out[j] = s.real();
  }
  return out;
}

TEST(Collision, MassIsConservedToRoundOff) {
  VelocityGrid g(2, 16, 6.0);
  const auto f = testing::bimodal(g);
  for (const std::shared_ptr<CollisionOperator>& op :
       std::vector<std::shared_ptr<CollisionOperator>>{classical(g), classical(g, 1.0), fast(g)}) {
    const auto q = (*op)(f);
    double scale = 0.0;
    for (double x : q) scale = std::max(scale, std::abs(x));
    EXPECT_LE(std::abs(conservation(g, q).mass), 1e-13 * scale * g.cell_volume() * g.size()) << op->name();
  }
}

TEST(Collision, MomentumAndEnergyErrorsShrinkWithResolution) {
  double prev_p = 1e300, prev_e = 1e300;
  for (int n : {8, 16, 32}) {
    VelocityGrid g(2, n, 6.0);
    const auto f = testing::bimodal(g);
    const auto c = conservation(g, (*classical(g))(f));
    const double p = std::hypot(c.px, c.py);
    const double e = std::abs(c.energy);
    EXPECT_LT(p, prev_p + 1e-14) << n;
    EXPECT_LT(e, prev_e) << n;
    prev_p = p;
    prev_e = e;
  }
  EXPECT_LT(prev_e, 1e-4);
  EXPECT_LT(prev_p, 1e-10);
}

TEST(Collision, MaxwellianResidualShrinksWithResolution) {
  double prev = 1e300;
  for (int n : {8, 16, 32}) {
    VelocityGrid g(2, n, 6.0);
    const auto m = maxwellian(g, 1.0, {0.3, -0.2, 0.0}, 0.8);
    const auto q = (*classical(g))(m);
    double r = 0.0;
    for (double x : q) r = std::max(r, std::abs(x));
    EXPECT_LT(r, prev) << n;
    prev = r;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(Collision, PaddedFastEqualsDenseReconstruction) {
  // 3N + 1 points remove wrap-around of the band products; without padding
  // the two differ by the aliased tail only.
  for (int pad : {0, 22, 24}) {
    VelocityGrid g(2, 16, 6.0);
    FastKernelParams p;
    p.angles = 6;
    p.padding = pad;
    const auto t = fast_table(g, p, {});
    FastCollision fc(g, t);
    DenseCollision dc(g, dense_beta(*t));
    const auto f = testing::bimodal(g);
    EXPECT_LE(testing::rel_linf(fc(f), dc(f)), pad == 0 ? 1e-2 : 1e-10) << pad;
  }
}

TEST(Collision, PaddedFastThreeDimensionalEqualsDenseReconstruction) {
  VelocityGrid g(3, 8, 6.0);
  FastKernelParams p;
  p.padding = 10;
  p.angles = 3;
  p.azimuth = 4;
  const auto t = fast_table(g, p, {});
  FastCollision fc(g, t);
  DenseCollision dc(g, dense_beta(*t));
  const auto f = maxwellian(g, 1.0, {0.5, 0.0, -0.3}, 0.7);
  auto h = f;
  for (std::size_t j = 0; j < h.size(); ++j) h[j] *= 1.0 + 0.2 * std::sin(g.velocity(j)[2]);
  EXPECT_LE(testing::rel_linf(fc(h), dc(h)), 1e-10);
}

TEST(Collision, ClassicalEqualsDenseWithSameTable) {
  VelocityGrid g(2, 16, 6.0);
  const auto t = classical_table(g, {}, {});
  ClassicalCollision cc(g, t);
  DenseCollision dc(g, std::vector<double>(t->raw().begin(), t->raw().end()));
  const auto f = testing::bimodal(g);
  EXPECT_LE(testing::rel_linf(cc(f), dc(f)), 1e-13);
}

class OracleWeakForm : public ::testing::TestWithParam<OracleForm> {};

TEST_P(OracleWeakForm, BandCoefficientsAgree) {
  VelocityGrid g(2, 8, 4.0);
  VelocityGrid fine(2, 16, 4.0);
  const auto f = testing::trig_polynomial(g, 3, 7);
  OracleParams op;
  op.form = GetParam();
  op.radial_points = 32;
  op.angular_points = 64;
  const auto q_oracle = collide_oracle(fine, resample(g, f, fine), op);
  std::vector<Complex> ref, got;
  band_coefficients(fine, q_oracle, ref);
  const ModeBand coarse(2, 3), wide(2, 7);
  std::vector<double> q;
  if (op.form == OracleForm::classical) {
    q = (*classical(g))(f);
  } else {
    q = (*fast(g, 64, 10))(f);
  }
  band_coefficients(g, q, got);
  double scale = 0.0, err = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const Complex r = ref[wide.index(coarse.mode(i))];
    scale = std::max(scale, std::abs(r));
    err = std::max(err, std::abs(r - got[i]));
  }
  EXPECT_GT(scale, 0.0);
  EXPECT_LE(err, 1e-6 * scale);
}

INSTANTIATE_TEST_SUITE_P(Forms, OracleWeakForm, ::testing::Values(OracleForm::classical, OracleForm::carleman));

TEST(Collision, OracleRefusesLargeGrids) {
  VelocityGrid g(2, 32, 4.0);
  std::vector<double> f(g.size(), 1.0);
  EXPECT_THROW(collide_oracle(g, f), InvalidArgument);
}

TEST(Collision, FrozenFixture) {
  std::ifstream in(std::string(KINSPEC_FIXTURE_DIR) + "/collision_n8.json");
  ASSERT_TRUE(in.good());
  const auto j = nlohmann::json::parse(in);
  VelocityGrid g(2, j.at("n").get<int>(), j.at("L").get<double>());
  const auto f = j.at("f").get<std::vector<double>>();
  const auto expect_c = j.at("classical").get<std::vector<double>>();
  const auto expect_f = j.at("fast").get<std::vector<double>>();
  EXPECT_LE(testing::rel_linf((*classical(g))(f), expect_c), 1e-12);
  EXPECT_LE(testing::rel_linf((*fast(g))(f), expect_f), 1e-12);
}

TEST(Collision, RejectsMismatchedTables) {
  VelocityGrid g(2, 16, 6.0);
  VelocityGrid h(2, 8, 6.0);
  EXPECT_THROW(ClassicalCollision(g, classical_table(h, {}, {})), InvalidArgument);
  auto op = classical(g);
  std::vector<double> f(10);
  EXPECT_THROW((*op)(f), InvalidArgument);
}

}  // namespace
}  // namespace kinspec
