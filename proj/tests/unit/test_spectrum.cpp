#include <cmath>

#include <gtest/gtest.h>

#include "kinspec/error.hpp"
#include "kinspec/fft.hpp"
#include "kinspec/parallel.hpp"
#include "kinspec/quadrature.hpp"
#include "kinspec/spectrum.hpp"
#include "oracles.hpp"

namespace kinspec {
namespace {

TEST(Spectrum, ConstantHasOnlyMeanMode) {
  VelocityGrid g(2, 16, 8.0);
  SpectralTransform t(g);
  std::vector<double> f(g.size(), 3.5);
  const Spectrum s = t.forward(f);
  for (int a = -8; a < 8; ++a)
    for (int b = -8; b < 8; ++b) {
      const Complex c = s.at({a, b, 0});
      if (a == 0 && b == 0) {
        EXPECT_NEAR(c.real(), 3.5, 1e-13);
        EXPECT_NEAR(c.imag(), 0.0, 1e-13);
      } else {
        EXPECT_NEAR(std::abs(c), 0.0, 1e-13);
      }
    }
}

TEST(Spectrum, CosineHasTwoHalfModes) {
  VelocityGrid g(2, 16, 8.0);
  SpectralTransform t(g);
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = std::cos(kPi * g.velocity(j)[0] / 8.0);
  const Spectrum s = t.forward(f);
  for (int a = -8; a < 8; ++a)
    for (int b = -8; b < 8; ++b) {
      const double expect = (b == 0 && (a == 1 || a == -1)) ? 0.5 : 0.0;
      EXPECT_NEAR(s.at({a, b, 0}).real(), expect, 1e-13);
      EXPECT_NEAR(s.at({a, b, 0}).imag(), 0.0, 1e-13);
    }
}

TEST(Spectrum, MeanModeIsMassOverBoxVolume) {
  VelocityGrid g(2, 16, 8.0);
  SpectralTransform t(g);
  const auto f = testing::random_values(g.size(), 3);
  EXPECT_NEAR(t.forward(f).at({0, 0, 0}).real(), mass(g, f) / (16.0 * 16.0), 1e-14);
}

TEST(Spectrum, HermitianSymmetry) {
  VelocityGrid g(2, 16, 8.0);
  SpectralTransform t(g);
  const auto f = testing::random_values(g.size(), 5);
  const Spectrum s = t.forward(f);
  for (int a = -7; a <= 7; ++a)
    for (int b = -7; b <= 7; ++b) {
      const Complex p = s.at({a, b, 0});
      const Complex q = std::conj(s.at({-a, -b, 0}));
      EXPECT_NEAR(std::abs(p - q), 0.0, 1e-14);
    }
}

TEST(Spectrum, RoundTripRandom) {
  for (int d : {2, 3}) {
    VelocityGrid g(d, 16, 6.0);
    SpectralTransform t(g);
    const auto f = testing::random_values(g.size(), 11);
    const auto back = t.inverse(t.forward(f));
    double err = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) err = std::max(err, std::abs(back[j] - f[j]));
    EXPECT_LE(err, 1e-12) << "d = " << d;
  }
}

TEST(Spectrum, MatchesDirectSum) {
  VelocityGrid g(2, 8, 3.0);
  SpectralTransform t(g);
  const auto f = testing::random_values(g.size(), 17);
  const Spectrum s = t.forward(f);
  for (int a = -4; a < 4; ++a)
    for (int b = -4; b < 4; ++b) {
      Complex sum = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        const auto v = g.velocity(j);
        sum += f[j] * std::exp(Complex(0.0, -kPi * (a * v[0] + b * v[1]) / 3.0));
      }
      sum /= 64.0;
      EXPECT_NEAR(std::abs(sum - s.at({a, b, 0})), 0.0, 1e-14);
    }
}

TEST(Spectrum, SizeMismatchIsRejected) {
  VelocityGrid g(2, 8, 3.0);
  SpectralTransform t(g);
  std::vector<double> f(10, 0.0);
  EXPECT_THROW(t.forward(f), InvalidArgument);
}

TEST(ModeBand, IndexRoundTrip) {
  ModeBand b(2, 3);
  EXPECT_EQ(b.size(), 49u);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index(b.mode(i)), i);
  EXPECT_FALSE(b.contains({4, 0, 0}));
  EXPECT_EQ(b.index({0, -4, 0}), b.size());
  EXPECT_EQ(b.index({0, 0, 0}), 24u);
}

TEST(RealFft, ForwardBackwardScale) {
  RealFft fft(2, 12);
  const auto v = testing::random_values(fft.real_size(), 21);
  std::copy(v.begin(), v.end(), fft.real());
  fft.forward();
  fft.backward();
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_NEAR(fft.real()[j], 144.0 * v[j], 1e-11);
}

TEST(Quadrature, GaussLegendreIsExactForPolynomials) {
  const auto q = gauss_legendre(6, 0.0, 2.0);
  for (int p = 0; p <= 11; ++p) {
    double s = 0.0;
    for (std::size_t k = 0; k < q.nodes.size(); ++k) s += q.weights[k] * std::pow(q.nodes[k], p);
    EXPECT_NEAR(s, std::pow(2.0, p + 1) / (p + 1), 1e-11 * std::pow(2.0, p + 1)) << p;
  }
}

TEST(Parallel, CoversRangeAndRethrows) {
  std::vector<int> hit(103, 0);
  parallel_for(hit.size(), 4, [&](std::size_t b, std::size_t e, int) {
    for (std::size_t i = b; i < e; ++i) ++hit[i];
  });
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t b, std::size_t, int) {
                              if (b > 0) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace kinspec
