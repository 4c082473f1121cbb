#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcurl/mms.hpp"

using namespace qcurl;

namespace {

std::vector<Vec3> random_points(int count, unsigned seed, double margin = 0.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(margin, 1.0 - margin);
  std::vector<Vec3> out(count);
  for (auto& x : out) x = {d(rng), d(rng), d(rng)};
  return out;
}

double divergence(ExactField field, const Vec3& x) {
  const ExactFields& u = manufactured_solution();
  double s = 0.0;
  for (int a = 0; a < 3; ++a) s += u.eval_derivative(field, unit_index(a), x)[a];
  return s;
}

}  // namespace

TEST(Mms, SinCubedSeries) {
  const TrigSeries1D s = TrigSeries1D::sin_cubed();
  for (double t : {0.0, 0.13, 0.5, 0.77}) {
    EXPECT_NEAR(s.evaluate(t), oracle::s0(t), 1e-14);
    EXPECT_NEAR(s.derivative().evaluate(t), oracle::s1(t), 1e-12);
  }
}

TEST(Mms, VelocityMatchesHandFormula) {
  const ExactFields& u = manufactured_solution();
  for (const Vec3& x : random_points(20, 1)) {
    const Vec3 got = u.u(x);
    const auto expect = oracle::velocity(x);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(got[i], expect[i], 1e-13);
  }
}

TEST(Mms, CurlAndGradCurlMatchFiniteDifferences) {
  const ExactFields& u = manufactured_solution();
  const oracle::VField curl_fd = oracle::fd_curl(oracle::velocity, 1e-3);
  for (const Vec3& x : random_points(10, 2, 0.05)) {
    const auto c = curl_fd(x);
    const Vec3 got = u.curl_u(x);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(got[i], c[i], 1e-8);
    const Mat3 g = u.grad_curl_u(x);
    for (int j = 0; j < 3; ++j) {
      const auto d = oracle::fd_partial([&u](const oracle::V3& y) { return u.curl_u(y); }, x, j, 1e-3);
      for (int i = 0; i < 3; ++i) EXPECT_NEAR(g[i][j], d[i], 1e-7);
    }
  }
}

TEST(Mms, DivergenceFree) {
  for (const Vec3& x : random_points(50, 3)) {
    EXPECT_NEAR(divergence(ExactField::Velocity, x), 0.0, 1e-10);
    EXPECT_NEAR(divergence(ExactField::Source, x), 0.0, 1e-10);
  }
}

TEST(Mms, SourceMatchesNestedFiniteDifferenceCurl) {
  const ExactFields& u = manufactured_solution();
  for (const Vec3& x : random_points(4, 4, 0.1)) {
    const Vec3 f = u.f(x);
    const auto fd = oracle::curl4_velocity(x);
    EXPECT_LT(oracle::distance(f, fd) / oracle::norm(fd), 1e-6);
  }
}

TEST(Mms, SourceIsMinusCurlLaplaceCurl) {
  const ExactFields& u = manufactured_solution();
  const oracle::VField lap = [&u](const oracle::V3& y) { return u.laplace_curl_u(y); };
  const oracle::VField c = oracle::fd_curl(lap, 1e-3);
  for (const Vec3& x : random_points(5, 5, 0.05)) {
    const auto expect = c(x);
    const Vec3 f = u.f(x);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(f[i], -expect[i], 1e-6 * oracle::norm(expect));
  }
}

TEST(Mms, HomogeneousBoundaryValues) {
  const ExactFields& u = manufactured_solution();
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (int k = 0; k < 30; ++k) {
    Vec3 x{d(rng), d(rng), d(rng)};
    x[k % 3] = (k / 3) % 2;
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(u.u(x)[i], 0.0, 1e-13);
      EXPECT_NEAR(u.curl_u(x)[i], 0.0, 1e-12);
    }
  }
}

TEST(Mms, SampleAgreesWithSeparateEvaluations) {
  const ExactFields& u = manufactured_solution();
  const Vec3 x{0.21, 0.64, 0.37};
  const ExactFields::Sample s = u.sample(x);
  const Mat3 g = u.grad_curl_u(x);
  for (int i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(s.u[i], u.u(x)[i]);
    EXPECT_NEAR(s.curl[i], u.curl_u(x)[i], 1e-13);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(s.grad_curl[i][j], g[i][j], 1e-12);
  }
}

TEST(Mms, DerivativeOrderLimit) {
  const ExactFields& u = manufactured_solution();
  EXPECT_THROW(u.eval_derivative(ExactField::Velocity, {2, 1, 1}, {0.5, 0.5, 0.5}), UnsupportedOrder);
  EXPECT_NO_THROW(u.eval_derivative(ExactField::Velocity, {1, 1, 1}, {0.5, 0.5, 0.5}));
}
