#include "taumax/taylor_jet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace taumax {
namespace {

TaylorJet random_jet(std::mt19937_64& rng, double center, int order, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = d(rng);
  return {center, c};
}

void expect_coeffs_near(const TaylorJet& got, const TaylorJet& want, double tol) {
  ASSERT_EQ(got.order(), want.order());
  for (int k = 0; k <= got.order(); ++k) {
    EXPECT_NEAR(got[k], want[k], tol * std::max(1.0, std::abs(want[k]))) << "k=" << k;
  }
}

TEST(TaylorJet, ExpOfZeroConstant) {
  const TaylorJet e = exp(TaylorJet::constant(0.7, 0.0, 5));
  EXPECT_EQ(e[0], 1.0);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(e[k], 0.0);
  EXPECT_EQ(e.center(), 0.7);
}

TEST(TaylorJet, SquareOfVariable) {
  const TaylorJet x = TaylorJet::variable(2.0, 3);
  const TaylorJet sq = x * x;
  EXPECT_EQ(sq[0], 4.0);
  EXPECT_EQ(sq[1], 4.0);
  EXPECT_EQ(sq[2], 1.0);
  EXPECT_EQ(sq[3], 0.0);
}

TEST(TaylorJet, PolynomialsAreExact) {
  // (1 + h)^5 as repeated products, and as pow_const.
  const TaylorJet one_plus = TaylorJet::variable(1.0, 7);
  TaylorJet p = one_plus;
  for (int i = 0; i < 4; ++i) p = p * one_plus;
  const double binom[] = {1, 5, 10, 10, 5, 1, 0, 0};
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(p[k], binom[k]);
  expect_coeffs_near(pow_const(one_plus, 5.0), p, 1e-15);
}

TEST(TaylorJet, DerivativesOfExp) {
  const TaylorJet e = exp(TaylorJet::variable(0.0, 10));
  for (int k = 0; k <= 10; ++k) EXPECT_NEAR(e.derivative(k), 1.0, 1e-14) << k;
}

TEST(TaylorJet, LogSeries) {
  const TaylorJet l = log(TaylorJet::variable(0.0, 8) + 1.0);
  EXPECT_EQ(l[0], 0.0);
  for (int k = 1; k <= 8; ++k) EXPECT_NEAR(l[k], ((k % 2) ? 1.0 : -1.0) / k, 1e-15) << k;
}

TEST(TaylorJet, LogExpRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const TaylorJet j = random_jet(rng, 0.3, 12, -1.0, 1.0);
    expect_coeffs_near(log(exp(j)), j, 1e-12);
  }
}

TEST(TaylorJet, PowConstRoundTrips) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    TaylorJet j = random_jet(rng, -0.5, 12, -1.0, 1.0);
    j = j + (2.0 - j[0]);  // positive constant term
    expect_coeffs_near(pow_const(j, 1.0), j, 1e-12);
    const TaylorJet root = pow_const(j, 0.5);
    expect_coeffs_near(root * root, j, 1e-12);
    expect_coeffs_near(pow_const(j, -1.0), TaylorJet::constant(-0.5, 1.0, 12) / j, 1e-12);
  }
}

TEST(TaylorJet, DivisionInvertsMultiplication) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const TaylorJet a = random_jet(rng, 1.0, 10, -1.0, 1.0);
    TaylorJet b = random_jet(rng, 1.0, 10, -1.0, 1.0);
    b = b + (1.5 - b[0]);
    expect_coeffs_near((a * b) / b, a, 1e-12);
  }
}

TEST(TaylorJet, LinearOps) {
  const TaylorJet a(0.0, {1.0, 2.0, 3.0});
  const TaylorJet b(0.0, {0.5, -1.0, 4.0});
  const TaylorJet s = a + b;
  const TaylorJet d = a - b;
  const TaylorJet n = -a;
  const TaylorJet m = 2.0 * a;
  for (int k = 0; k <= 2; ++k) {
    EXPECT_EQ(s[k], a[k] + b[k]);
    EXPECT_EQ(d[k], a[k] - b[k]);
    EXPECT_EQ(n[k], -a[k]);
    EXPECT_EQ(m[k], 2.0 * a[k]);
  }
}

TEST(TaylorJet, DivideByOffset) {
  // (e^h - 1)/h = 1 + h/2 + h^2/6 + ...
  const TaylorJet num = exp(TaylorJet::variable(0.0, 6)) + (-1.0);
  ASSERT_EQ(num[0], 0.0);
  const TaylorJet q = divide_by_offset(num);
  EXPECT_EQ(q.order(), 5);
  EXPECT_NEAR(q[0], 1.0, 1e-15);
  EXPECT_NEAR(q[1], 0.5, 1e-15);
  EXPECT_NEAR(q[2], 1.0 / 6.0, 1e-15);
  EXPECT_THROW(divide_by_offset(TaylorJet::constant(0.0, 1.0, 3)), JetError);
}

TEST(TaylorJet, Errors) {
  const TaylorJet a = TaylorJet::variable(1.0, 3);
  EXPECT_THROW(a + TaylorJet::variable(2.0, 3), JetError);
  EXPECT_THROW(a * TaylorJet::variable(1.0, 4), JetError);
  EXPECT_THROW(a / TaylorJet::constant(1.0, 0.0, 3), JetError);
  EXPECT_THROW(log(TaylorJet::constant(1.0, -2.0, 3)), JetError);
  EXPECT_THROW(log(TaylorJet::constant(1.0, 0.0, 3)), JetError);
  EXPECT_THROW(pow_const(TaylorJet::constant(1.0, -2.0, 3), 0.5), JetError);
  EXPECT_NO_THROW(pow_const(TaylorJet::constant(1.0, -2.0, 3), 3.0));
  EXPECT_THROW(TaylorJet(0.0, {}), JetError);
  EXPECT_THROW(TaylorJet(0.0, {1.0, std::nan("")}), JetError);
  EXPECT_THROW(exp(TaylorJet::constant(0.0, 1000.0, 2)), JetError);
}

}  // namespace
}  // namespace taumax
