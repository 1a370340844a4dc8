#include "taumax/cm_verifier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "taumax/limit_solver.hpp"
#include "taumax/special_functions.hpp"

namespace taumax {
namespace {

const std::vector<double> kGrid = {-0.5, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0};

double beta_threshold() { return 1.0 / (1.0 + solve_x0().alpha_star); }

// Scalar f_beta through the C library's lgamma.
double ref_f(double x, double beta) {
  if (x == 0.0) return std::exp(std::numbers::egamma);
  return std::exp(beta * std::log1p(x) - std::lgamma(1.0 + x) / x);
}

// Five-point stencils with a step proportional to the distance to x = -1.
// The second difference takes a wider step to keep lgamma rounding small.
double ref_d1(double x, double beta) {
  const double h = 1e-3 * (1.0 + x);
  return (ref_f(x - 2 * h, beta) - 8 * ref_f(x - h, beta) + 8 * ref_f(x + h, beta) -
          ref_f(x + 2 * h, beta)) / (12 * h);
}

double ref_d2(double x, double beta) {
  const double h = 1e-2 * (1.0 + x);
  return (-ref_f(x - 2 * h, beta) + 16 * ref_f(x - h, beta) - 30 * ref_f(x, beta) +
          16 * ref_f(x + h, beta) - ref_f(x + 2 * h, beta)) / (12 * h * h);
}

TEST(FBeta, ScalarMatchesReference) {
  for (const double x : kGrid) {
    EXPECT_LT(oracle::rel_err(f_beta(x, 0.3), ref_f(x, 0.3)), 1e-13) << x;
  }
  EXPECT_THROW(f_beta(-1.0, 0.5), DomainError);
}

TEST(FBetaJet, ConstantTermAtOne) {
  for (const int k : {1, 5, 20}) {
    EXPECT_NEAR(f_beta_jet(1.0, 0.5, k)[0], std::sqrt(2.0), 1e-14) << k;
  }
}

TEST(FBetaJet, RemovablePointAtZero) {
  const TaylorJet j = f_beta_jet(0.0, 0.77, 6);
  EXPECT_NEAR(j[0], std::exp(std::numbers::egamma), 1e-15);
  EXPECT_NEAR(j[0], 1.7810724, 1e-7);
  EXPECT_EQ(j.order(), 6);
}

TEST(FBetaJet, FirstDerivativeMatchesFiniteDifference) {
  const TaylorJet j = f_beta_jet(1.0, 0.5, 3);
  EXPECT_LT(oracle::rel_err(j.derivative(1), ref_d1(1.0, 0.5)), 1e-7);
}

TEST(FBetaJet, LowOrdersMatchFiniteDifferencesOnGrid) {
  for (const double beta : {0.0, 0.5, beta_threshold(), 1.2}) {
    for (const double x : kGrid) {
      const TaylorJet j = f_beta_jet(x, beta, 4);
      EXPECT_LT(oracle::rel_err(j.derivative(1), ref_d1(x, beta)), 1e-6) << x << ' ' << beta;
      EXPECT_LT(oracle::rel_err(j.derivative(2), ref_d2(x, beta)), 1e-6) << x << ' ' << beta;
    }
  }
}

TEST(FBetaJet, HighOrdersMatchFrozenReferences) {
  // (-1)^k f^(k)(x) at beta = 1/(1 + alpha_star), from a 60-digit evaluation.
  struct Ref {
    double x;
    int k;
    double value;
  };
  const Ref refs[] = {
      {-0.5, 3, 2.7434932122846058},     {0.0, 1, 0.093156394985695553},
      {0.0, 2, 0.06045571979293408},     {0.5, 2, 0.024979579778653645},
      {2.0, 8, 0.044826860447247619},    {10.0, 4, 5.4270351796515963e-5},
      {10.0, 12, 3.3725560685952476e-7},
  };
  const double beta = beta_threshold();
  for (const auto& r : refs) {
    const TaylorJet j = f_beta_jet(r.x, beta, 12);
    const double sign = (r.k % 2 == 0) ? 1.0 : -1.0;
    EXPECT_LT(oracle::rel_err(sign * j.derivative(r.k), r.value), 1e-9) << r.x << ' ' << r.k;
  }
}

TEST(FBetaJet, QuotientRoundTripAtMaximumOrder) {
  // lgamma(x+1+u)/(x+u) times (x+u) returns the lgamma jet at the order cap.
  for (const double x : {-0.5, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    std::vector<double> l(kMaxCmOrder + 1);
    l[0] = taumax::lgamma(x + 1.0);
    double fact = 1.0;
    for (int k = 1; k <= kMaxCmOrder; ++k) {
      fact *= k;
      l[k] = polygamma(k - 1, x + 1.0) / fact;
    }
    const TaylorJet lg(x, l);
    const TaylorJet u = TaylorJet::variable(x, kMaxCmOrder);
    const TaylorJet back = (lg / u) * u;
    for (int k = 0; k <= kMaxCmOrder; ++k) {
      EXPECT_LE(std::abs(back[k] - lg[k]), 1e-9 * std::max(std::abs(lg[k]), 1e-300)) << x << ' ' << k;
    }
  }
}

TEST(FBetaJet, Errors) {
  EXPECT_THROW(f_beta_jet(-1.0, 0.5, 4), DomainError);
  EXPECT_THROW(f_beta_jet(-2.0, 0.5, 4), DomainError);
  EXPECT_THROW(f_beta_jet(1.0, 0.5, 0), UsageError);
  EXPECT_THROW(f_beta_jet(1.0, 0.5, kMaxCmOrder + 1), UsageError);
}

TEST(CheckCm, AlternatesAtThreshold) {
  const double beta = beta_threshold();
  EXPECT_NEAR(beta, 0.770163, 1e-6);
  const auto reports = check_cm(kGrid, beta, 12);
  ASSERT_EQ(reports.size(), kGrid.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const CmReport& r = reports[i];
    EXPECT_EQ(r.x, kGrid[i]);
    EXPECT_TRUE(r.all_alternating) << "x=" << r.x << " first violation " << r.first_violation.value_or(-1);
    EXPECT_FALSE(r.first_violation.has_value());
    EXPECT_GT(r.min_margin, 0.0);
    EXPECT_EQ(r.orders_checked, 13);
    ASSERT_EQ(r.margins.size(), 13u);
    for (const double m : r.margins) EXPECT_GT(m, 0.0);
  }
}

TEST(CheckCm, BetaZeroAlternates) {
  for (const auto& r : check_cm(kGrid, 0.0, 12)) {
    EXPECT_TRUE(r.all_alternating) << r.x;
  }
}

TEST(CheckCm, OrderZeroIsPositivity) {
  const auto reports = check_cm(kGrid, 0.77, 0);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.all_alternating);
    EXPECT_EQ(r.orders_checked, 1);
    ASSERT_EQ(r.margins.size(), 1u);
    EXPECT_NEAR(r.margins[0], f_beta(r.x, 0.77), 1e-14);
  }
}

TEST(CheckCm, ReportInvariants) {
  // Large beta breaks alternation; the reports must stay self-consistent.
  for (const double beta : {0.5, 1.5, 3.0}) {
    for (const auto& r : check_cm(kGrid, beta, 10)) {
      EXPECT_EQ(r.all_alternating, !r.first_violation.has_value());
      EXPECT_GE(r.min_margin, 0.0);
      EXPECT_GE(r.orders_checked, 1);
    }
  }
  const auto r = check_cm(std::vector<double>{1.0}, 3.0, 10);
  EXPECT_FALSE(r[0].all_alternating);
  EXPECT_EQ(r[0].first_violation, 1);  // f_3 is increasing at x = 1
}

TEST(CheckCm, BadPointDoesNotAbortBatch) {
  const std::vector<double> grid = {1.0, -1.5, 2.0};
  std::vector<CmReport> reports;
  ASSERT_NO_THROW(reports = check_cm(grid, 0.5, 6));
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_TRUE(reports[0].all_alternating);
  EXPECT_TRUE(reports[1].error.has_value());
  EXPECT_FALSE(reports[1].all_alternating);
  EXPECT_TRUE(reports[2].all_alternating);
}

TEST(CheckCm, OrderLimits) {
  EXPECT_THROW(check_cm(kGrid, 0.5, kMaxCmOrder + 1), UsageError);
  EXPECT_THROW(check_cm(kGrid, 0.5, -1), UsageError);
  EXPECT_NO_THROW(check_cm(kGrid, 0.5, kMaxCmOrder));
}

}  // namespace
}  // namespace taumax
