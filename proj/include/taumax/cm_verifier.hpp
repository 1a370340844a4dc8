#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taumax/taylor_jet.hpp"

namespace taumax {

/// Highest derivative order the verifier accepts in binary64.
inline constexpr int kMaxCmOrder = 20;

/// f_beta(x) = (x + 1)^beta / Gamma(x + 1)^(1/x) for x > -1, with the value
/// e^gamma (Euler's constant) at the removable point x = 0.
double f_beta(double x, double beta);

/// Order-K Taylor jet of f_beta about x, built as
///   exp(beta log(1 + x + u) - L(u) / (x + u)),   L(u) = lgamma(x + 1 + u),
/// with L seeded from lgamma and polygamma values at x + 1. At x = 0 the
/// quotient L(u)/u is taken by dropping L's constant term, which is exactly 0.
/// Requires x > -1 and 1 <= K <= kMaxCmOrder.
TaylorJet f_beta_jet(double x, double beta, int order);

struct CmReport {
  double x = 0.0;
  double beta = 0.0;
  int orders_checked = 0;  ///< derivative orders 0..K, so K + 1
  bool all_alternating = false;
  /// Smallest |(-1)^k k! c_k| over the checked orders.
  double min_margin = 0.0;
  /// First order whose signed margin fails the strictness threshold.
  std::optional<int> first_violation;
  /// Signed margins (-1)^k f^(k)(x), k = 0..K.
  std::vector<double> margins;
  /// Set when the jet could not be built; the point then counts as failed at order 0.
  std::optional<std::string> error;
};

struct CmOptions {
  /// Order k passes when (-1)^k f^(k)(x) > strict_rel * |f(x)| / k!.
  double strict_rel = 1e-6;
};

/// Per grid point, checks that the derivatives of f_beta alternate in sign up to order K.
/// K = 0 reduces to positivity of f_beta. Errors at one point do not stop the batch.
/// Throws UsageError for K outside [0, kMaxCmOrder].
std::vector<CmReport> check_cm(std::span<const double> grid, double beta, int order,
                               const CmOptions& opts = {});

}  // namespace taumax
