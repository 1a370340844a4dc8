#include "taumax/cm_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "taumax/special_functions.hpp"

namespace taumax {

double f_beta(double x, double beta) {
  if (!(x > -1.0) || !std::isfinite(x)) throw DomainError("f_beta: x must be > -1");
  const double log_gamma_root = x == 0.0 ? digamma(1.0) : taumax::lgamma(x + 1.0) / x;
  return std::exp(beta * std::log1p(x) - log_gamma_root);
}

TaylorJet f_beta_jet(double x, double beta, int order) {
  if (!(x > -1.0) || !std::isfinite(x)) throw DomainError("f_beta_jet: x must be > -1");
  if (order < 1 || order > kMaxCmOrder) {
    throw UsageError("f_beta_jet: order must be in [1, " + std::to_string(kMaxCmOrder) + "]");
  }

  // lgamma(x + 1 + u) = lgamma(x + 1) + sum_k psi^(k-1)(x + 1) u^k / k!
  const int l_order = x == 0.0 ? order + 1 : order;
  std::vector<double> l(static_cast<std::size_t>(l_order) + 1);
  l[0] = x == 0.0 ? 0.0 : taumax::lgamma(x + 1.0);
  double factorial = 1.0;
  for (int k = 1; k <= l_order; ++k) {
    factorial *= k;
    l[k] = polygamma(k - 1, x + 1.0) / factorial;
  }
  const TaylorJet lg(x, std::move(l));

  const TaylorJet u = TaylorJet::variable(x, order);
  const TaylorJet quotient = x == 0.0 ? divide_by_offset(lg) : lg / u;
  return exp(beta * log(u + 1.0) - quotient);
}

std::vector<CmReport> check_cm(std::span<const double> grid, double beta, int order,
                               const CmOptions& opts) {
  if (order < 0 || order > kMaxCmOrder) {
    throw UsageError("check_cm: order must be in [0, " + std::to_string(kMaxCmOrder) + "]");
  }
  std::vector<CmReport> reports;
  reports.reserve(grid.size());
  for (const double x : grid) {
    CmReport rep;
    rep.x = x;
    rep.beta = beta;
    rep.orders_checked = order + 1;
    try {
      const TaylorJet jet = f_beta_jet(x, beta, std::max(order, 1));
      const double f0 = jet[0];
      rep.min_margin = std::abs(f0);
      double factorial = 1.0;
      for (int k = 0; k <= order; ++k) {
        if (k > 0) factorial *= k;
        const double signed_margin = ((k % 2 == 0) ? 1.0 : -1.0) * factorial * jet[k];
        rep.margins.push_back(signed_margin);
        rep.min_margin = std::min(rep.min_margin, std::abs(signed_margin));
        const double threshold = opts.strict_rel * std::abs(f0) / factorial;
        if (!(signed_margin > threshold) && !rep.first_violation) rep.first_violation = k;
      }
      rep.all_alternating = !rep.first_violation.has_value();
    } catch (const DomainError& e) {
      rep.error = e.what();
      rep.all_alternating = false;
      rep.first_violation = 0;
      rep.min_margin = 0.0;
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace taumax
