#include "taumax/tau_core.hpp"

#include <cmath>
#include <string>

#include "taumax/errors.hpp"

namespace taumax {
namespace {

// ln(t / (1 + t)) for t > 0.
double log_ratio(double t) {
  if (t > 1.0) return -std::log1p(1.0 / t);
  return std::log(t) - std::log1p(t);
}

// (t / (1 + t))^e, exactly 0 at t = 0.
double ratio_power(double t, double e) {
  if (t == 0.0) return 0.0;
  return std::exp(e * log_ratio(t));
}

// dtau/dt without the x >= 1 restriction; phi needs it on (0, 1).
double dtau_dt_unchecked(double x, double t) {
  if (t == 0.0) return 1.0 / x;
  const double p = ratio_power(t, x + 1.0);
  return (1.0 - p - (t + x + 1.0) * (x + 1.0) * p / (t * (1.0 + t))) / x;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// Above this x the log1p-based auxiliaries switch to their 1/x expansions.
constexpr double kSeriesThreshold = 1e3;

// h1(x) = sum_{j>=1} (-1)^j (1 - 2j) / (j (j + 1)) x^-j
double h1_series(double x) {
  const double inv = 1.0 / x;
  double term = 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 10; ++j) {
    term *= -inv;
    sum += term * (1.0 - 2.0 * j) / (j * (j + 1.0));
  }
  return sum;
}

// Theta(x) = sum_{k>=2} (-1)^k (k - 1) / (k (k + 1)) x^(1-k)
double theta_series(double x) {
  const double inv = 1.0 / x;
  double term = 1.0;
  double sum = 0.0;
  for (int k = 2; k <= 11; ++k) {
    term *= -inv;
    sum += -term * (k - 1.0) / (k * (k + 1.0));
  }
  return sum;
}

}  // namespace

TauPoint::TauPoint(double x, double t) : x_(x), t_(t) {
  require(std::isfinite(x) && std::isfinite(t), "tau: x and t must be finite");
  require(x >= 1.0, "tau: x must be >= 1");
  require(t >= 0.0, "tau: t must be >= 0");
}

double eval_tau(TauPoint p) {
  const double x = p.x();
  const double t = p.t();
  return (t - (t + x + 1.0) * ratio_power(t, x + 1.0)) / x;
}

double eval_dtau_dt(TauPoint p) { return dtau_dt_unchecked(p.x(), p.t()); }

double eval_d2tau_dt2(TauPoint p) {
  const double x = p.x();
  const double t = p.t();
  if (t == 0.0) {
    // t^(x-1) is 1 at x = 1 and vanishes for x > 1.
    return x == 1.0 ? -(1.0 + x) * (1.0 + x) : 0.0;
  }
  // t^(x-1) (1+t)^(-3-x) = (t/(1+t))^(x+1) / (t^2 (1+t)^2)
  const double p1 = ratio_power(t, x + 1.0);
  return (1.0 + x) * p1 * (t - 1.0 - x) / (t * t * (1.0 + t) * (1.0 + t));
}

double eval_dtau_dx(TauPoint p) {
  const double x = p.x();
  const double t = p.t();
  require(t > 0.0, "dtau_dx: t must be > 0");
  const double qx = ratio_power(t, x);
  const double l = std::log1p(1.0 / t);
  const double inner = -1.0 - t + qx * (1.0 + t + x * (1.0 + t + x) * l);
  return t * inner / ((1.0 + t) * x * x);
}

double eval_k(double u, double x) {
  require(std::isfinite(u) && std::isfinite(x), "k: arguments must be finite");
  require(u > 0.0, "k: u must be > 0");
  require(x >= 1.0, "k: x must be >= 1");
  const double l = std::log1p(1.0 / u);
  const double num = (1.0 + u) * (1.0 + u + x * (1.0 + u + x) * l);
  const double den = u * (1.0 + u) + (u + x + 1.0) * (x + 1.0);
  return -1.0 + num / den;
}

double eval_psi_bound(double u, double x) {
  require(std::isfinite(u) && std::isfinite(x), "psi: arguments must be finite");
  require(u >= 0.0, "psi: u must be >= 0");
  require(x >= 1.0, "psi: x must be >= 1");
  return (x + 1.0) * u / (x * x + (u + 1.0) * (u + 1.0) + x * (u + 2.0));
}

AuxFunction parse_aux_function(std::string_view name) {
  if (name == "h") return AuxFunction::kH;
  if (name == "h1") return AuxFunction::kH1;
  if (name == "phi") return AuxFunction::kPhi;
  if (name == "Phi") return AuxFunction::kPhiLog;
  if (name == "Theta") return AuxFunction::kTheta;
  throw UsageError("unknown auxiliary function '" + std::string(name) + "'");
}

double eval_aux(AuxFunction fn, double x) {
  require(std::isfinite(x), "aux: x must be finite");
  switch (fn) {
    case AuxFunction::kH:
      require(x >= 1.0, "h: x must be >= 1");
      return 1.0 - (3.0 + 1.0 / x) * ratio_power(x, x + 1.0);
    case AuxFunction::kH1:
      require(x >= 1.0, "h1: x must be >= 1");
      if (x > kSeriesThreshold) return h1_series(x);
      return 3.0 - (1.0 + 3.0 * x) * std::log1p(1.0 / x);
    case AuxFunction::kPhi:
      require(x > 0.0, "phi: x must be > 0");
      return dtau_dt_unchecked(x, critical_lower_bound(x));
    case AuxFunction::kPhiLog:
      require(x >= 0.0, "Phi: x must be >= 0");
      return 2.0 * std::log(x + 2.0) + 2.0 * (x + 1.0) * std::log1p(1.0 / (x + 1.0)) -
             std::log(7.0 * x * x + 21.0 * x + 16.0);
    case AuxFunction::kTheta:
      require(x >= 1.0, "Theta: x must be >= 1");
      if (x > kSeriesThreshold) return theta_series(x);
      return 1.0 + x + x * (1.0 + 2.0 * x) * std::log1p(1.0 / x) - 3.0 * x - 1.0;
  }
  throw UsageError("unknown auxiliary function");
}

}  // namespace taumax
