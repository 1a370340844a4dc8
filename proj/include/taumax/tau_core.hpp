#pragma once

#include <string_view>

namespace taumax {

/// A point (x, t) of the domain [1, inf) x [0, inf) of
///   tau(x, t) = (t - (t + x + 1) (t / (1 + t))^(x + 1)) / x.
class TauPoint {
 public:
  /// Throws DomainError unless x >= 1, t >= 0 and both are finite.
  TauPoint(double x, double t);

  double x() const noexcept { return x_; }
  double t() const noexcept { return t_; }

 private:
  double x_;
  double t_;
};

double eval_tau(TauPoint p);

/// Partial derivative in t. Returns the right limit 1/x at t = 0.
double eval_dtau_dt(TauPoint p);

/// Second partial derivative in t,
///   (1 + x) t^(x - 1) (1 + t)^(-3 - x) (t - 1 - x).
/// Negative on (0, x + 1), zero at t = x + 1, positive beyond.
double eval_d2tau_dt2(TauPoint p);

/// Partial derivative in x. Requires t > 0.
double eval_dtau_dx(TauPoint p);

/// k(u) = -1 + (1+u)(1+u+x(1+u+x) ln(1+1/u)) / (u(1+u) + (u+x+1)(x+1)),
/// defined for 0 < u <= x. At the critical point, d alpha/dx = (1 + t) k(t).
double eval_k(double u, double x);

/// psi(u) = (x+1) u / (x^2 + (u+1)^2 + x(u+2)); alpha(x) = psi(t*(x)) and psi(x) = x/(3x+1).
double eval_psi_bound(double u, double x);

/// Auxiliary functions used in establishing the shape of tau.
enum class AuxFunction {
  kH,      ///< h(x) = 1 - (3 + 1/x)(x/(x+1))^(x+1) = x * dtau_dt(x, x), x >= 1
  kH1,     ///< h1(x) = 3 - (1+3x) ln(1+1/x), with h'(x) = -x^x (1+x)^(-1-x) h1(x), x >= 1
  kPhi,    ///< phi(x) = dtau_dt(x, (x+1)^2/(2x+3)), x > 0
  kPhiLog, ///< Phi(x) = 2 ln(x+2) + 2(x+1) ln((x+2)/(x+1)) - ln(7x^2+21x+16), x >= 0
  kTheta,  ///< Theta(x) = 1 + x + x(1+2x) ln(1+1/x) - 3x - 1, x >= 1
};

/// Accepts "h", "h1", "phi", "Phi", "Theta"; throws UsageError otherwise.
AuxFunction parse_aux_function(std::string_view name);

double eval_aux(AuxFunction fn, double x);

/// Lower end of the bracket for the critical point: (x+1)^2 / (2x+3).
inline double critical_lower_bound(double x) { return (x + 1.0) * (x + 1.0) / (2.0 * x + 3.0); }

/// The bound x / (3x + 1) that alpha(x) stays below.
inline double alpha_upper_bound(double x) { return x / (3.0 * x + 1.0); }

}  // namespace taumax
