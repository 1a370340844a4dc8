#pragma once

namespace taumax {

/// Highest polygamma order supported by polygamma().
inline constexpr int kMaxPolygammaOrder = 24;

/// ln Gamma(x) for x > 0: upward recurrence to x >= 12, then the Stirling series.
double lgamma(double x);

/// psi^(k)(x), the k-th derivative of the digamma function, for x > 0 and
/// 0 <= k <= kMaxPolygammaOrder. Shifts x upward with
/// psi^(k)(x) = psi^(k)(x + 1) - (-1)^k k! / x^(k+1) before applying the
/// asymptotic expansion.
double polygamma(int k, double x);

inline double digamma(double x) { return polygamma(0, x); }

}  // namespace taumax
