#pragma once

#include "taumax/root_finding.hpp"

namespace taumax {

/// Constants governing the limit of the per-n maxima.
///
/// eta(a) = e^a - a^2 - a - 1 has its minimum on (1, 2) at a0 (where
/// e^a0 = 2 a0 + 1) and a single root x0 beyond it. Then ell = 1/x0 is the
/// limit of t_n / n and alpha_star = ell / (1 + ell + ell^2) is the supremum
/// of tau over integer n >= 1 and t > 0.
struct LimitConstants {
  double a0 = 0.0;
  double x0 = 0.0;
  double ell = 0.0;
  double alpha_star = 0.0;
  double eta_residual = 0.0;  ///< |eta(x0)|
  double a0_residual = 0.0;   ///< |e^a0 - 2 a0 - 1|
};

double eval_eta(double a);

/// eta'(a) = e^a - 2a - 1.
double eval_eta_prime(double a);

/// Root of eta' on the bracket [1, 2].
double solve_a0(const SolverConfig& cfg = {});

/// Root of eta on [a0, 3], plus the derived ell and alpha_star.
LimitConstants solve_x0(const SolverConfig& cfg = {});

/// ell / (1 + ell + ell^2).
inline double alpha_from_ell(double ell) { return ell / (1.0 + ell + ell * ell); }

}  // namespace taumax
