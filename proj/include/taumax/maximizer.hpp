#pragma once

#include "taumax/root_finding.hpp"

namespace taumax {

/// The maximizer t*(x) of t -> tau(x, t) and the maximum alpha(x) = tau(x, t*).
struct CriticalPoint {
  double x = 0.0;
  double t_star = 0.0;
  double alpha = 0.0;     ///< closed form (1+x) t* / (x^2 + (1+t*)^2 + x (2+t*))
  double residual = 0.0;  ///< |dtau/dt(x, t*)|
  int iterations = 0;
  double bracket_lo = 0.0;  ///< (x+1)^2 / (2x+3)
  double bracket_hi = 0.0;  ///< x
};

/// Solves dtau/dt(x, t) = 0 on [(x+1)^2/(2x+3), x] by safeguarded Newton.
/// dtau/dt is strictly decreasing there, so the root is unique; at x = 1 it
/// sits on the upper endpoint t = 1. Throws DomainError for x < 1 and
/// SolverError if the bracket has no sign change, the iteration does not
/// converge, or (with cfg.fd_check) the closed-form and direct maxima disagree.
CriticalPoint solve_t_star(double x, const SolverConfig& cfg = {});

/// alpha(x) from the closed form at t*(x).
double alpha_of_x(double x, const SolverConfig& cfg = {});

/// Closed form of the maximum given a critical point t of tau(x, .).
double alpha_closed_form(double x, double t);

}  // namespace taumax
