#include "taumax/limit_solver.hpp"

#include <cmath>
#include <string>

namespace taumax {
namespace {

constexpr double kX0UpperBracket = 3.0;

}  // namespace

double eval_eta(double a) { return std::exp(a) - a * a - a - 1.0; }

double eval_eta_prime(double a) { return std::exp(a) - 2.0 * a - 1.0; }

double solve_a0(const SolverConfig& cfg) {
  auto d2 = [](double a) { return std::exp(a) - 2.0; };
  // Residual scaled by e^a, the size of the cancelling terms (e^2 bounds it).
  const double tol = cfg.abs_tol + cfg.rel_tol * std::exp(2.0);
  return safeguarded_newton(eval_eta_prime, d2, 1.0, 2.0, tol, cfg).root;
}

LimitConstants solve_x0(const SolverConfig& cfg) {
  LimitConstants lc;
  lc.a0 = solve_a0(cfg);
  lc.a0_residual = std::abs(eval_eta_prime(lc.a0));

  if (!(eval_eta(kX0UpperBracket) > 0.0)) {
    throw SolverError("eta(3) must be positive");
  }
  const double tol = cfg.abs_tol + cfg.rel_tol * std::exp(kX0UpperBracket);
  const RootResult r = safeguarded_newton(eval_eta, eval_eta_prime, lc.a0, kX0UpperBracket,
                                          tol, cfg);
  lc.x0 = r.root;
  lc.eta_residual = r.residual;
  lc.ell = 1.0 / lc.x0;
  lc.alpha_star = alpha_from_ell(lc.ell);

  if (!(lc.ell >= 0.5 && lc.ell <= 1.0)) {
    throw SolverError("ell = " + std::to_string(lc.ell) + " outside [1/2, 1]");
  }
  return lc;
}

}  // namespace taumax
