#include "taumax/maximizer.hpp"

#include <cmath>
#include <sstream>

#include "taumax/tau_core.hpp"

namespace taumax {

double alpha_closed_form(double x, double t) {
  return (1.0 + x) * t / (x * x + (1.0 + t) * (1.0 + t) + x * (2.0 + t));
}

CriticalPoint solve_t_star(double x, const SolverConfig& cfg) {
  if (!std::isfinite(x) || x < 1.0) throw DomainError("x must be >= 1");
  cfg.validate();

  CriticalPoint cp;
  cp.x = x;
  cp.bracket_lo = critical_lower_bound(x);
  cp.bracket_hi = x;

  auto slope = [x](double t) { return eval_dtau_dt(TauPoint(x, t)); };
  auto curvature = [x](double t) { return eval_d2tau_dt2(TauPoint(x, t)); };

  // dtau/dt(x, 0) = 1/x sets the residual scale.
  const double stop_tol = cfg.rel_tol / x;
  const double accept_tol = cfg.abs_tol + cfg.rel_tol / x;

  if (slope(cp.bracket_lo) < 0.0) {
    std::ostringstream msg;
    msg << "dtau/dt(" << x << ", " << cp.bracket_lo << ") < 0: lower bracket violated";
    throw SolverError(msg.str());
  }

  const RootResult r = safeguarded_newton(slope, curvature, cp.bracket_lo, cp.bracket_hi,
                                          stop_tol, cfg);
  if (r.residual > accept_tol) {
    std::ostringstream msg;
    msg << "t*(" << x << "): residual " << r.residual << " exceeds " << accept_tol;
    throw SolverError(msg.str());
  }
  cp.t_star = r.root;
  cp.residual = r.residual;
  cp.iterations = r.iterations;
  cp.alpha = alpha_closed_form(x, cp.t_star);

  if (cfg.fd_check) {
    const double direct = eval_tau(TauPoint(x, cp.t_star));
    if (std::abs(direct - cp.alpha) > 1e-10 * std::abs(cp.alpha)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "alpha(" << x << "): closed form " << cp.alpha << " disagrees with direct " << direct;
      throw SolverError(msg.str());
    }
  }
  return cp;
}

double alpha_of_x(double x, const SolverConfig& cfg) { return solve_t_star(x, cfg).alpha; }

}  // namespace taumax
