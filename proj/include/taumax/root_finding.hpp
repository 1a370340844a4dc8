#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "taumax/errors.hpp"

namespace taumax {

/// Tolerances shared by every scalar solve in the library.
struct SolverConfig {
  double rel_tol = 1e-13;
  double abs_tol = 1e-14;
  int max_iter = 200;
  /// Enables redundant consistency checks (closed form vs direct evaluation).
  bool fd_check = true;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_iter < 1) {
      throw UsageError("solver config: rel_tol and abs_tol must be > 0 and max_iter >= 1");
    }
  }
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  ///< |f(root)|
  int iterations = 0;
};

/// Newton's method kept inside a sign-change bracket [lo, hi].
///
/// A Newton step is taken only when it lands strictly inside the current
/// bracket and is no longer than half of the step before last; otherwise the
/// bracket is bisected. Iteration stops when the last step is below
/// abs_tol + rel_tol*|t| and |f(t)| <= residual_tol, or when the bracket has
/// collapsed to a few ulps. An endpoint with |f| <= residual_tol is accepted
/// as the root.
template <class F, class DF>
RootResult safeguarded_newton(F&& f, DF&& df, double lo, double hi, double residual_tol,
                              const SolverConfig& cfg) {
  cfg.validate();
  if (!(lo < hi)) throw SolverError("safeguarded_newton: empty bracket");

  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (std::abs(f_lo) <= residual_tol) return {lo, std::abs(f_lo), 0};
  if (std::abs(f_hi) <= residual_tol) return {hi, std::abs(f_hi), 0};
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || (f_lo > 0.0) == (f_hi > 0.0)) {
    throw SolverError("safeguarded_newton: no sign change on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  const bool lo_positive = f_lo > 0.0;

  double t = lo + 0.5 * (hi - lo);
  double ft = f(t);
  double step = hi - lo;
  double step_before = step;

  for (int it = 1; it <= cfg.max_iter; ++it) {
    if (ft == 0.0) return {t, 0.0, it};
    if ((ft > 0.0) == lo_positive) {
      lo = t;
    } else {
      hi = t;
    }

    const double candidate = t - ft / df(t);
    const bool newton_ok = std::isfinite(candidate) && candidate > lo && candidate < hi &&
                           std::abs(candidate - t) <= 0.5 * std::abs(step_before);
    const double next = newton_ok ? candidate : lo + 0.5 * (hi - lo);

    step_before = step;
    step = next - t;
    t = next;
    ft = f(t);

    const bool small_step = std::abs(step) <= cfg.abs_tol + cfg.rel_tol * std::abs(t);
    if (small_step && std::abs(ft) <= residual_tol) return {t, std::abs(ft), it};

    const double floor_width =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
    if (hi - lo <= floor_width) return {t, std::abs(ft), it};
  }
  throw SolverError("safeguarded_newton: no convergence after " + std::to_string(cfg.max_iter) +
                    " iterations");
}

}  // namespace taumax
