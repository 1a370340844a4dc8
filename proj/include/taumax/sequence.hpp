#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taumax/limit_solver.hpp"
#include "taumax/root_finding.hpp"

namespace taumax {

/// One integer index of the sequences t_n = t*(n), alpha_n = alpha(n).
struct SequenceRow {
  std::int64_t n = 0;
  double t_n = 0.0;
  double alpha_n = 0.0;
  double ratio = 0.0;  ///< t_n / n
  double gap = 0.0;    ///< alpha_star - alpha_n
};

enum class Sampling {
  kDense,  ///< every n in 1..n_max
  kLog,    ///< every n up to 1000, then 20 points per decade, always ending at n_max
};

/// The indices visited for a given n_max, increasing.
std::vector<std::int64_t> sample_indices(std::int64_t n_max, Sampling sampling);

/// Rows in increasing n. Solver failures are rethrown as SolverError naming n.
std::vector<SequenceRow> compute_sequence(std::int64_t n_max, Sampling sampling,
                                          const SolverConfig& cfg = {});

/// Same as above with precomputed limit constants.
std::vector<SequenceRow> compute_sequence(std::int64_t n_max, Sampling sampling,
                                          const LimitConstants& limits,
                                          const SolverConfig& cfg = {});

struct Claim {
  std::string id;
  std::string description;
  bool passed = true;
  /// Recorded for inspection only; never affects ClaimReport::all_passed.
  bool informational = false;
  std::string detail;
};

struct ClaimReport {
  std::vector<Claim> claims;

  bool all_passed() const;
  const Claim* find(const std::string& id) const;
};

struct VerifyOptions {
  /// |t_N/N - ell| and |alpha_star - alpha_N| must be below this over N at the last row.
  /// Empirical: the observed constants are about 0.2 and 0.01.
  double convergence_constant = 2.0;
  double cross_check_rel_tol = 1e-9;
  double closed_form_rel_tol = 1e-10;
};

/// Cross-index slope dtau/dt(n, t_{n+1}) after substituting the critical-point
/// equation at n + 1:
///   -(1+n)(1+n-t) / (n t ((2+n)^2 + (3+n) t + t^2)).
double cross_index_slope(double n, double t_next);

/// Checks every claim about the sequences; violations are reported, never thrown.
/// Throws UsageError only for empty or unsorted input.
ClaimReport verify_claims(const std::vector<SequenceRow>& rows, const LimitConstants& limits,
                          const VerifyOptions& opts = {});

}  // namespace taumax
