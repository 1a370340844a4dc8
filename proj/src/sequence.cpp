#include "taumax/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "taumax/errors.hpp"
#include "taumax/maximizer.hpp"
#include "taumax/tau_core.hpp"

namespace taumax {
namespace {

constexpr std::int64_t kDenseLimit = 1000;
constexpr int kPointsPerDecade = 20;

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

Claim make_claim(std::string id, std::string description) {
  Claim c;
  c.id = std::move(id);
  c.description = std::move(description);
  return c;
}

}  // namespace

std::vector<std::int64_t> sample_indices(std::int64_t n_max, Sampling sampling) {
  if (n_max < 1) throw UsageError("n_max must be >= 1");
  std::vector<std::int64_t> ns;
  const std::int64_t dense_end = sampling == Sampling::kDense ? n_max : std::min(n_max, kDenseLimit);
  ns.reserve(static_cast<std::size_t>(dense_end) + 64);
  for (std::int64_t n = 1; n <= dense_end; ++n) ns.push_back(n);
  if (dense_end == n_max) return ns;

  const double lo = std::log10(static_cast<double>(dense_end));
  const double hi = std::log10(static_cast<double>(n_max));
  const int steps = static_cast<int>(std::ceil((hi - lo) * kPointsPerDecade));
  for (int i = 1; i <= steps; ++i) {
    const double e = lo + (hi - lo) * i / steps;
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
    if (n > ns.back() && n <= n_max) ns.push_back(n);
  }
  if (ns.back() != n_max) ns.push_back(n_max);
  return ns;
}

std::vector<SequenceRow> compute_sequence(std::int64_t n_max, Sampling sampling,
                                          const SolverConfig& cfg) {
  return compute_sequence(n_max, sampling, solve_x0(cfg), cfg);
}

std::vector<SequenceRow> compute_sequence(std::int64_t n_max, Sampling sampling,
                                          const LimitConstants& limits, const SolverConfig& cfg) {
  const auto ns = sample_indices(n_max, sampling);
  std::vector<SequenceRow> rows;
  rows.reserve(ns.size());
  for (const std::int64_t n : ns) {
    const double x = static_cast<double>(n);
    CriticalPoint cp;
    try {
      cp = solve_t_star(x, cfg);
    } catch (const SolverError& e) {
      throw SolverError("n=" + std::to_string(n) + ": " + e.what());
    }
    rows.push_back({n, cp.t_star, cp.alpha, cp.t_star / x, limits.alpha_star - cp.alpha});
  }
  return rows;
}

bool ClaimReport::all_passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.informational || c.passed; });
}

const Claim* ClaimReport::find(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

double cross_index_slope(double n, double t_next) {
  const double t = t_next;
  return -(1.0 + n) * (1.0 + n - t) /
         (n * t * ((2.0 + n) * (2.0 + n) + (3.0 + n) * t + t * t));
}

ClaimReport verify_claims(const std::vector<SequenceRow>& rows, const LimitConstants& limits,
                          const VerifyOptions& opts) {
  if (rows.empty()) throw UsageError("verify_claims: no rows");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n <= rows[i - 1].n) throw UsageError("verify_claims: rows not sorted by n");
  }

  ClaimReport report;
  auto fail = [](Claim& c, const std::string& why) {
    if (c.passed) c.detail = why;
    c.passed = false;
  };

  Claim t_inc = make_claim("t_increasing", "t_n strictly increasing");
  Claim a_inc = make_claim("alpha_increasing", "alpha_n strictly increasing and alpha_star - alpha_n decreasing");
  Claim below = make_claim("alpha_below_limit", "alpha_n < alpha_star for every n");
  Claim bounds = make_claim("bounds", "(n+1)^2/(2n+3) <= t_n <= n, t_n < n for n > 1, 0 <= alpha_n <= n/(3n+1), strict for n > 1");
  Claim closed = make_claim("alpha_closed_form",
               "alpha_n = (1+n) t_n / (n^2 + (1+t_n)^2 + n(2+t_n)) matches tau(n, t_n)");
  Claim cross = make_claim("cross_index_sign",
              "dtau/dt(n, t_{n+1}) < 0, closed form agrees with direct evaluation");
  Claim ratio_mono = make_claim("ratio_monotone", "t_n / n monotone (not claimed, recorded only)");
  ratio_mono.informational = true;

  int ratio_dir = 0;  // sign of the first nonzero change in t_n / n
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SequenceRow& r = rows[i];
    const double n = static_cast<double>(r.n);

    if (!(r.alpha_n < limits.alpha_star) || !(r.gap > 0.0)) {
      fail(below, "n=" + std::to_string(r.n) + ": alpha_n=" + fmt(r.alpha_n));
    }
    const bool t_ok = r.t_n >= critical_lower_bound(n) && r.t_n <= n && (r.n == 1 || r.t_n < n);
    const double a_cap = alpha_upper_bound(n);
    const bool a_ok = r.alpha_n >= 0.0 && (r.n == 1 ? r.alpha_n <= a_cap : r.alpha_n < a_cap);
    if (!t_ok || !a_ok) {
      fail(bounds, "n=" + std::to_string(r.n) + ": t_n=" + fmt(r.t_n) + " alpha_n=" + fmt(r.alpha_n));
    }
    const double direct = eval_tau(TauPoint(n, r.t_n));
    const double closed_form = (1.0 + n) * r.t_n / (n * n + (1.0 + r.t_n) * (1.0 + r.t_n) + n * (2.0 + r.t_n));
    if (rel_diff(direct, r.alpha_n) > opts.closed_form_rel_tol ||
        rel_diff(closed_form, r.alpha_n) > opts.closed_form_rel_tol) {
      fail(closed, "n=" + std::to_string(r.n) + ": direct " + fmt(direct) + " vs " + fmt(r.alpha_n));
    }

    if (i == 0) continue;
    const SequenceRow& prev = rows[i - 1];
    if (!(r.t_n > prev.t_n)) fail(t_inc, "n=" + std::to_string(r.n));
    if (!(r.alpha_n > prev.alpha_n) || !(r.gap < prev.gap)) fail(a_inc, "n=" + std::to_string(r.n));

    const int dir = (r.ratio > prev.ratio) - (r.ratio < prev.ratio);
    if (dir != 0) {
      if (ratio_dir == 0) ratio_dir = dir;
      else if (dir != ratio_dir) fail(ratio_mono, "direction changes at n=" + std::to_string(r.n));
    }

    if (r.n == prev.n + 1) {
      const double pn = static_cast<double>(prev.n);
      const double closed_slope = cross_index_slope(pn, r.t_n);
      const double direct_slope = eval_dtau_dt(TauPoint(pn, r.t_n));
      if (!(closed_slope < 0.0) || !(direct_slope < 0.0) ||
          rel_diff(closed_slope, direct_slope) > opts.cross_check_rel_tol) {
        fail(cross, "n=" + std::to_string(prev.n) + ": closed " + fmt(closed_slope) + " direct " +
                        fmt(direct_slope));
      }
    }
  }
  if (ratio_mono.passed && rows.size() > 1) {
    ratio_mono.detail = ratio_dir > 0 ? "increasing" : ratio_dir < 0 ? "decreasing" : "constant";
  }

  const SequenceRow& last = rows.back();
  const double n_last = static_cast<double>(last.n);
  const double bound = opts.convergence_constant / n_last;
  Claim ratio_conv = make_claim("ratio_converges", "|t_N/N - ell| <= C/N at the last row");
  const double ratio_err = std::abs(last.ratio - limits.ell);
  ratio_conv.detail = "deviation " + fmt(ratio_err) + ", bound " + fmt(bound);
  ratio_conv.passed = ratio_err <= bound;
  Claim alpha_conv = make_claim("alpha_converges", "|alpha_star - alpha_N| <= C/N at the last row");
  const double alpha_err = std::abs(last.gap);
  alpha_conv.detail = "deviation " + fmt(alpha_err) + ", bound " + fmt(bound);
  alpha_conv.passed = alpha_err <= bound;

  report.claims = {t_inc, a_inc, below, ratio_conv, alpha_conv, bounds, closed, cross, ratio_mono};
  return report;
}

}  // namespace taumax
