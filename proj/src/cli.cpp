#include "taumax/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "taumax/cm_verifier.hpp"
#include "taumax/errors.hpp"
#include "taumax/limit_solver.hpp"
#include "taumax/maximizer.hpp"
#include "taumax/sequence.hpp"
#include "taumax/tau_core.hpp"

namespace taumax::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

enum class Format { kTable, kCsv, kJson };

struct CommonOptions {
  std::string format;
  std::string out_path;
  int digits = 12;
  SolverConfig cfg;
};

/// Formats numbers at a fixed number of significant digits for every output mode.
class Writer {
 public:
  Writer(std::ostream& os, Format format, int digits) : os_(os), format_(format), digits_(digits) {}

  std::ostream& os() { return os_; }
  Format format() const { return format_; }

  std::string num(double v) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits_, v);
    return buf;
  }

  Json jnum(double v) const {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(num(v).c_str(), nullptr);
  }

  void table(const std::vector<std::string>& headers,
             const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) s += "  ";
        s += cells[c];
        if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
      }
      os_ << s << '\n';
    };
    line(headers);
    for (const auto& r : rows) line(r);
  }

  void key_values(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::size_t w = 0;
    for (const auto& [k, v] : kv) w = std::max(w, k.size());
    for (const auto& [k, v] : kv) os_ << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  }

  void csv(const std::vector<std::string>& headers,
           const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) os_ << ',';
        os_ << cells[c];
      }
      os_ << '\n';
    };
    line(headers);
    for (const auto& r : rows) line(r);
  }

  void json(const Json& j) { os_ << j.dump(2) << '\n'; }

 private:
  std::ostream& os_;
  Format format_;
  int digits_;
};

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

int report_error(Writer& w, std::ostream& err, const std::string& command, int code,
                 const std::string& message) {
  err << "error: " << message << '\n';
  if (w.format() == Format::kJson) {
    Json j = envelope(command);
    j["error"] = {{"code", code}, {"message", message}};
    w.json(j);
  }
  return code;
}

// critical ------------------------------------------------------------------

int cmd_critical(Writer& w, double x, const SolverConfig& cfg) {
  const CriticalPoint cp = solve_t_star(x, cfg);
  switch (w.format()) {
    case Format::kTable:
      w.key_values({{"x", w.num(cp.x)},
                    {"t_star", w.num(cp.t_star)},
                    {"alpha", w.num(cp.alpha)},
                    {"residual", w.num(cp.residual)},
                    {"bracket_lo", w.num(cp.bracket_lo)},
                    {"bracket_hi", w.num(cp.bracket_hi)},
                    {"iterations", std::to_string(cp.iterations)}});
      break;
    case Format::kCsv:
      w.csv({"x", "t_star", "alpha", "residual", "bracket_lo", "bracket_hi", "iterations"},
            {{w.num(cp.x), w.num(cp.t_star), w.num(cp.alpha), w.num(cp.residual),
              w.num(cp.bracket_lo), w.num(cp.bracket_hi), std::to_string(cp.iterations)}});
      break;
    case Format::kJson: {
      Json j = envelope("critical");
      j["x"] = w.jnum(cp.x);
      j["t_star"] = w.jnum(cp.t_star);
      j["alpha"] = w.jnum(cp.alpha);
      j["residual"] = w.jnum(cp.residual);
      j["bracket_lo"] = w.jnum(cp.bracket_lo);
      j["bracket_hi"] = w.jnum(cp.bracket_hi);
      j["iterations"] = cp.iterations;
      w.json(j);
      break;
    }
  }
  return kSuccess;
}

// limit ---------------------------------------------------------------------

Json limits_json(const Writer& w, const LimitConstants& lc) {
  Json j;
  j["a0"] = w.jnum(lc.a0);
  j["x0"] = w.jnum(lc.x0);
  j["ell"] = w.jnum(lc.ell);
  j["alpha_star"] = w.jnum(lc.alpha_star);
  j["eta_residual"] = w.jnum(lc.eta_residual);
  j["a0_residual"] = w.jnum(lc.a0_residual);
  return j;
}

int cmd_limit(Writer& w, const SolverConfig& cfg) {
  const LimitConstants lc = solve_x0(cfg);
  switch (w.format()) {
    case Format::kTable:
      w.key_values({{"a0", w.num(lc.a0)},
                    {"x0", w.num(lc.x0)},
                    {"ell", w.num(lc.ell)},
                    {"alpha_star", w.num(lc.alpha_star)},
                    {"eta_residual", w.num(lc.eta_residual)},
                    {"a0_residual", w.num(lc.a0_residual)}});
      break;
    case Format::kCsv:
      w.csv({"a0", "x0", "ell", "alpha_star", "eta_residual", "a0_residual"},
            {{w.num(lc.a0), w.num(lc.x0), w.num(lc.ell), w.num(lc.alpha_star),
              w.num(lc.eta_residual), w.num(lc.a0_residual)}});
      break;
    case Format::kJson: {
      Json j = envelope("limit");
      j.update(limits_json(w, lc));
      w.json(j);
      break;
    }
  }
  return kSuccess;
}

// sequence ------------------------------------------------------------------

int cmd_sequence(Writer& w, std::ostream& err, std::int64_t n_max, Sampling sampling,
                 const SolverConfig& cfg) {
  const LimitConstants lc = solve_x0(cfg);
  const auto rows = compute_sequence(n_max, sampling, lc, cfg);
  const ClaimReport report = verify_claims(rows, lc);

  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.n), w.num(r.t_n), w.num(r.alpha_n), w.num(r.ratio),
                     w.num(r.gap)});
  }
  const std::vector<std::string> headers = {"n", "t_n", "alpha_n", "ratio", "gap"};

  auto claim_status = [](const Claim& c) {
    return c.informational ? std::string("info") : c.passed ? std::string("pass") : std::string("FAIL");
  };

  switch (w.format()) {
    case Format::kTable: {
      w.table(headers, cells);
      w.os() << '\n';
      std::vector<std::vector<std::string>> claim_rows;
      for (const auto& c : report.claims) claim_rows.push_back({c.id, claim_status(c), c.detail});
      w.table({"claim", "status", "detail"}, claim_rows);
      break;
    }
    case Format::kCsv:
      // The csv stream carries only the table; the claim report goes to stderr.
      w.csv(headers, cells);
      for (const auto& c : report.claims) {
        err << "# claim " << c.id << ' ' << claim_status(c);
        if (!c.detail.empty()) err << " (" << c.detail << ')';
        err << '\n';
      }
      break;
    case Format::kJson: {
      Json j = envelope("sequence");
      j["limits"] = limits_json(w, lc);
      Json jr = Json::array();
      for (const auto& r : rows) {
        jr.push_back({{"n", r.n},
                      {"t_n", w.jnum(r.t_n)},
                      {"alpha_n", w.jnum(r.alpha_n)},
                      {"ratio", w.jnum(r.ratio)},
                      {"gap", w.jnum(r.gap)}});
      }
      j["rows"] = std::move(jr);
      Json jc = Json::array();
      for (const auto& c : report.claims) {
        jc.push_back({{"id", c.id},
                      {"description", c.description},
                      {"passed", c.passed},
                      {"informational", c.informational},
                      {"detail", c.detail}});
      }
      j["claims"] = std::move(jc);
      j["all_passed"] = report.all_passed();
      w.json(j);
      break;
    }
  }
  return report.all_passed() ? kSuccess : kClaimFailure;
}

// figure --------------------------------------------------------------------

struct FigureOptions {
  int id = 0;
  int points = 0;  ///< 0 selects the per-figure default
  double a_min = 0.0;
  double a_max = 2.5;
  double t_max = 6.0;
};

int cmd_figure(Writer& w, const FigureOptions& fo, const SolverConfig& cfg) {
  const bool as_json = w.format() == Format::kJson;
  std::ostream& os = w.os();

  if (fo.id == 1) {
    const int points = fo.points > 0 ? fo.points : 500;
    const LimitConstants lc = solve_x0(cfg);
    Json samples = Json::array();
    if (!as_json) {
      os << "# figure 1: eta(a) = e^a - a^2 - a - 1\n# columns: a eta\n";
    }
    for (int i = 0; i < points; ++i) {
      const double a = fo.a_min + (fo.a_max - fo.a_min) * i / (points - 1);
      const double eta = eval_eta(a);
      if (as_json) {
        samples.push_back({w.jnum(a), w.jnum(eta)});
      } else {
        os << w.num(a) << ' ' << w.num(eta) << '\n';
      }
    }
    if (as_json) {
      Json j = envelope("figure");
      j["figure"] = 1;
      j["columns"] = {"a", "eta"};
      j["samples"] = std::move(samples);
      j["markers"] = Json::array({{{"label", "x0"}, {"a", w.jnum(lc.x0)}, {"eta", 0.0}}});
      w.json(j);
    } else {
      os << "\n# marker: root x0 of eta\n# columns: a eta\n" << w.num(lc.x0) << " 0\n";
    }
    return kSuccess;
  }

  const int points = fo.points > 0 ? fo.points : 601;
  Json blocks = Json::array();
  Json markers = Json::array();
  if (!as_json) os << "# figure 2: tau(n, t) for n = 1, 2, 3\n# columns: n t tau\n";
  std::vector<CriticalPoint> maxima;
  for (int n = 1; n <= 3; ++n) {
    Json samples = Json::array();
    if (!as_json) os << "# n = " << n << '\n';
    for (int i = 0; i < points; ++i) {
      const double t = fo.t_max * i / (points - 1);
      const double tau = eval_tau(TauPoint(n, t));
      if (as_json) {
        samples.push_back({w.jnum(t), w.jnum(tau)});
      } else {
        os << n << ' ' << w.num(t) << ' ' << w.num(tau) << '\n';
      }
    }
    if (as_json) {
      blocks.push_back({{"n", n}, {"samples", std::move(samples)}});
    } else {
      os << '\n';
    }
    maxima.push_back(solve_t_star(n, cfg));
  }
  if (as_json) {
    for (const auto& cp : maxima) {
      markers.push_back({{"n", static_cast<int>(cp.x)}, {"t_n", w.jnum(cp.t_star)},
                         {"alpha_n", w.jnum(cp.alpha)}});
    }
    Json j = envelope("figure");
    j["figure"] = 2;
    j["columns"] = {"t", "tau"};
    j["curves"] = std::move(blocks);
    j["markers"] = std::move(markers);
    w.json(j);
  } else {
    os << "# markers: argmax (t_n, alpha_n)\n# columns: n t_n alpha_n\n";
    for (const auto& cp : maxima) {
      os << static_cast<int>(cp.x) << ' ' << w.num(cp.t_star) << ' ' << w.num(cp.alpha) << '\n';
    }
  }
  return kSuccess;
}

// verify-cm -----------------------------------------------------------------

struct CmCommandOptions {
  std::optional<double> beta;
  bool beta_from_limit = false;
  int orders = 12;
  std::vector<double> grid = {-0.5, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<double> beta_sweep;
  double strict_rel = CmOptions{}.strict_rel;
};

int cmd_verify_cm(Writer& w, const CmCommandOptions& o, const SolverConfig& cfg) {
  if (o.orders < 0 || o.orders > kMaxCmOrder) {
    throw UsageError("--orders must be in [0, " + std::to_string(kMaxCmOrder) + "]");
  }
  for (const double x : o.grid) {
    if (!std::isfinite(x) || !(x > -1.0)) {
      throw UsageError("grid point " + w.num(x) + " is not > -1");
    }
  }
  const bool sweep = !o.beta_sweep.empty();
  if (sweep + o.beta_from_limit + o.beta.has_value() != 1) {
    throw UsageError("give exactly one of --beta, --beta-from-limit, --beta-sweep");
  }

  std::vector<double> betas;
  if (sweep) {
    if (o.beta_sweep.size() != 3 || o.beta_sweep[2] < 1.0) {
      throw UsageError("--beta-sweep takes START STOP COUNT with COUNT >= 1");
    }
    const int count = static_cast<int>(o.beta_sweep[2]);
    for (int i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      betas.push_back(o.beta_sweep[0] + (o.beta_sweep[1] - o.beta_sweep[0]) * f);
    }
  } else if (o.beta_from_limit) {
    betas.push_back(1.0 / (1.0 + solve_x0(cfg).alpha_star));
  } else {
    betas.push_back(*o.beta);
  }

  CmOptions opts;
  opts.strict_rel = o.strict_rel;
  std::vector<CmReport> reports;
  for (const double beta : betas) {
    auto r = check_cm(o.grid, beta, o.orders, opts);
    reports.insert(reports.end(), r.begin(), r.end());
  }
  const bool all_ok = std::all_of(reports.begin(), reports.end(),
                                  [](const CmReport& r) { return r.all_alternating; });

  auto violation = [](const CmReport& r) {
    return r.first_violation ? std::to_string(*r.first_violation) : std::string();
  };
  const std::vector<std::string> headers = {"x", "beta", "orders_checked", "all_alternating",
                                            "min_margin", "first_violation"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : reports) {
    cells.push_back({w.num(r.x), w.num(r.beta), std::to_string(r.orders_checked),
                     r.all_alternating ? "true" : "false", w.num(r.min_margin), violation(r)});
  }

  switch (w.format()) {
    case Format::kTable:
      w.table(headers, cells);
      for (const auto& r : reports) {
        if (r.error) w.os() << "x=" << w.num(r.x) << ": " << *r.error << '\n';
      }
      break;
    case Format::kCsv:
      w.csv(headers, cells);
      break;
    case Format::kJson: {
      Json j = envelope("verify-cm");
      j["orders"] = o.orders;
      j["strict_rel"] = w.jnum(o.strict_rel);
      j["mode"] = sweep ? "sweep" : "check";
      Json jr = Json::array();
      for (const auto& r : reports) {
        Json m = Json::array();
        for (const double v : r.margins) m.push_back(w.jnum(v));
        Json e = {{"x", w.jnum(r.x)},
                  {"beta", w.jnum(r.beta)},
                  {"orders_checked", r.orders_checked},
                  {"all_alternating", r.all_alternating},
                  {"min_margin", w.jnum(r.min_margin)},
                  {"first_violation", r.first_violation ? Json(*r.first_violation) : Json(nullptr)},
                  {"margins", std::move(m)}};
        if (r.error) e["error"] = *r.error;
        jr.push_back(std::move(e));
      }
      j["reports"] = std::move(jr);
      j["all_alternating"] = all_ok;
      w.json(j);
      break;
    }
  }
  // A sweep explores beyond the proven threshold and asserts nothing.
  return (sweep || all_ok) ? kSuccess : kClaimFailure;
}

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--format", c.format, "Output format (default: table on a terminal, else csv)")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  sub->add_option("--digits", c.digits, "Significant digits for numeric output")
      ->check(CLI::Range(1, 17));
  sub->add_option("--rel-tol", c.cfg.rel_tol, "Solver relative tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--abs-tol", c.cfg.abs_tol, "Solver absolute tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", c.cfg.max_iter, "Solver iteration cap")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_terminal) {
  CLI::App app{"Maxima of tau(x, t), their limit constants, and complete-monotonicity checks",
               "taumax"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* critical = app.add_subcommand("critical", "Maximizer t*(x) and maximum alpha(x)");
  double crit_x = 0.0;
  critical->add_option("--x", crit_x, "x >= 1")->required();
  add_common(critical, common);

  auto* limit = app.add_subcommand("limit", "Limit constants a0, x0, ell, alpha_star");
  add_common(limit, common);

  auto* sequence = app.add_subcommand("sequence", "Table of t_n, alpha_n and claim report");
  std::int64_t n_max = 100;
  std::string sampling = "dense";
  sequence->add_option("--n-max", n_max, "Largest n")->check(CLI::PositiveNumber);
  sequence->add_option("--sampling", sampling, "dense or log")
      ->check(CLI::IsMember({"dense", "log"}));
  add_common(sequence, common);

  auto* figure = app.add_subcommand("figure", "Plot data for figure 1 (eta) or 2 (tau curves)");
  FigureOptions fig;
  figure->add_option("id,--id", fig.id, "Figure number (1 or 2)")->required();
  figure->add_option("--points", fig.points, "Samples per curve")->check(CLI::Range(2, 10000000));
  figure->add_option("--a-min", fig.a_min, "Figure 1 lower a");
  figure->add_option("--a-max", fig.a_max, "Figure 1 upper a");
  figure->add_option("--t-max", fig.t_max, "Figure 2 upper t")->check(CLI::PositiveNumber);
  add_common(figure, common);

  auto* verify = app.add_subcommand("verify-cm", "Derivative sign alternation of f_beta");
  CmCommandOptions cm;
  verify->add_option("--beta", cm.beta, "Exponent beta of f_beta");
  verify->add_flag("--beta-from-limit", cm.beta_from_limit, "Use beta = 1/(1 + alpha_star)");
  verify->add_option("--beta-sweep", cm.beta_sweep, "START STOP COUNT; report only")
      ->expected(3);
  verify->add_option("--orders", cm.orders, "Highest derivative order K (0..20)");
  verify->add_option("--grid", cm.grid, "Points x > -1")->delimiter(',');
  verify->add_option("--strict-rel", cm.strict_rel, "Order k must exceed strict_rel*|f|/k!")
      ->check(CLI::NonNegativeNumber);
  add_common(verify, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Format format = out_is_terminal && common.out_path.empty() ? Format::kTable : Format::kCsv;
  if (common.format == "table") format = Format::kTable;
  if (common.format == "csv") format = Format::kCsv;
  if (common.format == "json") format = Format::kJson;

  std::ofstream file;
  if (!common.out_path.empty()) {
    file.open(common.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << common.out_path << "' for writing\n";
      return kUsage;
    }
  }
  Writer w(common.out_path.empty() ? out : file, format, common.digits);

  std::string command = app.get_subcommands().front()->get_name();
  try {
    common.cfg.validate();
    if (critical->parsed()) {
      if (!std::isfinite(crit_x) || crit_x < 1.0) {
        return report_error(w, err, command, kUsage, "x must be ≥ 1");
      }
      return cmd_critical(w, crit_x, common.cfg);
    }
    if (limit->parsed()) return cmd_limit(w, common.cfg);
    if (sequence->parsed()) {
      return cmd_sequence(w, err, n_max, sampling == "log" ? Sampling::kLog : Sampling::kDense,
                          common.cfg);
    }
    if (figure->parsed()) {
      if (fig.id != 1 && fig.id != 2) {
        return report_error(w, err, command, kUsage,
                            "unknown figure id " + std::to_string(fig.id) + " (expected 1 or 2)");
      }
      return cmd_figure(w, fig, common.cfg);
    }
    if (verify->parsed()) return cmd_verify_cm(w, cm, common.cfg);
  } catch (const UsageError& e) {
    return report_error(w, err, command, kUsage, e.what());
  } catch (const DomainError& e) {
    return report_error(w, err, command, kUsage, e.what());
  } catch (const SolverError& e) {
    return report_error(w, err, command, kSolverFailure, e.what());
  }
  return report_error(w, err, command, kUsage, "no subcommand");
}

}  // namespace taumax::cli
