#include "tmills/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tmills/bounds.hpp"
#include "tmills/student_t.hpp"

namespace tmills {

namespace {

constexpr double kClosedFormRel = 4.0 * std::numeric_limits<double>::epsilon();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Ascending scan order makes reports deterministic regardless of how the
// grid was supplied.
std::vector<double> sorted_finite(const std::vector<double>& grid,
                                  const char* what) {
  if (grid.empty()) {
    throw ConfigError(std::string(what) + ": grid is empty");
  }
  std::vector<double> out = grid;
  for (const double v : out) {
    if (!std::isfinite(v)) {
      throw ConfigError(std::string(what) + ": grid entries must be finite");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Quadrature convergence failures surface with the offending grid point.
QuadResult tail_quadrature_at(const TDist& d, double nu, double a,
                              double rel_tol) {
  try {
    return tail_quadrature(d, a, rel_tol);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("at nu=" + std::to_string(nu) + ", a=" +
                               std::to_string(a) + ": " + e.what(),
                           e.iterations, e.best);
  }
}

std::vector<double> positive_nu_grid(const SweepConfig& cfg,
                                     const char* what) {
  std::vector<double> nus = sorted_finite(cfg.nu_grid, what);
  if (nus.front() <= 0.0) {
    throw ConfigError(std::string(what) + ": nu grid entries must be > 0");
  }
  return nus;
}

class ReportBuilder {
 public:
  ReportBuilder(Suite suite, double violation_factor)
      : vf_(violation_factor) {
    rep_.suite = suite;
    rep_.min_slack = std::numeric_limits<double>::infinity();
  }

  void add_check(bool has_nu, double nu, double a, double lhs, double rhs,
                 double oracle_err,
                 std::optional<double> excess_override = std::nullopt) {
    SweepRow row;
    row.has_nu = has_nu;
    row.nu = nu;
    row.a = a;
    row.lhs = lhs;
    row.rhs = rhs;
    row.slack = rhs - lhs;
    row.oracle_err = oracle_err;
    row.excess = excess_override ? *excess_override
                                 : (lhs - rhs) - vf_ * oracle_err;
    const bool viol = row.excess > 0.0;
    row.flag = viol ? "viol" : "ok";
    ++rep_.points_checked;
    if (viol) {
      ++rep_.violations;
      if (!rep_.worst_violation ||
          row.excess > rep_.worst_violation->excess) {
        rep_.worst_violation =
            WorstViolation{has_nu, nu, a, lhs, rhs, row.excess};
      }
    }
    rep_.min_slack = std::min(rep_.min_slack, row.slack);
    if (rhs > 0.0) {
      const double ratio = lhs / rhs;
      if (std::isfinite(ratio)) {
        rep_.max_tightness_ratio = std::max(rep_.max_tightness_ratio, ratio);
      }
    }
    rep_.rows.push_back(std::move(row));
  }

  // Informational row (crossover / probe onset); never a violation.
  void add_info(bool has_nu, double nu, double a, double lhs, double rhs,
                double slack, double oracle_err, std::string flag,
                bool count_slack = false) {
    SweepRow row;
    row.has_nu = has_nu;
    row.nu = nu;
    row.a = a;
    row.lhs = lhs;
    row.rhs = rhs;
    row.slack = slack;
    row.oracle_err = oracle_err;
    row.excess = 0.0;
    row.flag = std::move(flag);
    if (count_slack && std::isfinite(slack)) {
      rep_.min_slack = std::min(rep_.min_slack, slack);
    }
    rep_.rows.push_back(std::move(row));
  }

  void count_points(std::size_t n) { rep_.points_checked += n; }

  SweepReport take() {
    if (!std::isfinite(rep_.min_slack)) rep_.min_slack = 0.0;
    return std::move(rep_);
  }

 private:
  SweepReport rep_;
  double vf_;
};

}  // namespace

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::lemma1: return "lemma1";
    case Suite::theorem1_pos: return "theorem1_pos";
    case Suite::theorem1_neg: return "theorem1_neg";
    case Suite::corollary: return "corollary";
    case Suite::gaussian_facts: return "gaussian_facts";
    case Suite::log_ineq: return "log_ineq";
    case Suite::oracle_cross: return "oracle_cross";
  }
  return "unknown";
}

Suite suite_from_name(const std::string& name) {
  for (const Suite s :
       {Suite::lemma1, Suite::theorem1_pos, Suite::theorem1_neg,
        Suite::corollary, Suite::gaussian_facts, Suite::log_ineq,
        Suite::oracle_cross}) {
    if (name == suite_name(s)) return s;
  }
  throw ConfigError("unknown suite '" + name + "'");
}

bool suite_is_probe(Suite s) {
  return s == Suite::theorem1_neg || s == Suite::gaussian_facts;
}

std::vector<double> lin_grid(double lo, double hi, std::size_t n) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo || n == 0) {
    throw ConfigError("lin_grid: malformed range");
  }
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || hi < lo ||
      n == 0) {
    throw ConfigError("log_grid: malformed range");
  }
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                              static_cast<double>(n - 1));
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

namespace {

// 100 linear points on [0,10) plus 100 log points on [10,100]: exactly 200
// distinct values mixing the scales the bound tightness varies on.
std::vector<double> mixed_a_grid() {
  std::vector<double> a;
  a.reserve(200);
  for (int i = 0; i < 100; ++i) a.push_back(10.0 * i / 100.0);
  const std::vector<double> tail_part = log_grid(10.0, 100.0, 100);
  a.insert(a.end(), tail_part.begin(), tail_part.end());
  return a;
}

}  // namespace

SweepConfig default_config(Suite s) {
  SweepConfig cfg;
  cfg.suite = s;
  switch (s) {
    case Suite::lemma1:
      cfg.a_grid = log_grid(1e-9, 1e4, 500);
      break;
    case Suite::theorem1_pos:
      cfg.nu_grid = log_grid(1e-2, 1e3, 60);
      cfg.a_grid = mixed_a_grid();
      break;
    case Suite::theorem1_neg: {
      cfg.nu_grid = log_grid(1e-2, 1e3, 60);
      for (const double a : mixed_a_grid()) {
        if (a > 0.0) cfg.a_grid.push_back(-a);
      }
      std::sort(cfg.a_grid.begin(), cfg.a_grid.end());
      break;
    }
    case Suite::corollary:
      cfg.nu_grid = log_grid(1e-4, 1e4, 50);
      cfg.a_grid = lin_grid(0.0, 1.0, 100);
      break;
    case Suite::gaussian_facts:
      cfg.a_grid = lin_grid(-3.0, 40.0, 431);
      break;
    case Suite::log_ineq:
      cfg.a_grid.push_back(0.0);
      for (const double x : log_grid(1e-9, 1e9, 500)) cfg.a_grid.push_back(x);
      break;
    case Suite::oracle_cross:
      cfg.nu_grid = log_grid(1e-2, 1e3, 60);
      cfg.a_grid = mixed_a_grid();
      break;
  }
  return cfg;
}

SweepReport sweep_lemma1(const SweepConfig& cfg) {
  if (cfg.suite != Suite::lemma1) {
    throw ConfigError("sweep_lemma1: config suite must be lemma1");
  }
  std::vector<double> xs = sorted_finite(cfg.a_grid, "lemma1");
  std::erase_if(xs, [](double x) { return x <= 0.0; });
  if (xs.empty()) {
    throw ConfigError("lemma1: grid has no positive entries");
  }
  ReportBuilder rb(cfg.suite, cfg.violation_factor);
  for (const double x : xs) {
    const double lhs = lemma1_lhs(x);
    const double rhs = x + 1.0;
    const double err = kClosedFormRel * (std::fabs(lhs) + std::fabs(rhs));
    rb.add_check(false, 0.0, x, lhs, rhs, err);
  }
  return rb.take();
}

SweepReport sweep_theorem1(const SweepConfig& cfg) {
  const bool positive = cfg.suite == Suite::theorem1_pos;
  if (!positive && cfg.suite != Suite::theorem1_neg) {
    throw ConfigError("sweep_theorem1: suite must be theorem1_pos or theorem1_neg");
  }
  const std::vector<double> nus = positive_nu_grid(cfg, "theorem1");
  const std::vector<double> as = sorted_finite(cfg.a_grid, "theorem1");
  for (const double a : as) {
    if (positive ? a < 0.0 : a >= 0.0) {
      throw ConfigError(
          "theorem1: mixed-sign a grid; theorem1_pos takes a >= 0, "
          "theorem1_neg takes a < 0");
    }
  }
  ReportBuilder rb(cfg.suite, cfg.violation_factor);
  for (const double nu : nus) {
    const TDist d(nu);
    for (const double a : as) {
      const double m = mills_ratio(d, a);
      const double b = theorem1_bound(nu, a);
      double err = std::fabs(m) * (kTailRelError + kPdfRelError) +
                   kClosedFormRel * std::fabs(b);
      std::optional<double> excess_override;
      if (m - b > cfg.violation_factor * err) {
        // candidate violation: require the independent quadrature oracle to
        // agree before it counts
        const QuadResult q = tail_quadrature_at(d, nu, a, cfg.rel_tol);
        const double p = pdf(d, a);
        const double m_quad = p > 0.0 ? q.value / p : m;
        if (p > 0.0) err += q.abs_error / p;
        excess_override =
            (std::min(m, m_quad) - b) - cfg.violation_factor * err;
      }
      rb.add_check(true, nu, a, m, b, err, excess_override);
    }
  }
  return rb.take();
}

namespace {

// The a grid gives the per-nu resolution: it is rescaled affinely onto
// [0, corollary_validity_limit(nu)] so every nu row sees the same number of
// in-region points.
std::vector<double> corollary_fractions(const SweepConfig& cfg) {
  std::vector<double> fr = sorted_finite(cfg.a_grid, "corollary");
  if (fr.front() < 0.0) {
    throw ConfigError("corollary: a grid entries must be >= 0");
  }
  if (fr.back() <= 0.0) {
    throw ConfigError("corollary: clamping leaves an empty grid");
  }
  const double scale = 1.0 / fr.back();
  for (double& f : fr) f *= scale;
  return fr;
}

}  // namespace

SweepReport sweep_corollary(const SweepConfig& cfg) {
  if (cfg.suite != Suite::corollary) {
    throw ConfigError("sweep_corollary: config suite must be corollary");
  }
  const std::vector<double> nus = positive_nu_grid(cfg, "corollary");
  const std::vector<double> fractions = corollary_fractions(cfg);
  ReportBuilder rb(cfg.suite, cfg.violation_factor);
  for (const double nu : nus) {
    const TDist d(nu);
    const double limit = corollary_validity_limit(nu);
    for (const double f : fractions) {
      const double a = f * limit;
      const double lhs = tail(d, a);
      const double rhs = corollary_bound(a);
      const double err = lhs * kTailRelError + kClosedFormRel * rhs;
      rb.add_check(true, nu, a, lhs, rhs, err);
    }
  }
  return rb.take();
}

SweepReport probe_beyond_validity(const SweepConfig& cfg) {
  if (cfg.suite != Suite::corollary) {
    throw ConfigError("probe_beyond_validity: config suite must be corollary");
  }
  const std::vector<double> nus = positive_nu_grid(cfg, "probe");
  std::vector<double> as = sorted_finite(cfg.a_grid, "probe");
  if (as.front() < 0.0) {
    throw ConfigError("probe: a grid entries must be >= 0");
  }
  ReportBuilder rb(cfg.suite, cfg.violation_factor);
  for (const double nu : nus) {
    const TDist d(nu);
    const double limit = corollary_validity_limit(nu);
    const auto gap = [&d](double a) {
      return tail(d, a) - corollary_bound(a);
    };
    double bracket_lo = 0.0;
    bool found = false;
    double first_bad = 0.0;
    std::size_t evals = 0;
    for (const double a : as) {
      ++evals;
      if (gap(a) > 0.0) {
        found = true;
        first_bad = a;
        break;
      }
      bracket_lo = a;
    }
    rb.count_points(evals);
    if (!found) {
      rb.add_info(true, nu, kNan, kNan, limit, kNan, 0.0, "none");
      continue;
    }
    // refine the onset between the last good and first bad grid points
    double lo = bracket_lo;
    double hi = first_bad;
    for (int i = 0; i < 80 && hi - lo > 1e-6; ++i) {
      const double mid = 0.5 * (lo + hi);
      (gap(mid) > 0.0 ? hi : lo) = mid;
    }
    const double onset = 0.5 * (lo + hi);
    rb.add_info(true, nu, onset, onset, limit, onset - limit, 1e-6, "onset",
                /*count_slack=*/true);
  }
  return rb.take();
}

SweepReport cross_validate_oracles(const SweepConfig& cfg) {
  if (cfg.suite != Suite::oracle_cross) {
    throw ConfigError("cross_validate_oracles: config suite must be oracle_cross");
  }
  const std::vector<double> nus = positive_nu_grid(cfg, "oracle_cross");
  const std::vector<double> as = sorted_finite(cfg.a_grid, "oracle_cross");
  ReportBuilder rb(cfg.suite, cfg.violation_factor);
  for (const double nu : nus) {
    const TDist d(nu);
    for (const double a : as) {
      const double t = tail(d, a);
      const QuadResult q = tail_quadrature_at(d, nu, a, cfg.rel_tol);
      const double lhs = std::fabs(t - q.value);
      const double rhs = q.abs_error + 1e-11;
      rb.add_check(true, nu, a, lhs, rhs, 0.0);
    }
  }
  return rb.take();
}

namespace {

// Bisect h between the first adjacent grid pair where it changes sign from
// positive to negative; returns NaN when the grid sees no sign change.
template <typename F>
double grid_crossover(const F& h, const std::vector<double>& grid) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (h(grid[i - 1]) > 0.0 && h(grid[i]) <= 0.0) {
      double lo = grid[i - 1];
      double hi = grid[i];
      for (int k = 0; k < 80 && hi - lo > 1e-6; ++k) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) > 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  return kNan;
}

}  // namespace

SweepReport sweep_proof_facts(const SweepConfig& cfg) {
  if (cfg.suite == Suite::log_ineq) {
    std::vector<double> xs = sorted_finite(cfg.a_grid, "log_ineq");
    if (xs.front() < 0.0) {
      throw ConfigError("log_ineq: grid entries must be >= 0");
    }
    ReportBuilder rb(cfg.suite, cfg.violation_factor);
    for (const double x : xs) {
      const double rhs = std::log1p(x);
      const double lhs = 2.0 * x / (x + 2.0);
      const double err = kClosedFormRel * (1.0 + std::fabs(rhs));
      rb.add_check(false, 0.0, x, lhs, rhs, err);
    }
    return rb.take();
  }
  if (cfg.suite != Suite::gaussian_facts) {
    throw ConfigError("sweep_proof_facts: suite must be gaussian_facts or log_ineq");
  }
  const std::vector<double> as = sorted_finite(cfg.a_grid, "gaussian_facts");
  ReportBuilder rb(cfg.suite, cfg.violation_factor);
  for (const double a : as) {
    const double lhs = erfc_scaled_tail(a);
    const double half = std::exp(-0.5 * a * a);
    const double rhs = a >= 0.0 ? 0.5 * half : half;
    const double err = 1e-14 * (std::fabs(lhs) + std::fabs(rhs));
    rb.add_check(false, 0.0, a, lhs, rhs, err);
  }
  // Where each fact starts to hold; both fail near a = 0 in this
  // normalization, so the onsets are data, not assertions.
  const auto fact1 = [](double a) {
    return erfc_scaled_tail(a) - 0.5 * std::exp(-0.5 * a * a);
  };
  const auto fact2 = [](double a) {
    return erfc_scaled_tail(a) - std::exp(-0.5 * a * a);
  };
  const double c1 = grid_crossover(fact1, as);
  if (std::isfinite(c1)) {
    rb.add_info(false, 0.0, c1, erfc_scaled_tail(c1),
                0.5 * std::exp(-0.5 * c1 * c1), 0.0, 1e-6, "crossover_fact1");
  }
  const double c2 = grid_crossover(fact2, as);
  if (std::isfinite(c2)) {
    rb.add_info(false, 0.0, c2, erfc_scaled_tail(c2),
                std::exp(-0.5 * c2 * c2), 0.0, 1e-6, "crossover_fact2");
  }
  return rb.take();
}

SweepReport run_suite(const SweepConfig& cfg) {
  switch (cfg.suite) {
    case Suite::lemma1: return sweep_lemma1(cfg);
    case Suite::theorem1_pos:
    case Suite::theorem1_neg: return sweep_theorem1(cfg);
    case Suite::corollary: return sweep_corollary(cfg);
    case Suite::gaussian_facts:
    case Suite::log_ineq: return sweep_proof_facts(cfg);
    case Suite::oracle_cross: return cross_validate_oracles(cfg);
  }
  throw ConfigError("run_suite: unknown suite");
}

}  // namespace tmills
