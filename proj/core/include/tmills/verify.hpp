#ifndef TMILLS_VERIFY_HPP
#define TMILLS_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tmills/specfun.hpp"

namespace tmills {

enum class Suite {
  lemma1,
  theorem1_pos,
  theorem1_neg,
  corollary,
  gaussian_facts,
  log_ineq,
  oracle_cross,
};

const char* suite_name(Suite s);
Suite suite_from_name(const std::string& name);  // ConfigError on unknown name

/// Probe-mode suites report violations but never gate an exit code.
bool suite_is_probe(Suite s);

struct SweepConfig {
  Suite suite = Suite::corollary;
  std::vector<double> nu_grid;  // entries > 0
  std::vector<double> a_grid;   // interpretation depends on the suite
  double rel_tol = 1e-12;
  double violation_factor = 10.0;
};

/// Config with the default grids for a suite filled in.
SweepConfig default_config(Suite s);

/// One checked grid point. A point is a violation when
/// lhs - rhs > violation_factor * oracle_err, i.e. excess > 0.
struct SweepRow {
  bool has_nu = false;
  double nu = 0.0;
  double a = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;       // rhs - lhs
  double oracle_err = 0.0;  // combined oracle error estimate
  double excess = 0.0;      // (lhs - rhs) - violation_factor * oracle_err
  std::string flag;         // "ok", "viol", "crossover", "onset", "none"
};

struct WorstViolation {
  bool has_nu = false;
  double nu = 0.0;
  double a = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double excess = 0.0;
};

struct SweepReport {
  Suite suite = Suite::corollary;
  std::size_t points_checked = 0;
  std::size_t violations = 0;
  std::optional<WorstViolation> worst_violation;  // present iff violations > 0
  double min_slack = 0.0;
  double max_tightness_ratio = 0.0;  // max lhs/rhs over rows with rhs > 0
  std::vector<SweepRow> rows;        // ordered by (nu, a) ascending
};

/// lemma1: x e^{x^2/2}/sqrt(e^{x^2}-1) <= x + 1 on the positive grid.
SweepReport sweep_lemma1(const SweepConfig& cfg);

/// theorem1_pos / theorem1_neg: Mill's ratio against the closed-form bound.
/// Candidate violations are cross-checked with the quadrature oracle before
/// they count.
SweepReport sweep_theorem1(const SweepConfig& cfg);

/// corollary: P[X >= a] <= e^{-a^2/4} with the a grid rescaled onto
/// [0, corollary_validity_limit(nu)] for each nu.
SweepReport sweep_corollary(const SweepConfig& cfg);

/// Maps where the sub-Gaussian bound empirically starts failing beyond the
/// stated validity limit. One row per nu: a = bisected onset (NaN if the
/// bound holds across the whole grid), rhs = validity limit,
/// slack = onset - limit. Never asserts.
SweepReport probe_beyond_validity(const SweepConfig& cfg);

/// oracle_cross: |tail_beta - tail_quadrature| <= quad abs_error + 1e-11.
SweepReport cross_validate_oracles(const SweepConfig& cfg);

/// gaussian_facts / log_ineq proof-ingredient checks. gaussian_facts also
/// emits "crossover" rows locating where each Gaussian tail fact starts to
/// hold (the facts are false near a = 0 in this normalization).
SweepReport sweep_proof_facts(const SweepConfig& cfg);

/// Dispatch on cfg.suite.
SweepReport run_suite(const SweepConfig& cfg);

// Grid helpers (endpoints included exactly).
std::vector<double> lin_grid(double lo, double hi, std::size_t n);
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace tmills

#endif  // TMILLS_VERIFY_HPP
