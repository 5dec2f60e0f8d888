#include "tmills/cli.hpp"

#include <ostream>

namespace tmills {

int cmd_eval(std::ostream& out, double nu, double a, Format format,
             double rel_tol) {
  const EvalReport report = evaluate_point(nu, a, rel_tol);
  out << serialize(report, format);
  return 0;
}

int cmd_sweep(std::ostream& out, const SweepConfig& cfg, Format format) {
  const SweepReport report = run_suite(cfg);
  out << serialize(report, format);
  if (!suite_is_probe(cfg.suite) && report.violations > 0) return 1;
  return 0;
}

int cmd_kconst(std::ostream& out, std::ostream& diag, double lo, double hi,
               std::size_t resolution, Format format) {
  KConstant result;
  try {
    result = k_constant(lo, hi, resolution);
  } catch (const BracketError& e) {
    diag << "warning: " << e.what() << "\n";
    result = e.best;
  }
  out << serialize(result, format);
  return result.value > 0.543 ? 1 : 0;
}

int cmd_thresholds(std::ostream& out, const std::vector<double>& nus,
                   double k, Format format) {
  if (nus.empty()) {
    throw ConfigError("thresholds: nu list is empty");
  }
  ThresholdTable table;
  table.k = k;
  table.rows.reserve(nus.size());
  for (const double nu : nus) {
    table.rows.push_back(make_threshold_pair(nu, k));
  }
  out << serialize(table, format);
  return 0;
}

int cmd_probe(std::ostream& out, const SweepConfig& cfg, Format format) {
  const SweepReport report = probe_beyond_validity(cfg);
  out << serialize(report, format);
  return 0;
}

}  // namespace tmills
