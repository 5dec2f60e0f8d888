// Command-line front end. Exit codes: 0 success/certified, 1 asserted
// violation or K exceedance, 2 usage/config error.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmills/cli.hpp"

namespace {

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
}

int run_with_output(const CommonOpts& c,
                    const std::function<int(std::ostream&, tmills::Format)>& fn) {
  const tmills::Format fmt = tmills::format_from_name(c.format);
  if (c.out_path.empty()) return fn(std::cout, fmt);
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) {
    throw tmills::ConfigError("--out: cannot open '" + c.out_path + "' for writing");
  }
  return fn(file, fmt);
}

void check_rel_tol(double rel_tol) {
  if (!(rel_tol > 1e-14) || !(rel_tol < 1e-2)) {
    throw tmills::ConfigError("--rel-tol must lie in (1e-14, 1e-2)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Student's t tail toolkit: density/tail/Mill's-ratio evaluation, "
      "inequality certification sweeps, the K supremum search, and "
      "threshold tables"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand(
      "eval", "Evaluate pdf, both tail oracles, Mill's ratio and bounds at one (nu, a)");
  double eval_nu = 0.0, eval_a = 0.0, eval_rel_tol = 1e-12;
  CommonOpts eval_c;
  eval->add_option("--nu", eval_nu, "Degrees of freedom (> 0)")->required();
  eval->add_option("--a", eval_a, "Evaluation point")->required();
  eval->add_option("--rel-tol", eval_rel_tol, "Quadrature relative tolerance");
  add_common(eval, eval_c);

  auto* sweep = app.add_subcommand("sweep", "Run a certification suite over a grid");
  std::string sweep_suite;
  std::string sweep_nu_grid, sweep_a_grid;
  double sweep_rel_tol = 1e-12, sweep_vf = 10.0;
  CommonOpts sweep_c;
  sweep->add_option("suite", sweep_suite,
                    "One of: lemma1, theorem1_pos, theorem1_neg, corollary, "
                    "gaussian_facts, log_ineq, oracle_cross")
      ->required();
  sweep->add_option("--nu-grid", sweep_nu_grid, "Override nu grid, lo:hi:n:log|lin");
  sweep->add_option("--a-grid", sweep_a_grid,
                    "Override a grid, lo:hi:n:log|lin (the corollary suite "
                    "rescales it onto [0, validity limit] per nu)");
  sweep->add_option("--rel-tol", sweep_rel_tol, "Quadrature relative tolerance");
  sweep->add_option("--violation-factor", sweep_vf,
                    "Gap must exceed this multiple of combined oracle error to count");
  add_common(sweep, sweep_c);

  auto* kconst = app.add_subcommand(
      "kconst", "Search sup over nu of C_nu (1/2 + 1/sqrt(nu))");
  double k_lo = 1e-4, k_hi = 1e6;
  std::size_t k_res = 4000;
  CommonOpts kconst_c;
  kconst->add_option("--lo", k_lo, "Bracket lower end (> 0)");
  kconst->add_option("--hi", k_hi, "Bracket upper end");
  kconst->add_option("--resolution", k_res, "Scan grid size (>= 1000)");
  add_common(kconst, kconst_c);

  auto* thresholds = app.add_subcommand(
      "thresholds", "Tabulate the exact and sufficient a^2 thresholds per nu");
  double th_k = 0.543;
  std::vector<double> th_nus;
  std::string th_nu_grid;
  CommonOpts th_c;
  thresholds->add_option("--k", th_k, "Constant K in (0,1), default 0.543");
  thresholds->add_option("--nu", th_nus, "Explicit nu values (repeatable)");
  thresholds->add_option("--nu-grid", th_nu_grid, "nu grid, lo:hi:n:log|lin");
  add_common(thresholds, th_c);

  auto* probe = app.add_subcommand(
      "probe", "Locate where the sub-Gaussian tail bound empirically fails "
               "beyond its stated validity limit");
  std::string probe_nu_grid, probe_a_grid;
  double probe_rel_tol = 1e-12;
  CommonOpts probe_c;
  probe->add_option("--nu-grid", probe_nu_grid, "Override nu grid, lo:hi:n:log|lin");
  probe->add_option("--a-grid", probe_a_grid, "Probe grid, lo:hi:n:log|lin");
  probe->add_option("--rel-tol", probe_rel_tol, "Quadrature relative tolerance");
  add_common(probe, probe_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) {
      if (!std::isfinite(eval_nu) || eval_nu <= 0.0) {
        throw tmills::ConfigError("--nu must be a positive finite real");
      }
      if (!std::isfinite(eval_a)) {
        throw tmills::ConfigError("--a must be finite");
      }
      check_rel_tol(eval_rel_tol);
      return run_with_output(eval_c, [&](std::ostream& out, tmills::Format f) {
        return tmills::cmd_eval(out, eval_nu, eval_a, f, eval_rel_tol);
      });
    }
    if (sweep->parsed()) {
      const tmills::Suite suite = tmills::suite_from_name(sweep_suite);
      tmills::SweepConfig cfg = tmills::default_config(suite);
      if (!sweep_nu_grid.empty()) cfg.nu_grid = tmills::parse_grid_spec(sweep_nu_grid);
      if (!sweep_a_grid.empty()) cfg.a_grid = tmills::parse_grid_spec(sweep_a_grid);
      check_rel_tol(sweep_rel_tol);
      if (!(sweep_vf >= 1.0) || !std::isfinite(sweep_vf)) {
        throw tmills::ConfigError("--violation-factor must be >= 1");
      }
      cfg.rel_tol = sweep_rel_tol;
      cfg.violation_factor = sweep_vf;
      return run_with_output(sweep_c, [&](std::ostream& out, tmills::Format f) {
        return tmills::cmd_sweep(out, cfg, f);
      });
    }
    if (kconst->parsed()) {
      if (!std::isfinite(k_lo) || k_lo <= 0.0) {
        throw tmills::ConfigError("--lo must be a positive finite real");
      }
      if (!std::isfinite(k_hi) || k_hi <= k_lo) {
        throw tmills::ConfigError("--hi must be finite and greater than --lo");
      }
      if (k_res < 1000) {
        throw tmills::ConfigError("--resolution must be at least 1000");
      }
      return run_with_output(kconst_c, [&](std::ostream& out, tmills::Format f) {
        return tmills::cmd_kconst(out, std::cerr, k_lo, k_hi, k_res, f);
      });
    }
    if (thresholds->parsed()) {
      if (!std::isfinite(th_k) || th_k <= 0.0 || th_k >= 1.0) {
        throw tmills::ConfigError("--k must lie in (0,1)");
      }
      std::vector<double> nus = th_nus;
      if (!th_nu_grid.empty()) {
        const std::vector<double> more = tmills::parse_grid_spec(th_nu_grid);
        nus.insert(nus.end(), more.begin(), more.end());
      }
      if (nus.empty()) {
        nus = {0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0, 10000.0};
      }
      return run_with_output(th_c, [&](std::ostream& out, tmills::Format f) {
        return tmills::cmd_thresholds(out, nus, th_k, f);
      });
    }
    if (probe->parsed()) {
      tmills::SweepConfig cfg = tmills::default_config(tmills::Suite::corollary);
      cfg.a_grid = tmills::lin_grid(0.0, 20.0, 401);
      if (!probe_nu_grid.empty()) cfg.nu_grid = tmills::parse_grid_spec(probe_nu_grid);
      if (!probe_a_grid.empty()) cfg.a_grid = tmills::parse_grid_spec(probe_a_grid);
      check_rel_tol(probe_rel_tol);
      cfg.rel_tol = probe_rel_tol;
      return run_with_output(probe_c, [&](std::ostream& out, tmills::Format f) {
        return tmills::cmd_probe(out, cfg, f);
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
