#ifndef TMILLS_CLI_HPP
#define TMILLS_CLI_HPP

#include <iosfwd>

#include "tmills/report_io.hpp"

namespace tmills {

// Command runners behind the CLI verbs. Each writes one serialized report to
// `out` and returns the process exit code: 0 success/certified, 1 asserted
// violation or K exceedance. Domain/config errors propagate as exceptions;
// the front end maps them to exit code 2.

int cmd_eval(std::ostream& out, double nu, double a, Format format,
             double rel_tol = 1e-12);

/// Exit 1 when an asserting suite has violations; probe-mode suites
/// (theorem1_neg, gaussian_facts) always exit 0.
int cmd_sweep(std::ostream& out, const SweepConfig& cfg, Format format);

/// Bracket-edge searches emit a warning on `diag` plus the edge-constrained
/// result. Exit 1 when the supremum exceeds 0.543.
int cmd_kconst(std::ostream& out, std::ostream& diag, double lo, double hi,
               std::size_t resolution, Format format);

int cmd_thresholds(std::ostream& out, const std::vector<double>& nus,
                   double k, Format format);

int cmd_probe(std::ostream& out, const SweepConfig& cfg, Format format);

}  // namespace tmills

#endif  // TMILLS_CLI_HPP
