#ifndef TMILLS_REPORT_IO_HPP
#define TMILLS_REPORT_IO_HPP

#include <string>
#include <vector>

#include "tmills/bounds.hpp"
#include "tmills/student_t.hpp"
#include "tmills/verify.hpp"

namespace tmills {

enum class Format { csv, json };
Format format_from_name(const std::string& name);

/// 17 significant digits, enough for doubles to round-trip exactly.
std::string fmt17(double v);

// Sweep rows use the fixed schema
//   suite,nu,a,lhs,rhs,slack,oracle_err,flag
// with empty cells for fields a row does not carry.
std::string to_csv(const SweepReport& report);
std::string to_json(const SweepReport& report);

std::string to_csv(const EvalReport& report);
std::string to_json(const EvalReport& report);

std::string to_csv(const KConstant& k);
std::string to_json(const KConstant& k);

struct ThresholdTable {
  double k = 0.0;
  std::vector<ThresholdPair> rows;
};
std::string to_csv(const ThresholdTable& table);
std::string to_json(const ThresholdTable& table);

template <typename Report>
std::string serialize(const Report& r, Format f) {
  return f == Format::csv ? to_csv(r) : to_json(r);
}

/// Parse "lo:hi:n:log|lin" into a grid. ConfigError on malformed specs.
std::vector<double> parse_grid_spec(const std::string& spec);

}  // namespace tmills

#endif  // TMILLS_REPORT_IO_HPP
