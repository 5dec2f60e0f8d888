#include "tmills/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace tmills {

using ordered_json = nlohmann::ordered_json;

Format format_from_name(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ConfigError("unknown format '" + name + "' (expected csv or json)");
}

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Empty cell for fields a row does not carry.
std::string cell(double v) { return std::isnan(v) ? std::string() : fmt17(v); }

ordered_json json_number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "suite,nu,a,lhs,rhs,slack,oracle_err,flag\n";
  for (const SweepRow& row : report.rows) {
    out << suite_name(report.suite) << ','
        << (row.has_nu ? cell(row.nu) : std::string()) << ',' << cell(row.a)
        << ',' << cell(row.lhs) << ',' << cell(row.rhs) << ','
        << cell(row.slack) << ',' << cell(row.oracle_err) << ',' << row.flag
        << '\n';
  }
  return out.str();
}

std::string to_json(const SweepReport& report) {
  ordered_json j;
  j["suite"] = suite_name(report.suite);
  j["points_checked"] = report.points_checked;
  j["violations"] = report.violations;
  if (report.worst_violation) {
    const WorstViolation& w = *report.worst_violation;
    ordered_json wj;
    if (w.has_nu) wj["nu"] = w.nu;
    wj["a"] = w.a;
    wj["lhs"] = w.lhs;
    wj["rhs"] = w.rhs;
    wj["excess"] = w.excess;
    j["worst_violation"] = wj;
  }
  j["min_slack"] = report.min_slack;
  j["max_tightness_ratio"] = report.max_tightness_ratio;
  ordered_json rows = ordered_json::array();
  for (const SweepRow& row : report.rows) {
    ordered_json r;
    r["nu"] = row.has_nu ? ordered_json(row.nu) : ordered_json(nullptr);
    r["a"] = json_number_or_null(row.a);
    r["lhs"] = json_number_or_null(row.lhs);
    r["rhs"] = json_number_or_null(row.rhs);
    r["slack"] = json_number_or_null(row.slack);
    r["oracle_err"] = json_number_or_null(row.oracle_err);
    r["flag"] = row.flag;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string to_csv(const EvalReport& r) {
  std::ostringstream out;
  out << "nu,a,pdf,tail_beta,tail_quad,tail_quad_err,mills,bound_theorem1,"
         "bound_corollary,slack\n";
  out << fmt17(r.nu) << ',' << fmt17(r.a) << ',' << fmt17(r.pdf) << ','
      << fmt17(r.tail_beta) << ',' << fmt17(r.tail_quad) << ','
      << fmt17(r.tail_quad_err) << ',' << fmt17(r.mills) << ','
      << fmt17(r.bound_theorem1) << ','
      << (r.bound_corollary ? fmt17(*r.bound_corollary) : std::string())
      << ',' << fmt17(r.slack) << '\n';
  return out.str();
}

std::string to_json(const EvalReport& r) {
  ordered_json j;
  j["nu"] = r.nu;
  j["a"] = r.a;
  j["pdf"] = r.pdf;
  j["tail_beta"] = r.tail_beta;
  j["tail_quad"] = r.tail_quad;
  j["tail_quad_err"] = r.tail_quad_err;
  j["mills"] = r.mills;
  j["bound_theorem1"] = r.bound_theorem1;
  if (r.bound_corollary) j["bound_corollary"] = *r.bound_corollary;
  j["slack"] = r.slack;
  return j.dump(2) + "\n";
}

std::string to_csv(const KConstant& k) {
  std::ostringstream out;
  out << "value,argmax_nu,search_lo,search_hi,resolution\n";
  out << fmt17(k.value) << ',' << fmt17(k.argmax_nu) << ','
      << fmt17(k.search_lo) << ',' << fmt17(k.search_hi) << ','
      << k.resolution << '\n';
  return out.str();
}

std::string to_json(const KConstant& k) {
  ordered_json j;
  j["value"] = k.value;
  j["argmax_nu"] = k.argmax_nu;
  j["search_lo"] = k.search_lo;
  j["search_hi"] = k.search_hi;
  j["resolution"] = k.resolution;
  return j.dump(2) + "\n";
}

std::string to_csv(const ThresholdTable& table) {
  std::ostringstream out;
  out << "nu,exact_a2,sufficient_a2,sqrt_sufficient,validity_limit,flag\n";
  for (const ThresholdPair& row : table.rows) {
    const bool bad = row.sufficient_a2 > row.exact_a2;
    out << fmt17(row.nu) << ',' << fmt17(row.exact_a2) << ','
        << fmt17(row.sufficient_a2) << ','
        << fmt17(std::sqrt(row.sufficient_a2)) << ','
        << fmt17(corollary_validity_limit(row.nu)) << ','
        << (bad ? "sufficient_exceeds_exact" : "ok") << '\n';
  }
  return out.str();
}

std::string to_json(const ThresholdTable& table) {
  ordered_json j;
  j["k"] = table.k;
  ordered_json rows = ordered_json::array();
  for (const ThresholdPair& row : table.rows) {
    ordered_json r;
    r["nu"] = row.nu;
    r["exact_a2"] = row.exact_a2;
    r["sufficient_a2"] = row.sufficient_a2;
    r["sqrt_sufficient"] = std::sqrt(row.sufficient_a2);
    r["validity_limit"] = corollary_validity_limit(row.nu);
    r["flag"] = row.sufficient_a2 > row.exact_a2 ? "sufficient_exceeds_exact"
                                                 : "ok";
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::vector<double> parse_grid_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (parts.size() != 4) {
    throw ConfigError("grid spec '" + spec + "' must look like lo:hi:n:log|lin");
  }
  double lo = 0.0, hi = 0.0;
  unsigned long n = 0;
  try {
    std::size_t used = 0;
    lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    n = std::stoul(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error&) {
    throw ConfigError("grid spec '" + spec + "' has a malformed number");
  }
  if (parts[3] == "lin") return lin_grid(lo, hi, n);
  if (parts[3] == "log") return log_grid(lo, hi, n);
  throw ConfigError("grid spec '" + spec + "' spacing must be log or lin");
}

}  // namespace tmills
