#include "tmills/bounds.hpp"

#include <cmath>
#include <vector>

#include "tmills/student_t.hpp"

namespace tmills {

double lemma1_lhs(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("lemma1_lhs: x must be a positive finite real");
  }
  // e^{x^2} overflows near x = 26.6; 1 - e^{-x^2} never does.
  return x / std::sqrt(-std::expm1(-x * x));
}

double theorem1_bound(double nu, double a) {
  if (!std::isfinite(nu) || nu <= 0.0) {
    throw DomainError("theorem1_bound: nu must be a positive finite real");
  }
  if (!std::isfinite(a)) {
    throw DomainError("theorem1_bound: a must be finite");
  }
  const double stretch = std::sqrt(1.0 + a * a / nu);
  const double inv_sqrt_nu = 1.0 / std::sqrt(nu);
  return a >= 0.0 ? stretch * (0.5 + inv_sqrt_nu)
                  : stretch * (1.0 + inv_sqrt_nu);
}

double corollary_bound(double a) {
  if (!std::isfinite(a)) {
    throw DomainError("corollary_bound: a must be finite");
  }
  return std::exp(-0.25 * a * a);
}

double corollary_validity_limit(double nu) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw DomainError("corollary_validity_limit: nu must be >= 0");
  }
  return std::sqrt(2.0 * (nu + 1.22));
}

double k_objective(double nu) {
  return c_nu(nu) * (0.5 + 1.0 / std::sqrt(nu));
}

namespace {

// Golden-section maximization in log(nu); g is unimodal around nu ~ 0.1.
double golden_max(double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = std::log(lo);
  double b = std::log(hi);
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = k_objective(std::exp(x1));
  double f2 = k_objective(std::exp(x2));
  for (int i = 0; i < 200 && b - a > 1e-13; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = k_objective(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = k_objective(std::exp(x1));
    }
  }
  return std::exp(0.5 * (a + b));
}

}  // namespace

KConstant k_constant(double search_lo, double search_hi,
                     std::size_t resolution) {
  if (!std::isfinite(search_lo) || !std::isfinite(search_hi) ||
      search_lo <= 0.0 || search_hi <= search_lo) {
    throw DomainError("k_constant: need 0 < search_lo < search_hi, both finite");
  }
  if (resolution < 1000) {
    throw DomainError("k_constant: resolution must be at least 1000");
  }

  const double log_ratio = std::log(search_hi / search_lo);
  std::vector<double> grid(resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    grid[i] = search_lo *
              std::exp(log_ratio * static_cast<double>(i) /
                       static_cast<double>(resolution - 1));
  }
  grid.back() = search_hi;

  std::size_t best = 0;
  double best_val = k_objective(grid[0]);
  for (std::size_t i = 1; i < resolution; ++i) {
    const double v = k_objective(grid[i]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  KConstant out;
  out.search_lo = search_lo;
  out.search_hi = search_hi;
  out.resolution = resolution;

  if (best == 0 || best == resolution - 1) {
    out.value = best_val;
    out.argmax_nu = grid[best];
    throw BracketError(
        "k_constant: maximum sits on a bracket edge; the bracket excludes "
        "the interior maximum",
        out);
  }

  const double refined = golden_max(grid[best - 1], grid[best + 1]);
  const double refined_val = k_objective(refined);
  if (refined_val >= best_val) {
    out.value = refined_val;
    out.argmax_nu = refined;
  } else {
    out.value = best_val;
    out.argmax_nu = grid[best];
  }
  return out;
}

namespace {

double check_threshold_domain(double nu, double k, const char* who) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw DomainError(std::string(who) + ": nu must be >= 0");
  }
  if (!std::isfinite(k) || k <= 0.0 || k >= 1.0) {
    throw DomainError(std::string(who) + ": k must lie in (0,1)");
  }
  return std::log(k);
}

}  // namespace

double a2_threshold_exact(double nu, double k) {
  const double ln_k = check_threshold_domain(nu, k, "a2_threshold_exact");
  const double disc = nu * nu + 4.0 * ln_k * ln_k + 12.0 * nu * (-ln_k);
  return nu - 2.0 * ln_k + std::sqrt(disc);
}

double a2_threshold_sufficient(double nu, double k) {
  const double ln_k = check_threshold_domain(nu, k, "a2_threshold_sufficient");
  return 2.0 * nu - 4.0 * ln_k;
}

double log_ineq_gap(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("log_ineq_gap: x must be >= 0 and finite");
  }
  return std::log1p(x) - 2.0 * x / (x + 2.0);
}

ThresholdPair make_threshold_pair(double nu, double k) {
  return {nu, a2_threshold_exact(nu, k), a2_threshold_sufficient(nu, k)};
}

}  // namespace tmills
