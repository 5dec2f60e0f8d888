#ifndef TMILLS_BOUNDS_HPP
#define TMILLS_BOUNDS_HPP

#include <cstddef>

#include "tmills/specfun.hpp"

namespace tmills {

/// x e^{x^2/2} / sqrt(e^{x^2} - 1) for x > 0, evaluated in the
/// overflow-free form x / sqrt(1 - e^{-x^2}). Tends to 1 as x -> 0+ and
/// is bounded above by x + 1.
double lemma1_lhs(double x);

/// Closed-form Mill's-ratio bound, sqrt(1 + a^2/nu) * (1/2 + 1/sqrt(nu))
/// for a >= 0 and sqrt(1 + a^2/nu) * (1 + 1/sqrt(nu)) for a < 0.
double theorem1_bound(double nu, double a);

/// Sub-Gaussian tail bound e^{-a^2/4}.
double corollary_bound(double a);

/// Largest a for which the sub-Gaussian bound is asserted: sqrt(2 (nu + 1.22)).
double corollary_validity_limit(double nu);

/// Objective of the supremum search: g(nu) = C_nu (1/2 + 1/sqrt(nu)).
double k_objective(double nu);

/// Result of the supremum search for K = sup_nu g(nu).
struct KConstant {
  double value = 0.0;
  double argmax_nu = 0.0;
  double search_lo = 0.0;
  double search_hi = 0.0;
  std::size_t resolution = 0;
};

// Thrown when the grid maximum lands on a bracket edge, i.e. the bracket
// excludes the interior maximum. Carries the edge-constrained result.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, KConstant best)
      : std::runtime_error(what), best(best) {}
  KConstant best;
};

/// Maximize g over [search_lo, search_hi]: log-spaced scan with `resolution`
/// points (>= 1000), then golden-section refinement around the best cell.
KConstant k_constant(double search_lo, double search_hi, std::size_t resolution);

/// Positive root of a^4 + 2a^2(2 ln k - nu) + 8 nu ln k = 0 in a^2:
/// nu - 2 ln k + sqrt(nu^2 + 4 ln^2 k - 12 nu ln k). The discriminant is
/// assembled from nonnegative addends, so there is no cancellation.
double a2_threshold_exact(double nu, double k);

/// Sufficient condition implying the exact threshold: 2 nu - 4 ln k.
double a2_threshold_sufficient(double nu, double k);

/// log(1+x) - 2x/(x+2), nonnegative for x >= 0.
double log_ineq_gap(double x);

struct ThresholdPair {
  double nu = 0.0;
  double exact_a2 = 0.0;
  double sufficient_a2 = 0.0;
};

ThresholdPair make_threshold_pair(double nu, double k);

}  // namespace tmills

#endif  // TMILLS_BOUNDS_HPP
