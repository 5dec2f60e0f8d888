#ifndef TMILLS_STUDENT_T_HPP
#define TMILLS_STUDENT_T_HPP

#include <optional>

#include "tmills/specfun.hpp"

namespace tmills {

// Relative error budgets the oracles advertise; sweeps use these when
// deciding whether a gap exceeds combined oracle error.
constexpr double kTailRelError = 1e-12;
constexpr double kPdfRelError = 1e-14;

/// Student's t-distribution with nu > 0 degrees of freedom.
/// Immutable; caches ln C_nu = ln Gamma((nu+1)/2) - ln Gamma(nu/2) - ln(nu pi)/2.
class TDist {
 public:
  explicit TDist(double nu);
  double nu() const { return nu_; }
  double ln_c_nu() const { return ln_c_nu_; }

 private:
  double nu_;
  double ln_c_nu_;
};

/// Normalizing constant C_nu = Gamma((nu+1)/2) / (sqrt(nu pi) Gamma(nu/2)).
double c_nu(double nu);

/// Density C_nu (1 + x^2/nu)^{-(nu+1)/2}, evaluated in the log domain.
double pdf(const TDist& d, double x);
double log_pdf(const TDist& d, double x);

/// Upper tail P[X >= a] via the regularized incomplete beta:
/// a >= 0 -> I_{nu/(nu+a^2)}(nu/2, 1/2) / 2; a < 0 by complement.
double tail(const TDist& d, double a);

/// ln P[X >= a]; finite where tail() underflows a double.
double log_tail(const TDist& d, double a);

/// Independent tail oracle: integrates the density numerically.
/// Uses the exact reduction to C_nu sqrt(nu) * integral of sin^{nu-1} on
/// [0, atan(sqrt(nu)/a)], with a flattening substitution for nu < 1, fed to
/// the adaptive Gauss-Kronrod engine.
QuadResult tail_quadrature(const TDist& d, double a, double rel_tol);

/// Mill's ratio tail(a)/pdf(a); falls back to exp(log_tail - log_pdf)
/// when both factors underflow.
double mills_ratio(const TDist& d, double a);

/// One evaluation row: everything the reports print for a single (nu, a).
struct EvalReport {
  double nu = 0.0;
  double a = 0.0;
  double pdf = 0.0;
  double tail_beta = 0.0;
  double tail_quad = 0.0;
  double tail_quad_err = 0.0;
  double mills = 0.0;
  double bound_theorem1 = 0.0;
  std::optional<double> bound_corollary;  // absent outside [0, validity limit]
  double slack = 0.0;                     // bound_theorem1 - mills
};

/// Full evaluation of one point (both tail oracles, ratio, bounds, slack).
EvalReport evaluate_point(double nu, double a, double rel_tol = 1e-12);

}  // namespace tmills

#endif  // TMILLS_STUDENT_T_HPP
