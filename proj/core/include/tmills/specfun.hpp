#ifndef TMILLS_SPECFUN_HPP
#define TMILLS_SPECFUN_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace tmills {

// Thrown when an argument is outside a function's documented domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when a sweep or CLI configuration is malformed.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical integral together with an error bound estimate.
struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

// Thrown when an iterative scheme fails to reach its tolerance within the
// budget. Carries the best estimate so callers can still inspect it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations,
                   QuadResult best = {})
      : std::runtime_error(what), iterations(iterations), best(best) {}
  std::size_t iterations;
  QuadResult best;
};

/// ln Gamma(x) for x > 0. Lanczos approximation, near machine precision.
double ln_gamma(double x);

/// ln B(a,b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b).
double ln_beta(double a, double b);

/// Regularized incomplete beta I_x(a,b), continued fraction with the
/// symmetry switch at x > (a+1)/(a+b+2). Monotone non-decreasing in x.
double reg_inc_beta(double x, double a, double b);

/// ln I_x(a,b); stays finite where I_x underflows a double.
double reg_inc_beta_log(double x, double a, double b);

/// Unnormalized Gaussian tail: integral of e^{-x^2/2} over [a, inf).
/// Equals sqrt(pi/2) * erfc(a/sqrt(2)).
double erfc_scaled_tail(double a);

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval. Bisects the panel
/// with the largest error estimate until the summed estimate meets
/// rel_tol * |value| + 1e-300 or the evaluation budget runs out
/// (ConvergenceError carrying the best estimate).
QuadResult integrate_adaptive(const Integrand& f, double lo, double hi,
                              double rel_tol, std::size_t max_evaluations = 100000);

/// Integral of f over [a, inf) via the substitution x = a + t/(1-t),
/// t in [0,1), handed to integrate_adaptive. rel_tol must lie in (1e-14, 1e-2).
QuadResult integrate_to_inf(const Integrand& f, double a, double rel_tol);

}  // namespace tmills

#endif  // TMILLS_SPECFUN_HPP
