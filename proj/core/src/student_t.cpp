#include "tmills/student_t.hpp"

#include <cmath>
#include <numbers>

#include "tmills/bounds.hpp"

namespace tmills {

TDist::TDist(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu <= 0.0) {
    throw DomainError("TDist: nu must be a positive finite real");
  }
  ln_c_nu_ = ln_gamma(0.5 * (nu + 1.0)) - ln_gamma(0.5 * nu) -
             0.5 * std::log(nu * std::numbers::pi);
}

double c_nu(double nu) { return std::exp(TDist(nu).ln_c_nu()); }

double log_pdf(const TDist& d, double x) {
  if (!std::isfinite(x)) {
    throw DomainError("pdf: x must be finite");
  }
  return d.ln_c_nu() - 0.5 * (d.nu() + 1.0) * std::log1p(x * x / d.nu());
}

double pdf(const TDist& d, double x) { return std::exp(log_pdf(d, x)); }

double tail(const TDist& d, double a) {
  if (!std::isfinite(a)) {
    throw DomainError("tail: a must be finite");
  }
  if (a < 0.0) return 1.0 - tail(d, -a);
  const double nu = d.nu();
  const double x = nu / (nu + a * a);
  return 0.5 * reg_inc_beta(x, 0.5 * nu, 0.5);
}

double log_tail(const TDist& d, double a) {
  if (!std::isfinite(a)) {
    throw DomainError("tail: a must be finite");
  }
  if (a < 0.0) {
    // upper tail at |a| is at most 1/2, so the complement is well conditioned
    return std::log1p(-std::exp(log_tail(d, -a)));
  }
  const double nu = d.nu();
  const double x = nu / (nu + a * a);
  return std::log(0.5) + reg_inc_beta_log(x, 0.5 * nu, 0.5);
}

namespace {

double sinc(double x) {
  return x < 1e-4 ? 1.0 - x * x / 6.0 * (1.0 - x * x / 20.0)
                  : std::sin(x) / x;
}

}  // namespace

QuadResult tail_quadrature(const TDist& d, double a, double rel_tol) {
  if (!std::isfinite(a)) {
    throw DomainError("tail_quadrature: a must be finite");
  }
  const double nu = d.nu();
  if (a < 0.0) {
    const auto density = [&d](double x) { return pdf(d, x); };
    const QuadResult left = integrate_adaptive(density, a, 0.0, rel_tol);
    const QuadResult upper = tail_quadrature(d, 0.0, rel_tol);
    return {left.value + upper.value, left.abs_error + upper.abs_error,
            left.evaluations + upper.evaluations};
  }

  // x = sqrt(nu) tan(theta), phi = pi/2 - theta turns the tail integral into
  // C_nu sqrt(nu) * integral of sin^{nu-1}(phi) over [0, atan(sqrt(nu)/a)].
  const double phi_max = std::atan2(std::sqrt(nu), a);
  QuadResult q;
  if (nu < 1.0) {
    // sin^{nu-1} has an integrable singularity at phi = 0; w = phi^nu
    // flattens it exactly: the integrand becomes (sin phi / phi)^{nu-1} / nu.
    const double w_max = std::exp(nu * std::log(phi_max));
    const double inv_nu = 1.0 / nu;
    const auto flattened = [nu, inv_nu](double w) {
      const double phi = std::exp(std::log(w) * inv_nu);
      return inv_nu * std::pow(sinc(phi), nu - 1.0);
    };
    q = integrate_adaptive(flattened, 0.0, w_max, rel_tol);
  } else {
    const auto powered = [nu](double phi) {
      if (phi <= 0.0) return nu > 1.0 ? 0.0 : 1.0;
      return std::exp((nu - 1.0) * std::log(std::sin(phi)));
    };
    q = integrate_adaptive(powered, 0.0, phi_max, rel_tol);
  }
  const double scale = std::exp(d.ln_c_nu() + 0.5 * std::log(nu));
  QuadResult out;
  out.value = scale * q.value;
  out.abs_error = scale * q.abs_error + std::fabs(out.value) * 1e-14;
  out.evaluations = q.evaluations;
  return out;
}

double mills_ratio(const TDist& d, double a) {
  const double t = tail(d, a);
  const double p = pdf(d, a);
  if (t > 0.0 && p > 0.0) return t / p;
  // deep tail: both factors underflow, evaluate the ratio in the log domain
  return std::exp(log_tail(d, a) - log_pdf(d, a));
}

EvalReport evaluate_point(double nu, double a, double rel_tol) {
  const TDist d(nu);
  EvalReport r;
  r.nu = nu;
  r.a = a;
  r.pdf = pdf(d, a);
  r.tail_beta = tail(d, a);
  const QuadResult q = tail_quadrature(d, a, rel_tol);
  r.tail_quad = q.value;
  r.tail_quad_err = q.abs_error;
  r.mills = mills_ratio(d, a);
  r.bound_theorem1 = theorem1_bound(nu, a);
  if (a >= 0.0 && a <= corollary_validity_limit(nu)) {
    r.bound_corollary = corollary_bound(a);
  }
  r.slack = r.bound_theorem1 - r.mills;
  return r;
}

}  // namespace tmills
