#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "tmills/specfun.hpp"
#include "tmills/verify.hpp"

using namespace tmills;

namespace {

// Reference values from a 40-digit arbitrary-precision evaluation.
constexpr double kLnGammaHalf = 0.57236494292470009;
constexpr double kSqrtHalfPi = 1.2533141373155003;   // sqrt(pi/2)
constexpr double kSqrtTwoPi = 2.5066282746310005;    // sqrt(2*pi)

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

}  // namespace

TEST_CASE("ln_gamma matches high-precision references") {
  CHECK(std::fabs(ln_gamma(1.0)) <= 1e-13);
  CHECK(std::fabs(ln_gamma(2.0)) <= 1e-13);
  CHECK(std::fabs(ln_gamma(5.0) - std::log(24.0)) <= 1e-13);
  CHECK(std::fabs(ln_gamma(0.5) - kLnGammaHalf) <= 1e-13);
  CHECK(std::fabs(ln_gamma(1e-4) - 9.2102826586339623) <= 1e-13);
  CHECK(std::fabs(ln_gamma(0.005) - 5.2954517999821279) <= 1e-13);
  CHECK(std::fabs(ln_gamma(0.05) - 2.9688792010517308) <= 1e-13);
  CHECK(std::fabs(ln_gamma(1.5) - -0.12078223763524522) <= 1e-13);
  CHECK(std::fabs(ln_gamma(10.3) - 13.482036786138357) <= 1e-13);
  CHECK(rel_err(ln_gamma(500.0), 2605.1158503617339) <= 1e-14);
  CHECK(rel_err(ln_gamma(5e6), 72124735.558456187) <= 1e-14);
}

TEST_CASE("ln_gamma recurrence ln_gamma(x+1) - ln_gamma(x) = ln x") {
  for (const double x : log_grid(0.01, 100.0, 300)) {
    CHECK(std::fabs(ln_gamma(x + 1.0) - ln_gamma(x) - std::log(x)) <= 1e-12);
  }
}

TEST_CASE("ln_gamma domain errors") {
  CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
  CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(ln_gamma(std::nan("")), DomainError);
  CHECK_THROWS_AS(ln_gamma(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("reg_inc_beta endpoints and known values") {
  CHECK(reg_inc_beta(0.0, 2.5, 0.5) == 0.0);
  CHECK(reg_inc_beta(1.0, 2.5, 0.5) == 1.0);
  CHECK(std::fabs(reg_inc_beta(0.3, 1.0, 1.0) - 0.3) <= 1e-14);
  CHECK(rel_err(reg_inc_beta(0.3, 2.0, 5.0), 0.579825) <= 1e-12);
  CHECK(rel_err(reg_inc_beta(0.7, 0.5, 3.0), 0.99039630640971193) <= 1e-12);
  // large first parameter, argument near the symmetry switch
  CHECK(rel_err(reg_inc_beta(0.999, 5000.0, 0.5), 0.0015615791602892908) <= 1e-11);
}

TEST_CASE("reg_inc_beta symmetry I_x(a,b) = 1 - I_{1-x}(b,a)") {
  const std::vector<double> xs = {0.01, 0.2, 0.5, 0.8, 0.99};
  const std::vector<double> as = {0.05, 0.5, 2.0, 30.0};
  const std::vector<double> bs = {0.5, 1.0, 7.0};
  for (const double x : xs)
    for (const double a : as)
      for (const double b : bs) {
        CHECK(std::fabs(reg_inc_beta(x, a, b) -
                        (1.0 - reg_inc_beta(1.0 - x, b, a))) <= 1e-12);
      }
}

TEST_CASE("reg_inc_beta monotone in x") {
  double prev = 0.0;
  for (const double x : lin_grid(0.0, 1.0, 101)) {
    const double v = reg_inc_beta(x, 0.7, 2.2);
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("reg_inc_beta reports non-convergence with the iteration count") {
  // x pinned at the symmetric point with huge parameters needs ~sqrt(a)
  // continued-fraction steps, far past the 500-iteration cap
  try {
    reg_inc_beta(0.5, 1e7, 1e7);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations == 500);
  }
}

TEST_CASE("reg_inc_beta domain errors") {
  CHECK_THROWS_AS(reg_inc_beta(-0.1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(1.1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(0.5, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(0.5, 1.0, -2.0), DomainError);
  CHECK_THROWS_AS(reg_inc_beta(std::nan(""), 1.0, 1.0), DomainError);
}

TEST_CASE("reg_inc_beta_log agrees with the linear evaluation") {
  for (const double x : {1e-6, 0.01, 0.3, 0.9, 0.999}) {
    for (const double a : {0.05, 2.0, 50.0}) {
      const double direct = reg_inc_beta(x, a, 0.5);
      CHECK(rel_err(std::exp(reg_inc_beta_log(x, a, 0.5)), direct) <= 1e-11);
    }
  }
  // stays finite where the linear value underflows
  const double lg = reg_inc_beta_log(0.0909, 500.0, 0.5);
  CHECK(std::isfinite(lg));
  CHECK(lg < -700.0);
}

TEST_CASE("erfc_scaled_tail values") {
  CHECK(rel_err(erfc_scaled_tail(0.0), kSqrtHalfPi) <= 1e-13);
  CHECK(rel_err(erfc_scaled_tail(-40.0), kSqrtTwoPi) <= 1e-12);
  CHECK(rel_err(erfc_scaled_tail(1.0), 0.39768974542335145) <= 1e-12);
  CHECK(rel_err(erfc_scaled_tail(2.5), 0.015565322681586183) <= 1e-12);
  CHECK(rel_err(erfc_scaled_tail(5.0), 7.1852893503980806e-7) <= 1e-12);
  CHECK(rel_err(erfc_scaled_tail(-1.0), 2.1089385292076491) <= 1e-12);
  CHECK_THROWS_AS(erfc_scaled_tail(std::nan("")), DomainError);
  CHECK_THROWS_AS(erfc_scaled_tail(std::numeric_limits<double>::infinity()),
                  DomainError);
}

TEST_CASE("erfc_scaled_tail cross-checked by quadrature") {
  const auto gauss = [](double x) { return std::exp(-0.5 * x * x); };
  for (const double a : {-2.0, 0.0, 0.7, 1.0, 3.0}) {
    const QuadResult q = integrate_to_inf(gauss, a, 1e-12);
    CHECK(std::fabs(q.value - erfc_scaled_tail(a)) <= q.abs_error + 1e-12);
  }
}

// The Gaussian tail facts in the unnormalized form used by the closed-form
// bound derivation hold only beyond a crossover point; the a<=0 variant holds
// nowhere on a <= 0 (the integral exceeds 1 there while the bound is <= 1).
// Asserted on the empirically valid sub-ranges; the sweeps publish the
// crossovers as data.
TEST_CASE("gaussian tail facts on their valid sub-ranges") {
  constexpr double kFact1Crossover = 1.5718576883770941;
  constexpr double kFact2Crossover = 0.30263084071157274;
  for (const double a : lin_grid(1.58, 40.0, 200)) {
    CHECK(erfc_scaled_tail(a) <= 0.5 * std::exp(-0.5 * a * a) * (1 + 1e-12));
  }
  for (const double a : lin_grid(0.31, 40.0, 200)) {
    CHECK(erfc_scaled_tail(a) <= std::exp(-0.5 * a * a) * (1 + 1e-12));
  }
  // bracket the crossovers
  CHECK(erfc_scaled_tail(kFact1Crossover - 1e-3) >
        0.5 * std::exp(-0.5 * std::pow(kFact1Crossover - 1e-3, 2)));
  CHECK(erfc_scaled_tail(kFact1Crossover + 1e-3) <
        0.5 * std::exp(-0.5 * std::pow(kFact1Crossover + 1e-3, 2)));
  CHECK(erfc_scaled_tail(kFact2Crossover - 1e-3) >
        std::exp(-0.5 * std::pow(kFact2Crossover - 1e-3, 2)));
  CHECK(erfc_scaled_tail(kFact2Crossover + 1e-3) <
        std::exp(-0.5 * std::pow(kFact2Crossover + 1e-3, 2)));
  // and the a <= 0 variant really fails at 0 already
  CHECK(erfc_scaled_tail(0.0) > 1.0);
}

TEST_CASE("integrate_to_inf known integrals") {
  const QuadResult gauss =
      integrate_to_inf([](double x) { return std::exp(-0.5 * x * x); }, 0.0, 1e-10);
  CHECK(std::fabs(gauss.value - kSqrtHalfPi) <= gauss.abs_error + 1e-12);
  CHECK(gauss.abs_error >= 0.0);
  CHECK(gauss.evaluations >= 15);

  const QuadResult cauchy = integrate_to_inf(
      [](double x) { return 1.0 / (std::numbers::pi * (1.0 + x * x)); }, 1.0,
      1e-11);
  CHECK(std::fabs(cauchy.value - 0.25) <= cauchy.abs_error + 1e-12);

  const QuadResult expo =
      integrate_to_inf([](double x) { return std::exp(-x); }, 0.0, 1e-10);
  CHECK(std::fabs(expo.value - 1.0) <= expo.abs_error + 1e-12);
}

TEST_CASE("integrate_to_inf rejects out-of-range tolerances") {
  const auto f = [](double) { return 0.0; };
  CHECK_THROWS_AS(integrate_to_inf(f, 0.0, 1e-15), DomainError);
  CHECK_THROWS_AS(integrate_to_inf(f, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(integrate_to_inf(f, std::nan(""), 1e-8), DomainError);
}

TEST_CASE("integrate_adaptive reports non-convergence with its best estimate") {
  // x^{-0.99} is integrable but starves a fixed-order rule near 0
  const auto spike = [](double x) { return std::pow(x, -0.99); };
  try {
    integrate_adaptive(spike, 0.0, 1.0, 1e-10);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best.evaluations > 1000);
    CHECK(e.best.value > 0.0);
    CHECK(e.best.value < 100.0);  // true value is 100, estimate from below
    CHECK(e.best.abs_error > 0.0);
  }
}
