#pragma once

// Numerical kernels shared by the model modules: complementary error
// function, its leading asymptotic form, adaptive Simpson quadrature and the
// strict-inequality integer threshold used by every group-size criterion.

#include <cstdint>
#include <functional>

namespace localtemp::specfun {

/// Arguments with |x| below this are rejected by erfc_asymptotic.
inline constexpr double kAsymptoticSwitch = 2.0;

struct QuadratureSpec {
  double abs_tol = 1e-10;
  int max_subdivisions = 1 << 20;
};

void validate(const QuadratureSpec& spec);

/// erfc(x) = (2/sqrt(pi)) * integral_x^inf exp(-s^2) ds.
///
/// Maclaurin series of erf for |x| < 0.8, Lentz-evaluated Laplace continued
/// fraction above; negative arguments use erfc(-x) = 2 - erfc(x). Relative
/// error stays below 1e-14 for |x| <= 10.
double erfc_exact(double x);

/// exp(x^2) * erfc(x) for x >= 0.8, finite where erfc itself underflows.
double erfcx_large(double x);

/// ln erfc(x) without underflow for large positive x.
double log_erfc(double x);

/// Leading term of the large-|x| expansion: exp(-x^2)/(sqrt(pi) x), plus 2
/// on the negative branch. Throws Domain for |x| < kAsymptoticSwitch.
double erfc_asymptotic(double x);

/// Adaptive Simpson with Richardson acceptance. Throws BudgetExceeded once
/// max_subdivisions intervals have been split without meeting abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// x / (e^x - 1), continuous at 0.
double bose_integrand(double x);

/// Smallest n >= 1 with n > bound.
std::int64_t min_integer_above(double bound);

}  // namespace localtemp::specfun
