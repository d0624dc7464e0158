#include "localtemp/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "localtemp/errors.hpp"

namespace localtemp::specfun {

namespace {

constexpr double kSeriesCutoff = 0.8;
constexpr double kTwoOverSqrtPi = std::numbers::inv_sqrtpi * 2.0;
// Panels are split at least this many times before the error test applies.
constexpr int kMinDepth = 3;

// erf(x) by its Maclaurin series; used only for |x| < kSeriesCutoff where
// the alternating terms stay below 1 in magnitude.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// 1 / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))) by modified Lentz.
double laplace_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0)) raise(ErrorCode::InvalidArgument, "quadrature abs_tol must be positive");
  if (spec.max_subdivisions < 1) raise(ErrorCode::InvalidArgument, "quadrature max_subdivisions must be >= 1");
}

double erfcx_large(double x) {
  if (!(x >= kSeriesCutoff)) raise(ErrorCode::Domain, "erfcx_large needs x >= 0.8");
  return std::numbers::inv_sqrtpi * laplace_fraction(x);
}

double erfc_exact(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc_exact(-x);
  if (x < kSeriesCutoff) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;  // below the smallest subnormal
  return std::exp(-x * x) * erfcx_large(x);
}

double log_erfc(double x) {
  if (x < kSeriesCutoff) return std::log(erfc_exact(x));
  return -x * x + std::log(erfcx_large(x));
}

double erfc_asymptotic(double x) {
  if (!(std::abs(x) >= kAsymptoticSwitch)) {
    raise(ErrorCode::Domain, "erfc_asymptotic requires |x| >= 2");
  }
  const double tail = std::exp(-x * x) * std::numbers::inv_sqrtpi / x;
  return x > 0.0 ? tail : 2.0 + tail;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  validate(spec);
  if (!(a <= b)) raise(ErrorCode::InvalidArgument, "integrate needs a <= b");
  if (a == b) return 0.0;

  struct Panel {
    double a, b, fa, fm, fb, whole, tol;
    int depth;
  };
  auto simpson = [](double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  };

  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  std::vector<Panel> stack;
  stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), spec.abs_tol, 0});

  double total = 0.0;
  int splits = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double diff = left + right - p.whole;
    const bool too_narrow = (lm <= p.a) || (rm >= p.b);
    if ((p.depth >= kMinDepth && std::abs(diff) <= 15.0 * p.tol) || too_narrow) {
      total += left + right + diff / 15.0;
      continue;
    }
    if (++splits > spec.max_subdivisions) {
      raise(ErrorCode::BudgetExceeded, "adaptive quadrature exceeded its subdivision budget");
    }
    // Right first so the left half is processed next; summation order is
    // then left-to-right.
    stack.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
    stack.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
  }
  return total;
}

double bose_integrand(double x) {
  if (x < 0.0) raise(ErrorCode::Domain, "bose_integrand needs x >= 0");
  if (x < 1e-4) return 1.0 - 0.5 * x + x * x / 12.0;
  if (x > 745.0) return 0.0;
  return x / std::expm1(x);
}

std::int64_t min_integer_above(double bound) {
  if (std::isnan(bound)) raise(ErrorCode::InvalidArgument, "threshold bound is NaN");
  if (bound < 1.0) return 1;
  // 2^63 is exactly representable; anything at or above it cannot be + 1'd.
  constexpr double limit = 9223372036854775808.0;
  if (!(bound < limit - 1024.0)) {
    raise(ErrorCode::Overflow, "group-size bound exceeds the integer range");
  }
  return static_cast<std::int64_t>(std::floor(bound)) + 1;
}

}  // namespace localtemp::specfun
