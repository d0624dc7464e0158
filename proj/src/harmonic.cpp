#include "localtemp/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "localtemp/errors.hpp"
#include "localtemp/specfun.hpp"

namespace localtemp::harmonic {

namespace {

void require_temperature(double t_over_theta) {
  if (!(t_over_theta > 0.0) || !std::isfinite(t_over_theta)) {
    raise(ErrorCode::InvalidArgument, "T/Theta must be positive and finite");
  }
}

double cond_const_from(double e, double t_over_theta, const AccuracyParams& acc) {
  if (e <= 0.0) return std::numeric_limits<double>::infinity();
  const double r = 4.0 * e / acc.alpha();
  return (1.0 / t_over_theta) * (acc.alpha() / (4.0 * e)) * (r + 1.0) * (r + 1.0);
}

double linearity_from(double e, double t_over_theta, const AccuracyParams& acc) {
  return 2.0 * acc.alpha() / acc.delta() * e / t_over_theta;
}

}  // namespace

HarmonicModel HarmonicModel::make(double theta, double a0, double omega0, double mass) {
  if (!(theta > 0.0)) raise(ErrorCode::InvalidArgument, "Debye temperature must be positive");
  if (!(a0 > 0.0)) raise(ErrorCode::InvalidArgument, "lattice constant must be positive");
  if (!(omega0 > 0.0)) raise(ErrorCode::InvalidArgument, "omega0 must be positive");
  if (!(mass > 0.0)) raise(ErrorCode::InvalidArgument, "mass must be positive");
  return HarmonicModel{theta, a0, omega0, mass};
}

double dispersion(double k, const HarmonicModel& model) {
  return 2.0 * model.omega0 * std::abs(std::sin(0.5 * k * model.a0));
}

double mean_energy_reduced(double t_over_theta) {
  require_temperature(t_over_theta);
  const double upper = std::min(1.0 / t_over_theta, kDebyeLimitCap);
  const double integral = specfun::integrate(specfun::bose_integrand, 0.0, upper);
  return t_over_theta * t_over_theta * integral;
}

ReducedEnergies reduced_energies(double t_over_theta) {
  return ReducedEnergies{mean_energy_reduced(t_over_theta), ground_energy_reduced()};
}

double delta_sq_debye(double e_mu, double e_mu_next, int n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "group size must be >= 1");
  const double nn = n;
  return 4.0 / (nn * nn) * e_mu * e_mu_next;
}

double delta_sq_exact(std::span<const int> occupations_mu, std::span<const int> occupations_next,
                      const HarmonicModel& model, int n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "group size must be >= 1");
  if (occupations_mu.size() != static_cast<std::size_t>(n) ||
      occupations_next.size() != static_cast<std::size_t>(n)) {
    raise(ErrorCode::LengthMismatch, "occupation lists must have length n");
  }
  auto weighted = [&](std::span<const int> occ) {
    double sum = 0.0;
    for (int l = 1; l <= n; ++l) {
      const int count = occ[l - 1];
      if (count < 0) raise(ErrorCode::InvalidArgument, "occupation numbers must be >= 0");
      const double k = std::numbers::pi * l / (model.a0 * (n + 1));
      const double c = std::cos(0.5 * k * model.a0);
      sum += c * c * dispersion(k, model) * (count + 0.5);
    }
    return sum;
  };
  const double pref = 2.0 / (n + 1);
  return pref * pref * weighted(occupations_mu) * weighted(occupations_next);
}

double cond_const_bound(double t_over_theta, const AccuracyParams& acc) {
  return cond_const_from(mean_energy_reduced(t_over_theta), t_over_theta, acc);
}

double linearity_bound(double t_over_theta, const AccuracyParams& acc) {
  return linearity_from(mean_energy_reduced(t_over_theta), t_over_theta, acc);
}

std::int64_t nmin_cond_const(double t_over_theta, const AccuracyParams& acc) {
  const double e = mean_energy_reduced(t_over_theta);
  if (e >= ground_energy_reduced()) return 1;
  return specfun::min_integer_above(cond_const_from(e, t_over_theta, acc));
}

std::int64_t nmin_linearity(double t_over_theta, const AccuracyParams& acc) {
  return specfun::min_integer_above(linearity_bound(t_over_theta, acc));
}

CriterionReport nmin(double t_over_theta, const AccuracyParams& acc) {
  const double e = mean_energy_reduced(t_over_theta);
  const double cc_bound = cond_const_from(e, t_over_theta, acc);
  const double lin_bound = linearity_from(e, t_over_theta, acc);
  const std::int64_t n_cc =
      e >= ground_energy_reduced() ? 1 : canonical::group_size_or_unbounded(cc_bound);
  const std::int64_t n_lin = canonical::group_size_or_unbounded(lin_bound);

  // Constant part of the derivative of the linearity lhs:
  // 2 beta E_0 / (n^2 N_G) = (Theta/T) / (2 n).
  const std::int64_t n = std::max(n_cc, n_lin);
  const double c1 =
      n == canonical::kUnbounded ? 0.0 : 1.0 / (2.0 * t_over_theta * static_cast<double>(n));
  return canonical::assemble_report(cc_bound, n_cc, lin_bound, n_lin, c1, acc);
}

double asymptotic_nmin(double t_over_theta, const AccuracyParams& acc) {
  require_temperature(t_over_theta);
  if (t_over_theta > 1.0) return 2.0 * acc.alpha() / acc.delta();
  const double inv = 1.0 / t_over_theta;
  return 3.0 * acc.alpha() / (2.0 * std::numbers::pi * std::numbers::pi) * inv * inv * inv;
}

double min_length(double t_over_theta, const AccuracyParams& acc, const HarmonicModel& model) {
  const CriterionReport r = nmin(t_over_theta, acc);
  if (r.n_min == canonical::kUnbounded) return std::numeric_limits<double>::infinity();
  return static_cast<double>(r.n_min) * model.a0;
}

bool group_cond_const_holds(double e_group, int n, double t_over_theta) {
  const double nn = n;
  const double beta = 1.0 / t_over_theta;
  return e_group - 0.25 * nn - 4.0 * beta / (nn * nn) * e_group * e_group > 0.0;
}

bool group_linearity_holds(double e_group, int n, double t_over_theta, double delta) {
  const double nn = n;
  const double beta = 1.0 / t_over_theta;
  return beta / (nn * nn) * (2.0 * e_group - 2.0 * 0.25 * nn) <= delta;
}

canonical::EnergyWindow group_window(int n, double t_over_theta, const AccuracyParams& acc) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "group size must be >= 1");
  const double e = mean_energy_reduced(t_over_theta);
  // One group of n sites: E_bar/N_G = n e, E_0/N_G = n/4.
  return canonical::energy_window(n * e, n * ground_energy_reduced(), 1, acc,
                                  n * ground_energy_reduced(),
                                  std::numeric_limits<double>::infinity());
}

}  // namespace localtemp::harmonic
