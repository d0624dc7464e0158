#include "localtemp/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "localtemp/errors.hpp"
#include "localtemp/specfun.hpp"

namespace localtemp::canonical {

PartitionSpec PartitionSpec::make(int n, int n_groups) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "group size n must be >= 1");
  if (n_groups < 1) raise(ErrorCode::InvalidArgument, "number of groups must be >= 1");
  return PartitionSpec{n, n_groups};
}

AccuracyParams::AccuracyParams(double alpha, double delta) : alpha_(alpha), delta_(delta) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    raise(ErrorCode::InvalidArgument, "alpha must be a finite value > 1");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    raise(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
  }
}

const char* to_string(Binding b) noexcept {
  switch (b) {
    case Binding::None: return "none";
    case Binding::ConditionConst: return "cond_const";
    case Binding::Linearity: return "linearity";
  }
  return "none";
}

std::int64_t group_size_or_unbounded(double bound) {
  try {
    return specfun::min_integer_above(bound);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Overflow) return kUnbounded;
    throw;
  }
}

CriterionReport assemble_report(double bound_cond_const, std::int64_t n_cond_const,
                                double bound_linearity, std::int64_t n_linearity,
                                double c1_estimate, const AccuracyParams& acc) {
  CriterionReport r;
  r.bound_cond_const = bound_cond_const;
  r.bound_linearity = bound_linearity;
  r.n_cond_const = n_cond_const;
  r.n_linearity = n_linearity;
  r.n_min = std::max(n_cond_const, n_linearity);
  if (r.n_min <= 1) {
    r.binding = Binding::None;
  } else {
    r.binding = n_cond_const >= n_linearity ? Binding::ConditionConst : Binding::Linearity;
  }
  r.c1_estimate = c1_estimate;
  r.intensive = std::abs(c1_estimate) <= acc.delta();
  return r;
}

double gaussian_weight(double energy, const GroupStatistics& stats) {
  if (!(stats.delta_sq_a > 0.0)) raise(ErrorCode::Domain, "gaussian_weight needs delta_sq_a > 0");
  const double sigma = std::sqrt(stats.delta_sq_a);
  const double z = (energy - stats.mean()) / sigma;
  return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

double rho_diag(const GroupStatistics& stats, double beta, double log_z) {
  if (!(beta > 0.0)) raise(ErrorCode::InvalidArgument, "rho_diag needs beta > 0");
  if (!(stats.delta_sq_a > 0.0)) raise(ErrorCode::Domain, "rho_diag needs delta_sq_a > 0");
  const double sigma = std::sqrt(stats.delta_sq_a);
  const double y = stats.mean();
  const double shift = beta * stats.delta_sq_a;
  const double x0 = (stats.e0 - y + shift) / (std::numbers::sqrt2 * sigma);

  double log_bracket;
  if (std::isinf(stats.e1)) {
    log_bracket = specfun::log_erfc(x0);
  } else {
    const double x1 = (stats.e1 - y + shift) / (std::numbers::sqrt2 * sigma);
    const double log0 = specfun::log_erfc(x0);
    const double log1 = specfun::log_erfc(x1);
    const double ratio = std::exp(log1 - log0);
    log_bracket = ratio < 1.0 ? log0 + std::log1p(-ratio)
                              : -std::numeric_limits<double>::infinity();
  }
  return -std::numbers::ln2 - log_z - beta * y + 0.5 * beta * shift + log_bracket;
}

Regime classify_regime(const GroupStatistics& stats, double beta) {
  const double s = stats.e0 - stats.mean() + beta * stats.delta_sq_a;
  return s < 0.0 ? Regime::LowerBranch : Regime::UpperBranch;
}

bool check_cond_const(const GroupStatistics& stats, double beta) {
  return stats.mean() - stats.e0 > beta * stats.delta_sq_a;
}

double window_lower_edge(double e_bar_total, double e0_total, int n_groups,
                         const AccuracyParams& acc, double e_mu_min) {
  if (n_groups < 1) raise(ErrorCode::InvalidArgument, "n_groups must be >= 1");
  const double ng = n_groups;
  return std::max(e_mu_min, e_bar_total / (acc.alpha() * ng) + e0_total / ng);
}

double window_upper_edge(double e_bar_total, double e0_total, int n_groups,
                         const AccuracyParams& acc, double e_mu_max) {
  if (n_groups < 1) raise(ErrorCode::InvalidArgument, "n_groups must be >= 1");
  const double ng = n_groups;
  return std::min(e_mu_max, acc.alpha() * e_bar_total / ng + e0_total / ng);
}

EnergyWindow energy_window(double e_bar_total, double e0_total, int n_groups,
                           const AccuracyParams& acc, double e_mu_min, double e_mu_max) {
  EnergyWindow w{window_lower_edge(e_bar_total, e0_total, n_groups, acc, e_mu_min),
                 window_upper_edge(e_bar_total, e0_total, n_groups, acc, e_mu_max)};
  if (w.e_min > w.e_max) {
    raise(ErrorCode::InconsistentWindow, "energy window is empty (e_min > e_max)");
  }
  return w;
}

double linearity_lhs(double eps_prev, double eps, double delta_sq_prev, double delta_sq,
                     double delta_tilde_sq, double beta) {
  return -0.5 * (eps_prev + eps) + 0.25 * beta * (delta_sq_prev + delta_sq) +
         beta / 6.0 * delta_tilde_sq;
}

LinearFit linearity_residual(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3) raise(ErrorCode::InvalidArgument, "linearity fit needs >= 3 samples");
  const double count = static_cast<double>(samples.size());
  double mean_e = 0.0;
  double mean_l = 0.0;
  for (const auto& [e, l] : samples) {
    mean_e += e;
    mean_l += l;
  }
  mean_e /= count;
  mean_l /= count;

  double see = 0.0;
  double sel = 0.0;
  for (const auto& [e, l] : samples) {
    see += (e - mean_e) * (e - mean_e);
    sel += (e - mean_e) * (l - mean_l);
  }
  const double spread = std::max(std::abs(samples.front().first), 1.0);
  if (!(see > 1e-24 * spread * spread * count)) {
    raise(ErrorCode::DegenerateFit, "all sample energies coincide");
  }

  LinearFit fit;
  fit.c1 = sel / see;
  fit.c2 = mean_l - fit.c1 * mean_e;
  for (const auto& [e, l] : samples) {
    fit.max_residual = std::max(fit.max_residual, std::abs(l - (fit.c1 * e + fit.c2)));
  }
  return fit;
}

std::optional<EnergyInterval> valid_energy_interval(
    const std::function<bool(double)>& cond_const_at,
    const std::function<bool(double)>& linearity_at, const EnergyWindow& window,
    int grid_points) {
  if (grid_points < 2) raise(ErrorCode::InvalidArgument, "grid_points must be >= 2");
  if (window.e_min > window.e_max) raise(ErrorCode::InconsistentWindow, "window edges crossed");

  const double step = (window.e_max - window.e_min) / (grid_points - 1);
  std::optional<double> low;
  std::optional<double> high;
  bool any_both = false;
  for (int i = 0; i < grid_points; ++i) {
    const double e = i + 1 == grid_points ? window.e_max : window.e_min + i * step;
    const bool cc = cond_const_at(e);
    const bool lin = linearity_at(e);
    if (cc && !low) low = e;
    if (lin) high = e;
    any_both = any_both || (cc && lin);
  }
  if (!any_both) return std::nullopt;
  return EnergyInterval{*low, *high};
}

}  // namespace localtemp::canonical
