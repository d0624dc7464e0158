#include "localtemp/ising.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "localtemp/errors.hpp"
#include "localtemp/specfun.hpp"

namespace localtemp::ising {

namespace {

constexpr int kTrapezoidPanels = 2048;  // on [0, pi]; 4096 over the full period
constexpr int kGradedLevels = 48;

void require_temperature(double t_over_b) {
  if (!(t_over_b > 0.0) || !std::isfinite(t_over_b)) {
    raise(ErrorCode::InvalidArgument, "T/B must be positive and finite");
  }
}

CouplingCase classify(double k, double l) {
  if (std::abs(k - l) <= kCaseTolerance || std::abs(k + l) <= kCaseTolerance) {
    return CouplingCase::ConstWidth;
  }
  if (std::abs(k) <= kCaseTolerance) return CouplingCase::FullyAnisotropic;
  if (std::abs(l) <= kCaseTolerance) return CouplingCase::Isotropic;
  return CouplingCase::General;
}

// Stationary points of omega_k inside (0, pi): cos k = K / (K^2 - L^2).
std::vector<double> interior_critical_points(const IsingModel& m) {
  std::vector<double> pts;
  const double denom = m.k_param * m.k_param - m.l_param * m.l_param;
  if (denom != 0.0) {
    const double c = m.k_param / denom;
    if (std::abs(c) < 1.0) pts.push_back(std::acos(c));
  }
  return pts;
}

double trapezoid(const std::function<double(double)>& f, int panels) {
  const double h = std::numbers::pi / panels;
  double sum = 0.5 * (f(0.0) + f(std::numbers::pi));
  for (int i = 1; i < panels; ++i) sum += f(i * h);
  return sum * h;
}

bool on_grid(double k, int panels) {
  const double pos = k / std::numbers::pi * panels;
  return std::abs(pos - std::round(pos)) < 1e-9;
}

double adaptive_pieces(const std::function<double(double)>& f, const std::vector<double>& cuts,
                       double abs_tol) {
  specfun::QuadratureSpec spec;
  spec.abs_tol = abs_tol / static_cast<double>(cuts.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += specfun::integrate(f, cuts[i], cuts[i + 1], spec);
  }
  return total;
}

// (1/2 pi) * integral over [-pi, pi] of an even function of k, i.e.
// (1/pi) * integral over [0, pi]. Uniform trapezoid first; adaptive Simpson
// split at the stationary points of omega_k when the trapezoid has not
// converged or a stationary point falls between grid nodes.
double brillouin_average(const std::function<double(double)>& f, const IsingModel& model,
                         double scale, const std::vector<double>& extra = {}) {
  std::vector<double> interior = interior_critical_points(model);
  for (double k : extra) {
    if (k > 0.0 && k < std::numbers::pi) interior.push_back(k);
  }
  std::sort(interior.begin(), interior.end());
  const bool grid_ok = std::all_of(interior.begin(), interior.end(),
                                   [](double k) { return on_grid(k, kTrapezoidPanels); });
  if (grid_ok) {
    const double fine = trapezoid(f, kTrapezoidPanels);
    const double coarse = trapezoid(f, kTrapezoidPanels / 2);
    if (std::abs(fine - coarse) <= 1e-12 * std::abs(fine) + 1e-300) {
      return fine / std::numbers::pi;
    }
  }
  // Cuts graded geometrically toward every stationary point and both ends, so
  // a thermal peak much narrower than the pieces is still sampled.
  std::vector<double> anchors{0.0};
  anchors.insert(anchors.end(), interior.begin(), interior.end());
  anchors.push_back(std::numbers::pi);
  std::vector<double> cuts = anchors;
  for (double k : anchors) {
    for (int j = 2; j <= kGradedLevels; ++j) {
      const double d = std::ldexp(std::numbers::pi, -j);
      if (k - d > 0.0) cuts.push_back(k - d);
      if (k + d < std::numbers::pi) cuts.push_back(k + d);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double value = adaptive_pieces(f, cuts, 1e-10 * scale);
  if (std::abs(value) < 1e-4 * scale) {
    value = adaptive_pieces(f, cuts, std::max(1e-10 * std::abs(value), 1e-300));
  }
  return value / std::numbers::pi;
}

// [E_mu]_min per site minus the ground energy per site, i.e.
// (1/pi) int B (sqrt((1 - K cos k)^2 + (L sin k)^2) - |1 - K cos k|) dk,
// evaluated without the cancellation of the difference. Zero at L = 0.
double ground_gap_per_site(const IsingModel& model) {
  if (model.l_param == 0.0) return 0.0;
  auto integrand = [&](double k) {
    const double a = std::abs(1.0 - model.k_param * std::cos(k));
    const double b = model.l_param * std::sin(k);
    const double root = std::hypot(a, b);
    return root > 0.0 ? model.b_field * b * b / (root + a) : 0.0;
  };
  std::vector<double> kinks;
  if (std::abs(model.k_param) > 1.0) kinks.push_back(std::acos(1.0 / model.k_param));
  return brillouin_average(integrand, model, model.b_field, kinks);
}

double per_site_gap(const IsingModel& model) {
  const Range e = e_mu_extremes(model, 1);
  return e.max - e.min;
}

}  // namespace

const char* to_string(CouplingCase c) noexcept {
  switch (c) {
    case CouplingCase::ConstWidth: return "const_width";
    case CouplingCase::FullyAnisotropic: return "fully_anisotropic";
    case CouplingCase::Isotropic: return "isotropic";
    case CouplingCase::General: return "general";
  }
  return "general";
}

IsingModel IsingModel::from_couplings(double b_field, double jx, double jy) {
  if (!(b_field > 0.0) || !std::isfinite(b_field)) {
    raise(ErrorCode::InvalidArgument, "field B must be positive");
  }
  if (!std::isfinite(jx) || !std::isfinite(jy)) {
    raise(ErrorCode::InvalidArgument, "couplings must be finite");
  }
  IsingModel m;
  m.b_field = b_field;
  m.jx = jx;
  m.jy = jy;
  m.k_param = (jx + jy) / (2.0 * b_field);
  m.l_param = (jx - jy) / (2.0 * b_field);
  m.coupling_case = classify(m.k_param, m.l_param);
  return m;
}

IsingModel IsingModel::from_kl(double b_field, double k, double l) {
  if (!(b_field > 0.0) || !std::isfinite(b_field)) {
    raise(ErrorCode::InvalidArgument, "field B must be positive");
  }
  if (!std::isfinite(k) || !std::isfinite(l)) {
    raise(ErrorCode::InvalidArgument, "K and L must be finite");
  }
  IsingModel m;
  m.b_field = b_field;
  m.k_param = k;
  m.l_param = l;
  m.jx = b_field * (k + l);
  m.jy = b_field * (k - l);
  m.coupling_case = classify(k, l);
  return m;
}

GroupOccupations GroupOccupations::make(const std::vector<int>& values) {
  GroupOccupations occ;
  occ.bits.reserve(values.size());
  for (int v : values) {
    if (v != 0 && v != 1) raise(ErrorCode::InvalidArgument, "fermionic occupations must be 0 or 1");
    occ.bits.push_back(static_cast<std::uint8_t>(v));
  }
  return occ;
}

GroupOccupations GroupOccupations::from_pattern(std::uint64_t pattern, int n) {
  if (n < 1 || n > 63) raise(ErrorCode::InvalidArgument, "group size must be in [1, 63]");
  GroupOccupations occ;
  occ.bits.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) occ.bits[l] = static_cast<std::uint8_t>((pattern >> l) & 1u);
  return occ;
}

double group_mode(int l, int n) { return std::numbers::pi * l / (n + 1); }

double dispersion_periodic(double k, const IsingModel& model) {
  const double a = 1.0 - model.k_param * std::cos(k);
  const double b = model.l_param * std::sin(k);
  return 2.0 * model.b_field * std::hypot(a, b);
}

double bogoliubov_angle(double k, const IsingModel& model) {
  const double a = 1.0 - model.k_param * std::cos(k);
  const double b = model.l_param * std::sin(k);
  const double norm = std::hypot(a, b);
  if (norm <= 1e-15) raise(ErrorCode::Degenerate, "Bogoliubov angle undefined at a gap closing");
  return a / norm;
}

double dispersion_group(double k, const IsingModel& model) {
  return 2.0 * model.b_field * (1.0 - model.k_param * std::cos(k));
}

double mean_energy_per_site(double beta_b, const IsingModel& model) {
  if (!(beta_b > 0.0)) raise(ErrorCode::InvalidArgument, "beta*B must be positive");
  const double beta = beta_b / model.b_field;
  auto integrand = [&](double k) {
    const double w = dispersion_periodic(k, model);
    const double x = beta * w;
    if (x > 700.0) return 0.0;
    return w / (std::exp(x) + 1.0);
  };
  return brillouin_average(integrand, model, model.b_field);
}

double ground_energy_per_site(const IsingModel& model) {
  auto integrand = [&](double k) { return 0.5 * dispersion_periodic(k, model); };
  return -brillouin_average(integrand, model, model.b_field);
}

double group_energy(const GroupOccupations& occ, const IsingModel& model) {
  const int n = occ.size();
  double sum = 0.0;
  for (int l = 1; l <= n; ++l) {
    sum += (1.0 - model.k_param * std::cos(group_mode(l, n))) * (occ.bits[l - 1] - 0.5);
  }
  return 2.0 * model.b_field * sum;
}

double mode_weight(const GroupOccupations& occ) {
  const int n = occ.size();
  double sum = 0.0;
  for (int l = 1; l <= n; ++l) {
    const double s = std::sin(group_mode(l, n));
    sum += s * s * (occ.bits[l - 1] - 0.5);
  }
  return 2.0 / (n + 1) * sum;
}

double delta_sq(const GroupOccupations& occ_mu, const GroupOccupations& occ_next,
                const IsingModel& model) {
  if (occ_mu.size() != occ_next.size()) {
    raise(ErrorCode::LengthMismatch, "adjacent groups must have the same size");
  }
  const double b2 = model.b_field * model.b_field;
  const double k2 = model.k_param * model.k_param;
  const double l2 = model.l_param * model.l_param;
  return b2 * (0.5 * k2 + 0.5 * l2) -
         2.0 * b2 * (k2 - l2) * mode_weight(occ_mu) * mode_weight(occ_next);
}

Range e_mu_extremes(const IsingModel& model, int n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "group size must be >= 1");
  const double k = std::abs(model.k_param);
  double per_site = model.b_field;
  if (k > 1.0) {
    per_site = model.b_field * 2.0 / std::numbers::pi * (std::sqrt(k * k - 1.0) + std::asin(1.0 / k));
  }
  return Range{-n * per_site, n * per_site};
}

Range delta_sq_extremes(const IsingModel& model) {
  const double b2 = model.b_field * model.b_field;
  const double k2 = model.k_param * model.k_param;
  const double l2 = model.l_param * model.l_param;
  return Range{b2 * std::min(k2, l2), b2 * std::max(k2, l2)};
}

double cond_const_bound(double t_over_b, const AccuracyParams& acc, const IsingModel& model) {
  require_temperature(t_over_b);
  const double beta = 1.0 / (t_over_b * model.b_field);
  const double e_bar = mean_energy_per_site(1.0 / t_over_b, model);
  // Only the lower window edge enters. e_min - e0 = max([E]_min - e0, e_bar / alpha),
  // formed without subtracting two nearly equal energies.
  const double denom = std::max(ground_gap_per_site(model), e_bar / acc.alpha());
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return beta * delta_sq_extremes(model).max / denom;
}

double linearity_bound(double t_over_b, const AccuracyParams& acc, const IsingModel& model) {
  require_temperature(t_over_b);
  const double beta = 1.0 / (t_over_b * model.b_field);
  const Range d = delta_sq_extremes(model);
  return beta / (2.0 * acc.delta()) * (d.max - d.min) / per_site_gap(model);
}

double isotropic_weak_bound(double t_over_b, const IsingModel& model) {
  require_temperature(t_over_b);
  const double k = std::abs(model.k_param);
  if (!(k < 1.0)) raise(ErrorCode::Domain, "weak isotropic criterion needs |K| < 1");
  // 2 B beta = 2 / (T/B)
  return 2.0 / t_over_b * model.k_param * model.k_param / (1.0 - k);
}

std::int64_t nmin_cond_const(double t_over_b, const AccuracyParams& acc, const IsingModel& model) {
  return specfun::min_integer_above(cond_const_bound(t_over_b, acc, model));
}

std::int64_t nmin_linearity(double t_over_b, const AccuracyParams& acc, const IsingModel& model) {
  return specfun::min_integer_above(linearity_bound(t_over_b, acc, model));
}

std::int64_t nmin_isotropic_weak(double t_over_b, const IsingModel& model) {
  if (model.coupling_case != CouplingCase::Isotropic) {
    raise(ErrorCode::Domain, "weak isotropic criterion needs L = 0");
  }
  return specfun::min_integer_above(isotropic_weak_bound(t_over_b, model));
}

CriterionReport nmin(double t_over_b, const AccuracyParams& acc, const IsingModel& model) {
  require_temperature(t_over_b);
  double cc_bound = 0.0;
  double lin_bound = 0.0;
  switch (model.coupling_case) {
    case CouplingCase::ConstWidth:
      cc_bound = cond_const_bound(t_over_b, acc, model);
      break;
    case CouplingCase::FullyAnisotropic:
      cc_bound = cond_const_bound(t_over_b, acc, model);
      lin_bound = linearity_bound(t_over_b, acc, model);
      break;
    case CouplingCase::Isotropic:
      cc_bound = std::abs(model.k_param) < 1.0 ? isotropic_weak_bound(t_over_b, model)
                                               : cond_const_bound(t_over_b, acc, model);
      lin_bound = linearity_bound(t_over_b, acc, model);
      break;
    case CouplingCase::General:
      raise(ErrorCode::UnsupportedCase,
            "no group-size criterion for K and L both nonzero with K != +-L");
  }
  const std::int64_t n_cc = canonical::group_size_or_unbounded(cc_bound);
  const std::int64_t n_lin = canonical::group_size_or_unbounded(lin_bound);
  const std::int64_t n = std::max(n_cc, n_lin);

  // Ratio of the width spread to the energy spread of a group of n_min sites.
  const Range d = delta_sq_extremes(model);
  const double beta = 1.0 / (t_over_b * model.b_field);
  const double c1 = n == canonical::kUnbounded
                        ? 0.0
                        : beta * (d.max - d.min) /
                              (2.0 * static_cast<double>(n) * per_site_gap(model));
  return canonical::assemble_report(cc_bound, n_cc, lin_bound, n_lin, c1, acc);
}

}  // namespace localtemp::ising
