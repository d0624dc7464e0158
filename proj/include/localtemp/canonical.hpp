#pragma once

// Model-independent machinery for deciding whether the global canonical
// state, written in the basis of isolated-group products, is again a
// product of local canonical states: diagonal elements, branch selection,
// the positivity and linearity criteria, and the energy window on which both
// must hold.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>

namespace localtemp::canonical {

struct PartitionSpec {
  int n = 1;         // subsystems per group
  int n_groups = 1;  // number of groups

  static PartitionSpec make(int n, int n_groups);
  int total() const { return n * n_groups; }
};

/// Energies of one product state |a> and the moments of the group interaction
/// in that state. e1 is +inf for spectra without an upper edge.
struct GroupStatistics {
  double e_a = 0.0;
  double eps_a = 0.0;
  double delta_sq_a = 0.0;
  double delta_tilde_sq = 0.0;
  double e0 = 0.0;
  double e1 = std::numeric_limits<double>::infinity();

  double mean() const { return e_a + eps_a; }
};

struct EnergyWindow {
  double e_min = 0.0;
  double e_max = 0.0;
};

/// Window half-width factor alpha (> 1) and linearity tolerance delta in (0, 1).
class AccuracyParams {
 public:
  AccuracyParams(double alpha, double delta);

  double alpha() const { return alpha_; }
  double delta() const { return delta_; }

 private:
  double alpha_;
  double delta_;
};

enum class Binding { None, ConditionConst, Linearity };
enum class Regime { LowerBranch, UpperBranch };

const char* to_string(Binding b) noexcept;

/// Group size reported when a bound is infinite or beyond int64.
inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

struct CriterionReport {
  std::int64_t n_cond_const = 1;
  std::int64_t n_linearity = 1;
  std::int64_t n_min = 1;
  Binding binding = Binding::None;
  double c1_estimate = 0.0;
  bool intensive = true;
  // Real-valued thresholds behind the integer sizes (n > bound).
  double bound_cond_const = 0.0;
  double bound_linearity = 0.0;
};

/// min_integer_above, mapping overflow and +inf to kUnbounded.
std::int64_t group_size_or_unbounded(double bound);

/// Combine the two per-criterion sizes. Intensive when |c1| <= delta.
CriterionReport assemble_report(double bound_cond_const, std::int64_t n_cond_const,
                                double bound_linearity, std::int64_t n_linearity,
                                double c1_estimate, const AccuracyParams& acc);

/// Limiting Gaussian density of total-energy eigenvalues in |a>.
double gaussian_weight(double energy, const GroupStatistics& stats);

/// ln <a|rho|a> from the Gaussian-smeared canonical weight with both erfc
/// terms. Underflow is returned as -inf.
double rho_diag(const GroupStatistics& stats, double beta, double log_z);

Regime classify_regime(const GroupStatistics& stats, double beta);

/// E_a + eps_a - E_0 > beta * Delta_a^2.
bool check_cond_const(const GroupStatistics& stats, double beta);

/// Lower edge alone: max(e_mu_min, e_bar_total/(alpha N_G) + e0_total/N_G).
double window_lower_edge(double e_bar_total, double e0_total, int n_groups,
                         const AccuracyParams& acc, double e_mu_min);

/// Upper edge alone: min(e_mu_max, alpha e_bar_total/N_G + e0_total/N_G).
double window_upper_edge(double e_bar_total, double e0_total, int n_groups,
                         const AccuracyParams& acc, double e_mu_max);

/// Throws InconsistentWindow when the clamped edges cross.
EnergyWindow energy_window(double e_bar_total, double e0_total, int n_groups,
                           const AccuracyParams& acc, double e_mu_min, double e_mu_max);

/// Left-hand side of the per-group linearity condition.
double linearity_lhs(double eps_prev, double eps, double delta_sq_prev, double delta_sq,
                     double delta_tilde_sq, double beta);

struct LinearFit {
  double c1 = 0.0;
  double c2 = 0.0;
  double max_residual = 0.0;
};

/// Least-squares fit lhs = c1 * e_mu + c2 over (e_mu, lhs) samples.
LinearFit linearity_residual(std::span<const std::pair<double, double>> samples);

struct EnergyInterval {
  double e_low = 0.0;
  double e_high = 0.0;
};

inline constexpr int kDefaultGridPoints = 512;

/// Uniform scan of the window. e_low is the smallest grid energy where the
/// positivity criterion holds, e_high the largest where linearity holds.
/// nullopt when no grid point satisfies both.
std::optional<EnergyInterval> valid_energy_interval(
    const std::function<bool(double)>& cond_const_at,
    const std::function<bool(double)>& linearity_at, const EnergyWindow& window,
    int grid_points = kDefaultGridPoints);

}  // namespace localtemp::canonical
