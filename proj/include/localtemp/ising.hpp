#pragma once

// Transverse-field XY/Ising chain H = sum_i -B s^z_i - (Jx/2) s^x_i s^x_{i+1}
// - (Jy/2) s^y_i s^y_{i+1}, in units hbar = k_B = 1. Temperatures enter as
// T / B; K = (Jx + Jy) / 2B and L = (Jx - Jy) / 2B select the coupling case.

#include <cstdint>
#include <vector>

#include "localtemp/canonical.hpp"

namespace localtemp::ising {

using canonical::AccuracyParams;
using canonical::CriterionReport;

enum class CouplingCase {
  ConstWidth,        // Jx = 0 or Jy = 0 (K^2 = L^2): constant interaction width
  FullyAnisotropic,  // Jx = -Jy (K = 0)
  Isotropic,         // Jx = Jy (L = 0)
  General,
};

const char* to_string(CouplingCase c) noexcept;

inline constexpr double kCaseTolerance = 1e-12;

struct IsingModel {
  double b_field = 1.0;
  double jx = 0.0;
  double jy = 0.0;
  double k_param = 0.0;
  double l_param = 0.0;
  CouplingCase coupling_case = CouplingCase::ConstWidth;

  static IsingModel from_couplings(double b_field, double jx, double jy);
  static IsingModel from_kl(double b_field, double k, double l);
};

/// Fermionic occupation numbers n_k of one open group, k = pi l / (n + 1).
struct GroupOccupations {
  std::vector<std::uint8_t> bits;

  static GroupOccupations make(const std::vector<int>& values);
  /// Occupations read from the low n bits of `pattern` (mode l = 1 is bit 0).
  static GroupOccupations from_pattern(std::uint64_t pattern, int n);
  int size() const { return static_cast<int>(bits.size()); }
};

/// Open-group mode momentum pi l / (n + 1), l = 1..n.
double group_mode(int l, int n);

/// Quasiparticle energy of the periodic chain, 2B sqrt((1 - K cos k)^2 + (L sin k)^2).
double dispersion_periodic(double k, const IsingModel& model);

/// cos(Theta_k) of the Bogoliubov rotation. Throws Degenerate at a gap closing.
double bogoliubov_angle(double k, const IsingModel& model);

/// Open-group mode energy 2B (1 - K cos k); negative values are kept.
double dispersion_group(double k, const IsingModel& model);

/// Thermal energy per site above the ground state; beta_b = B / T.
double mean_energy_per_site(double beta_b, const IsingModel& model);

double ground_energy_per_site(const IsingModel& model);

double group_energy(const GroupOccupations& occ, const IsingModel& model);

/// (2/(n+1)) sum_k sin^2(k) (n_k - 1/2), in [-1/2, 1/2].
double mode_weight(const GroupOccupations& occ);

/// Interaction width between two adjacent groups.
double delta_sq(const GroupOccupations& occ_mu, const GroupOccupations& occ_next,
                const IsingModel& model);

struct Range {
  double min = 0.0;
  double max = 0.0;
};

/// Extreme group energies for a group of n sites (|K| = 1 uses the |K| < 1 form).
Range e_mu_extremes(const IsingModel& model, int n);

Range delta_sq_extremes(const IsingModel& model);

// Real-valued thresholds (n > bound). t_over_b = T / B.
double cond_const_bound(double t_over_b, const AccuracyParams& acc, const IsingModel& model);
double linearity_bound(double t_over_b, const AccuracyParams& acc, const IsingModel& model);
double isotropic_weak_bound(double t_over_b, const IsingModel& model);

std::int64_t nmin_cond_const(double t_over_b, const AccuracyParams& acc, const IsingModel& model);
std::int64_t nmin_linearity(double t_over_b, const AccuracyParams& acc, const IsingModel& model);

/// Positivity criterion away from the ground state for L = 0, |K| < 1.
std::int64_t nmin_isotropic_weak(double t_over_b, const IsingModel& model);

/// Case dispatch over the supported couplings; General throws UnsupportedCase.
CriterionReport nmin(double t_over_b, const AccuracyParams& acc, const IsingModel& model);

}  // namespace localtemp::ising
