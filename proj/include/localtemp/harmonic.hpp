#pragma once

// Harmonic chain in the Debye regime. Temperatures enter as the ratio
// T / Theta and energies in units of k_B * Theta; hbar = k_B = 1.

#include <cstdint>
#include <span>

#include "localtemp/canonical.hpp"

namespace localtemp::harmonic {

using canonical::AccuracyParams;
using canonical::CriterionReport;

struct HarmonicModel {
  double theta = 1.0;   // Debye temperature, kelvin
  double a0 = 1.0;      // lattice constant, metres
  double omega0 = 1.0;  // bare frequency
  double mass = 1.0;    // only used by the oracle's dynamical matrix

  static HarmonicModel make(double theta, double a0, double omega0 = 1.0, double mass = 1.0);

  double sound_velocity() const { return omega0 * a0; }
};

struct ReducedEnergies {
  double e_bar = 0.0;  // mean thermal energy per site / (k_B Theta)
  double e0 = 0.25;    // ground energy per site / (k_B Theta)
};

/// Upper quadrature limit on Theta/T; the Bose tail beyond it is below 1e-300.
inline constexpr double kDebyeLimitCap = 700.0;

/// omega_k = 2 omega0 |sin(k a0 / 2)|.
double dispersion(double k, const HarmonicModel& model);

double mean_energy_reduced(double t_over_theta);

constexpr double ground_energy_reduced() { return 0.25; }

ReducedEnergies reduced_energies(double t_over_theta);

/// Debye-form interaction width (4/n^2) E_mu E_{mu+1}.
double delta_sq_debye(double e_mu, double e_mu_next, int n);

/// Mode-sum interaction width between two adjacent groups of n oscillators
/// with the given occupation numbers.
double delta_sq_exact(std::span<const int> occupations_mu, std::span<const int> occupations_next,
                      const HarmonicModel& model, int n);

/// Real-valued positivity bound (Theta/T)(alpha/4e)(4e/alpha + 1)^2, any T.
double cond_const_bound(double t_over_theta, const AccuracyParams& acc);

/// Real-valued linearity bound (2 alpha / delta)(Theta/T) e_bar.
double linearity_bound(double t_over_theta, const AccuracyParams& acc);

/// Positivity-criterion group size; 1 once the mean energy reaches the
/// ground energy (e_bar >= 1/4), where the criterion is superseded.
std::int64_t nmin_cond_const(double t_over_theta, const AccuracyParams& acc);

std::int64_t nmin_linearity(double t_over_theta, const AccuracyParams& acc);

CriterionReport nmin(double t_over_theta, const AccuracyParams& acc);

/// Piecewise estimate: 2 alpha/delta for T > Theta, (3 alpha / 2 pi^2)(Theta/T)^3
/// otherwise (the branches do not meet at T = Theta).
double asymptotic_nmin(double t_over_theta, const AccuracyParams& acc);

/// l_min = n_min * a0 in metres; +inf if n_min is unbounded.
double min_length(double t_over_theta, const AccuracyParams& acc, const HarmonicModel& model);

// Group-level predicates used to locate the valid energy interval. e_group is
// the energy of one group of n sites in units of k_B Theta, with equal
// energies in the neighbouring groups.
bool group_cond_const_holds(double e_group, int n, double t_over_theta);
bool group_linearity_holds(double e_group, int n, double t_over_theta, double delta);
canonical::EnergyWindow group_window(int n, double t_over_theta, const AccuracyParams& acc);

}  // namespace localtemp::harmonic
