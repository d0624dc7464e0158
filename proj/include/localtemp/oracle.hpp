#pragma once

// Exact diagonalization of short transverse-field spin chains. Basis
// convention: site 0 is the lowest-order bit, spin up is bit 0 (so a set bit
// is an occupied Jordan-Wigner fermion).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "localtemp/harmonic.hpp"
#include "localtemp/ising.hpp"

namespace localtemp::oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr int kMaxSites = 14;
inline constexpr Eigen::Index kJacobiMaxDim = 256;
inline constexpr double kDegeneracyBin = 1e-9;
/// States with a smaller w_a variance are skipped when measuring skewness.
inline constexpr double kSkewnessMinVariance = 1e-8;

enum class Boundary { Open, Periodic };

const char* to_string(Boundary b) noexcept;

/// Eigenvalues ascending; eigenvectors in the matching columns.
struct Eigensystem {
  Vector values;
  Matrix vectors;
};

Eigensystem eigh_jacobi(const Matrix& a);
Eigensystem eigh_tridiagonal_ql(const Matrix& a);
/// Jacobi up to kJacobiMaxDim, Householder + implicit QL above.
Eigensystem eigh(const Matrix& a);

Matrix build_hamiltonian(int n_sites, const ising::IsingModel& model, Boundary boundary);

/// Bonds joining neighbouring groups of `group_size` sites (plus the wrap bond
/// when periodic and there are at least two groups).
Matrix build_interaction(int n_sites, int group_size, const ising::IsingModel& model,
                         Boundary boundary);

struct ThermalState {
  double log_z = 0.0;
  Vector weights;
};

class DenseThermalSystem {
 public:
  static DenseThermalSystem make(int n_sites, const ising::IsingModel& model, Boundary boundary,
                                 double beta);

  int n_sites() const { return n_sites_; }
  double beta() const { return beta_; }
  Boundary boundary() const { return boundary_; }
  const ising::IsingModel& model() const { return model_; }
  const Matrix& hamiltonian() const { return hamiltonian_; }
  const Vector& eigenvalues() const { return eigen_.values; }
  const Matrix& eigenvectors() const { return eigen_.vectors; }
  const ThermalState& thermal() const { return thermal_; }

  /// max over eigenpairs of ||H v - lambda v||.
  double residual() const;

 private:
  int n_sites_ = 0;
  double beta_ = 0.0;
  Boundary boundary_ = Boundary::Open;
  ising::IsingModel model_;
  Matrix hamiltonian_;
  Eigensystem eigen_;
  ThermalState thermal_;
};

/// Log-sum-exp weights exp(-beta E)/Z; beta = 0 is uniform.
ThermalState thermal_state(const Vector& eigenvalues, double beta);
ThermalState thermal_state(const DenseThermalSystem& sys);

struct ProductBasisData {
  int group_size = 0;
  int n_groups = 0;
  /// Eigenpairs of one isolated open group (identical for every group).
  Eigensystem group_eigs;
  /// Occupation pattern of each group eigenstate (Fock construction only).
  std::vector<std::uint64_t> group_patterns;
  Vector product_energies;
  /// Columns are the product states |a> in the site basis.
  Matrix basis;
  /// I in the product basis.
  Matrix interaction_matrix;
  /// <a|phi>, filled by attach().
  Matrix overlaps;

  bool has_patterns() const { return !group_patterns.empty(); }
  /// Group-state index of group mu in product state a.
  int group_state(std::size_t a, int mu) const;
};

/// Group eigenstates from dense diagonalization of one open group. When
/// `fock` is set (requires L = 0) they are built as free-fermion Fock states
/// instead, with energies from the mode formula.
ProductBasisData make_product_basis(int n_sites, int group_size, const ising::IsingModel& model,
                                    Boundary boundary, bool fock = false);

/// Fills pb.overlaps from the eigenvectors of sys.
void attach(ProductBasisData& pb, const DenseThermalSystem& sys);

struct ProductStatistics {
  double eps_a = 0.0;
  double delta_sq_a = 0.0;
};

ProductStatistics product_statistics(const ProductBasisData& pb, std::size_t a);

/// (E_phi, probability) with degenerate eigenvalues merged into 1e-9 bins.
std::vector<std::pair<double, double>> w_a_distribution(const DenseThermalSystem& sys,
                                                        const ProductBasisData& pb, std::size_t a);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;  // 0 when the variance is below kSkewnessMinVariance
};

Moments distribution_moments(const std::vector<std::pair<double, double>>& dist);

struct MomentIdentityErrors {
  double max_mean_error = 0.0;      // |mean(w_a) - <a|H|a>|
  double max_variance_error = 0.0;  // |var(w_a) - Delta_a^2|
  double max_abs_eps = 0.0;
};

MomentIdentityErrors moment_identity_errors(const DenseThermalSystem& sys,
                                            const ProductBasisData& pb);

double max_abs_skewness(const DenseThermalSystem& sys, const ProductBasisData& pb);

/// Largest |Delta_a^2 - sum over junctions of the mode-formula width|.
/// Needs Fock patterns; periodic chains need at least three groups.
double delta_sq_formula_error(const ProductBasisData& pb, const ising::IsingModel& model,
                              Boundary boundary);

Vector rho_product_diag(const DenseThermalSystem& sys, const ProductBasisData& pb);

struct OffDiagonalReport {
  double max_offdiag = 0.0;
  double min_diag = 0.0;
  double ratio = 0.0;
};

/// Off-diagonal magnitudes of rho in the product basis. The minimum diagonal
/// is taken over product states whose E_a lies in `window`, or all states.
OffDiagonalReport rho_product_offdiag_max(const DenseThermalSystem& sys, const ProductBasisData& pb,
                                          std::optional<std::pair<double, double>> window = {});

struct GaussianDeviation {
  double max_abs_log_dev = 0.0;
  double mean_abs_log_dev = 0.0;
  std::size_t compared = 0;
};

/// |ln rho_aa(exact) - ln rho_aa(Gaussian + erfc)| with E_0, E_1 the spectral
/// edges of H; states with Delta_a^2 below kSkewnessMinVariance are skipped.
GaussianDeviation rho_gaussian_deviation(const DenseThermalSystem& sys,
                                         const ProductBasisData& pb);

/// Largest gap between the dense open-group spectrum and the mode formula,
/// both sorted.
double group_spectrum_deviation(int n, const ising::IsingModel& model);

struct NormCheck {
  double norm = 0.0;
  double bound = 0.0;
};

/// Spectral norm of one open group against n B (1 + |K| + |L|).
NormCheck group_norm_check(int n, const ising::IsingModel& model);

/// Worst |eigenvalue - 4 omega0^2 sin^2(k a0 / 2)| of the n x n dynamical matrix.
double harmonic_mode_check(int n, const harmonic::HarmonicModel& model);

}  // namespace localtemp::oracle
