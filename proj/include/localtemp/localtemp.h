/* C interface to the local-temperature library. All functions return an
 * lt_status; on failure lt_last_error() describes the most recent error on
 * the calling thread. Handles are opaque and owned by the caller. */
#ifndef LOCALTEMP_H
#define LOCALTEMP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LOCALTEMP_BUILDING)
#    define LT_API __declspec(dllexport)
#  else
#    define LT_API __declspec(dllimport)
#  endif
#else
#  define LT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_INVALID_ARGUMENT = 1,
  LT_ERR_DOMAIN = 2,
  LT_ERR_BUDGET_EXCEEDED = 3,
  LT_ERR_OVERFLOW = 4,
  LT_ERR_INCONSISTENT_WINDOW = 5,
  LT_ERR_DEGENERATE_FIT = 6,
  LT_ERR_DEGENERATE = 7,
  LT_ERR_UNSUPPORTED_CASE = 8,
  LT_ERR_SIZE = 9,
  LT_ERR_LENGTH_MISMATCH = 10,
  LT_ERR_NULL_POINTER = 11,
  LT_ERR_INTERNAL = 12
} lt_status;

typedef enum lt_binding {
  LT_BINDING_NONE = 0,
  LT_BINDING_COND_CONST = 1,
  LT_BINDING_LINEARITY = 2
} lt_binding;

typedef enum lt_coupling_case {
  LT_CASE_CONST_WIDTH = 0,
  LT_CASE_FULLY_ANISOTROPIC = 1,
  LT_CASE_ISOTROPIC = 2,
  LT_CASE_GENERAL = 3
} lt_coupling_case;

typedef enum lt_boundary { LT_BOUNDARY_OPEN = 0, LT_BOUNDARY_PERIODIC = 1 } lt_boundary;

/* Group sizes at or above this value mean "no finite group size". */
#define LT_UNBOUNDED INT64_MAX

typedef struct lt_report {
  int64_t n_cond_const;
  int64_t n_linearity;
  int64_t n_min;
  lt_binding binding;
  double c1_estimate;
  int intensive;
  double bound_cond_const;
  double bound_linearity;
} lt_report;

typedef struct lt_harmonic_model lt_harmonic_model;
typedef struct lt_ising_model lt_ising_model;
typedef struct lt_oracle lt_oracle;

LT_API const char* lt_status_string(lt_status status);
LT_API const char* lt_last_error(void);
LT_API const char* lt_binding_string(lt_binding binding);
LT_API const char* lt_coupling_case_string(lt_coupling_case c);

/* Special functions */
LT_API lt_status lt_erfc(double x, double* out);
/* int_0^x_max t / (e^t - 1) dt */
LT_API lt_status lt_debye_integral(double x_max, double* out);

/* Harmonic chain. theta in kelvin, a0 in metres. */
LT_API lt_status lt_harmonic_create(double theta, double a0, double omega0, double mass,
                                    lt_harmonic_model** out);
LT_API void lt_harmonic_destroy(lt_harmonic_model* model);
LT_API lt_status lt_harmonic_mean_energy(double t_over_theta, double* out);
LT_API lt_status lt_harmonic_nmin(double t_over_theta, double alpha, double delta, lt_report* out);
LT_API lt_status lt_harmonic_asymptotic_nmin(double t_over_theta, double alpha, double delta,
                                             double* out);
/* l_min in metres; +inf when n_min is unbounded. */
LT_API lt_status lt_harmonic_min_length(const lt_harmonic_model* model, double t_over_theta,
                                        double alpha, double delta, double* out);
LT_API lt_status lt_harmonic_mode_check(const lt_harmonic_model* model, int n, double* out);

/* Transverse-field chain */
LT_API lt_status lt_ising_create_kl(double b_field, double k, double l, lt_ising_model** out);
LT_API lt_status lt_ising_create_couplings(double b_field, double jx, double jy,
                                           lt_ising_model** out);
LT_API void lt_ising_destroy(lt_ising_model* model);
LT_API lt_status lt_ising_parameters(const lt_ising_model* model, double* b_field, double* k,
                                     double* l, lt_coupling_case* coupling_case);
LT_API lt_status lt_ising_mean_energy(const lt_ising_model* model, double t_over_b, double* out);
LT_API lt_status lt_ising_ground_energy(const lt_ising_model* model, double* out);
LT_API lt_status lt_ising_nmin(const lt_ising_model* model, double t_over_b, double alpha,
                               double delta, lt_report* out);

/* Exact diagonalization */
LT_API lt_status lt_ising_spectrum(const lt_ising_model* model, int n_sites, lt_boundary boundary,
                                   double* out, size_t len);
LT_API lt_status lt_group_spectrum_deviation(const lt_ising_model* model, int n, double* out);
LT_API lt_status lt_group_norm_check(const lt_ising_model* model, int n, double* norm,
                                     double* bound);

/* Dense thermal system of n_sites split into groups of group_size. With
 * fock != 0 (L = 0 only) group states are free-fermion Fock states. */
LT_API lt_status lt_oracle_create(const lt_ising_model* model, int n_sites, int group_size,
                                  lt_boundary boundary, double beta, int fock, lt_oracle** out);
LT_API void lt_oracle_destroy(lt_oracle* oracle);
LT_API lt_status lt_oracle_dimension(const lt_oracle* oracle, size_t* out);
LT_API lt_status lt_oracle_log_z(const lt_oracle* oracle, double* out);
LT_API lt_status lt_oracle_residual(const lt_oracle* oracle, double* out);

typedef struct lt_product_moments {
  double e_a;
  double eps_a;
  double delta_sq_a;
  double mean;
  double variance;
  double skewness;
} lt_product_moments;

LT_API lt_status lt_oracle_product_moments(const lt_oracle* oracle, size_t a,
                                           lt_product_moments* out);

typedef struct lt_moment_errors {
  double max_mean_error;
  double max_variance_error;
  double max_abs_eps;
} lt_moment_errors;

LT_API lt_status lt_oracle_moment_errors(const lt_oracle* oracle, lt_moment_errors* out);
LT_API lt_status lt_oracle_max_skewness(const lt_oracle* oracle, double* out);
/* Needs fock group states. */
LT_API lt_status lt_oracle_delta_sq_formula_error(const lt_oracle* oracle, double* out);
LT_API lt_status lt_oracle_rho_diag(const lt_oracle* oracle, double* out, size_t len);

typedef struct lt_offdiag_report {
  double max_offdiag;
  double min_diag;
  double ratio;
} lt_offdiag_report;

LT_API lt_status lt_oracle_rho_offdiag(const lt_oracle* oracle, lt_offdiag_report* out);

typedef struct lt_gaussian_report {
  double max_abs_log_dev;
  double mean_abs_log_dev;
  size_t compared;
} lt_gaussian_report;

LT_API lt_status lt_oracle_rho_gaussian(const lt_oracle* oracle, lt_gaussian_report* out);

#ifdef __cplusplus
}
#endif

#endif /* LOCALTEMP_H */
