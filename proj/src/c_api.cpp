#include "localtemp/localtemp.h"

#include <exception>
#include <new>
#include <string>

#include "localtemp/canonical.hpp"
#include "localtemp/errors.hpp"
#include "localtemp/harmonic.hpp"
#include "localtemp/ising.hpp"
#include "localtemp/oracle.hpp"
#include "localtemp/specfun.hpp"

using namespace localtemp;

struct lt_harmonic_model {
  harmonic::HarmonicModel model;
};

struct lt_ising_model {
  ising::IsingModel model;
};

struct lt_oracle {
  oracle::DenseThermalSystem sys;
  oracle::ProductBasisData pb;
  ising::IsingModel model;
  oracle::Boundary boundary;
};

namespace {

thread_local std::string last_error;

lt_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return LT_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return LT_ERR_DOMAIN;
    case ErrorCode::BudgetExceeded: return LT_ERR_BUDGET_EXCEEDED;
    case ErrorCode::Overflow: return LT_ERR_OVERFLOW;
    case ErrorCode::InconsistentWindow: return LT_ERR_INCONSISTENT_WINDOW;
    case ErrorCode::DegenerateFit: return LT_ERR_DEGENERATE_FIT;
    case ErrorCode::Degenerate: return LT_ERR_DEGENERATE;
    case ErrorCode::UnsupportedCase: return LT_ERR_UNSUPPORTED_CASE;
    case ErrorCode::Size: return LT_ERR_SIZE;
    case ErrorCode::LengthMismatch: return LT_ERR_LENGTH_MISMATCH;
  }
  return LT_ERR_INTERNAL;
}

template <typename F>
lt_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return LT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LT_ERR_INTERNAL;
  }
}

lt_binding to_c(canonical::Binding b) {
  switch (b) {
    case canonical::Binding::ConditionConst: return LT_BINDING_COND_CONST;
    case canonical::Binding::Linearity: return LT_BINDING_LINEARITY;
    case canonical::Binding::None: break;
  }
  return LT_BINDING_NONE;
}

lt_coupling_case to_c(ising::CouplingCase c) {
  switch (c) {
    case ising::CouplingCase::ConstWidth: return LT_CASE_CONST_WIDTH;
    case ising::CouplingCase::FullyAnisotropic: return LT_CASE_FULLY_ANISOTROPIC;
    case ising::CouplingCase::Isotropic: return LT_CASE_ISOTROPIC;
    case ising::CouplingCase::General: break;
  }
  return LT_CASE_GENERAL;
}

oracle::Boundary to_cpp(lt_boundary b) {
  if (b == LT_BOUNDARY_OPEN) return oracle::Boundary::Open;
  if (b == LT_BOUNDARY_PERIODIC) return oracle::Boundary::Periodic;
  throw Error(ErrorCode::InvalidArgument, "unknown boundary");
}

void fill(lt_report* out, const canonical::CriterionReport& r) {
  out->n_cond_const = r.n_cond_const;
  out->n_linearity = r.n_linearity;
  out->n_min = r.n_min;
  out->binding = to_c(r.binding);
  out->c1_estimate = r.c1_estimate;
  out->intensive = r.intensive ? 1 : 0;
  out->bound_cond_const = r.bound_cond_const;
  out->bound_linearity = r.bound_linearity;
}

lt_status null_pointer() {
  last_error = "null pointer argument";
  return LT_ERR_NULL_POINTER;
}

}  // namespace

extern "C" {

const char* lt_status_string(lt_status status) {
  switch (status) {
    case LT_OK: return "ok";
    case LT_ERR_INVALID_ARGUMENT: return to_string(ErrorCode::InvalidArgument);
    case LT_ERR_DOMAIN: return to_string(ErrorCode::Domain);
    case LT_ERR_BUDGET_EXCEEDED: return to_string(ErrorCode::BudgetExceeded);
    case LT_ERR_OVERFLOW: return to_string(ErrorCode::Overflow);
    case LT_ERR_INCONSISTENT_WINDOW: return to_string(ErrorCode::InconsistentWindow);
    case LT_ERR_DEGENERATE_FIT: return to_string(ErrorCode::DegenerateFit);
    case LT_ERR_DEGENERATE: return to_string(ErrorCode::Degenerate);
    case LT_ERR_UNSUPPORTED_CASE: return to_string(ErrorCode::UnsupportedCase);
    case LT_ERR_SIZE: return to_string(ErrorCode::Size);
    case LT_ERR_LENGTH_MISMATCH: return to_string(ErrorCode::LengthMismatch);
    case LT_ERR_NULL_POINTER: return "null_pointer";
    case LT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lt_last_error(void) { return last_error.c_str(); }

const char* lt_binding_string(lt_binding binding) {
  switch (binding) {
    case LT_BINDING_COND_CONST: return to_string(canonical::Binding::ConditionConst);
    case LT_BINDING_LINEARITY: return to_string(canonical::Binding::Linearity);
    case LT_BINDING_NONE: break;
  }
  return to_string(canonical::Binding::None);
}

const char* lt_coupling_case_string(lt_coupling_case c) {
  switch (c) {
    case LT_CASE_CONST_WIDTH: return to_string(ising::CouplingCase::ConstWidth);
    case LT_CASE_FULLY_ANISOTROPIC: return to_string(ising::CouplingCase::FullyAnisotropic);
    case LT_CASE_ISOTROPIC: return to_string(ising::CouplingCase::Isotropic);
    case LT_CASE_GENERAL: break;
  }
  return to_string(ising::CouplingCase::General);
}

lt_status lt_erfc(double x, double* out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = specfun::erfc_exact(x); });
}

lt_status lt_debye_integral(double x_max, double* out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = specfun::integrate(specfun::bose_integrand, 0.0, x_max); });
}

lt_status lt_harmonic_create(double theta, double a0, double omega0, double mass,
                             lt_harmonic_model** out) {
  if (!out) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    *out = new lt_harmonic_model{harmonic::HarmonicModel::make(theta, a0, omega0, mass)};
  });
}

void lt_harmonic_destroy(lt_harmonic_model* model) { delete model; }

lt_status lt_harmonic_mean_energy(double t_over_theta, double* out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = harmonic::mean_energy_reduced(t_over_theta); });
}

lt_status lt_harmonic_nmin(double t_over_theta, double alpha, double delta, lt_report* out) {
  if (!out) return null_pointer();
  return guarded([&] {
    fill(out, harmonic::nmin(t_over_theta, canonical::AccuracyParams(alpha, delta)));
  });
}

lt_status lt_harmonic_asymptotic_nmin(double t_over_theta, double alpha, double delta,
                                      double* out) {
  if (!out) return null_pointer();
  return guarded([&] {
    *out = harmonic::asymptotic_nmin(t_over_theta, canonical::AccuracyParams(alpha, delta));
  });
}

lt_status lt_harmonic_min_length(const lt_harmonic_model* model, double t_over_theta, double alpha,
                                 double delta, double* out) {
  if (!model || !out) return null_pointer();
  return guarded([&] {
    *out = harmonic::min_length(t_over_theta, canonical::AccuracyParams(alpha, delta),
                                model->model);
  });
}

lt_status lt_harmonic_mode_check(const lt_harmonic_model* model, int n, double* out) {
  if (!model || !out) return null_pointer();
  return guarded([&] { *out = oracle::harmonic_mode_check(n, model->model); });
}

lt_status lt_ising_create_kl(double b_field, double k, double l, lt_ising_model** out) {
  if (!out) return null_pointer();
  *out = nullptr;
  return guarded([&] { *out = new lt_ising_model{ising::IsingModel::from_kl(b_field, k, l)}; });
}

lt_status lt_ising_create_couplings(double b_field, double jx, double jy, lt_ising_model** out) {
  if (!out) return null_pointer();
  *out = nullptr;
  return guarded(
      [&] { *out = new lt_ising_model{ising::IsingModel::from_couplings(b_field, jx, jy)}; });
}

void lt_ising_destroy(lt_ising_model* model) { delete model; }

lt_status lt_ising_parameters(const lt_ising_model* model, double* b_field, double* k, double* l,
                              lt_coupling_case* coupling_case) {
  if (!model) return null_pointer();
  if (b_field) *b_field = model->model.b_field;
  if (k) *k = model->model.k_param;
  if (l) *l = model->model.l_param;
  if (coupling_case) *coupling_case = to_c(model->model.coupling_case);
  return LT_OK;
}

lt_status lt_ising_mean_energy(const lt_ising_model* model, double t_over_b, double* out) {
  if (!model || !out) return null_pointer();
  return guarded([&] {
    if (!(t_over_b > 0.0)) throw Error(ErrorCode::InvalidArgument, "T/B must be positive");
    *out = ising::mean_energy_per_site(1.0 / t_over_b, model->model);
  });
}

lt_status lt_ising_ground_energy(const lt_ising_model* model, double* out) {
  if (!model || !out) return null_pointer();
  return guarded([&] { *out = ising::ground_energy_per_site(model->model); });
}

lt_status lt_ising_nmin(const lt_ising_model* model, double t_over_b, double alpha, double delta,
                        lt_report* out) {
  if (!model || !out) return null_pointer();
  return guarded([&] {
    fill(out, ising::nmin(t_over_b, canonical::AccuracyParams(alpha, delta), model->model));
  });
}

lt_status lt_ising_spectrum(const lt_ising_model* model, int n_sites, lt_boundary boundary,
                            double* out, size_t len) {
  if (!model || !out) return null_pointer();
  return guarded([&] {
    if (n_sites < 1 || n_sites > oracle::kMaxSites) {
      throw Error(ErrorCode::Size, "n_sites out of range");
    }
    if (len != (std::size_t{1} << n_sites)) {
      throw Error(ErrorCode::LengthMismatch, "output length must be 2^n_sites");
    }
    const oracle::Vector e =
        oracle::eigh(oracle::build_hamiltonian(n_sites, model->model, to_cpp(boundary))).values;
    for (std::size_t i = 0; i < len; ++i) out[i] = e(static_cast<Eigen::Index>(i));
  });
}

lt_status lt_group_spectrum_deviation(const lt_ising_model* model, int n, double* out) {
  if (!model || !out) return null_pointer();
  return guarded([&] { *out = oracle::group_spectrum_deviation(n, model->model); });
}

lt_status lt_group_norm_check(const lt_ising_model* model, int n, double* norm, double* bound) {
  if (!model || !norm || !bound) return null_pointer();
  return guarded([&] {
    const oracle::NormCheck c = oracle::group_norm_check(n, model->model);
    *norm = c.norm;
    *bound = c.bound;
  });
}

lt_status lt_oracle_create(const lt_ising_model* model, int n_sites, int group_size,
                           lt_boundary boundary, double beta, int fock, lt_oracle** out) {
  if (!model || !out) return null_pointer();
  *out = nullptr;
  return guarded([&] {
    const oracle::Boundary b = to_cpp(boundary);
    auto sys = oracle::DenseThermalSystem::make(n_sites, model->model, b, beta);
    auto pb = oracle::make_product_basis(n_sites, group_size, model->model, b, fock != 0);
    oracle::attach(pb, sys);
    *out = new lt_oracle{std::move(sys), std::move(pb), model->model, b};
  });
}

void lt_oracle_destroy(lt_oracle* oracle) { delete oracle; }

lt_status lt_oracle_dimension(const lt_oracle* o, size_t* out) {
  if (!o || !out) return null_pointer();
  *out = static_cast<size_t>(o->sys.eigenvalues().size());
  return LT_OK;
}

lt_status lt_oracle_log_z(const lt_oracle* o, double* out) {
  if (!o || !out) return null_pointer();
  *out = o->sys.thermal().log_z;
  return LT_OK;
}

lt_status lt_oracle_residual(const lt_oracle* o, double* out) {
  if (!o || !out) return null_pointer();
  return guarded([&] { *out = o->sys.residual(); });
}

lt_status lt_oracle_product_moments(const lt_oracle* o, size_t a, lt_product_moments* out) {
  if (!o || !out) return null_pointer();
  return guarded([&] {
    const oracle::ProductStatistics st = oracle::product_statistics(o->pb, a);
    const oracle::Moments m =
        oracle::distribution_moments(oracle::w_a_distribution(o->sys, o->pb, a));
    out->e_a = o->pb.product_energies(static_cast<Eigen::Index>(a));
    out->eps_a = st.eps_a;
    out->delta_sq_a = st.delta_sq_a;
    out->mean = m.mean;
    out->variance = m.variance;
    out->skewness = m.skewness;
  });
}

lt_status lt_oracle_moment_errors(const lt_oracle* o, lt_moment_errors* out) {
  if (!o || !out) return null_pointer();
  return guarded([&] {
    const oracle::MomentIdentityErrors e = oracle::moment_identity_errors(o->sys, o->pb);
    out->max_mean_error = e.max_mean_error;
    out->max_variance_error = e.max_variance_error;
    out->max_abs_eps = e.max_abs_eps;
  });
}

lt_status lt_oracle_max_skewness(const lt_oracle* o, double* out) {
  if (!o || !out) return null_pointer();
  return guarded([&] { *out = oracle::max_abs_skewness(o->sys, o->pb); });
}

lt_status lt_oracle_delta_sq_formula_error(const lt_oracle* o, double* out) {
  if (!o || !out) return null_pointer();
  return guarded([&] { *out = oracle::delta_sq_formula_error(o->pb, o->model, o->boundary); });
}

lt_status lt_oracle_rho_diag(const lt_oracle* o, double* out, size_t len) {
  if (!o || !out) return null_pointer();
  return guarded([&] {
    const oracle::Vector rho = oracle::rho_product_diag(o->sys, o->pb);
    if (len != static_cast<size_t>(rho.size())) {
      throw Error(ErrorCode::LengthMismatch, "output length must equal the dimension");
    }
    for (size_t i = 0; i < len; ++i) out[i] = rho(static_cast<Eigen::Index>(i));
  });
}

lt_status lt_oracle_rho_offdiag(const lt_oracle* o, lt_offdiag_report* out) {
  if (!o || !out) return null_pointer();
  return guarded([&] {
    const oracle::OffDiagonalReport r = oracle::rho_product_offdiag_max(o->sys, o->pb);
    out->max_offdiag = r.max_offdiag;
    out->min_diag = r.min_diag;
    out->ratio = r.ratio;
  });
}

lt_status lt_oracle_rho_gaussian(const lt_oracle* o, lt_gaussian_report* out) {
  if (!o || !out) return null_pointer();
  return guarded([&] {
    const oracle::GaussianDeviation d = oracle::rho_gaussian_deviation(o->sys, o->pb);
    out->max_abs_log_dev = d.max_abs_log_dev;
    out->mean_abs_log_dev = d.mean_abs_log_dev;
    out->compared = d.compared;
  });
}

}  // extern "C"
