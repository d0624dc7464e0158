#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "localtemp/canonical.hpp"
#include "localtemp/errors.hpp"
#include "localtemp/oracle.hpp"

using namespace localtemp;
using namespace localtemp::oracle;
using ising::IsingModel;

namespace {

Matrix random_symmetric(Eigen::Index dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(rng);
  }
  return m;
}

std::vector<double> sorted_values(const Matrix& h) {
  const auto es = eigh(h);
  return {es.values.data(), es.values.data() + es.values.size()};
}

void check_eigensystem(const Matrix& a, const Eigensystem& es, double tol) {
  const Eigen::SelfAdjointEigenSolver<Matrix> ref(a);
  CHECK((es.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < tol);
  CHECK((a * es.vectors - es.vectors * es.values.asDiagonal()).cwiseAbs().maxCoeff() < tol);
  const Matrix gram = es.vectors.transpose() * es.vectors;
  CHECK((gram - Matrix::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff() < tol);
  for (Eigen::Index i = 1; i < es.values.size(); ++i) CHECK(es.values(i - 1) <= es.values(i));
}

}  // namespace

TEST_CASE("eigensolvers against Eigen") {
  const Matrix small = random_symmetric(40, 7);
  check_eigensystem(small, eigh_jacobi(small), 1e-12);
  check_eigensystem(small, eigh_tridiagonal_ql(small), 1e-12);
  const Matrix large = random_symmetric(300, 11);
  check_eigensystem(large, eigh(large), 1e-11);
  Matrix diag = Matrix::Zero(3, 3);
  diag.diagonal() << 2.0, -1.0, 2.0;
  CHECK(eigh_jacobi(diag).values(0) == -1.0);
  CHECK_THROWS_AS(eigh(Matrix::Zero(2, 3)), Error);
}

TEST_CASE("hamiltonian spectra") {
  const auto m = IsingModel::from_kl(1.3, 0.4, 0.0);
  const Matrix h1 = build_hamiltonian(1, m, Boundary::Open);
  CHECK(h1(0, 0) == doctest::Approx(-1.3));
  CHECK(h1(1, 1) == doctest::Approx(1.3));
  CHECK(h1(0, 1) == 0.0);

  auto v = sorted_values(build_hamiltonian(2, m, Boundary::Open));
  const double bk = 1.3 * 0.4;
  CHECK(v[0] == doctest::Approx(-2.6));
  CHECK(v[1] == doctest::Approx(-bk));
  CHECK(v[2] == doctest::Approx(bk));
  CHECK(v[3] == doctest::Approx(2.6));

  const double l = 0.7;
  v = sorted_values(build_hamiltonian(2, IsingModel::from_kl(1.3, 0.0, l), Boundary::Open));
  const double edge = 1.3 * std::sqrt(4.0 + l * l);
  CHECK(v[0] == doctest::Approx(-edge));
  CHECK(std::abs(v[1]) < 1e-12);
  CHECK(std::abs(v[2]) < 1e-12);
  CHECK(v[3] == doctest::Approx(edge));

  const Matrix h = build_hamiltonian(6, IsingModel::from_kl(1.0, 0.3, 0.2), Boundary::Periodic);
  CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(h.trace()) < 1e-12);
  CHECK_THROWS_AS(build_hamiltonian(0, m, Boundary::Open), Error);
  try {
    build_hamiltonian(15, m, Boundary::Open);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Size);
  }
}

TEST_CASE("periodic ground energy approaches the chain value") {
  const auto m = IsingModel::from_kl(1.0, 0.3, 0.2);
  const auto sys = DenseThermalSystem::make(8, m, Boundary::Periodic, 1.0);
  CHECK(sys.eigenvalues()(0) / 8.0 == doctest::Approx(ising::ground_energy_per_site(m)).epsilon(1e-5));
  CHECK(sys.residual() < 1e-11);
}

TEST_CASE("thermal state") {
  const auto m = IsingModel::from_kl(0.8, 0.0, 0.0);
  const double beta = 1.7;
  const auto spin = DenseThermalSystem::make(1, m, Boundary::Open, beta);
  CHECK(spin.thermal().weights(0) == doctest::Approx(std::exp(beta * 0.8) / (2.0 * std::cosh(beta * 0.8))));
  CHECK(spin.thermal().log_z == doctest::Approx(std::log(2.0 * std::cosh(beta * 0.8))));

  const auto hot = DenseThermalSystem::make(4, IsingModel::from_kl(1.0, 0.5, 0.2), Boundary::Open, 0.0);
  for (Eigen::Index i = 0; i < 16; ++i) CHECK(hot.thermal().weights(i) == doctest::Approx(1.0 / 16.0));

  Vector e(3);
  e << -1.0, 0.5, 3.0;
  const auto cold = thermal_state(e, 1e4);
  CHECK(cold.weights(0) == doctest::Approx(1.0));
  CHECK(cold.log_z == doctest::Approx(1e4));
  CHECK(std::isfinite(cold.log_z));
  CHECK(thermal_state(e, 0.3).weights.sum() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(DenseThermalSystem::make(3, m, Boundary::Open, -1.0), Error);
}

TEST_CASE("product statistics without coupling") {
  const auto m = IsingModel::from_kl(1.0, 0.0, 0.0);
  auto pb = make_product_basis(6, 2, m, Boundary::Open);
  const auto sys = DenseThermalSystem::make(6, m, Boundary::Open, 0.9);
  attach(pb, sys);
  for (std::size_t a = 0; a < 64; ++a) {
    const auto st = product_statistics(pb, a);
    CHECK(st.eps_a == 0.0);
    CHECK(st.delta_sq_a == 0.0);
  }
  const Vector rho = rho_product_diag(sys, pb);
  for (Eigen::Index a = 0; a < 64; ++a) {
    CHECK(rho(a) == doctest::Approx(std::exp(-0.9 * pb.product_energies(a) - sys.thermal().log_z)).epsilon(1e-12));
  }
  CHECK(rho_product_offdiag_max(sys, pb).max_offdiag < 1e-14);
}

TEST_CASE("free-fermion groups at L = 0") {
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    CHECK(group_spectrum_deviation(n, IsingModel::from_kl(1.0, 0.6, 0.0)) < 1e-10);
  }
  for (auto [sites, n] : {std::pair{8, 2}, std::pair{8, 4}, std::pair{6, 3}}) {
    CAPTURE(sites);
    CAPTURE(n);
    const auto m = IsingModel::from_kl(1.0, 0.45, 0.0);
    const auto pb = make_product_basis(sites, n, m, Boundary::Open, true);
    double worst = 0.0;
    for (std::size_t a = 0; a < static_cast<std::size_t>(pb.product_energies.size()); ++a) {
      worst = std::max(worst, std::abs(product_statistics(pb, a).eps_a));
    }
    CHECK(worst <= 1e-10);
    CHECK(delta_sq_formula_error(pb, m, Boundary::Open) <= 1e-10);
  }
  const auto m = IsingModel::from_kl(1.0, 0.45, 0.0);
  const auto ring = make_product_basis(6, 2, m, Boundary::Periodic, true);
  CHECK(delta_sq_formula_error(ring, m, Boundary::Periodic) <= 1e-10);
  CHECK_THROWS_AS(make_product_basis(4, 2, IsingModel::from_kl(1.0, 0.3, 0.1), Boundary::Open, true), Error);
  CHECK_THROWS_AS(make_product_basis(6, 4, m, Boundary::Open), Error);
}

TEST_CASE("group spectrum away from L = 0") {
  CHECK(group_spectrum_deviation(2, IsingModel::from_kl(1.0, 0.0, 1.0)) ==
        doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
  for (double l : {0.2, 0.5, 3.0}) {
    CHECK(group_spectrum_deviation(2, IsingModel::from_kl(2.0, 0.0, l)) ==
          doctest::Approx(2.0 * (std::sqrt(4.0 + l * l) - 2.0)).epsilon(1e-10));
  }
  for (auto [k, l] : {std::pair{0.5, 0.0}, std::pair{2.0, 1.0}, std::pair{0.0, 0.3}}) {
    const auto nc = group_norm_check(4, IsingModel::from_kl(1.0, k, l));
    CHECK(nc.norm > 0.0);
    CHECK(nc.norm <= nc.bound);
  }
}

TEST_CASE("moment identities on a coupling grid") {
  for (double k : {-0.5, 0.3, 1.2}) {
    for (double l : {0.0, 0.4, -0.9}) {
      CAPTURE(k);
      CAPTURE(l);
      const auto m = IsingModel::from_kl(1.0, k, l);
      const auto sys = DenseThermalSystem::make(6, m, Boundary::Open, 1.0);
      auto pb = make_product_basis(6, 2, m, Boundary::Open);
      attach(pb, sys);
      const auto err = moment_identity_errors(sys, pb);
      CHECK(err.max_mean_error <= 1e-10);
      CHECK(err.max_variance_error <= 1e-10);
      double total = 0.0;
      for (const auto& [e, p] : w_a_distribution(sys, pb, 5)) total += p;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rho_product_diag(sys, pb).sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("distribution moments") {
  std::vector<std::pair<double, double>> two{{-1.0, 0.5}, {1.0, 0.5}};
  auto mo = distribution_moments(two);
  CHECK(mo.mean == doctest::Approx(0.0));
  CHECK(mo.variance == doctest::Approx(1.0));
  CHECK(mo.skewness == doctest::Approx(0.0));
  std::vector<std::pair<double, double>> skew{{0.0, 0.75}, {4.0, 0.25}};
  mo = distribution_moments(skew);
  CHECK(mo.mean == doctest::Approx(1.0));
  CHECK(mo.variance == doctest::Approx(3.0));
  CHECK(mo.skewness == doctest::Approx(2.0 / std::sqrt(3.0)));
  std::vector<std::pair<double, double>> point{{2.0, 1.0}};
  CHECK(distribution_moments(point).skewness == 0.0);
}

TEST_CASE("skewness falls with the number of groups") {
  const auto m = IsingModel::from_kl(1.0, 0.3, 0.0);
  double prev = std::numeric_limits<double>::infinity();
  for (int ng : {3, 4}) {
    const auto sys = DenseThermalSystem::make(2 * ng, m, Boundary::Open, 1.0);
    auto pb = make_product_basis(2 * ng, 2, m, Boundary::Open, true);
    attach(pb, sys);
    const double s = max_abs_skewness(sys, pb);
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("density matrix in the product basis") {
  const auto m = IsingModel::from_kl(1.0, 0.1, 0.0);
  const auto sys = DenseThermalSystem::make(8, m, Boundary::Open, 1.0);
  auto pb = make_product_basis(8, 2, m, Boundary::Open, true);
  attach(pb, sys);
  // Window [E_0 + E_bar / alpha, E_0 + alpha E_bar] around the exact mean,
  // alpha = 2. At alpha = 10 it reaches states with weights near 1e-8.
  const double e0 = sys.eigenvalues()(0);
  const double e_bar = sys.eigenvalues().dot(sys.thermal().weights) - e0;
  const auto w = canonical::energy_window(e_bar, e0, 1, canonical::AccuracyParams(2.0, 0.01), e0,
                                          sys.eigenvalues().maxCoeff());
  const auto off = rho_product_offdiag_max(sys, pb, std::pair{w.e_min, w.e_max});
  MESSAGE("offdiag ratio " << off.ratio);
  CHECK(off.ratio < 1.0);
  CHECK(off.max_offdiag > 0.0);

  const auto hot = DenseThermalSystem::make(8, m, Boundary::Open, 0.0);
  auto pb_hot = make_product_basis(8, 2, m, Boundary::Open, true);
  attach(pb_hot, hot);
  CHECK(rho_product_offdiag_max(hot, pb_hot).max_offdiag < 1e-14);

  const auto g = rho_gaussian_deviation(sys, pb);
  CHECK(g.compared > 0);
  CHECK(std::isfinite(g.max_abs_log_dev));
  CHECK(g.mean_abs_log_dev <= g.max_abs_log_dev);
}

TEST_CASE("linearity fit from oracle widths") {
  // Two groups of four sites at L = 0. With group 1 held fixed, the width is
  // affine in the mode weight S_0 of group 0 with slope -2 B^2 K^2 S_1.
  const double k = 0.35;
  const double beta = 1.0;
  const auto m = IsingModel::from_kl(1.0, k, 0.0);
  const auto pb = make_product_basis(8, 4, m, Boundary::Open, true);
  const int fixed = 5;
  const auto occ1 = ising::GroupOccupations::from_pattern(
      pb.group_patterns[static_cast<std::size_t>(fixed)], 4);
  std::vector<std::pair<double, double>> samples;
  for (std::size_t a = 0; a < static_cast<std::size_t>(pb.product_energies.size()); ++a) {
    if (pb.group_state(a, 1) != fixed) continue;
    const auto occ0 = ising::GroupOccupations::from_pattern(
        pb.group_patterns[static_cast<std::size_t>(pb.group_state(a, 0))], 4);
    const auto st = product_statistics(pb, a);
    samples.emplace_back(ising::mode_weight(occ0),
                         canonical::linearity_lhs(0.0, st.eps_a, 0.0, st.delta_sq_a, 0.0, beta));
  }
  REQUIRE(samples.size() == 16);
  const auto fit = canonical::linearity_residual(samples);
  const double slope = -0.5 * beta * k * k * ising::mode_weight(occ1);
  CHECK(std::abs(fit.c1 - slope) < 1e-8);
  CHECK(fit.max_residual < 1e-8);
}

TEST_CASE("harmonic dynamical matrix") {
  const auto model = harmonic::HarmonicModel::make(1.0, 1.0, 1.7);
  CHECK(harmonic_mode_check(1, model) < 1e-14);
  CHECK(harmonic_mode_check(3, model) < 1e-12);
  for (int n = 1; n <= 64; ++n) CHECK(harmonic_mode_check(n, model) <= 1e-10 * 1.7 * 1.7);
  CHECK_THROWS_AS(harmonic_mode_check(0, model), Error);
}
