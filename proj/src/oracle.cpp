#include "localtemp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "localtemp/canonical.hpp"
#include "localtemp/errors.hpp"

namespace localtemp::oracle {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_square_symmetric(const Matrix& a) {
  if (a.rows() != a.cols()) raise(ErrorCode::InvalidArgument, "matrix must be square");
  if (a.rows() == 0) raise(ErrorCode::InvalidArgument, "matrix must be non-empty");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (((a - a.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * scale) {
    raise(ErrorCode::InvalidArgument, "matrix must be symmetric");
  }
}

Eigensystem sorted(Vector values, Matrix vectors) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return values(x) < values(y); });
  Eigensystem out;
  out.values.resize(values.size());
  out.vectors.resize(vectors.rows(), vectors.cols());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    out.values(i) = values(order[static_cast<std::size_t>(i)]);
    out.vectors.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

// Householder reduction to tridiagonal form. On return z holds the
// accumulated orthogonal transformation, d the diagonal and e the
// subdiagonal in e(1..n-1).
void tridiagonalize(RowMatrix& z, Vector& d, Vector& e) {
  const Eigen::Index n = z.rows();
  d.setZero(n);
  e.setZero(n);
  for (Eigen::Index i = n - 1; i > 0; --i) {
    const Eigen::Index l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (Eigen::Index k = 0; k <= l; ++k) scale += std::abs(z(i, k));
      if (scale == 0.0) {
        e(i) = z(i, l);
      } else {
        for (Eigen::Index k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e(i) = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0.0;
        for (Eigen::Index j = 0; j <= l; ++j) {
          z(j, i) = z(i, j) / h;
          g = 0.0;
          for (Eigen::Index k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (Eigen::Index k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
          e(j) = g / h;
          f += e(j) * z(i, j);
        }
        const double hh = f / (h + h);
        for (Eigen::Index j = 0; j <= l; ++j) {
          f = z(i, j);
          e(j) = g = e(j) - hh * f;
          for (Eigen::Index k = 0; k <= j; ++k) z(j, k) -= f * e(k) + g * z(i, k);
        }
      }
    } else {
      e(i) = z(i, l);
    }
    d(i) = h;
  }
  d(0) = 0.0;
  e(0) = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i) != 0.0) {
      for (Eigen::Index j = 0; j < i; ++j) {
        double g = 0.0;
        for (Eigen::Index k = 0; k < i; ++k) g += z(i, k) * z(k, j);
        for (Eigen::Index k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
      }
    }
    d(i) = z(i, i);
    z(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
  }
}

// Implicit QL with Wilkinson-style shifts on the tridiagonal (d, e).
void tridiagonal_ql(Vector& d, Vector& e, Matrix& z) {
  const Eigen::Index n = d.size();
  for (Eigen::Index i = 1; i < n; ++i) e(i - 1) = e(i);
  e(n - 1) = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (Eigen::Index l = 0; l < n; ++l) {
    int iter = 0;
    Eigen::Index m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d(m)) + std::abs(d(m + 1));
        if (std::abs(e(m)) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) raise(ErrorCode::BudgetExceeded, "QL iteration did not converge");
        double g = (d(l + 1) - d(l)) / (2.0 * e(l));
        double r = std::hypot(g, 1.0);
        g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        Eigen::Index i = m - 1;
        for (; i >= l; --i) {
          const double f = s * e(i);
          const double b = c * e(i);
          e(i + 1) = r = std::hypot(f, g);
          if (r == 0.0) {
            d(i + 1) -= p;
            e(m) = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d(i + 1) - p;
          r = (d(i) - g) * s + 2.0 * c * b;
          p = s * r;
          d(i + 1) = g + p;
          g = c * r - b;
          for (Eigen::Index k = 0; k < n; ++k) {
            const double zf = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * zf;
            z(k, i) = c * z(k, i) - s * zf;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d(l) -= p;
        e(l) = g;
        e(m) = 0.0;
      }
    } while (m != l);
  }
}

void add_bond(Matrix& h, int n_sites, int i, int j, const ising::IsingModel& model) {
  const std::uint64_t dim = std::uint64_t{1} << n_sites;
  const std::uint64_t mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
  for (std::uint64_t s = 0; s < dim; ++s) {
    const bool bi = (s >> i) & 1u;
    const bool bj = (s >> j) & 1u;
    // <s'|sx sx|s> = 1; <s'|sy sy|s> = -1 for equal bits, +1 otherwise.
    const double yy = bi == bj ? -1.0 : 1.0;
    const double amp = -0.5 * model.jx - 0.5 * model.jy * yy;
    h(static_cast<Eigen::Index>(s ^ mask), static_cast<Eigen::Index>(s)) += amp;
  }
}

void require_sites(int n_sites) {
  if (n_sites < 1) raise(ErrorCode::InvalidArgument, "n_sites must be >= 1");
  if (n_sites > kMaxSites) {
    raise(ErrorCode::Size, "n_sites " + std::to_string(n_sites) + " exceeds the dense limit of " +
                               std::to_string(kMaxSites));
  }
}

void require_partition(int n_sites, int group_size) {
  require_sites(n_sites);
  if (group_size < 1 || n_sites % group_size != 0) {
    raise(ErrorCode::InvalidArgument, "group size must divide n_sites");
  }
}

// Jordan-Wigner creation operator on site j of an n-site block.
Matrix creation_operator(int n, int j) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix c = Matrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    if ((s >> j) & 1) continue;
    int below = 0;
    for (int i = 0; i < j; ++i) below += static_cast<int>((s >> i) & 1);
    c(s | (Eigen::Index{1} << j), s) = below % 2 == 0 ? 1.0 : -1.0;
  }
  return c;
}

void require_attached(const ProductBasisData& pb) {
  if (pb.overlaps.size() == 0) raise(ErrorCode::InvalidArgument, "product basis not attached");
}

void require_index(const ProductBasisData& pb, std::size_t a) {
  if (a >= static_cast<std::size_t>(pb.product_energies.size())) {
    raise(ErrorCode::InvalidArgument, "product state index out of range");
  }
}

}  // namespace

const char* to_string(Boundary b) noexcept {
  return b == Boundary::Periodic ? "periodic" : "open";
}

Eigensystem eigh_jacobi(const Matrix& input) {
  require_square_symmetric(input);
  Matrix a = input;
  const Eigen::Index n = a.rows();
  Matrix v = Matrix::Identity(n, n);
  const double total = a.squaredNorm();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) off += a(p, q) * a(p, q);
    }
    if (off <= 1e-32 * total || off == 0.0) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  return sorted(a.diagonal(), std::move(v));
}

Eigensystem eigh_tridiagonal_ql(const Matrix& input) {
  require_square_symmetric(input);
  RowMatrix z = input;
  Vector d;
  Vector e;
  tridiagonalize(z, d, e);
  Matrix zc = z;
  tridiagonal_ql(d, e, zc);
  return sorted(std::move(d), std::move(zc));
}

Eigensystem eigh(const Matrix& a) {
  return a.rows() <= kJacobiMaxDim ? eigh_jacobi(a) : eigh_tridiagonal_ql(a);
}

Matrix build_hamiltonian(int n_sites, const ising::IsingModel& model, Boundary boundary) {
  require_sites(n_sites);
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Matrix h = Matrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 0; i < n_sites; ++i) diag += ((s >> i) & 1) ? model.b_field : -model.b_field;
    h(s, s) = diag;
  }
  for (int i = 0; i + 1 < n_sites; ++i) add_bond(h, n_sites, i, i + 1, model);
  if (boundary == Boundary::Periodic && n_sites >= 2) add_bond(h, n_sites, n_sites - 1, 0, model);
  return h;
}

Matrix build_interaction(int n_sites, int group_size, const ising::IsingModel& model,
                         Boundary boundary) {
  require_partition(n_sites, group_size);
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  Matrix v = Matrix::Zero(dim, dim);
  for (int i = group_size - 1; i + 1 < n_sites; i += group_size) {
    add_bond(v, n_sites, i, i + 1, model);
  }
  if (boundary == Boundary::Periodic && n_sites >= 2) add_bond(v, n_sites, n_sites - 1, 0, model);
  return v;
}

ThermalState thermal_state(const Vector& eigenvalues, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    raise(ErrorCode::InvalidArgument, "beta must be finite and >= 0");
  }
  if (eigenvalues.size() == 0) raise(ErrorCode::InvalidArgument, "empty spectrum");
  const Vector logits = -beta * eigenvalues;
  const double top = logits.maxCoeff();
  const double log_z = top + std::log((logits.array() - top).exp().sum());
  ThermalState st;
  st.log_z = log_z;
  st.weights = (logits.array() - log_z).exp().matrix();
  return st;
}

ThermalState thermal_state(const DenseThermalSystem& sys) {
  return thermal_state(sys.eigenvalues(), sys.beta());
}

DenseThermalSystem DenseThermalSystem::make(int n_sites, const ising::IsingModel& model,
                                            Boundary boundary, double beta) {
  require_sites(n_sites);
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    raise(ErrorCode::InvalidArgument, "beta must be finite and >= 0");
  }
  DenseThermalSystem sys;
  sys.n_sites_ = n_sites;
  sys.beta_ = beta;
  sys.boundary_ = boundary;
  sys.model_ = model;
  sys.hamiltonian_ = build_hamiltonian(n_sites, model, boundary);
  sys.eigen_ = eigh(sys.hamiltonian_);
  sys.thermal_ = thermal_state(sys.eigen_.values, beta);
  return sys;
}

double DenseThermalSystem::residual() const {
  const Matrix r = hamiltonian_ * eigen_.vectors - eigen_.vectors * eigen_.values.asDiagonal();
  return r.colwise().norm().maxCoeff();
}

int ProductBasisData::group_state(std::size_t a, int mu) const {
  return static_cast<int>((a >> (mu * group_size)) & ((std::size_t{1} << group_size) - 1));
}

ProductBasisData make_product_basis(int n_sites, int group_size, const ising::IsingModel& model,
                                    Boundary boundary, bool fock) {
  require_partition(n_sites, group_size);
  ProductBasisData pb;
  pb.group_size = group_size;
  pb.n_groups = n_sites / group_size;
  const Eigen::Index gdim = Eigen::Index{1} << group_size;

  if (fock) {
    if (std::abs(model.l_param) > ising::kCaseTolerance) {
      raise(ErrorCode::Domain, "Fock group states need L = 0");
    }
    std::vector<Matrix> modes;
    const double norm = std::sqrt(2.0 / (group_size + 1));
    for (int l = 1; l <= group_size; ++l) {
      const double k = ising::group_mode(l, group_size);
      Matrix d = Matrix::Zero(gdim, gdim);
      for (int j = 0; j < group_size; ++j) {
        d += norm * std::sin(k * (j + 1)) * creation_operator(group_size, j);
      }
      modes.push_back(std::move(d));
    }
    pb.group_eigs.values.resize(gdim);
    pb.group_eigs.vectors.resize(gdim, gdim);
    for (Eigen::Index p = 0; p < gdim; ++p) {
      Vector state = Vector::Zero(gdim);
      state(0) = 1.0;
      for (int l = group_size; l >= 1; --l) {
        if ((p >> (l - 1)) & 1) state = modes[static_cast<std::size_t>(l - 1)] * state;
      }
      pb.group_eigs.vectors.col(p) = state;
      pb.group_eigs.values(p) = ising::group_energy(
          ising::GroupOccupations::from_pattern(static_cast<std::uint64_t>(p), group_size), model);
      pb.group_patterns.push_back(static_cast<std::uint64_t>(p));
    }
  } else {
    pb.group_eigs = eigh(build_hamiltonian(group_size, model, Boundary::Open));
  }

  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  pb.basis.resize(dim, dim);
  pb.product_energies.resize(dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    double e = 0.0;
    for (int mu = 0; mu < pb.n_groups; ++mu) {
      e += pb.group_eigs.values(pb.group_state(static_cast<std::size_t>(a), mu));
    }
    pb.product_energies(a) = e;
    for (Eigen::Index s = 0; s < dim; ++s) {
      double amp = 1.0;
      for (int mu = 0; mu < pb.n_groups && amp != 0.0; ++mu) {
        amp *= pb.group_eigs.vectors(pb.group_state(static_cast<std::size_t>(s), mu),
                                     pb.group_state(static_cast<std::size_t>(a), mu));
      }
      pb.basis(s, a) = amp;
    }
  }
  const Matrix v = build_interaction(n_sites, group_size, model, boundary);
  pb.interaction_matrix = pb.basis.transpose() * v * pb.basis;
  return pb;
}

void attach(ProductBasisData& pb, const DenseThermalSystem& sys) {
  if (pb.basis.rows() != sys.eigenvectors().rows()) {
    raise(ErrorCode::LengthMismatch, "product basis and system dimensions differ");
  }
  pb.overlaps = pb.basis.transpose() * sys.eigenvectors();
}

ProductStatistics product_statistics(const ProductBasisData& pb, std::size_t a) {
  require_index(pb, a);
  const auto col = pb.interaction_matrix.col(static_cast<Eigen::Index>(a));
  const double eps = col(static_cast<Eigen::Index>(a));
  return ProductStatistics{eps, std::max(0.0, col.squaredNorm() - eps * eps)};
}

std::vector<std::pair<double, double>> w_a_distribution(const DenseThermalSystem& sys,
                                                        const ProductBasisData& pb,
                                                        std::size_t a) {
  require_attached(pb);
  require_index(pb, a);
  const Vector& e = sys.eigenvalues();
  const auto row = pb.overlaps.row(static_cast<Eigen::Index>(a));
  std::vector<std::pair<double, double>> out;
  Eigen::Index i = 0;
  while (i < e.size()) {
    const double start = e(i);
    double prob = 0.0;
    double weighted = 0.0;
    double plain = 0.0;
    Eigen::Index count = 0;
    for (; i < e.size() && e(i) - start <= kDegeneracyBin; ++i, ++count) {
      const double p = row(i) * row(i);
      prob += p;
      weighted += p * e(i);
      plain += e(i);
    }
    out.emplace_back(prob > 0.0 ? weighted / prob : plain / static_cast<double>(count), prob);
  }
  return out;
}

Moments distribution_moments(const std::vector<std::pair<double, double>>& dist) {
  Moments m;
  double total = 0.0;
  for (const auto& [e, p] : dist) {
    total += p;
    m.mean += p * e;
  }
  if (!(total > 0.0)) raise(ErrorCode::Degenerate, "distribution has no weight");
  m.mean /= total;
  double m3 = 0.0;
  for (const auto& [e, p] : dist) {
    const double d = e - m.mean;
    m.variance += p * d * d;
    m3 += p * d * d * d;
  }
  m.variance /= total;
  m3 /= total;
  if (m.variance >= kSkewnessMinVariance) m.skewness = m3 / std::pow(m.variance, 1.5);
  return m;
}

MomentIdentityErrors moment_identity_errors(const DenseThermalSystem& sys,
                                            const ProductBasisData& pb) {
  MomentIdentityErrors err;
  for (Eigen::Index a = 0; a < pb.product_energies.size(); ++a) {
    const auto idx = static_cast<std::size_t>(a);
    const ProductStatistics st = product_statistics(pb, idx);
    const Moments m = distribution_moments(w_a_distribution(sys, pb, idx));
    err.max_mean_error =
        std::max(err.max_mean_error, std::abs(m.mean - (pb.product_energies(a) + st.eps_a)));
    err.max_variance_error = std::max(err.max_variance_error, std::abs(m.variance - st.delta_sq_a));
    err.max_abs_eps = std::max(err.max_abs_eps, std::abs(st.eps_a));
  }
  return err;
}

double max_abs_skewness(const DenseThermalSystem& sys, const ProductBasisData& pb) {
  double worst = 0.0;
  for (Eigen::Index a = 0; a < pb.product_energies.size(); ++a) {
    const Moments m = distribution_moments(w_a_distribution(sys, pb, static_cast<std::size_t>(a)));
    worst = std::max(worst, std::abs(m.skewness));
  }
  return worst;
}

double delta_sq_formula_error(const ProductBasisData& pb, const ising::IsingModel& model,
                              Boundary boundary) {
  if (!pb.has_patterns()) raise(ErrorCode::InvalidArgument, "formula check needs Fock group states");
  if (boundary == Boundary::Periodic && pb.n_groups < 3) {
    raise(ErrorCode::InvalidArgument, "periodic junction check needs at least three groups");
  }
  const int junctions = boundary == Boundary::Periodic ? pb.n_groups : pb.n_groups - 1;
  double worst = 0.0;
  for (Eigen::Index a = 0; a < pb.product_energies.size(); ++a) {
    const auto idx = static_cast<std::size_t>(a);
    double formula = 0.0;
    for (int mu = 0; mu < junctions; ++mu) {
      const int nu = (mu + 1) % pb.n_groups;
      const auto occ_mu = ising::GroupOccupations::from_pattern(
          pb.group_patterns[static_cast<std::size_t>(pb.group_state(idx, mu))], pb.group_size);
      const auto occ_nu = ising::GroupOccupations::from_pattern(
          pb.group_patterns[static_cast<std::size_t>(pb.group_state(idx, nu))], pb.group_size);
      formula += ising::delta_sq(occ_mu, occ_nu, model);
    }
    worst = std::max(worst, std::abs(product_statistics(pb, idx).delta_sq_a - formula));
  }
  return worst;
}

Vector rho_product_diag(const DenseThermalSystem& sys, const ProductBasisData& pb) {
  require_attached(pb);
  return pb.overlaps.cwiseAbs2() * sys.thermal().weights;
}

OffDiagonalReport rho_product_offdiag_max(const DenseThermalSystem& sys, const ProductBasisData& pb,
                                          std::optional<std::pair<double, double>> window) {
  require_attached(pb);
  const Matrix rho = pb.overlaps * sys.thermal().weights.asDiagonal() * pb.overlaps.transpose();
  OffDiagonalReport r;
  r.min_diag = std::numeric_limits<double>::infinity();
  for (Eigen::Index b = 0; b < rho.cols(); ++b) {
    for (Eigen::Index a = 0; a < rho.rows(); ++a) {
      if (a != b) r.max_offdiag = std::max(r.max_offdiag, std::abs(rho(a, b)));
    }
    const double e = pb.product_energies(b);
    if (!window || (e >= window->first && e <= window->second)) {
      r.min_diag = std::min(r.min_diag, rho(b, b));
    }
  }
  if (std::isinf(r.min_diag)) raise(ErrorCode::InvalidArgument, "no product state in the window");
  r.ratio = r.min_diag > 0.0 ? r.max_offdiag / r.min_diag : std::numeric_limits<double>::infinity();
  return r;
}

GaussianDeviation rho_gaussian_deviation(const DenseThermalSystem& sys,
                                         const ProductBasisData& pb) {
  if (!(sys.beta() > 0.0)) raise(ErrorCode::InvalidArgument, "Gaussian comparison needs beta > 0");
  const Vector exact = rho_product_diag(sys, pb);
  GaussianDeviation dev;
  double sum = 0.0;
  for (Eigen::Index a = 0; a < exact.size(); ++a) {
    const ProductStatistics st = product_statistics(pb, static_cast<std::size_t>(a));
    if (st.delta_sq_a < kSkewnessMinVariance || !(exact(a) > 0.0)) continue;
    canonical::GroupStatistics gs;
    gs.e_a = pb.product_energies(a);
    gs.eps_a = st.eps_a;
    gs.delta_sq_a = st.delta_sq_a;
    gs.e0 = sys.eigenvalues().minCoeff();
    gs.e1 = sys.eigenvalues().maxCoeff();
    const double approx = canonical::rho_diag(gs, sys.beta(), sys.thermal().log_z);
    if (!std::isfinite(approx)) continue;
    const double d = std::abs(std::log(exact(a)) - approx);
    dev.max_abs_log_dev = std::max(dev.max_abs_log_dev, d);
    sum += d;
    ++dev.compared;
  }
  if (dev.compared > 0) dev.mean_abs_log_dev = sum / static_cast<double>(dev.compared);
  return dev;
}

double group_spectrum_deviation(int n, const ising::IsingModel& model) {
  require_sites(n);
  const Vector dense = eigh(build_hamiltonian(n, model, Boundary::Open)).values;
  std::vector<double> formula;
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
    formula.push_back(ising::group_energy(ising::GroupOccupations::from_pattern(p, n), model));
  }
  std::sort(formula.begin(), formula.end());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < dense.size(); ++i) {
    worst = std::max(worst, std::abs(dense(i) - formula[static_cast<std::size_t>(i)]));
  }
  return worst;
}

NormCheck group_norm_check(int n, const ising::IsingModel& model) {
  require_sites(n);
  const Vector e = eigh(build_hamiltonian(n, model, Boundary::Open)).values;
  return NormCheck{std::max(std::abs(e.minCoeff()), std::abs(e.maxCoeff())),
                   n * model.b_field *
                       (1.0 + std::abs(model.k_param) + std::abs(model.l_param))};
}

double harmonic_mode_check(int n, const harmonic::HarmonicModel& model) {
  if (n < 1 || n > 64) raise(ErrorCode::InvalidArgument, "harmonic_mode_check needs 1 <= n <= 64");
  const double w2 = model.omega0 * model.omega0;
  Matrix dyn = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    dyn(i, i) = 2.0 * w2;
    if (i + 1 < n) dyn(i, i + 1) = dyn(i + 1, i) = -w2;
  }
  const Vector got = eigh(dyn).values;
  double worst = 0.0;
  for (int l = 1; l <= n; ++l) {
    const double s = std::sin(0.5 * std::numbers::pi * l / (n + 1));
    worst = std::max(worst, std::abs(got(l - 1) - 4.0 * w2 * s * s));
  }
  return worst;
}

}  // namespace localtemp::oracle
