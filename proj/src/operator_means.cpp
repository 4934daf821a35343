#include "wydlab/operator_means.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include "wydlab/errors.hpp"
#include "wydlab/quadrature.hpp"
#include "wydlab/scalar_means.hpp"

namespace wydlab::op {
namespace {

Matrix symmetric_part(const Matrix& m) { return 0.5 * (m + m.transpose()); }

void require_same_dim(const SpdMatrix& s, const SpdMatrix& t) {
  if (s.dim() != t.dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(s.dim()) + " vs " +
                      std::to_string(t.dim()));
  }
}

bool is_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  const double tol = 1e-12 * m.cwiseAbs().maxCoeff();
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Matrix spectral_apply(const SpectralDecomposition& d, const Vector& values) {
  return symmetric_part(d.eigenvectors * values.asDiagonal() * d.eigenvectors.transpose());
}

// S = S^{1/2} I S^{1/2} and T = S^{1/2} M S^{1/2}; every mean of (S, T)
// built from S #_t T is S^{1/2} f(M) S^{1/2}.
class Congruence {
 public:
  Congruence(const SpdMatrix& s, const SpdMatrix& t) {
    const auto& sp = s.spectrum();
    const Vector root = sp.eigenvalues.cwiseSqrt();
    s_half_ = spectral_apply(sp, root);
    const Matrix s_inv_half = spectral_apply(sp, root.cwiseInverse());
    inner_ = symmetric_decompose(symmetric_part(s_inv_half * t.matrix() * s_inv_half));
    if (!(inner_.eigenvalues.minCoeff() > 0.0)) {
      throw NumericError("S^{-1/2} T S^{-1/2} lost positive definiteness (min eigenvalue " +
                         std::to_string(inner_.eigenvalues.minCoeff()) + ")");
    }
  }

  template <class F>
  Matrix apply(F&& f) const {
    const Vector v = inner_.eigenvalues.unaryExpr(f);
    return symmetric_part(s_half_ * spectral_apply(inner_, v) * s_half_);
  }

 private:
  Matrix s_half_;
  SpectralDecomposition inner_;
};

Matrix random_orthogonal(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(dim, dim);
}

Vector log_uniform(Eigen::Index n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = std::log(lo);
  const double b = std::log(hi);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = std::exp(a + unit(rng) * (b - a));
  return v;
}

Matrix inverse_spd(const Matrix& m, const char* what) {
  const SpectralDecomposition d = symmetric_decompose(symmetric_part(m));
  const double hi = d.eigenvalues.cwiseAbs().maxCoeff();
  const double lo = d.eigenvalues.minCoeff();
  const double floor = static_cast<double>(m.rows()) * std::numeric_limits<double>::epsilon() * hi;
  if (!(lo > floor)) {
    throw NumericError(std::string(what) + " is numerically singular: smallest eigenvalue " +
                       std::to_string(lo) + ", largest " + std::to_string(hi));
  }
  return spectral_apply(d, d.eigenvalues.cwiseInverse());
}

}  // namespace

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose();
}

SpectralDecomposition symmetric_decompose(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge");
  }
  SpectralDecomposition d{solver.eigenvalues(), solver.eigenvectors()};
  const double norm = m.norm();
  const double residual = (d.reconstruct() - m).norm();
  if (residual > 1e-10 * norm) {
    throw NumericError("eigendecomposition residual " + std::to_string(residual) +
                       " exceeds 1e-10 * ||M||_F = " + std::to_string(1e-10 * norm));
  }
  return d;
}

SpdMatrix::SpdMatrix(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DomainError("SPD matrix must be square and non-empty");
  }
  if (!m.allFinite()) throw DomainError("SPD matrix has non-finite entries");
  if (!is_symmetric(m)) throw DomainError("matrix is not symmetric");
  m_ = symmetric_part(m);
  spectrum_ = symmetric_decompose(m_);
  if (!(spectrum_.eigenvalues.minCoeff() > 0.0)) {
    throw DomainError("matrix is not positive definite (smallest eigenvalue " +
                      std::to_string(spectrum_.eigenvalues.minCoeff()) + ")");
  }
}

SpdMatrix SpdMatrix::identity(Eigen::Index dim) { return SpdMatrix(Matrix::Identity(dim, dim)); }

SpectralDecomposition spectral_decompose(const SpdMatrix& m) { return m.spectrum(); }

Matrix matrix_function(const SpdMatrix& m, const std::function<double(double)>& f) {
  const auto& d = m.spectrum();
  const Vector v = d.eigenvalues.unaryExpr(f);
  if (!v.allFinite()) throw DomainError("matrix function is not finite on the spectrum");
  return spectral_apply(d, v);
}

SpdMatrix weighted_geometric(const SpdMatrix& s, const SpdMatrix& t, double p) {
  require_same_dim(s, t);
  if (!std::isfinite(p)) throw DomainError("p must be finite");
  if (p == 0.0 || s.matrix() == t.matrix()) return s;
  if (p == 1.0) return t;
  return SpdMatrix(Congruence(s, t).apply([p](double l) { return std::pow(l, p); }));
}

SpdMatrix op_arithmetic(const SpdMatrix& s, const SpdMatrix& t) {
  require_same_dim(s, t);
  return SpdMatrix(0.5 * (s.matrix() + t.matrix()));
}

SpdMatrix heinz(const SpdMatrix& s, const SpdMatrix& t, double p) {
  require_same_dim(s, t);
  const Matrix sum = weighted_geometric(s, t, p).matrix() + weighted_geometric(s, t, 1.0 - p).matrix();
  return SpdMatrix(0.5 * sum);
}

SpdMatrix op_log_mean(const SpdMatrix& s, const SpdMatrix& t, int nodes) {
  if (nodes < 2) throw ConfigError("operator logarithmic mean needs at least 2 nodes");
  require_same_dim(s, t);
  if (s.matrix() == t.matrix()) return s;
  const QuadratureRule rule = gauss_legendre_unit(nodes);
  // sum_i w_i S #_{t_i} T, with the common congruence factored out.
  return SpdMatrix(Congruence(s, t).apply([&rule](double l) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * std::pow(l, rule.nodes[i]);
    }
    return acc;
  }));
}

SpdMatrix op_wyd(const SpdMatrix& s, const SpdMatrix& t, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw UnsupportedParameterError("operator W_p is defined here only for 0 < p < 1, got p = " +
                                    std::to_string(p));
  }
  require_same_dim(s, t);
  const double scale = std::max(s.matrix().cwiseAbs().maxCoeff(), t.matrix().cwiseAbs().maxCoeff());
  if ((s.matrix() - t.matrix()).cwiseAbs().maxCoeff() <= 1e-14 * scale) return s;

  // Every factor is a congruence of a function of M = S^{-1/2} T S^{-1/2}, so
  // the product collapses to S^{1/2} w_p(M) S^{1/2} with the scalar W_p(l, 1).
  // Eigenvalues of M equal to 1 (where S - T and the middle factor share a
  // kernel) take the value W_p(1, 1) = 1, matching W_p(S, S) = S.
  return SpdMatrix(Congruence(s, t).apply([p](double l) { return scalar::wyd(p, {l, 1.0}); }));
}

LoewnerVerdict loewner_leq(const Matrix& lhs, const Matrix& rhs, double tol) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DomainError("loewner_leq: dimension mismatch");
  }
  if (!is_symmetric(lhs) || !is_symmetric(rhs)) throw DomainError("loewner_leq: asymmetric input");
  Eigen::SelfAdjointEigenSolver<Matrix> diff(symmetric_part(rhs - lhs), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> ref(symmetric_part(rhs), Eigen::EigenvaluesOnly);
  if (diff.info() != Eigen::Success || ref.info() != Eigen::Success) {
    throw NumericError("loewner_leq: eigensolver did not converge");
  }
  LoewnerVerdict v;
  v.min_eigenvalue = diff.eigenvalues().minCoeff();
  v.scale = ref.eigenvalues().cwiseAbs().maxCoeff();
  v.tolerance = tol;
  v.holds = v.min_eigenvalue >= -tol * v.scale;
  return v;
}

SpdMatrix random_spd(Eigen::Index dim, double condition_number, std::uint64_t seed) {
  if (dim < 1) throw DomainError("random_spd: dim must be >= 1");
  if (!(condition_number >= 1.0) || !std::isfinite(condition_number)) {
    throw DomainError("random_spd: condition number must be finite and >= 1");
  }
  if (condition_number == 1.0) return SpdMatrix::identity(dim);
  std::mt19937_64 rng(seed);
  const Matrix q = random_orthogonal(dim, rng);
  const Vector lambda = log_uniform(dim, 1.0, condition_number, rng);
  return SpdMatrix(symmetric_part(q * lambda.asDiagonal() * q.transpose()));
}

SpdMatrix sandwiched_pair(const SpdMatrix& s, double alpha, double beta, std::uint64_t seed) {
  if (!(alpha > 0.0) || !(beta >= alpha) || !std::isfinite(beta)) {
    throw DomainError("sandwiched_pair requires 0 < alpha <= beta");
  }
  if (alpha == beta) return SpdMatrix(alpha * s.matrix());
  std::mt19937_64 rng(seed);
  const Matrix q = random_orthogonal(s.dim(), rng);
  const Vector mu = log_uniform(s.dim(), alpha, beta, rng);
  const Matrix s_half = matrix_function(s, [](double l) { return std::sqrt(l); });
  const Matrix m = symmetric_part(q * mu.asDiagonal() * q.transpose());
  SpdMatrix t(symmetric_part(s_half * m * s_half));

  constexpr double kCertTol = 1e-10;
  const auto lower = loewner_leq(alpha * s.matrix(), t.matrix(), kCertTol);
  const auto upper = loewner_leq(t.matrix(), beta * s.matrix(), kCertTol);
  if (!lower.holds || !upper.holds) {
    throw NumericError("sandwiched_pair: certification failed (min eigenvalues " +
                       std::to_string(lower.min_eigenvalue) + ", " +
                       std::to_string(upper.min_eigenvalue) + ")");
  }
  return t;
}

IdentityResidual check_p_half_identity(const SpdMatrix& s, const SpdMatrix& t, double tol) {
  require_same_dim(s, t);
  const Matrix arith = op_arithmetic(s, t).matrix();
  const Matrix geo = weighted_geometric(s, t, 0.5).matrix();
  const Matrix half_diff = 0.5 * (s.matrix() - t.matrix());
  const Matrix lhs = half_diff * inverse_spd(arith + geo, "S nabla T + S # T") * half_diff;
  const Matrix rhs = arith - geo;

  IdentityResidual r;
  r.reference_norm = rhs.norm();
  const double abs_residual = (lhs - rhs).norm();
  r.relative = r.reference_norm > 0.0;
  r.residual = r.relative ? abs_residual / r.reference_norm : abs_residual;
  r.pass = r.residual <= tol;
  return r;
}

LoewnerVerdict check_difference_bound(const SpdMatrix& s, const SpdMatrix& t, double p, double tol) {
  const Matrix w = op_wyd(s, t, p).matrix();
  const Matrix arith = op_arithmetic(s, t).matrix();
  const Matrix geo = weighted_geometric(s, t, 0.5).matrix();
  const Matrix rhs = 2.0 * p * (1.0 - p) * (arith - geo) + op_log_mean(s, t).matrix();
  return loewner_leq(w, symmetric_part(rhs), tol);
}

LoewnerVerdict check_ratio_bound(const SpdMatrix& s, double alpha, double beta, double p,
                                  std::uint64_t seed, double tol) {
  const SpdMatrix t = sandwiched_pair(s, alpha, beta, seed);
  const Matrix w = op_wyd(s, t, p).matrix();
  const double kp = scalar::kp_bound(alpha, beta, p);
  return loewner_leq(w, kp * op_log_mean(s, t).matrix(), tol);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("write_matrix: matrix must be square");
  out << m.rows() << '\n';
  char buf[40];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << (j == 0 ? "" : " ") << buf;
    }
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in) {
  long long dim = 0;
  if (!(in >> dim) || dim < 1) throw DomainError("read_matrix: expected a positive dimension");
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (!(in >> m(i, j))) {
        throw DomainError("read_matrix: expected " + std::to_string(dim * dim) + " entries");
      }
    }
  }
  return m;
}

}  // namespace wydlab::op
