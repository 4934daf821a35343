#pragma once

// Operator (matrix) means on real symmetric positive definite matrices and
// Loewner-order certification of the operator reverse inequalities.

#include <cstdint>
#include <functional>
#include <iosfwd>

#include <Eigen/Dense>

namespace wydlab::op {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SpectralDecomposition {
  Vector eigenvalues;  // ascending
  Matrix eigenvectors; // orthogonal, column k pairs with eigenvalues[k]

  [[nodiscard]] Matrix reconstruct() const;
};

/// Eigendecomposition of a symmetric matrix. Throws NumericError if the
/// solver fails or the reconstruction residual exceeds 1e-10 ||M||_F.
SpectralDecomposition symmetric_decompose(const Matrix& m);

/// A real symmetric positive definite matrix. Immutable; the spectral
/// decomposition is computed (and checked) once at construction.
class SpdMatrix {
 public:
  /// Throws DomainError unless m is square, non-empty, finite, symmetric
  /// within 1e-12 * max|m_ij| and has smallest eigenvalue > 0. The stored
  /// matrix is the exact symmetric part of m.
  explicit SpdMatrix(const Matrix& m);

  static SpdMatrix identity(Eigen::Index dim);

  [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }
  [[nodiscard]] const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }

 private:
  Matrix m_;
  SpectralDecomposition spectrum_;
};

/// Same object as SpdMatrix::spectrum(), returned by value.
SpectralDecomposition spectral_decompose(const SpdMatrix& m);

/// Q f(Lambda) Q^T. Throws DomainError if f is not finite on the spectrum.
Matrix matrix_function(const SpdMatrix& m, const std::function<double(double)>& f);

/// S #_p T = S^{1/2} (S^{-1/2} T S^{-1/2})^p S^{1/2}.
SpdMatrix weighted_geometric(const SpdMatrix& s, const SpdMatrix& t, double p);

/// S nabla T = (S + T) / 2.
SpdMatrix op_arithmetic(const SpdMatrix& s, const SpdMatrix& t);

/// Hz_p(S, T) = (S #_p T + S #_{1-p} T) / 2.
SpdMatrix heinz(const SpdMatrix& s, const SpdMatrix& t, double p);

/// L(S, T) = integral over [0, 1] of S #_t T, by `nodes`-point Gauss-Legendre.
/// Throws ConfigError if nodes < 2.
SpdMatrix op_log_mean(const SpdMatrix& s, const SpdMatrix& t, int nodes = 32);

/// W_p(S, T) = p(1-p)/2 (S - T) (S nabla T - Hz_p(S, T))^{-1} (S - T),
/// W_p(S, S) = S. Evaluated as S^{1/2} W_p(M, I) S^{1/2} with
/// M = S^{-1/2} T S^{-1/2}, which equals the product form wherever the middle
/// factor is invertible and extends it continuously where S - T is singular.
/// Throws UnsupportedParameterError for p outside (0, 1).
SpdMatrix op_wyd(const SpdMatrix& s, const SpdMatrix& t, double p);

struct LoewnerVerdict {
  bool holds = false;
  double min_eigenvalue = 0.0;  // of rhs - lhs
  double scale = 0.0;           // largest |eigenvalue| of rhs
  double tolerance = 0.0;
};

/// Decides lhs <= rhs: holds iff min eig(rhs - lhs) >= -tol * scale.
/// Throws DomainError for mismatched or asymmetric inputs.
LoewnerVerdict loewner_leq(const Matrix& lhs, const Matrix& rhs, double tol);

/// Q Lambda Q^T with Q from the QR factorization of a seeded Gaussian matrix
/// and Lambda log-uniform in [1, condition_number].
SpdMatrix random_spd(Eigen::Index dim, double condition_number, std::uint64_t seed);

/// T = S^{1/2} M S^{1/2} with the spectrum of M in [alpha, beta] (seeded), so that
/// alpha S <= T <= beta S. Both bounds are re-certified with loewner_leq;
/// alpha == beta gives T = alpha S exactly.
SpdMatrix sandwiched_pair(const SpdMatrix& s, double alpha, double beta, std::uint64_t seed);

struct IdentityResidual {
  double residual = 0.0;        // ||lhs - rhs||_F, relative unless absolute
  double reference_norm = 0.0;  // ||S nabla T - S # T||_F
  bool relative = true;
  bool pass = false;
};

/// ((S-T)/2)(S nabla T + S # T)^{-1}((S-T)/2) = S nabla T - S # T.
IdentityResidual check_p_half_identity(const SpdMatrix& s, const SpdMatrix& t, double tol);

/// W_p(S, T) <= 2p(1-p)(S nabla T - S # T) + L(S, T).
LoewnerVerdict check_difference_bound(const SpdMatrix& s, const SpdMatrix& t, double p, double tol);

/// W_p(S, T) <= k_p L(S, T) for T = sandwiched_pair(S, alpha, beta, seed),
/// k_p = max(K(alpha), K(beta))^{p(1-p)}.
LoewnerVerdict check_ratio_bound(const SpdMatrix& s, double alpha, double beta, double p,
                                  std::uint64_t seed, double tol);

/// Plain-text matrix format: `dim` on the first line, then dim rows of dim
/// space-separated numbers with 17 significant digits.
void write_matrix(std::ostream& out, const Matrix& m);
/// Throws DomainError on malformed input.
Matrix read_matrix(std::istream& in);

}  // namespace wydlab::op
