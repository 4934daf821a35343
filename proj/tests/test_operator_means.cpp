#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "test_support.hpp"
#include "wydlab/errors.hpp"
#include "wydlab/operator_means.hpp"
#include "wydlab/quadrature.hpp"
#include "wydlab/scalar_means.hpp"

using namespace wydlab::op;
using wydlab::testing::Gen;
using wydlab::testing::rel_diff;

namespace {

SpdMatrix diag(std::initializer_list<double> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v[i++] = x;
  return SpdMatrix(v.asDiagonal().toDenseMatrix());
}

double rel_frob(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / std::max(b.norm(), 1e-300);
}

double asymmetry(const Matrix& m) { return (m - m.transpose()).norm() / std::max(m.norm(), 1e-300); }

// The product form p(1-p)/2 (S-T)(S nabla T - Hz_p)^{-1}(S-T), evaluated
// literally with a dense inverse.
Matrix product_form_wyd(const SpdMatrix& s, const SpdMatrix& t, double p) {
  const Matrix diff = s.matrix() - t.matrix();
  const Matrix middle = op_arithmetic(s, t).matrix() - heinz(s, t, p).matrix();
  return 0.5 * p * (1 - p) * diff * middle.inverse() * diff;
}

}  // namespace

TEST_CASE("Gauss-Legendre rules") {
  CHECK_THROWS_AS(wydlab::gauss_legendre(0), wydlab::ConfigError);
  for (int n : {1, 2, 5, 16, 32, 64}) {
    const auto rule = wydlab::gauss_legendre_unit(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    // exact for t^k with k <= 2n - 1
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double sum = 0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      CHECK(rel_diff(sum, 1.0 / (k + 1)) < 1e-13);
    }
  }
  const auto two = wydlab::gauss_legendre(2);
  CHECK(std::abs(two.nodes[1] - 1 / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(two.weights[0] - 1.0) < 1e-15);
}

TEST_CASE("SpdMatrix validation") {
  Matrix m(2, 2);
  m << 1, 2, 2, 1;  // indefinite
  CHECK_THROWS_AS(SpdMatrix{m}, wydlab::DomainError);
  m << 2, 1, 0, 2;  // asymmetric
  CHECK_THROWS_AS(SpdMatrix{m}, wydlab::DomainError);
  CHECK_THROWS_AS(SpdMatrix{Matrix(2, 3)}, wydlab::DomainError);
  CHECK_THROWS_AS(SpdMatrix{Matrix(0, 0)}, wydlab::DomainError);
  m << 2, NAN, NAN, 2;
  CHECK_THROWS_AS(SpdMatrix{m}, wydlab::DomainError);
  m << 2, 1, 1, 2;
  CHECK_NOTHROW(SpdMatrix{m});
}

TEST_CASE("spectral decomposition") {
  const auto id = spectral_decompose(SpdMatrix::identity(4));
  for (int i = 0; i < 4; ++i) CHECK(id.eigenvalues[i] == doctest::Approx(1.0).epsilon(1e-15));
  const auto d = spectral_decompose(diag({1, 4}));
  CHECK(d.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(d.eigenvalues[1] == doctest::Approx(4.0));
  CHECK(std::abs(std::abs(d.eigenvectors(0, 0)) - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(d.eigenvectors(1, 1)) - 1.0) < 1e-15);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_spd(5, 1e3, seed);
    const auto sd = spectral_decompose(m);
    CHECK(rel_frob(sd.reconstruct(), m.matrix()) <= 1e-10);
    const Matrix qtq = sd.eigenvectors.transpose() * sd.eigenvectors;
    CHECK((qtq - Matrix::Identity(5, 5)).norm() <= 1e-10);
    for (int i = 1; i < 5; ++i) CHECK(sd.eigenvalues[i - 1] <= sd.eigenvalues[i]);
  }
}

TEST_CASE("matrix functions") {
  const auto m = random_spd(4, 50, 3);
  CHECK(rel_frob(matrix_function(m, [](double v) { return v; }), m.matrix()) < 1e-12);
  const Matrix r = matrix_function(diag({4, 9}), [](double v) { return std::sqrt(v); });
  CHECK(std::abs(r(0, 0) - 2) < 1e-15);
  CHECK(std::abs(r(1, 1) - 3) < 1e-15);
  CHECK(std::abs(r(0, 1)) < 1e-15);
  const Matrix inv = matrix_function(m, [](double v) { return 1 / v; });
  CHECK((m.matrix() * inv - Matrix::Identity(4, 4)).norm() < 1e-10);
  const Matrix f = matrix_function(m, [](double v) { return std::log(v); });
  CHECK((f * m.matrix() - m.matrix() * f).norm() <= 1e-10 * m.matrix().norm());
  CHECK_THROWS_AS(matrix_function(m, [](double) { return NAN; }), wydlab::DomainError);
}

TEST_CASE("weighted geometric mean") {
  const auto g = weighted_geometric(diag({1, 4}), diag({9, 1}), 0.5);
  CHECK(std::abs(g.matrix()(0, 0) - 3) < 1e-14);
  CHECK(std::abs(g.matrix()(1, 1) - 2) < 1e-14);
  const auto s = random_spd(4, 100, 1);
  const auto t = random_spd(4, 100, 2);
  CHECK(weighted_geometric(s, t, 0).matrix() == s.matrix());
  CHECK(weighted_geometric(s, t, 1).matrix() == t.matrix());
  CHECK(rel_frob(weighted_geometric(s, s, 0.3).matrix(), s.matrix()) <= 1e-12);
  CHECK_THROWS_AS(weighted_geometric(s, random_spd(3, 2, 1), 0.5), wydlab::DomainError);
  // S #_{1/2} T = T #_{1/2} S
  CHECK(rel_frob(weighted_geometric(s, t, 0.5).matrix(), weighted_geometric(t, s, 0.5).matrix()) <
        1e-10);
  // the geometric mean solves X S^{-1} X = T
  const Matrix x = weighted_geometric(s, t, 0.5).matrix();
  CHECK(rel_frob(x * s.matrix().inverse() * x, t.matrix()) < 1e-10);
}

TEST_CASE("arithmetic and Heinz means") {
  const auto a = op_arithmetic(diag({1, 3}), diag({3, 1}));
  CHECK(a.matrix() == Matrix::Identity(2, 2) * 2);
  const auto s = random_spd(5, 1e3, 4);
  const auto t = random_spd(5, 1e3, 5);
  CHECK(op_arithmetic(s, s).matrix() == s.matrix());
  CHECK(asymmetry(op_arithmetic(s, t).matrix()) <= 1e-14);
  CHECK(rel_frob(heinz(s, t, 0.5).matrix(), weighted_geometric(s, t, 0.5).matrix()) < 1e-14);
  CHECK(rel_frob(heinz(s, t, 0.0).matrix(), op_arithmetic(s, t).matrix()) < 1e-14);
  CHECK(rel_frob(heinz(s, t, 0.2).matrix(), heinz(s, t, 0.8).matrix()) < 1e-14);
}

TEST_CASE("operator logarithmic mean") {
  const double e2 = std::exp(2.0);
  const auto l = op_log_mean(diag({1, 1}), diag({e2, 1}), 32);
  CHECK(rel_diff(l.matrix()(0, 0), (e2 - 1) / 2) < 1e-10);
  CHECK(rel_diff(l.matrix()(1, 1), 1.0) < 1e-14);
  const auto s = random_spd(6, 1e4, 6);
  CHECK(rel_frob(op_log_mean(s, s).matrix(), s.matrix()) <= 1e-12);
  CHECK_THROWS_AS(op_log_mean(s, s, 1), wydlab::ConfigError);
  for (std::uint64_t seed = 10; seed < 30; ++seed) {
    const auto a = random_spd(6, 1e4, seed);
    const auto b = random_spd(6, 1e4, seed + 1000);
    const Matrix l32 = op_log_mean(a, b, 32).matrix();
    const Matrix l64 = op_log_mean(a, b, 64).matrix();
    CHECK(rel_frob(l32, l64) <= 1e-10);
    CHECK(asymmetry(l32) <= 1e-12);
  }
}

TEST_CASE("operator Wigner-Yanase-Dyson mean") {
  const auto w = op_wyd(diag({4, 1}), diag({1, 1}), 0.5);
  CHECK(rel_diff(w.matrix()(0, 0), 2.25) < 1e-12);
  CHECK(rel_diff(w.matrix()(1, 1), 1.0) < 1e-12);
  CHECK(std::abs(w.matrix()(0, 1)) < 1e-14);

  const auto s = random_spd(4, 100, 8);
  const auto t = random_spd(4, 100, 9);
  CHECK(op_wyd(s, s, 0.3).matrix() == s.matrix());
  CHECK_THROWS_AS(op_wyd(s, t, 0.0), wydlab::UnsupportedParameterError);
  CHECK_THROWS_AS(op_wyd(s, t, 1.0), wydlab::UnsupportedParameterError);
  CHECK_THROWS_AS(op_wyd(s, t, 1.5), wydlab::UnsupportedParameterError);
  CHECK(rel_frob(op_wyd(s, t, 0.3).matrix(), op_wyd(s, t, 0.7).matrix()) <= 1e-10);
}

TEST_CASE("operator W_p agrees with the product form") {
  double worst = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(seed % 7);
    const auto s = random_spd(dim, 1e4, 3 * seed + 1);
    const auto t = random_spd(dim, 1e4, 3 * seed + 2);
    for (double p : {0.1, 0.3, 0.5, 0.9}) {
      const double d = rel_frob(product_form_wyd(s, t, p), op_wyd(s, t, p).matrix());
      worst = std::max(worst, d);
    }
  }
  MESSAGE("worst relative difference: ", worst);
  CHECK(worst <= 1e-8);
}

TEST_CASE("commuting oracle: diagonal inputs reduce to scalar means") {
  Gen gen(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + trial % 6;
    Vector a(dim), b(dim);
    for (int i = 0; i < dim; ++i) {
      a[i] = gen.log_uniform(1e-2, 1e2);
      b[i] = gen.log_uniform(1e-2, 1e2);
    }
    const SpdMatrix s(a.asDiagonal().toDenseMatrix());
    const SpdMatrix t(b.asDiagonal().toDenseMatrix());
    const double p = gen.uniform(0.05, 0.95);
    const Matrix g = weighted_geometric(s, t, p).matrix();
    const Matrix ar = op_arithmetic(s, t).matrix();
    const Matrix hz = heinz(s, t, p).matrix();
    const Matrix lm = op_log_mean(s, t).matrix();
    const Matrix w = op_wyd(s, t, p).matrix();
    using namespace wydlab::scalar;
    for (int i = 0; i < dim; ++i) {
      const PositivePair xy{a[i], b[i]};
      CHECK(rel_diff(g(i, i), std::pow(a[i], 1 - p) * std::pow(b[i], p)) <= 1e-10);
      CHECK(rel_diff(ar(i, i), arithmetic(xy)) <= 1e-10);
      CHECK(rel_diff(hz(i, i), heinz_scalar(p, xy)) <= 1e-10);
      CHECK(rel_diff(lm(i, i), logarithmic(xy)) <= 1e-10);
      CHECK(rel_diff(w(i, i), wyd(p, xy)) <= 1e-10);
    }
  }
}

TEST_CASE("Loewner order") {
  const Matrix i2 = Matrix::Identity(2, 2);
  const auto a = loewner_leq(i2, 2 * i2, 1e-8);
  CHECK(a.holds);
  CHECK(a.min_eigenvalue == doctest::Approx(1.0));
  const auto b = loewner_leq(2 * i2, i2, 1e-8);
  CHECK_FALSE(b.holds);
  CHECK(b.min_eigenvalue == doctest::Approx(-1.0));
  const auto m = random_spd(3, 10, 1).matrix();
  const auto c = loewner_leq(m, m, 1e-8);
  CHECK(c.holds);
  CHECK(std::abs(c.min_eigenvalue) <= 1e-8 * c.scale);
  Matrix asym(2, 2);
  asym << 1, 1, 0, 1;
  CHECK_THROWS_AS(loewner_leq(asym, i2, 1e-8), wydlab::DomainError);
  CHECK_THROWS_AS(loewner_leq(i2, Matrix::Identity(3, 3), 1e-8), wydlab::DomainError);
}

TEST_CASE("Heinz means lie between the geometric and arithmetic means") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = random_spd(5, 1e3, seed);
    const auto t = random_spd(5, 1e3, seed + 500);
    const Matrix g = weighted_geometric(s, t, 0.5).matrix();
    const Matrix a = op_arithmetic(s, t).matrix();
    for (double p : {0.0, 0.2, 0.4}) {
      const Matrix h = heinz(s, t, p).matrix();
      CHECK(loewner_leq(g, h, 1e-10).holds);
      CHECK(loewner_leq(h, a, 1e-10).holds);
    }
  }
}

TEST_CASE("random SPD generation") {
  CHECK(random_spd(3, 1, 5).matrix() == Matrix::Identity(3, 3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_spd(5, 100, seed);
    const auto ev = m.spectrum().eigenvalues;
    const double cond = ev[4] / ev[0];
    CHECK(cond >= 1.0);
    CHECK(cond <= 100 * (1 + 1e-8));
    CHECK(random_spd(5, 100, seed).matrix() == m.matrix());
  }
  CHECK(random_spd(5, 100, 1).matrix() != random_spd(5, 100, 2).matrix());
}

TEST_CASE("sandwiched pairs") {
  const auto s = random_spd(4, 100, 12);
  CHECK(rel_frob(sandwiched_pair(s, 1, 1, 3).matrix(), s.matrix()) <= 1e-15);
  const auto t = sandwiched_pair(SpdMatrix::identity(4), 0.5, 2, 3);
  for (int i = 0; i < 4; ++i) {
    CHECK(t.spectrum().eigenvalues[i] >= 0.5 * (1 - 1e-12));
    CHECK(t.spectrum().eigenvalues[i] <= 2 * (1 + 1e-12));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto u = sandwiched_pair(s, 0.1, 10, seed);
    CHECK(loewner_leq(0.1 * s.matrix(), u.matrix(), 1e-10).holds);
    CHECK(loewner_leq(u.matrix(), 10 * s.matrix(), 1e-10).holds);
  }
  CHECK_THROWS_AS(sandwiched_pair(s, 2, 1, 0), wydlab::DomainError);
  CHECK_THROWS_AS(sandwiched_pair(s, 0, 1, 0), wydlab::DomainError);
}

TEST_CASE("p = 1/2 identity") {
  const auto s = random_spd(3, 10, 1);
  const auto same = check_p_half_identity(s, s, 1e-10);
  CHECK(same.residual == 0.0);
  CHECK_FALSE(same.relative);
  CHECK(same.pass);
  const auto d = check_p_half_identity(diag({4, 1}), diag({1, 1}), 1e-12);
  CHECK(d.pass);
  CHECK(d.residual <= 1e-12);
  const auto r = check_p_half_identity(random_spd(6, 1e3, 2), random_spd(6, 1e3, 3), 1e-10);
  CHECK(r.pass);
  CHECK(r.relative);
}

TEST_CASE("difference-type operator bound") {
  const auto s = random_spd(4, 100, 21);
  const auto eq = check_difference_bound(s, s, 0.4, 1e-8);
  CHECK(eq.holds);
  CHECK(std::abs(eq.min_eigenvalue) <= 1e-12 * eq.scale);

  // commuting case: the margin equals the smallest scalar gap entrywise
  const double xs[] = {0.05, 0.7, 3.0, 40.0};
  Vector a(4), b = Vector::Ones(4);
  for (int i = 0; i < 4; ++i) a[i] = xs[i];
  const SpdMatrix sd(a.asDiagonal().toDenseMatrix());
  const SpdMatrix td(b.asDiagonal().toDenseMatrix());
  for (double p : {0.1, 0.5, 0.8}) {
    const auto v = check_difference_bound(sd, td, p, 1e-8);
    CHECK(v.holds);
    double min_gap = INFINITY;
    for (double x : xs) {
      using namespace wydlab::scalar;
      const double bound = p * (1 - p) * (std::sqrt(x) - 1) * (std::sqrt(x) - 1) + logarithmic({x, 1});
      min_gap = std::min(min_gap, bound - wyd(p, {x, 1}));
    }
    CHECK(std::abs(v.min_eigenvalue - min_gap) <= 1e-10 * std::max(1.0, v.scale));
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a2 = random_spd(2 + seed % 7, 1e3, seed);
    const auto b2 = random_spd(2 + seed % 7, 1e3, seed + 99);
    CHECK(check_difference_bound(a2, b2, 0.3, 1e-8).holds);
  }
}

TEST_CASE("ratio-type operator bound") {
  const auto s = random_spd(4, 100, 31);
  const auto eq = check_ratio_bound(s, 1, 1, 0.5, 1, 1e-8);
  CHECK(eq.holds);
  CHECK(std::abs(eq.min_eigenvalue) <= 1e-12 * eq.scale);
  const auto id = check_ratio_bound(SpdMatrix::identity(3), 0.5, 2, 0.5, 4, 1e-8);
  CHECK(id.holds);
  CHECK(id.min_eigenvalue >= 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(check_ratio_bound(random_spd(5, 1e3, seed), 0.1, 10, 0.7, seed, 1e-8).holds);
}

TEST_CASE("matrix text format round trip") {
  const auto m = random_spd(4, 1e3, 17).matrix();
  std::stringstream io;
  write_matrix(io, m);
  const std::string text = io.str();
  CHECK(text.substr(0, 2) == "4\n");
  const Matrix back = read_matrix(io);
  CHECK(back == m);
  std::istringstream bad("2\n1 2\n3");
  CHECK_THROWS_AS(read_matrix(bad), wydlab::DomainError);
  std::istringstream junk("x\n");
  CHECK_THROWS_AS(read_matrix(junk), wydlab::DomainError);
}
