#include <doctest.h>

#include <cmath>

#include "lrd/errors.hpp"
#include "lrd/kronecker.hpp"
#include "lrd/matrix.hpp"
#include "lrd/perturbation.hpp"
#include "lrd/subspace.hpp"
#include "lrd/svd.hpp"
#include "lrd/tolerances.hpp"
#include "oracles.hpp"

using lrd::Matrix;
using lrd::Vector;
using namespace lrd::linalg;

namespace {
Matrix diag3(double a, double b, double c) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}
}  // namespace

TEST_CASE("svd of a diagonal matrix") {
  const auto f = svd(diag3(3, 2, 1));
  CHECK(f.sigma(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(f.sigma(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(f.sigma(2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((f.U - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((f.V - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("svd of a negative scalar") {
  Matrix m(1, 1);
  m(0, 0) = -5.0;
  const auto f = svd(m);
  CHECK(f.sigma(0) == doctest::Approx(5.0));
  // Sign canonicalization puts the + on U and the - on V.
  CHECK(f.U(0, 0) == doctest::Approx(1.0));
  CHECK(f.U(0, 0) * f.sigma(0) * f.V(0, 0) == doctest::Approx(-5.0));
}

TEST_CASE("svd singular values match the Gram-spectrum oracle") {
  const Matrix m = oracles::random_gaussian_matrix(5, 3, 7);
  const auto f = svd(m);
  const auto eig = oracles::jacobi_symmetric_eigenvalues(Matrix(m.transpose() * m));
  REQUIRE(f.sigma.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(f.sigma(i) == doctest::Approx(std::sqrt(std::max(0.0, eig[i]))).epsilon(1e-9));
  }
}

TEST_CASE("svd reconstruction and orthonormality invariants") {
  const Matrix m = oracles::random_gaussian_matrix(8, 6, 21);
  const auto f = svd(m);
  CHECK((f.reconstruct() - m).norm() <= 1e-8 * m.norm());
  CHECK((Matrix(f.U.transpose() * f.U) - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((Matrix(f.V.transpose() * f.V) - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(f.rank_retained() == 6);  // zero singular values retained up to min(m,n)
}

TEST_CASE("svd rejects non-finite input") {
  Matrix m = Matrix::Ones(2, 2);
  m(0, 1) = std::nan("");
  CHECK_THROWS_AS(svd(m), lrd::ParameterError);
}

TEST_CASE("truncated_svd on the diagonal example") {
  const auto f = truncated_svd(diag3(3, 2, 1), 2);
  const Matrix rec = f.reconstruct();
  CHECK((rec - diag3(3, 2, 0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((rec - diag3(3, 2, 1)).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("truncated_svd at full rank reproduces the input") {
  const Matrix m = oracles::random_gaussian_matrix(6, 4, 3);
  CHECK((truncated_svd(m, 4).reconstruct() - m).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("truncated_svd residual matches the singular tail") {
  const Matrix m = oracles::random_gaussian_matrix(6, 4, 11);
  const auto full = svd(m);
  const double residual2 = (truncated_svd(m, 2).reconstruct() - m).squaredNorm();
  const double tail2 = full.sigma(2) * full.sigma(2) + full.sigma(3) * full.sigma(3);
  CHECK(residual2 == doctest::Approx(tail2).epsilon(1e-9));
}

TEST_CASE("truncated_svd range checks") {
  const Matrix m = Matrix::Ones(3, 3);
  CHECK_THROWS_AS(truncated_svd(m, 0), lrd::ParameterError);
  CHECK_THROWS_AS(truncated_svd(m, 4), lrd::ParameterError);
}

TEST_CASE("Eckart-Young property on random matrices") {
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix m = oracles::random_gaussian_matrix(7, 5, 100 + trial);
    const auto full = svd(m);
    const int r = 1 + trial % 4;
    double tail2 = 0;
    for (int i = full.sigma.size() - 1; i >= r; --i) tail2 += full.sigma(i) * full.sigma(i);
    const double res2 = (truncated_svd(m, r).reconstruct() - m).squaredNorm();
    CHECK(std::abs(res2 - tail2) <= 1e-8 * m.squaredNorm());
  }
}

TEST_CASE("kronecker of identities") {
  const Matrix k = kronecker(Matrix::Identity(2, 2), Matrix::Identity(3, 3));
  CHECK((k - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kronecker index-by-index example") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Matrix expected(4, 4);
  expected << 0, 1, 0, 2, 1, 0, 2, 0, 0, 3, 0, 4, 3, 0, 4, 0;
  CHECK((kronecker(a, b) - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK((kronecker(a, b) - oracles::kronecker_by_definition(a, b)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kronecker operator norm is multiplicative") {
  const Matrix a = oracles::random_gaussian_matrix(3, 2, 3);
  const Matrix b = oracles::random_gaussian_matrix(2, 2, 4);
  CHECK(operator_norm(kronecker(a, b)) ==
        doctest::Approx(operator_norm(a) * operator_norm(b)).epsilon(1e-9));
}

TEST_CASE("kronecker mixed-product identity") {
  const Matrix a = oracles::random_gaussian_matrix(3, 4, 5);
  const Matrix b = oracles::random_gaussian_matrix(2, 3, 6);
  const Matrix c = oracles::random_gaussian_matrix(4, 2, 7);
  const Matrix d = oracles::random_gaussian_matrix(3, 5, 8);
  const Matrix lhs = kronecker(a, b) * kronecker(c, d);
  const Matrix rhs = kronecker(Matrix(a * c), Matrix(b * d));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("kronecker overflow guard") {
  const Matrix big = Matrix::Zero(1 << 16, 2);
  CHECK_THROWS_AS(kronecker(big, big), lrd::ParameterError);
}

TEST_CASE("sin_theta of identical and orthogonal subspaces") {
  Matrix e1(2, 1), e2(2, 1), mid(2, 1);
  e1 << 1, 0;
  e2 << 0, 1;
  mid << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Subspace u(e1), v(e2), w(mid);
  const auto same = sin_theta(u, u);
  CHECK(same.spectral == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(same.frobenius == doctest::Approx(0.0).epsilon(1e-12));
  const auto orth = sin_theta(u, v);
  CHECK(orth.spectral == doctest::Approx(1.0));
  CHECK(orth.frobenius == doctest::Approx(1.0));
  const auto diag = sin_theta(u, w);
  CHECK(diag.spectral == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-9));
  CHECK(diag.frobenius == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-9));
}

TEST_CASE("sin_theta equals the orthogonal-complement route") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_orthonormal(8, 3, 50 + trial);
    const auto v = random_orthonormal(8, 3, 150 + trial);
    const auto st = sin_theta(u, v);
    const Matrix u_perp = orthogonal_complement(u);
    const Matrix cross = v.basis.transpose() * u_perp;
    CHECK(st.spectral == doctest::Approx(operator_norm(cross)).epsilon(1e-9));
    CHECK(st.frobenius == doctest::Approx(cross.norm()).epsilon(1e-9));
  }
}

TEST_CASE("sin_theta is symmetric") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_orthonormal(7, 2, 60 + trial);
    const auto v = random_orthonormal(7, 2, 260 + trial);
    const auto uv = sin_theta(u, v);
    const auto vu = sin_theta(v, u);
    CHECK(std::abs(uv.spectral - vu.spectral) < 1e-10);
    CHECK(std::abs(uv.frobenius - vu.frobenius) < 1e-10);
  }
}

TEST_CASE("sin_theta triangle inequality on random triples") {
  for (int trial = 0; trial < 500; ++trial) {
    const auto v1 = random_orthonormal(6, 2, 1000 + trial);
    const auto v2 = random_orthonormal(6, 2, 2000 + trial);
    const auto v3 = random_orthonormal(6, 2, 3000 + trial);
    const auto d23 = sin_theta(v2, v3);
    const auto d12 = sin_theta(v1, v2);
    const auto d13 = sin_theta(v1, v3);
    CHECK(d12.spectral + d13.spectral - d23.spectral >= -1e-9);
    CHECK(d12.frobenius + d13.frobenius - d23.frobenius >= -1e-9);
  }
}

TEST_CASE("sin_theta rejects mismatched shapes") {
  const auto u = random_orthonormal(5, 2, 1);
  const auto v = random_orthonormal(5, 3, 2);
  CHECK_THROWS_AS(sin_theta(u, v), lrd::ParameterError);
}

TEST_CASE("perturbation report on commuting diagonals") {
  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a(0, 0) = 1;
  b(1, 1) = 1;
  const auto report = perturbation_inequalities_report(a, b, 1);
  // sigma_1(A+B) = 1 while sigma_1(A)+sigma_1(B) = 2.
  CHECK(report.weyl_min_slack == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.holds());
}

TEST_CASE("perturbation report with zero perturbation") {
  const Matrix a = oracles::random_gaussian_matrix(4, 3, 9);
  const auto report = perturbation_inequalities_report(a, a, 2);
  CHECK(report.mirsky_frobenius_slack == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(report.holds());
}

TEST_CASE("perturbation inequalities hold on random pairs") {
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = oracles::random_gaussian_matrix(5, 4, 4000 + trial);
    const Matrix b = oracles::random_gaussian_matrix(5, 4, 5000 + trial);
    const auto report = perturbation_inequalities_report(a, b, 1 + trial % 4);
    CHECK(report.min_slack() >= -1e-9);
  }
}

TEST_CASE("norms on the named examples") {
  CHECK(operator_norm(diag3(3, 2, 1)) == doctest::Approx(3.0));
  CHECK(frobenius_norm(diag3(3, 2, 1)) == doctest::Approx(std::sqrt(14.0)));
  const Matrix zero = Matrix::Zero(4, 2);
  CHECK(operator_norm(zero) == 0.0);
  CHECK(frobenius_norm(zero) == 0.0);
  Vector u = oracles::random_gaussian_matrix(5, 1, 31).col(0);
  Vector v = oracles::random_gaussian_matrix(4, 1, 32).col(0);
  u.normalize();
  v.normalize();
  const Matrix rank1 = u * v.transpose();
  CHECK(std::abs(operator_norm(rank1) - 1.0) < 1e-12);
  CHECK(std::abs(frobenius_norm(rank1) - 1.0) < 1e-12);
}

TEST_CASE("random_orthonormal square case has unit determinant magnitude") {
  const auto q = random_orthonormal(6, 6, 77);
  CHECK(std::abs(std::abs(q.basis.determinant()) - 1.0) < 1e-9);
}

TEST_CASE("random_orthonormal is deterministic per seed") {
  const auto a = random_orthonormal(12, 5, 123);
  const auto b = random_orthonormal(12, 5, 123);
  CHECK((a.basis - b.basis).cwiseAbs().maxCoeff() == 0.0);
  const auto c = random_orthonormal(12, 5, 124);
  CHECK((a.basis - c.basis).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("random_orthonormal gram matrix is tight") {
  const auto q = random_orthonormal(50, 25, 1);
  Matrix gram = q.basis.transpose() * q.basis;
  gram.diagonal().array() -= 1.0;
  CHECK(gram.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("random_orthonormal rejects r > p") {
  CHECK_THROWS_AS(random_orthonormal(3, 4, 0), lrd::ParameterError);
}

TEST_CASE("perturbation_approx bound on random instances") {
  // ‖P_{U_perp} B‖_F ≤ 3‖B_(R)-B‖_F + 2 min(sqrt(R)‖Z‖, ‖Z‖_F), U_perp the
  // complement of the top-R left block of A = B + Z.
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix b = oracles::random_gaussian_matrix(6, 5, 7000 + trial);
    const Matrix z = 0.5 * oracles::random_gaussian_matrix(6, 5, 8000 + trial);
    const int R = 1 + trial % 4;
    const auto fa = svd(Matrix(b + z));
    const Matrix u_r = fa.U.leftCols(R);
    const Matrix proj_perp = Matrix::Identity(6, 6) - u_r * u_r.transpose();
    const double lhs = (proj_perp * b).norm();
    const auto fb = svd(b);
    double tail2 = 0;
    for (int i = fb.sigma.size() - 1; i >= R; --i) tail2 += fb.sigma(i) * fb.sigma(i);
    const double rhs = 3.0 * std::sqrt(tail2) +
                       2.0 * std::min(std::sqrt(double(R)) * operator_norm(z), z.norm());
    CHECK(lhs <= rhs + 1e-8);
  }
}

TEST_CASE("lb_forbuious lower bound on random instances") {
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = oracles::random_gaussian_matrix(5, 4, 9000 + trial);
    const Matrix b = oracles::random_gaussian_matrix(4, 4, 9500 + trial);
    const Vector sv = singular_values(b);
    const double smin = sv(sv.size() - 1);
    CHECK((a * b).norm() >= smin * a.norm() - 1e-9);
  }
}
