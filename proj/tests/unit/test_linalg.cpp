#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "swanson/errors.hpp"
#include "swanson/linalg.hpp"

using namespace swanson;

namespace {

CMatrix random_complex(Index n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = Complex(dist(gen), dist(gen));
  return a;
}

CMatrix diag(std::initializer_list<double> d) {
  CMatrix m = CMatrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (double v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(OperatorMatrix, RejectsBadTags) {
  CMatrix a = CMatrix::Zero(3, 3);
  a(0, 1) = Complex(1.0, 1.0);
  EXPECT_THROW(OperatorMatrix(a, Structure::hermitian), ContractViolation);
  CMatrix t = CMatrix::Zero(4, 4);
  t(0, 3) = 1.0;
  EXPECT_THROW(OperatorMatrix(t, Structure::real_tridiagonal), ContractViolation);
  CMatrix c = CMatrix::Zero(2, 2);
  c(0, 1) = Complex(0.0, 1.0);
  EXPECT_THROW(OperatorMatrix(c, Structure::real_tridiagonal), ContractViolation);
  EXPECT_THROW(OperatorMatrix(CMatrix::Zero(2, 3)), ContractViolation);
  EXPECT_THROW(OperatorMatrix{CMatrix{}}, ContractViolation);
}

TEST(OperatorMatrix, HermitianFromIsExact) {
  const CMatrix a = random_complex(9, 3);
  const OperatorMatrix h = OperatorMatrix::hermitian_from(a);
  EXPECT_EQ(h.structure(), Structure::hermitian);
  EXPECT_EQ(max_abs(h.entries() - h.entries().adjoint()), 0.0);
}

TEST(EigenHermitian, Identity) {
  const auto d = eigendecompose_hermitian(OperatorMatrix::identity(4));
  ASSERT_EQ(d.eigenvalues.size(), 4u);
  for (auto v : d.eigenvalues) EXPECT_DOUBLE_EQ(v.real(), 1.0);
}

TEST(EigenHermitian, DiagonalSorted) {
  const auto d = eigendecompose_hermitian(OperatorMatrix(diag({3, 1, 2}), Structure::hermitian));
  EXPECT_NEAR(d.eigenvalues[0].real(), 1.0, 1e-15);
  EXPECT_NEAR(d.eigenvalues[1].real(), 2.0, 1e-15);
  EXPECT_NEAR(d.eigenvalues[2].real(), 3.0, 1e-15);
}

TEST(EigenHermitian, RandomReconstruction) {
  const OperatorMatrix a = OperatorMatrix::hermitian_from(random_complex(20, 11));
  const auto d = eigendecompose_hermitian(a);
  ASSERT_TRUE(d.eigenvectors.has_value());
  const CMatrix& v = *d.eigenvectors;
  RVector lam(20);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(d.eigenvalues[i].imag(), 0.0);
    lam(i) = d.eigenvalues[i].real();
  }
  EXPECT_LE(max_abs(v.adjoint() * v - CMatrix::Identity(20, 20)), 1e-10);
  const CMatrix rebuilt = v * lam.cast<Complex>().asDiagonal() * v.adjoint();
  EXPECT_LE(max_abs(a.entries() - rebuilt), 1e-10 * a.max_norm());
  for (double r : d.residuals) EXPECT_LE(r, d.tolerance);
}

TEST(EigenHermitian, RejectsNonHermitianTag) {
  EXPECT_THROW(eigendecompose_hermitian(OperatorMatrix(random_complex(3, 1))), ContractViolation);
}

TEST(EigenGeneral, UpperTriangular) {
  CMatrix a = CMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = Complex(2.0, 1.0);
  a(2, 2) = 5.0;
  a(0, 1) = 7.0;
  a(0, 2) = -3.0;
  a(1, 2) = Complex(0.0, 4.0);
  const auto d = eigenvalues_general(OperatorMatrix(a));
  EXPECT_NEAR(std::abs(d.eigenvalues[0] - Complex(1.0, 0.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(d.eigenvalues[1] - Complex(2.0, 1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(d.eigenvalues[2] - Complex(5.0, 0.0)), 0.0, 1e-12);
}

TEST(EigenGeneral, CompanionOfZSquaredMinusOne) {
  CMatrix a(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  const auto d = eigenvalues_general(OperatorMatrix(a));
  EXPECT_NEAR(std::abs(d.eigenvalues[0] - Complex(-1.0, 0.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(d.eigenvalues[1] - Complex(1.0, 0.0)), 0.0, 1e-14);
}

TEST(EigenGeneral, RotationHasImaginaryPair) {
  CMatrix a(2, 2);
  a << 0.0, 1.0, -1.0, 0.0;
  const auto d = eigenvalues_general(OperatorMatrix(a), true);
  // sorted by real part (both 0), then imaginary part
  EXPECT_NEAR(std::abs(d.eigenvalues[0] - Complex(0.0, -1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(d.eigenvalues[1] - Complex(0.0, 1.0)), 0.0, 1e-14);
  ASSERT_TRUE(d.eigenvectors.has_value());
  for (Index j = 0; j < 2; ++j) EXPECT_NEAR(d.eigenvectors->col(j).norm(), 1.0, 1e-12);
  for (double r : d.residuals) EXPECT_LE(r, 1e-12);
}

TEST(EigenGeneral, RandomResidualsAndTrace) {
  const CMatrix a = random_complex(25, 5);
  const auto d = eigenvalues_general(OperatorMatrix(a), true);
  Complex sum = 0.0;
  for (auto v : d.eigenvalues) sum += v;
  EXPECT_NEAR(std::abs(sum - a.trace()), 0.0, 1e-11);
  for (double r : d.residuals) EXPECT_LE(r, d.tolerance);
  for (std::size_t i = 1; i < d.eigenvalues.size(); ++i) {
    EXPECT_LE(d.eigenvalues[i - 1].real(), d.eigenvalues[i].real());
  }
}

TEST(SigmaMin, IdentityAndDiagonal) {
  EXPECT_NEAR(smallest_singular_value(OperatorMatrix::identity(5)), 1.0, 1e-14);
  EXPECT_NEAR(smallest_singular_value(OperatorMatrix(diag({3, 0.5, 2}))), 0.5, 1e-14);
}

TEST(SigmaMin, InverseNormOracle) {
  const CMatrix a = random_complex(15, 7);
  const double inv_norm = Eigen::JacobiSVD<CMatrix>(a.inverse()).singularValues()(0);
  EXPECT_NEAR(smallest_singular_value(OperatorMatrix(a)) * inv_norm, 1.0, 1e-8);
}

TEST(SigmaMin, RandomUnitVectorsNeverBeatIt) {
  const CMatrix a = random_complex(12, 21);
  const double s = smallest_singular_value(OperatorMatrix(a));
  std::mt19937 gen(4);
  std::normal_distribution<double> dist;
  for (int trial = 0; trial < 200; ++trial) {
    CVector v(12);
    for (Index i = 0; i < 12; ++i) v(i) = Complex(dist(gen), dist(gen));
    v.normalize();
    EXPECT_GE((a * v).norm(), s * (1.0 - 1e-8));
  }
}

TEST(SigmaMin, TridiagonalLanczosMatchesDense) {
  std::mt19937 gen(9);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (Index n : {1, 2, 3, 7, 40, 120}) {
    Tridiagonal t;
    for (Index i = 0; i < n; ++i) t.diag.emplace_back(dist(gen), dist(gen));
    for (Index i = 0; i + 1 < n; ++i) {
      t.lower.emplace_back(dist(gen), dist(gen));
      t.upper.emplace_back(dist(gen), 0.0);
    }
    const double dense = smallest_singular_value(OperatorMatrix(t.to_dense()));
    const double fast = smallest_singular_value(t);
    EXPECT_NEAR(fast, dense, std::max(1e-8 * dense, 1e-14)) << "n=" << n;
  }
}

TEST(SigmaMin, TridiagonalSingularGivesZero) {
  Tridiagonal t;
  t.diag = {1.0, 0.0, 1.0};
  t.lower = {0.0, 0.0};
  t.upper = {0.0, 0.0};
  EXPECT_EQ(smallest_singular_value(t), 0.0);
}

TEST(Tridiagonal, DenseRoundTrip) {
  CMatrix a = CMatrix::Zero(4, 4);
  for (Index i = 0; i < 4; ++i) a(i, i) = Complex(i, 1);
  for (Index i = 0; i < 3; ++i) {
    a(i + 1, i) = Complex(0.5, i);
    a(i, i + 1) = Complex(-1.0, 2.0 * i);
  }
  EXPECT_EQ(max_abs(Tridiagonal::from_dense(a).to_dense() - a), 0.0);
  a(0, 3) = 1.0;
  EXPECT_THROW(Tridiagonal::from_dense(a), ContractViolation);
}

TEST(Sturm, MatchesDenseSymmetric) {
  std::mt19937 gen(17);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int n : {1, 2, 5, 60}) {
    std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
    for (auto& x : d) x = dist(gen);
    for (auto& x : e) x = dist(gen);
    RMatrix m = RMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = e[i];
    const double ref = Eigen::SelfAdjointEigenSolver<RMatrix>(m).eigenvalues()(0);
    EXPECT_NEAR(smallest_eigenvalue_symmetric_tridiagonal(d, e), ref, 1e-12 * (1.0 + std::abs(ref)));
  }
}

TEST(HpdSqrt, Identity) {
  const auto f = hpd_sqrt_family(OperatorMatrix::identity(3));
  EXPECT_LE(max_abs(f.q.entries() - CMatrix::Identity(3, 3)), 1e-15);
  EXPECT_LE(max_abs(f.q_sqrt.entries() - CMatrix::Identity(3, 3)), 1e-15);
  EXPECT_LE(max_abs(f.q_inv_sqrt.entries() - CMatrix::Identity(3, 3)), 1e-15);
}

TEST(HpdSqrt, DiagonalInputIsInverseOfQ) {
  const auto f = hpd_sqrt_family(OperatorMatrix(diag({4, 9}), Structure::hermitian));
  EXPECT_LE(max_abs(f.q.entries() - diag({0.25, 1.0 / 9.0})), 1e-15);
  EXPECT_LE(max_abs(f.q_sqrt.entries() - diag({0.5, 1.0 / 3.0})), 1e-15);
  EXPECT_LE(max_abs(f.q_inv_sqrt.entries() - diag({2, 3})), 1e-15);
}

TEST(HpdSqrt, RandomResidualsAndCommutation) {
  const CMatrix r = random_complex(10, 2);
  const OperatorMatrix q_inv = OperatorMatrix::hermitian_from(r * r.adjoint() + 0.5 * CMatrix::Identity(10, 10));
  const auto f = hpd_sqrt_family(q_inv);
  const double kappa = condition_number(q_inv.entries());
  const CMatrix& qi = q_inv.entries();
  const CMatrix eye = CMatrix::Identity(10, 10);
  EXPECT_LE(max_abs(f.q.entries() * qi - eye), 1e-10 * kappa);
  EXPECT_LE(max_abs(f.q_sqrt.entries() * f.q_sqrt.entries() - f.q.entries()), 1e-10 * kappa);
  EXPECT_LE(max_abs(f.q_inv_sqrt.entries() * f.q_inv_sqrt.entries() - qi), 1e-10 * kappa);
  for (const CMatrix* m : {&f.q.entries(), &f.q_sqrt.entries(), &f.q_inv_sqrt.entries()}) {
    EXPECT_LE(max_abs(*m * qi - qi * *m), 1e-10 * kappa);
  }
  EXPECT_EQ(f.q_sqrt.structure(), Structure::hermitian);
}

TEST(HpdSqrt, NotPositiveDefiniteCarriesEigenvalue) {
  try {
    hpd_sqrt_family(OperatorMatrix(diag({2, -0.5, 1}), Structure::hermitian));
    FAIL() << "expected NotPositiveDefinite";
  } catch (const NotPositiveDefinite& e) {
    EXPECT_NEAR(e.eigenvalue(), -0.5, 1e-15);
  }
}

TEST(MatrixExponential, DiagonalAndRotation) {
  CMatrix a(2, 2);
  a << 0.0, -1.0, 1.0, 0.0;
  const CMatrix e = matrix_exponential(0.7 * a);
  EXPECT_NEAR(e(0, 0).real(), std::cos(0.7), 1e-14);
  EXPECT_NEAR(e(1, 0).real(), std::sin(0.7), 1e-14);
}

TEST(ConditionNumber, SingularIsInfinite) {
  EXPECT_TRUE(std::isinf(condition_number(diag({1, 0}))));
  EXPECT_NEAR(condition_number(diag({4, 0.5})), 8.0, 1e-13);
}
