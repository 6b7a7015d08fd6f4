#include "swanson/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "swanson/errors.hpp"

namespace swanson {

const char* to_string(Structure s) noexcept {
  switch (s) {
    case Structure::general:
      return "general";
    case Structure::hermitian:
      return "hermitian";
    case Structure::real_tridiagonal:
      return "real-tridiagonal";
    case Structure::pentadiagonal:
      return "pentadiagonal";
  }
  return "unknown";
}

namespace {

bool outside_band_is_zero(const CMatrix& a, Index half_bandwidth) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (std::abs(i - j) > half_bandwidth && a(i, j) != Complex{0.0, 0.0}) return false;
    }
  }
  return true;
}

void validate(const CMatrix& a, Structure tag) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    throw ContractViolation("OperatorMatrix must be square with dim >= 1 (got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")");
  }
  switch (tag) {
    case Structure::general:
      return;
    case Structure::hermitian:
      for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i <= j; ++i) {
          if (a(i, j) != std::conj(a(j, i))) {
            throw ContractViolation("hermitian tag on a non-hermitian matrix");
          }
        }
      }
      return;
    case Structure::real_tridiagonal:
      if (!outside_band_is_zero(a, 1) || a.imag().cwiseAbs().maxCoeff() != 0.0) {
        throw ContractViolation("real-tridiagonal tag on a matrix with entries off the band");
      }
      return;
    case Structure::pentadiagonal:
      if (!outside_band_is_zero(a, 2)) {
        throw ContractViolation("pentadiagonal tag on a matrix with entries off the band");
      }
      return;
  }
}

struct Order {
  bool operator()(const Complex& a, const Complex& b) const {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  }
};

std::vector<Index> sorted_permutation(const std::vector<Complex>& values) {
  std::vector<Index> perm(values.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](Index a, Index b) { return Order{}(values[a], values[b]); });
  return perm;
}

}  // namespace

OperatorMatrix::OperatorMatrix(CMatrix entries, Structure tag)
    : entries_(std::move(entries)), tag_(tag) {
  validate(entries_, tag_);
}

OperatorMatrix OperatorMatrix::identity(Index dim) {
  return OperatorMatrix(CMatrix::Identity(dim, dim), Structure::hermitian);
}

OperatorMatrix OperatorMatrix::hermitian_from(const CMatrix& entries) {
  CMatrix h = entries;
  const Index n = h.rows();
  for (Index j = 0; j < n; ++j) {
    h(j, j) = Complex(h(j, j).real(), 0.0);
    for (Index i = j + 1; i < n; ++i) {
      const Complex v = 0.5 * (entries(i, j) + std::conj(entries(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return OperatorMatrix(std::move(h), Structure::hermitian);
}

bool OperatorMatrix::is_real() const { return entries_.imag().cwiseAbs().maxCoeff() == 0.0; }

double OperatorMatrix::max_norm() const { return max_abs(entries_); }

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void sort_spectrum(std::vector<Complex>& values) {
  std::stable_sort(values.begin(), values.end(), Order{});
}

Tridiagonal Tridiagonal::from_dense(const CMatrix& a) {
  if (a.rows() != a.cols() || !outside_band_is_zero(a, 1)) {
    throw ContractViolation("Tridiagonal::from_dense needs a square matrix with bandwidth 1");
  }
  const Index n = a.rows();
  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.lower.resize(static_cast<std::size_t>(std::max<Index>(n - 1, 0)));
  t.upper.resize(t.lower.size());
  for (Index i = 0; i < n; ++i) {
    t.diag[i] = a(i, i);
    if (i + 1 < n) {
      t.lower[i] = a(i + 1, i);
      t.upper[i] = a(i, i + 1);
    }
  }
  return t;
}

CMatrix Tridiagonal::to_dense() const {
  const Index n = dim();
  CMatrix a = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    a(i, i) = diag[i];
    if (i + 1 < n) {
      a(i + 1, i) = lower[i];
      a(i, i + 1) = upper[i];
    }
  }
  return a;
}

SpectralDecomposition eigendecompose_hermitian(const OperatorMatrix& a, double tolerance) {
  if (a.structure() != Structure::hermitian) {
    throw ContractViolation(std::string("eigendecompose_hermitian requires the hermitian tag, got ") +
                            to_string(a.structure()));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.entries(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    // Eigen's tridiagonal QL budget is 30 sweeps per eigenvalue.
    throw ConvergenceError("hermitian eigensolver did not converge",
                           static_cast<int>(30 * a.dim()));
  }
  SpectralDecomposition out;
  out.tolerance = tolerance;
  const RVector& w = solver.eigenvalues();  // ascending
  out.eigenvalues.reserve(static_cast<std::size_t>(w.size()));
  for (Index i = 0; i < w.size(); ++i) out.eigenvalues.emplace_back(w(i), 0.0);
  const CMatrix& v = solver.eigenvectors();
  out.residuals.reserve(out.eigenvalues.size());
  for (Index i = 0; i < w.size(); ++i) {
    out.residuals.push_back((a.entries() * v.col(i) - w(i) * v.col(i)).norm());
  }
  out.eigenvectors = v;
  return out;
}

SpectralDecomposition eigenvalues_general(const OperatorMatrix& a, bool want_vectors,
                                          double tolerance) {
  std::vector<Complex> values;
  CMatrix vectors;
  const Index n = a.dim();

  if (a.is_real()) {
    Eigen::EigenSolver<RMatrix> solver(a.entries().real(), want_vectors);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("real Schur iteration did not converge",
                             static_cast<int>(40 * n));
    }
    const auto& ev = solver.eigenvalues();
    values.assign(ev.data(), ev.data() + ev.size());
    if (want_vectors) vectors = solver.eigenvectors();
  } else {
    Eigen::ComplexEigenSolver<CMatrix> solver(a.entries(), want_vectors);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("complex Schur iteration did not converge",
                             static_cast<int>(30 * n));
    }
    const auto& ev = solver.eigenvalues();
    values.assign(ev.data(), ev.data() + ev.size());
    if (want_vectors) vectors = solver.eigenvectors();
  }

  const auto perm = sorted_permutation(values);
  SpectralDecomposition out;
  out.tolerance = tolerance;
  out.eigenvalues.reserve(values.size());
  for (Index p : perm) out.eigenvalues.push_back(values[p]);

  if (want_vectors) {
    CMatrix sorted(n, n);
    for (Index k = 0; k < n; ++k) {
      CVector col = vectors.col(perm[k]);
      const double norm = col.norm();
      if (norm > 0.0) col /= norm;
      sorted.col(k) = col;
    }
    out.residuals.reserve(values.size());
    for (Index k = 0; k < n; ++k) {
      out.residuals.push_back(
          (a.entries() * sorted.col(k) - out.eigenvalues[k] * sorted.col(k)).norm());
    }
    out.eigenvectors = std::move(sorted);
  }
  return out;
}

double smallest_singular_value(const OperatorMatrix& a) {
  Eigen::BDCSVD<CMatrix> svd(a.entries());
  const RVector& s = svd.singularValues();
  return s(s.size() - 1);
}

HpdSqrtFamily hpd_sqrt_family(const OperatorMatrix& q_inv, double tolerance) {
  const SpectralDecomposition dec = eigendecompose_hermitian(q_inv, tolerance);
  for (const Complex& lambda : dec.eigenvalues) {
    if (!(lambda.real() > 0.0)) {
      throw NotPositiveDefinite("matrix is not positive definite; eigenvalue " +
                                    std::to_string(lambda.real()),
                                lambda.real());
    }
  }
  const CMatrix& v = *dec.eigenvectors;
  const Index n = q_inv.dim();
  RVector inv(n), inv_sqrt(n), sqrt(n);
  for (Index i = 0; i < n; ++i) {
    const double l = dec.eigenvalues[i].real();
    inv(i) = 1.0 / l;
    inv_sqrt(i) = 1.0 / std::sqrt(l);
    sqrt(i) = std::sqrt(l);
  }
  auto compose = [&](const RVector& d) {
    return OperatorMatrix::hermitian_from(v * d.cast<Complex>().asDiagonal() * v.adjoint());
  };
  // Input is Q^{-1}: Q = V L^{-1} V*, Q^{1/2} = V L^{-1/2} V*, Q^{-1/2} = V L^{1/2} V*.
  return HpdSqrtFamily{compose(inv), compose(inv_sqrt), compose(sqrt)};
}

double condition_number(const CMatrix& a) {
  Eigen::BDCSVD<CMatrix> svd(a);
  const RVector& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

CMatrix matrix_exponential(const CMatrix& a) { return a.exp(); }

}  // namespace swanson
