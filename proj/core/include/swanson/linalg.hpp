#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace swanson {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Structure { general, hermitian, real_tridiagonal, pentadiagonal };

const char* to_string(Structure s) noexcept;

// Dense complex square matrix carrying a structure tag. The tag is checked
// when the matrix is built, so downstream kernels can trust it.
class OperatorMatrix {
 public:
  OperatorMatrix(CMatrix entries, Structure tag = Structure::general);

  static OperatorMatrix identity(Index dim);

  // Tags as hermitian after replacing entries by (A + A*)/2, which is
  // exactly hermitian in floating point.
  static OperatorMatrix hermitian_from(const CMatrix& entries);

  Index dim() const noexcept { return entries_.rows(); }
  Structure structure() const noexcept { return tag_; }
  const CMatrix& entries() const noexcept { return entries_; }
  Complex operator()(Index i, Index j) const { return entries_(i, j); }

  bool is_real() const;
  double max_norm() const;

 private:
  CMatrix entries_;
  Structure tag_;
};

// Eigenvalues sorted by ascending real part, then ascending imaginary part.
struct SpectralDecomposition {
  std::vector<Complex> eigenvalues;
  std::optional<CMatrix> eigenvectors;  // unit-norm columns, same order
  std::vector<double> residuals;        // ||A v - lambda v||_2 per pair
  double tolerance = 0.0;
};

struct HpdSqrtFamily {
  OperatorMatrix q;
  OperatorMatrix q_sqrt;
  OperatorMatrix q_inv_sqrt;
};

// Complex tridiagonal matrix stored by diagonals. lower[i] = A(i+1, i),
// upper[i] = A(i, i+1).
struct Tridiagonal {
  std::vector<Complex> lower;
  std::vector<Complex> diag;
  std::vector<Complex> upper;

  Index dim() const noexcept { return static_cast<Index>(diag.size()); }
  static Tridiagonal from_dense(const CMatrix& a);
  CMatrix to_dense() const;
};

inline constexpr double kDefaultTolerance = 1e-10;

SpectralDecomposition eigendecompose_hermitian(const OperatorMatrix& a,
                                               double tolerance = kDefaultTolerance);

SpectralDecomposition eigenvalues_general(const OperatorMatrix& a, bool want_vectors = false,
                                          double tolerance = kDefaultTolerance);

double smallest_singular_value(const OperatorMatrix& a);

// sigma_min of a tridiagonal matrix. Lanczos on (T*T)^{-1} with a pivoted
// band LU; O(n) per solve, so it is the workhorse for resolvent grids.
double smallest_singular_value(const Tridiagonal& t);

// Lowest eigenvalue of the real symmetric tridiagonal matrix with the given
// diagonal and off-diagonal (|off| is used, so hermitian tridiagonals work
// after the diagonal unitary gauge). Sturm-count bisection.
double smallest_eigenvalue_symmetric_tridiagonal(const std::vector<double>& diag,
                                                 const std::vector<double>& off);

HpdSqrtFamily hpd_sqrt_family(const OperatorMatrix& q_inv, double tolerance = kDefaultTolerance);

// max |entry|
double max_abs(const CMatrix& m);

// Spectral condition number ||A||_2 ||A^{-1}||_2; +inf for singular input.
double condition_number(const CMatrix& a);

// exp(a) by scaling and squaring.
CMatrix matrix_exponential(const CMatrix& a);

void sort_spectrum(std::vector<Complex>& values);

}  // namespace swanson
