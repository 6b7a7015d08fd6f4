// Structured kernels for tridiagonal matrices: pivoted band LU (the LAPACK
// gttrf/gtts2 scheme), a Lanczos estimate of sigma_min, and Sturm bisection.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <Eigen/Eigenvalues>

#include "swanson/errors.hpp"
#include "swanson/linalg.hpp"

namespace swanson {
namespace {

double cabs1(const Complex& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// T = P L U with U having two superdiagonals.
class BandLu {
 public:
  explicit BandLu(const Tridiagonal& t)
      : n_(t.diag.size()), dl_(t.lower), d_(t.diag), du_(t.upper), du2_(n_ > 2 ? n_ - 2 : 0),
        swapped_(n_ > 1 ? n_ - 1 : 0, false) {
    for (std::size_t i = 0; i + 2 < n_; ++i) eliminate(i, true);
    if (n_ > 1) eliminate(n_ - 2, false);
    for (const Complex& v : d_) {
      if (v == Complex{0.0, 0.0}) singular_ = true;
    }
  }

  bool singular() const noexcept { return singular_; }

  // b <- T^{-1} b
  void solve(std::vector<Complex>& b) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (!swapped_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const Complex tmp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = tmp - dl_[i] * b[i];
      }
    }
    b[n_ - 1] /= d_[n_ - 1];
    if (n_ > 1) b[n_ - 2] = (b[n_ - 2] - du_[n_ - 2] * b[n_ - 1]) / d_[n_ - 2];
    for (std::size_t k = n_; k-- > 2;) {
      const std::size_t i = k - 2;
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
  }

  // b <- T^{-H} b
  void solve_adjoint(std::vector<Complex>& b) const {
    b[0] /= std::conj(d_[0]);
    if (n_ > 1) b[1] = (b[1] - std::conj(du_[0]) * b[0]) / std::conj(d_[1]);
    for (std::size_t i = 2; i < n_; ++i) {
      b[i] = (b[i] - std::conj(du_[i - 1]) * b[i - 1] - std::conj(du2_[i - 2]) * b[i - 2]) /
             std::conj(d_[i]);
    }
    for (std::size_t k = n_ - 1; k-- > 0;) {
      if (!swapped_[k]) {
        b[k] -= std::conj(dl_[k]) * b[k + 1];
      } else {
        const Complex tmp = b[k + 1];
        b[k + 1] = b[k] - std::conj(dl_[k]) * tmp;
        b[k] = tmp;
      }
    }
  }

 private:
  void eliminate(std::size_t i, bool has_second_super) {
    if (cabs1(d_[i]) >= cabs1(dl_[i])) {
      if (d_[i] != Complex{0.0, 0.0}) {
        const Complex fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      }
    } else {
      const Complex fact = d_[i] / dl_[i];
      d_[i] = dl_[i];
      dl_[i] = fact;
      const Complex tmp = du_[i];
      du_[i] = d_[i + 1];
      d_[i + 1] = tmp - fact * d_[i + 1];
      if (has_second_super) {
        du2_[i] = du_[i + 1];
        du_[i + 1] = -fact * du_[i + 1];
      }
      swapped_[i] = true;
    }
  }

  std::size_t n_;
  std::vector<Complex> dl_, d_, du_, du2_;
  std::vector<bool> swapped_;
  bool singular_ = false;
};

// Deterministic real start vector; real so that conj(T) reproduces the
// conjugate iteration bit for bit.
std::vector<Complex> start_vector(std::size_t n) {
  std::vector<Complex> v(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  double norm2 = 0.0;
  for (auto& x : v) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const double r = 0.5 + static_cast<double>(state >> 11) * 0x1.0p-53;
    x = Complex(r, 0.0);
    norm2 += r * r;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const std::vector<Complex>& a) {
  double s = 0.0;
  for (const Complex& z : a) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

double smallest_singular_value(const Tridiagonal& t) {
  const std::size_t n = t.diag.size();
  if (n == 0 || t.lower.size() + 1 != n || t.upper.size() + 1 != n) {
    throw ContractViolation("malformed tridiagonal matrix");
  }
  if (n == 1) return std::abs(t.diag[0]);

  const BandLu lu(t);
  if (lu.singular()) return 0.0;

  // Lanczos with full reorthogonalization on M = T^{-1} T^{-H}; sigma_min = lambda_max(M)^{-1/2}.
  constexpr double kRelTol = 1e-13;
  std::vector<std::vector<Complex>> basis;
  basis.reserve(n);
  basis.push_back(start_vector(n));
  std::vector<double> alpha, beta;
  double theta = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Complex> w = basis[k];
    lu.solve_adjoint(w);
    lu.solve(w);
    const double a = dot(basis[k], w).real();
    alpha.push_back(a);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const Complex c = dot(q, w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * q[i];
      }
    }
    const double b = norm(w);

    const bool last = (k + 1 == n);
    const bool check = last || k < 4 || k % 3 == 0 || b == 0.0;
    if (check) {
      const Index m = static_cast<Index>(alpha.size());
      RVector dg = Eigen::Map<const RVector>(alpha.data(), m);
      RVector sub = m > 1 ? RVector(Eigen::Map<const RVector>(beta.data(), m - 1)) : RVector();
      Eigen::SelfAdjointEigenSolver<RMatrix> small;
      small.computeFromTridiagonal(dg, sub, Eigen::ComputeEigenvectors);
      if (small.info() != Eigen::Success) {
        throw ConvergenceError("Lanczos projection eigensolver failed", static_cast<int>(k + 1));
      }
      theta = small.eigenvalues()(m - 1);
      const double bound = b * std::abs(small.eigenvectors()(m - 1, m - 1));
      if (last || bound <= kRelTol * theta) break;
    }
    if (b == 0.0 || !std::isfinite(b)) break;
    beta.push_back(b);
    for (auto& x : w) x /= b;
    basis.push_back(std::move(w));
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) return 0.0;
  return 1.0 / std::sqrt(theta);
}

double smallest_eigenvalue_symmetric_tridiagonal(const std::vector<double>& diag,
                                                 const std::vector<double>& off) {
  const std::size_t n = diag.size();
  if (n == 0 || off.size() + 1 != n) throw ContractViolation("malformed symmetric tridiagonal");

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
    scale = std::max(scale, std::abs(diag[i]) + r);
  }
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, scale * scale);

  // Number of eigenvalues strictly below x (Sylvester inertia of T - x I).
  auto count_below = [&](double x) {
    std::size_t count = 0;
    double q = diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
      q = diag[i] - x - off[i - 1] * off[i - 1] / q;
      if (std::abs(q) < pivmin) q = -pivmin;
      if (q < 0.0) ++count;
    }
    return count;
  };

  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + pivmin || mid == lo ||
        mid == hi) {
      break;
    }
    if (count_below(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace swanson
