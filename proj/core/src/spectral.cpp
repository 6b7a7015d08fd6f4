#include "swanson/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "swanson/errors.hpp"

namespace swanson {
namespace {

struct RealTridiagonal {
  std::vector<double> diag;
  std::vector<double> lower;  // (i+1, i)
  std::vector<double> upper;  // (i, i+1)
};

RealTridiagonal to_real_tridiagonal(const OperatorMatrix& block) {
  const Index n = block.dim();
  RealTridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.lower.resize(static_cast<std::size_t>(n - 1));
  t.upper.resize(static_cast<std::size_t>(n - 1));
  for (Index i = 0; i < n; ++i) {
    t.diag[i] = block(i, i).real();
    if (i + 1 < n) {
      t.lower[i] = block(i + 1, i).real();
      t.upper[i] = block(i, i + 1).real();
    }
  }
  return t;
}

std::vector<RealTridiagonal> hamiltonian_blocks(const ModelConfig& cfg) {
  const ParityBlocks blocks = parity_split(build_hamiltonian(cfg));
  return {to_real_tridiagonal(blocks.even), to_real_tridiagonal(blocks.odd)};
}

// z I - block
Tridiagonal shifted(const RealTridiagonal& b, Complex z) {
  Tridiagonal t;
  const std::size_t n = b.diag.size();
  t.diag.resize(n);
  t.lower.resize(n - 1);
  t.upper.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = z - b.diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t.lower[i] = Complex(-b.lower[i], 0.0);
    t.upper[i] = Complex(-b.upper[i], 0.0);
  }
  return t;
}

double sigma_min_blocks(const std::vector<RealTridiagonal>& blocks, Complex z) {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& b : blocks) {
    if (b.diag.empty()) continue;
    s = std::min(s, smallest_singular_value(shifted(b, z)));
  }
  return s;
}

double support_from_blocks(const std::vector<RealTridiagonal>& blocks, double theta) {
  const Complex e_minus = std::polar(1.0, -theta);
  const Complex e_plus = std::polar(1.0, theta);
  const double c = std::cos(theta);
  double h = std::numeric_limits<double>::infinity();
  for (const auto& b : blocks) {
    if (b.diag.empty()) continue;
    std::vector<double> diag(b.diag.size());
    std::vector<double> off(b.lower.size());
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = c * b.diag[i];
    // Hermitian off-diagonal (e^{-i t} l + e^{i t} u) / 2; a diagonal unitary
    // gauge makes it real and nonnegative.
    for (std::size_t i = 0; i < off.size(); ++i) {
      off[i] = std::abs(0.5 * (e_minus * b.lower[i] + e_plus * b.upper[i]));
    }
    h = std::min(h, smallest_eigenvalue_symmetric_tridiagonal(diag, off));
  }
  return h;
}

void check_theta(double theta) {
  if (!(std::abs(theta) < std::numbers::pi / 2)) {
    throw DomainError("theta must lie strictly inside (-pi/2, pi/2): Re(e^{-i theta} H) is unbounded below");
  }
}

}  // namespace

std::vector<Complex> truncated_spectrum(const ModelConfig& cfg) {
  const ParityBlocks blocks = parity_split(build_hamiltonian(cfg));
  std::vector<Complex> values = eigenvalues_general(blocks.even).eigenvalues;
  const auto odd = eigenvalues_general(blocks.odd).eigenvalues;
  values.insert(values.end(), odd.begin(), odd.end());
  sort_spectrum(values);
  return values;
}

std::vector<ConvergedEigenvalue> converged_spectrum(const ModelConfig& cfg, int n_wanted,
                                                    Index max_dim) {
  if (n_wanted < 1) throw ContractViolation("converged_spectrum: n_wanted must be >= 1");
  if (n_wanted > cfg.dim()) {
    throw ContractViolation("converged_spectrum: n_wanted exceeds the truncation dim");
  }
  max_dim = std::max(max_dim, 2 * cfg.dim());

  Index n = cfg.dim();
  std::vector<Complex> coarse = truncated_spectrum(cfg);
  int doublings = 0;
  while (true) {
    const std::vector<Complex> fine = truncated_spectrum(cfg.with_dim(2 * n));
    ++doublings;
    std::vector<ConvergedEigenvalue> out;
    std::vector<int> unconverged;
    for (int k = 0; k < n_wanted; ++k) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& c : coarse) best = std::min(best, std::abs(c - fine[k]));
      out.push_back({fine[k], best});
      if (!(best <= kConvergenceTolerance)) unconverged.push_back(k);
    }
    if (unconverged.empty()) return out;
    if (4 * n > max_dim) {
      std::string list;
      for (int k : unconverged) list += (list.empty() ? "" : ",") + std::to_string(k);
      throw ConvergenceError("eigenvalues not converged at dim " + std::to_string(2 * n) +
                                 ": indices " + list,
                             doublings, unconverged.front());
    }
    n *= 2;
    coarse = fine;
  }
}

double PseudospectrumGrid::re_at(int ix) const {
  return re_range.lo + (re_range.hi - re_range.lo) * ix / (resolution - 1);
}

double PseudospectrumGrid::im_at(int iy) const {
  return im_range.lo + (im_range.hi - im_range.lo) * iy / (resolution - 1);
}

double resolvent_sigma_min(const ModelConfig& cfg, Complex z) {
  return sigma_min_blocks(hamiltonian_blocks(cfg), z);
}

PseudospectrumGrid pseudospectrum(const ModelConfig& cfg, const Region& region, int resolution,
                                  unsigned threads) {
  if (resolution < 2) throw ContractViolation("pseudospectrum: resolution must be >= 2");
  auto finite = [](const Interval& i) { return std::isfinite(i.lo) && std::isfinite(i.hi); };
  if (!finite(region.re) || !finite(region.im) || !(region.re.lo < region.re.hi) ||
      !(region.im.lo < region.im.hi)) {
    throw ContractViolation("pseudospectrum: region must be bounded and non-degenerate");
  }

  PseudospectrumGrid grid;
  grid.re_range = region.re;
  grid.im_range = region.im;
  grid.resolution = resolution;
  grid.dim_used = cfg.dim();
  grid.gamma = cfg.gamma();
  grid.sigma_min.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);

  const auto blocks = hamiltonian_blocks(cfg);
  std::atomic<int> next_row{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (int iy = next_row++; iy < resolution; iy = next_row++) {
        const double y = grid.im_at(iy);
        for (int ix = 0; ix < resolution; ++ix) {
          grid.sigma_min[static_cast<std::size_t>(iy) * resolution + ix] =
              sigma_min_blocks(blocks, Complex(grid.re_at(ix), y));
        }
      }
    } catch (...) {
      next_row = resolution;  // stop the other workers early
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(resolution));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return grid;
}

std::vector<double> theta_samples(int theta_count) {
  if (theta_count < 3) throw ContractViolation("theta_count must be >= 3");
  const int m = theta_count % 2 == 0 ? theta_count + 1 : theta_count;
  const int half = m / 2;
  std::vector<double> thetas(static_cast<std::size_t>(m), 0.0);
  for (int k = 1; k <= half; ++k) {
    const double t = std::numbers::pi / 2 * static_cast<double>(k) / (half + 1);
    thetas[half + k] = t;
    thetas[half - k] = -t;
  }
  return thetas;
}

double support_function(const ModelConfig& cfg, double theta) {
  check_theta(theta);
  return support_from_blocks(hamiltonian_blocks(cfg), theta);
}

double support_function_dense(const ModelConfig& cfg, double theta) {
  check_theta(theta);
  const CMatrix h = build_hamiltonian(cfg).entries();
  const CMatrix re_part =
      0.5 * (std::polar(1.0, -theta) * h + std::polar(1.0, theta) * h.adjoint());
  return eigendecompose_hermitian(OperatorMatrix::hermitian_from(re_part)).eigenvalues.front().real();
}

NumericalRangeBoundary numerical_range_boundary(const ModelConfig& cfg, int theta_count) {
  NumericalRangeBoundary out;
  out.thetas = theta_samples(theta_count);
  out.dim_used = cfg.dim();
  out.gamma = cfg.gamma();

  const auto blocks = hamiltonian_blocks(cfg);
  const auto blocks_fine = hamiltonian_blocks(cfg.with_dim(2 * cfg.dim()));
  for (double theta : out.thetas) {
    const double h = support_from_blocks(blocks, theta);
    out.support_values.push_back(h);
    out.support_estimates.push_back(std::abs(h - support_from_blocks(blocks_fine, theta)));
  }
  for (std::size_t k = 0; k + 1 < out.thetas.size(); ++k) {
    const double t1 = out.thetas[k], t2 = out.thetas[k + 1];
    const double h1 = out.support_values[k], h2 = out.support_values[k + 1];
    const double det = std::sin(t2 - t1);
    out.boundary_points.push_back({(h1 * std::sin(t2) - h2 * std::sin(t1)) / det,
                                   (std::cos(t1) * h2 - std::cos(t2) * h1) / det});
  }
  return out;
}

HyperbolaComparison hyperbola_reference(double gamma, const std::vector<double>& thetas, Index dim) {
  validate_gamma(gamma);
  HyperbolaComparison out;
  out.gamma = gamma;
  const ModelConfig cfg(gamma, dim);
  out.lowest_eigenvalue = converged_spectrum(cfg.with_dim(std::min<Index>(dim, 200)), 1).front().value.real();

  const auto blocks = hamiltonian_blocks(cfg);
  if (gamma == 0.0) {
    out.degenerate = true;
    for (double theta : thetas) {
      check_theta(theta);
      const double h = support_from_blocks(blocks, theta);
      out.rows.push_back({theta, std::numeric_limits<double>::quiet_NaN(), h,
                          std::numeric_limits<double>::quiet_NaN()});
    }
    return out;
  }

  const HyperbolaRow* worst = nullptr;
  const HyperbolaRow* at_zero = nullptr;
  for (double theta : thetas) {
    check_theta(theta);
    const double c = std::cos(theta), s = std::sin(theta);
    const double radicand = c * c - 4.0 * gamma * gamma * s * s;
    HyperbolaRow row;
    row.theta = theta;
    row.printed_support = radicand >= 0.0 ? 0.5 * (c - std::sqrt(radicand))
                                          : std::numeric_limits<double>::quiet_NaN();
    row.numeric_support = support_from_blocks(blocks, theta);
    row.difference = std::abs(row.printed_support - row.numeric_support);
    out.rows.push_back(row);
  }
  for (const auto& row : out.rows) {
    if (row.theta == 0.0) at_zero = &row;
    const bool bad = !(row.difference <= kPrintedFormulaTolerance);
    if (bad && (worst == nullptr || !(row.difference <= worst->difference))) worst = &row;
  }
  if (worst != nullptr) {
    const HyperbolaRow& r = (at_zero != nullptr && !(at_zero->difference <= kPrintedFormulaTolerance))
                                ? *at_zero
                                : *worst;
    out.discrepancies.push_back(
        {"support_line_formula",
         "printed support distance (1/2)(cos t - sqrt(cos^2 t - 4 g^2 sin^2 t)) disagrees with the "
         "lowest eigenvalue of Re(e^{-i t} H_N) at t = " + std::to_string(r.theta),
         r.printed_support, r.numeric_support,
         std::isnan(r.difference) ? std::numeric_limits<double>::max() : r.difference});
  }

  // Vertex of (x - 1/2)^2 - y^2 / (4 g^2) = 1/4, x >= 1.
  out.printed_vertex = 1.0;
  if (out.lowest_eigenvalue < out.printed_vertex - kPrintedFormulaTolerance) {
    out.discrepancies.push_back(
        {"hyperbola_containment",
         "lowest eigenvalue lies left of the printed hyperbola vertex x = 1, outside the claimed "
         "numerical-range region",
         out.printed_vertex, out.lowest_eigenvalue, out.printed_vertex - out.lowest_eigenvalue});
  }
  return out;
}

AccretivityReport accretivity_check(const ModelConfig& cfg, const std::vector<Complex>& lambdas) {
  const CMatrix h = build_hamiltonian(cfg).entries();
  const Index n = cfg.dim();
  AccretivityReport report;
  for (const Complex& lambda : lambdas) {
    if (!(lambda.real() < 0.0)) {
      throw ContractViolation("accretivity_check: samples need Re(lambda) < 0");
    }
    const CMatrix shifted_h = h - lambda * CMatrix::Identity(n, n);
    const double s = smallest_singular_value(OperatorMatrix(shifted_h));
    const double lhs = s > 0.0 ? 1.0 / s : std::numeric_limits<double>::infinity();
    const double rhs = 1.0 / std::abs(lambda.real());
    report.samples.push_back(lambda);
    report.lhs.push_back(lhs);
    report.rhs.push_back(rhs);
    report.margin.push_back(rhs - lhs);
    if (!(lhs <= rhs)) report.all_pass = false;
  }
  return report;
}

std::vector<BasisQuality> basis_quality(double gamma, const std::vector<Index>& dims) {
  std::vector<BasisQuality> out;
  for (Index dim : dims) {
    if (dim < 4) throw ContractViolation("basis_quality: each dim must be >= 4");
    const ModelConfig cfg(gamma, dim);
    const auto dec = eigenvalues_general(build_hamiltonian(cfg), true);
    out.push_back({dim, condition_number(*dec.eigenvectors)});
  }
  return out;
}

}  // namespace swanson
