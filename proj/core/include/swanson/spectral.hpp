#pragma once

#include <string>
#include <vector>

#include "swanson/linalg.hpp"
#include "swanson/oscillator.hpp"

namespace swanson {

struct ConvergedEigenvalue {
  Complex value;
  double error_estimate = 0.0;  // |lambda(N) - lambda(2N)|
};

inline constexpr double kConvergenceTolerance = 1e-8;
inline constexpr Index kMaxSpectrumDim = 800;

// The n_wanted lowest (by real part) eigenvalues of H, compared between
// truncations N and 2N, doubling N until every estimate is <= 1e-8.
// Values are those of the larger truncation.
std::vector<ConvergedEigenvalue> converged_spectrum(const ModelConfig& cfg, int n_wanted,
                                                    Index max_dim = kMaxSpectrumDim);

// All eigenvalues of the truncation, via the parity blocks.
std::vector<Complex> truncated_spectrum(const ModelConfig& cfg);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct Region {
  Interval re{-2.0, 14.0};
  Interval im{-7.0, 7.0};
};

// Row-major over (im, re): sigma_min[iy * resolution + ix].
struct PseudospectrumGrid {
  Interval re_range;
  Interval im_range;
  int resolution = 0;
  std::vector<double> sigma_min;
  Index dim_used = 0;
  double gamma = 0.0;

  double re_at(int ix) const;
  double im_at(int iy) const;
  double at(int ix, int iy) const { return sigma_min[static_cast<std::size_t>(iy) * resolution + ix]; }
};

// sigma_min(z I - H_N) on a resolution x resolution grid. Rows are split
// across worker threads; each node writes only its own slot.
PseudospectrumGrid pseudospectrum(const ModelConfig& cfg, const Region& region, int resolution,
                                  unsigned threads = 0);

// sigma_min(z I - H_N) for a single z through the parity blocks.
double resolvent_sigma_min(const ModelConfig& cfg, Complex z);

struct BoundaryPoint {
  double x = 0.0;
  double y = 0.0;
};

struct NumericalRangeBoundary {
  std::vector<double> thetas;
  std::vector<double> support_values;     // h(theta) at dim N
  std::vector<double> support_estimates;  // |h_N - h_2N|
  std::vector<BoundaryPoint> boundary_points;  // adjacent support-line intersections
  Index dim_used = 0;
  double gamma = 0.0;
};

// Symmetric samples strictly inside (-pi/2, pi/2) that always contain 0;
// an even count is rounded up to the next odd number.
std::vector<double> theta_samples(int theta_count);

// Lowest eigenvalue of (e^{-i theta} H_N + e^{i theta} H_N^T) / 2 via the
// parity blocks and Sturm bisection.
double support_function(const ModelConfig& cfg, double theta);

// Same quantity from a dense hermitian eigendecomposition.
double support_function_dense(const ModelConfig& cfg, double theta);

NumericalRangeBoundary numerical_range_boundary(const ModelConfig& cfg, int theta_count);

struct HyperbolaRow {
  double theta = 0.0;
  double printed_support = 0.0;  // NaN where the printed square root is imaginary
  double numeric_support = 0.0;
  double difference = 0.0;
};

struct Discrepancy {
  std::string name;
  std::string description;
  double printed = 0.0;
  double numeric = 0.0;
  double residual = 0.0;
};

struct HyperbolaComparison {
  double gamma = 0.0;
  bool degenerate = false;  // gamma == 0: W(H) is the ray [1/2, inf)
  std::vector<HyperbolaRow> rows;
  double printed_vertex = 1.0;
  double lowest_eigenvalue = 0.0;
  std::vector<Discrepancy> discrepancies;
};

inline constexpr double kPrintedFormulaTolerance = 1e-6;

// Tabulates the printed support-line and hyperbola formulas against the
// numeric support function and the converged spectrum. Never throws on
// disagreement; disagreements beyond 1e-6 are listed as discrepancies.
HyperbolaComparison hyperbola_reference(double gamma, const std::vector<double>& thetas,
                                        Index dim = 400);

struct AccretivityReport {
  std::vector<Complex> samples;
  std::vector<double> lhs;  // ||(H_N - lambda)^{-1}||_2
  std::vector<double> rhs;  // 1 / |Re lambda|
  std::vector<double> margin;
  bool all_pass = true;
};

AccretivityReport accretivity_check(const ModelConfig& cfg, const std::vector<Complex>& lambdas);

struct BasisQuality {
  Index dim = 0;
  double condition_number = 0.0;
};

std::vector<BasisQuality> basis_quality(double gamma, const std::vector<Index>& dims);

}  // namespace swanson
