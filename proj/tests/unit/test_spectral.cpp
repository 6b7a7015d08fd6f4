#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "swanson/errors.hpp"
#include "swanson/oscillator.hpp"
#include "swanson/spectral.hpp"

using namespace swanson;

namespace {

// Support function of the untruncated operator, obtained by rotating
// Re(e^{-i t} H) to a scaled harmonic oscillator.
double support_closed_form(double gamma, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return 0.5 * std::sqrt(c * c - gamma * gamma * s * s);
}

double dist_to_set(Complex z, const std::vector<Complex>& set) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& w : set) d = std::min(d, std::abs(z - w));
  return d;
}

}  // namespace

TEST(ConvergedSpectrum, HarmonicBaseline) {
  const auto s = converged_spectrum(ModelConfig(0.0, 20), 5);
  ASSERT_EQ(s.size(), 5u);
  for (int k = 0; k < 5; ++k) {
    EXPECT_NEAR(s[k].value.real(), k + 0.5, 1e-13);
    EXPECT_LE(s[k].error_estimate, 1e-13);
  }
}

TEST(ConvergedSpectrum, MatchesClosedForm) {
  for (double g : {0.5, -0.5, 0.9}) {
    const auto s = converged_spectrum(ModelConfig(g, 200), 10);
    const auto a = analytic_spectrum(g, 9);
    for (int k = 0; k < 10; ++k) {
      EXPECT_NEAR(s[k].value.real(), a[k], 1e-8) << g << " " << k;
      EXPECT_LE(std::abs(s[k].value.imag()), 1e-8);
      EXPECT_LE(s[k].error_estimate, kConvergenceTolerance);
    }
  }
}

TEST(ConvergedSpectrum, ReportsUnconvergedIndices) {
  try {
    converged_spectrum(ModelConfig(0.9, 20), 20, 40);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    ASSERT_TRUE(e.index().has_value());
    EXPECT_NE(std::string(e.what()).find("indices"), std::string::npos);
  }
  EXPECT_THROW(converged_spectrum(ModelConfig(0.5, 10), 0), ContractViolation);
}

TEST(TruncatedSpectrum, MatchesDenseSolver) {
  const ModelConfig cfg(0.5, 30);
  const auto fast = truncated_spectrum(cfg);
  const auto dense = eigenvalues_general(build_hamiltonian(cfg)).eigenvalues;
  ASSERT_EQ(fast.size(), dense.size());
  for (std::size_t i = 0; i < fast.size(); ++i) EXPECT_LE(std::abs(fast[i] - dense[i]), 1e-9);
}

TEST(Resolvent, StructuredMatchesDense) {
  const ModelConfig cfg(0.5, 40);
  const CMatrix h = build_hamiltonian(cfg).entries();
  for (Complex z : {Complex(0.3, 0.2), Complex(4.0, -2.5), Complex(-3.0, 0.0), Complex(9.0, 6.0)}) {
    const double dense = smallest_singular_value(OperatorMatrix(z * CMatrix::Identity(40, 40) - h));
    EXPECT_NEAR(resolvent_sigma_min(cfg, z), dense, 1e-8 * dense + 1e-14) << z;
  }
}

TEST(Resolvent, SpecExamplePoints) {
  const ModelConfig cfg(0.5, 300);
  EXPECT_LE(resolvent_sigma_min(cfg, Complex(0.5590169944, 0.0)), 1e-6);
  EXPECT_GE(resolvent_sigma_min(cfg, Complex(-5.0, 0.0)), 5.0 - 1e-6);
}

TEST(Pseudospectrum, GridInvariants) {
  const ModelConfig cfg(0.5, 60);
  Region region;
  region.re = {-1.0, 8.0};
  region.im = {-3.0, 3.0};
  const auto grid = pseudospectrum(cfg, region, 15, 3);
  ASSERT_EQ(grid.sigma_min.size(), 225u);
  EXPECT_EQ(grid.re_at(0), -1.0);
  EXPECT_EQ(grid.re_at(14), 8.0);
  const auto spec = truncated_spectrum(cfg);
  for (int iy = 0; iy < 15; ++iy) {
    for (int ix = 0; ix < 15; ++ix) {
      const Complex z(grid.re_at(ix), grid.im_at(iy));
      EXPECT_GE(grid.at(ix, iy), 0.0);
      EXPECT_LE(grid.at(ix, iy), dist_to_set(z, spec) + 1e-10);
      // The grid is symmetric in im, so row 14 - iy holds conj(z).
      EXPECT_NEAR(grid.at(ix, iy), grid.at(ix, 14 - iy), 1e-12);
    }
  }
}

TEST(Pseudospectrum, ThreadCountDoesNotChangeOutput) {
  const ModelConfig cfg(0.3, 50);
  Region region;
  region.re = {0.0, 5.0};
  region.im = {-1.0, 2.0};
  const auto a = pseudospectrum(cfg, region, 9, 1);
  const auto b = pseudospectrum(cfg, region, 9, 4);
  EXPECT_EQ(a.sigma_min, b.sigma_min);
}

TEST(Pseudospectrum, Validation) {
  const ModelConfig cfg(0.3, 10);
  EXPECT_THROW(pseudospectrum(cfg, Region{}, 1), ContractViolation);
  Region bad;
  bad.re = {1.0, 1.0};
  EXPECT_THROW(pseudospectrum(cfg, bad, 4), ContractViolation);
  bad.re = {0.0, std::numeric_limits<double>::infinity()};
  EXPECT_THROW(pseudospectrum(cfg, bad, 4), ContractViolation);
}

TEST(ThetaSamples, SymmetricWithZero) {
  const auto t = theta_samples(8);
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(t[4], 0.0);
  for (std::size_t k = 0; k < t.size(); ++k) {
    EXPECT_EQ(t[k], -t[t.size() - 1 - k]);
    EXPECT_LT(std::abs(t[k]), std::numbers::pi / 2);
  }
  EXPECT_THROW(theta_samples(2), ContractViolation);
}

TEST(SupportFunction, AtZeroIsOneHalf) {
  for (double g : {0.0, 0.5, -0.786, 0.9}) {
    EXPECT_NEAR(support_function(ModelConfig(g, 400), 0.0), 0.5, 1e-12) << g;
  }
}

TEST(SupportFunction, SturmMatchesDense) {
  for (double g : {0.5, -0.3}) {
    const ModelConfig cfg(g, 80);
    for (double t : {-1.2, -0.3, 0.0, 0.3, 0.9, 1.5}) {
      EXPECT_NEAR(support_function(cfg, t), support_function_dense(cfg, t), 1e-10) << g << " " << t;
    }
  }
}

TEST(SupportFunction, EvenInTheta) {
  const ModelConfig cfg(0.5, 400);
  for (double t : {0.1, 0.3, 0.77, 1.3}) {
    EXPECT_NEAR(support_function(cfg, t), support_function(cfg, -t), 1e-10);
  }
  EXPECT_NEAR(support_function_dense(ModelConfig(0.5, 60), 0.3), support_function_dense(ModelConfig(0.5, 60), -0.3), 1e-10);
}

TEST(SupportFunction, MonotoneInTruncation) {
  for (double t : {0.2, 0.6, 1.0, 1.4}) {
    double prev = support_function(ModelConfig(0.5, 25), t);
    for (Index n : {50, 100, 200}) {
      const double cur = support_function(ModelConfig(0.5, n), t);
      EXPECT_GE(prev, cur - 1e-10) << t << " " << n;
      prev = cur;
    }
  }
}

TEST(SupportFunction, ConvergesToClosedForm) {
  const ModelConfig cfg(0.5, 400);
  for (double t : {0.0, 0.2, 0.5, 0.9}) {
    EXPECT_NEAR(support_function(cfg, t), support_closed_form(0.5, t), 1e-8) << t;
  }
}

TEST(SupportFunction, DomainError) {
  const ModelConfig cfg(0.5, 10);
  EXPECT_THROW(support_function(cfg, std::numbers::pi / 2), DomainError);
  EXPECT_THROW(support_function(cfg, -2.0), DomainError);
}

TEST(NumericalRange, BoundaryInvariants) {
  const ModelConfig cfg(0.5, 200);
  const auto nr = numerical_range_boundary(cfg, 41);
  ASSERT_EQ(nr.thetas.size(), 41u);
  ASSERT_EQ(nr.boundary_points.size(), 40u);
  const double h0 = nr.support_values[20];
  EXPECT_NEAR(h0, 0.5, 1e-12);
  for (std::size_t k = 0; k < nr.boundary_points.size(); ++k) {
    const auto& p = nr.boundary_points[k];
    EXPECT_GE(p.x, h0 - 1e-8);
    const auto& q = nr.boundary_points[nr.boundary_points.size() - 1 - k];
    EXPECT_NEAR(p.y, -q.y, 1e-8);
    EXPECT_NEAR(p.x, q.x, 1e-8);
    // Each point lies on both of its support lines.
    for (std::size_t j : {k, k + 1}) {
      const double t = nr.thetas[j];
      EXPECT_NEAR(p.x * std::cos(t) + p.y * std::sin(t), nr.support_values[j], 1e-8);
    }
  }
  for (double e : nr.support_estimates) EXPECT_GE(e, 0.0);
}

TEST(NumericalRange, HermitianIsRay) {
  const auto nr = numerical_range_boundary(ModelConfig(0.0, 40), 21);
  for (const auto& p : nr.boundary_points) EXPECT_LE(std::abs(p.y), 1e-8);
}

TEST(NumericalRange, SpectralInclusion) {
  const double g = 0.5;
  const auto spec = converged_spectrum(ModelConfig(g, 200), 10);
  const auto nr = numerical_range_boundary(ModelConfig(g, 400), 31);
  for (const auto& e : spec) {
    for (std::size_t k = 0; k < nr.thetas.size(); ++k) {
      const double t = nr.thetas[k];
      EXPECT_GE(e.value.real() * std::cos(t) + e.value.imag() * std::sin(t) - nr.support_values[k], -1e-6);
    }
  }
}

TEST(HyperbolaReference, FlagsBothPrintedFormulas) {
  const auto rep = hyperbola_reference(0.5, theta_samples(11));
  EXPECT_FALSE(rep.degenerate);
  EXPECT_NEAR(rep.lowest_eigenvalue, 0.5590169944, 1e-9);
  ASSERT_EQ(rep.discrepancies.size(), 2u);
  EXPECT_EQ(rep.discrepancies[0].name, "support_line_formula");
  EXPECT_EQ(rep.discrepancies[0].printed, 0.0);
  EXPECT_NEAR(rep.discrepancies[0].numeric, 0.5, 1e-12);
  EXPECT_EQ(rep.discrepancies[1].name, "hyperbola_containment");
  EXPECT_EQ(rep.discrepancies[1].printed, 1.0);
  for (const auto& row : rep.rows) {
    if (row.theta == 0.0) EXPECT_EQ(row.printed_support, 0.0);
  }
}

TEST(HyperbolaReference, DegenerateAtZeroGamma) {
  const auto rep = hyperbola_reference(0.0, theta_samples(5), 50);
  EXPECT_TRUE(rep.degenerate);
  EXPECT_TRUE(rep.discrepancies.empty());
  EXPECT_EQ(rep.rows.size(), 5u);
}

TEST(Accretivity, SpecExamples) {
  const ModelConfig cfg(0.5, 120);
  const auto rep = accretivity_check(cfg, {Complex(-1.0, 0.0), Complex(-10.0, 3.0)});
  EXPECT_TRUE(rep.all_pass);
  EXPECT_LE(rep.lhs[0], 1.0);
  EXPECT_LE(rep.lhs[1], 0.1);
  const auto base = accretivity_check(ModelConfig(0.0, 30), {Complex(-1.0, 0.0)});
  EXPECT_NEAR(base.lhs[0], 2.0 / 3.0, 1e-12);
  EXPECT_THROW(accretivity_check(cfg, {Complex(0.0, 1.0)}), ContractViolation);
}

TEST(Accretivity, RandomSamplesMatchStructuredRoute) {
  const ModelConfig cfg(0.5, 80);
  std::mt19937 gen(12);
  std::uniform_real_distribution<double> re(-10.0, -0.1), im(-8.0, 8.0);
  std::vector<Complex> lam;
  for (int i = 0; i < 10; ++i) lam.emplace_back(re(gen), im(gen));
  const auto rep = accretivity_check(cfg, lam);
  EXPECT_TRUE(rep.all_pass);
  for (std::size_t i = 0; i < lam.size(); ++i) {
    EXPECT_NEAR(1.0 / rep.lhs[i], resolvent_sigma_min(cfg, lam[i]), 1e-10);
  }
}

TEST(BasisQuality, HermitianIsOne) {
  for (const auto& b : basis_quality(0.0, {8, 30})) EXPECT_NEAR(b.condition_number, 1.0, 1e-8);
}

TEST(BasisQuality, GrowsWithDim) {
  const auto q = basis_quality(0.5, {20, 40});
  EXPECT_GE(q[0].condition_number, 1.0);
  EXPECT_LT(q[0].condition_number, q[1].condition_number);
  EXPECT_THROW(basis_quality(0.5, {3}), ContractViolation);
}
