// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "swanson/cli/verify.hpp"
#include "swanson/errors.hpp"
#include "swanson/swanson.hpp"

using namespace swanson;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double rel_residual(const HermiteGaussian& r, const HermiteGaussian& f) { return l2_norm(r) / l2_norm(f); }

std::vector<Complex> random_coefficients(std::mt19937& gen, int n) {
  std::normal_distribution<double> dist;
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (auto& z : c) z = Complex(dist(gen), dist(gen));
  return c;
}

Outcome spectrum_reproduction() {
  double err = 0.0, imag = 0.0, slowest = 0.0;
  for (double gamma : {0.2, 0.5, 0.786, 0.9}) {
    const auto start = std::chrono::steady_clock::now();
    const auto spec = converged_spectrum(ModelConfig(gamma, 400), 10);
    slowest = std::max(slowest, seconds_since(start));
    const auto exact = analytic_spectrum(gamma, 9);
    for (int n = 0; n < 10; ++n) {
      err = std::max(err, std::abs(spec[n].value.real() - exact[n]));
      imag = std::max(imag, std::abs(spec[n].value.imag()));
    }
  }
  return {err <= 1e-8 && imag <= 1e-8 && slowest <= 10.0,
          fmt("max |Re err| %.2e, max |Im| %.2e (<= 1e-8), slowest gamma %.2f s (<= 10 s)", err, imag, slowest)};
}

Outcome ladder_algebra() {
  const ModelConfig cfg(0.5, 50);
  const double w = cfg.omega();
  const auto lad = build_ladder(cfg);
  const CMatrix& d = lad.d.entries();
  const CMatrix& dd = lad.d_ddag.entries();
  const CMatrix h = build_hamiltonian(cfg).entries();
  const CMatrix eye = CMatrix::Identity(50, 50);
  const double r1 = leading_block_max(commutator(d, dd) - eye, 2);
  const double r2 = leading_block_max(commutator(h, dd) - w * dd, 2);
  const double r3 = leading_block_max(commutator(h, d) + w * d, 2);
  const double r4 = leading_block_max(h - w * (dd * d + 0.5 * eye), 2);
  const double worst = std::max({r1, r2, r3, r4});
  return {worst <= 1e-10, fmt("[D,Dd]-I %.1e, [H,Dd]-wDd %.1e, [H,D]+wD %.1e, H-w(DdD+1/2) %.1e (<= 1e-10)", r1, r2,
                              r3, r4)};
}

Outcome ground_vector_check() {
  const double e = eta(0.5);
  const double e_err = std::abs(e - (-0.2360679775));
  const ModelConfig cfg(0.5, 50);
  const CVector v = ground_vector(cfg).cast<Complex>();
  const double r = leading_norm(build_ladder(cfg).d.entries() * v, 2) / v.norm();
  return {e_err <= 1e-9 && r <= 1e-10, fmt("eta %.10f (|err| %.1e <= 1e-9), ||D Y0||/||Y0|| %.1e (<= 1e-10)", e, e_err, r)};
}

Outcome biorthogonality() {
  const double gamma = 0.5;
  std::vector<HermiteGaussian> psi, psi_t;
  for (int n = 0; n <= 12; ++n) {
    psi.push_back(psi_n(gamma, n));
    psi_t.push_back(psi_tilde_n(gamma, n));
  }
  double r_bi = 0.0, r_phys = 0.0;
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; n <= 12; ++n) {
      const double delta = m == n ? 1.0 : 0.0;
      r_bi = std::max(r_bi, std::abs(inner_product(psi[m], psi_t[n]) - delta));
      r_phys = std::max(r_phys, std::abs(physical_inner_product(psi[m], psi[n], gamma) - delta));
    }
  }
  return {r_bi <= 1e-12 && r_phys <= 1e-12,
          fmt("max |<Psi_m,Psi~_n> - d| %.1e, max |<<Psi_m,Psi_n>> - d| %.1e (<= 1e-12)", r_bi, r_phys)};
}

Outcome eigenfunction_residuals() {
  const double gamma = 0.5;
  const double w = std::sqrt(1.0 + gamma * gamma);
  double r_direct = 0.0, r_factored = 0.0;
  for (int n = 0; n <= 12; ++n) {
    const HermiteGaussian p = psi_n(gamma, n);
    const Complex lam((n + 0.5) * w);
    r_direct = std::max(r_direct, rel_residual(apply_operator(p, WaveOperator::H, gamma) - lam * p, p));
    HermiteGaussian f = apply_operator(apply_operator(p, WaveOperator::d, gamma), WaveOperator::d_ddag, gamma);
    f += Complex(0.5) * p;
    f *= w;
    r_factored = std::max(r_factored, rel_residual(f - lam * p, p));
  }
  return {r_direct <= 1e-10 && r_factored <= 1e-10,
          fmt("direct %.1e, factorized %.1e (<= 1e-10), n <= 12", r_direct, r_factored)};
}

Outcome compression() {
  const CompressedModel m = compress(0.5, 8);
  const CMatrix& q = m.gram.q.entries();
  const CMatrix& h = m.h_hat.entries();
  const double r_ph = max_abs(q * h - h.adjoint() * q);
  const auto eig = eigenvalues_general(m.h_hat).eigenvalues;
  double r_eig = 0.0;
  for (int k = 0; k < 8; ++k) r_eig = std::max(r_eig, std::abs(eig[k] - m.lambdas[k]));
  const double r_bi = max_abs(m.psi_tilde_hat.adjoint() * m.psi_hat - CMatrix::Identity(8, 8));
  return {r_ph <= 1e-10 && r_eig <= 1e-10 && r_bi <= 1e-10,
          fmt("QH-H*Q %.1e, eigenvalues %.1e, biorthogonality %.1e (<= 1e-10)", r_ph, r_eig, r_bi)};
}

Outcome dynamics() {
  const double gamma = 0.5;
  const CompressedModel m = compress(gamma, 8);
  CVector c0 = CVector::Zero(8);
  c0(0) = c0(2) = 1.0 / std::sqrt(2.0);
  const auto trace = evolve(m, c0, uniform_time_grid(10.0, 0.01));
  const auto [pmin, pmax] = std::minmax_element(trace.phys_norms.begin(), trace.phys_norms.end());
  const auto [smin, smax] = std::minmax_element(trace.std_norms.begin(), trace.std_norms.end());
  const double drift = (*pmax - *pmin) / *pmax;
  const double swing = *smax - *smin;
  // Recurrence checked on the vector image: u(T) = e^{-i phi} u(0) for some phase.
  const double period = 2.0 * std::numbers::pi / std::sqrt(1.0 + gamma * gamma);
  const CVector u0 = mode_vector(m, c0);
  const CVector uT = mode_vector(m, evolve(m, c0, {period}).coeffs_t.front());
  const Complex phase = u0.dot(uT) / u0.squaredNorm();
  const double r_rec = (uT - phase * u0).norm() / u0.norm();
  return {drift <= 1e-10 && swing > 1e-6 && r_rec <= 1e-10 && std::abs(std::abs(phase) - 1.0) <= 1e-10,
          fmt("phys drift %.1e (<= 1e-10), std swing %.6f (> 1e-6), recurrence %.1e (<= 1e-10)", drift, swing, r_rec)};
}

Outcome accretivity() {
  std::mt19937 gen(20240917);
  std::uniform_real_distribution<double> re(-10.0, -0.1), im(-10.0, 10.0);
  std::vector<Complex> lam;
  for (int i = 0; i < 50; ++i) lam.emplace_back(re(gen), im(gen));
  const auto rep = accretivity_check(ModelConfig(0.5, 300), lam);
  double worst = -kInf;
  for (std::size_t i = 0; i < lam.size(); ++i) worst = std::max(worst, rep.lhs[i] * std::abs(lam[i].real()));
  return {rep.all_pass && worst <= 1.0,
          fmt("max ||(H-l)^-1|| |Re l| = %.6f over 50 samples (<= 1)", worst)};
}

double max_dist_ratio(const PseudospectrumGrid& grid, const std::vector<Complex>& eigs) {
  double best = 0.0;
  for (int iy = 0; iy < grid.resolution; ++iy) {
    for (int ix = 0; ix < grid.resolution; ++ix) {
      const Complex z(grid.re_at(ix), grid.im_at(iy));
      double d = kInf;
      for (const auto& e : eigs) d = std::min(d, std::abs(z - e));
      const double s = grid.at(ix, iy);
      best = std::max(best, s > 0.0 ? d / s : kInf);
    }
  }
  return best;
}

std::vector<Complex> eigenvalues_covering(double gamma, const Region& region) {
  const ModelConfig cfg(gamma, 200);
  const int n = static_cast<int>(std::ceil(region.re.hi / cfg.omega() + 1.5));
  std::vector<Complex> eigs;
  for (const auto& e : converged_spectrum(cfg, n)) eigs.push_back(e.value);
  return eigs;
}

Outcome pseudospectrum_nontriviality() {
  const Region region;
  const auto start = std::chrono::steady_clock::now();
  const auto grid = pseudospectrum(ModelConfig(0.5, 300), region, 200);
  const double elapsed = seconds_since(start);
  const double ratio = max_dist_ratio(grid, eigenvalues_covering(0.5, region));
  const auto grid0 = pseudospectrum(ModelConfig(0.0, 300), region, 200);
  const double ratio0 = max_dist_ratio(grid0, eigenvalues_covering(0.0, region));
  return {ratio >= 10.0 && ratio0 < 2.0 && elapsed <= 180.0,
          fmt("max dist/sigma %.3g at gamma 0.5 (>= 10), %.6f at gamma 0 (< 2), grid 200x200 in %.1f s (<= 180 s)",
              ratio, ratio0, elapsed)};
}

Outcome numerical_range() {
  const ModelConfig cfg(0.5, 400);
  const double h0 = support_function(cfg, 0.0);
  const auto nr = numerical_range_boundary(cfg, 101);
  double r_even = 0.0;
  const std::size_t n = nr.thetas.size();
  for (std::size_t k = 0; k < n; ++k) r_even = std::max(r_even, std::abs(nr.support_values[k] - nr.support_values[n - 1 - k]));
  double inclusion = kInf;
  for (const auto& e : converged_spectrum(ModelConfig(0.5, 200), 10)) {
    for (std::size_t k = 0; k < n; ++k) {
      const double t = nr.thetas[k];
      inclusion = std::min(inclusion, e.value.real() * std::cos(t) + e.value.imag() * std::sin(t) - nr.support_values[k]);
    }
  }

  const auto report = cli::run_verification(0.5);
  int derived_fail = 0;
  for (const auto& c : report.checks) {
    if (c.source == cli::ExpectedSource::derived_from_operators && c.status != cli::CheckStatus::pass) ++derived_fail;
  }
  int flagged = 0;
  for (const char* name : {"numerical_range_support_formula", "numerical_range_hyperbola_vertex"}) {
    const cli::Check* c = report.find(name);
    if (c != nullptr && c->status == cli::CheckStatus::paper_discrepancy) ++flagged;
  }
  const bool ok = std::abs(h0 - 0.5) <= 1e-8 && r_even <= 1e-10 && inclusion >= -1e-6 && derived_fail == 0 &&
                  flagged == 2;
  return {ok, fmt("h(0) %.10f, evenness %.1e, min eigenvalue margin %.3g (>= -1e-6), support/hyperbola formulas "
                  "flagged %d/2, derived failures %d",
                  h0, r_even, inclusion, flagged, derived_fail)};
}

Outcome consonance() {
  const double gamma = 0.5;
  const CompressedModel m = compress(gamma, 6);
  std::mt19937 gen(99);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto a = random_coefficients(gen, 6);
    const auto c = random_coefficients(gen, 6);
    const CVector av = Eigen::Map<const CVector>(a.data(), 6);
    const CVector cv = Eigen::Map<const CVector>(c.data(), 6);
    const Complex vec = transition_amplitude_vec(m, mode_vector(m, av), mode_vector(m, cv));
    const Complex fun = transition_amplitude_function(eigen_combination(gamma, a), eigen_combination(gamma, c), gamma);
    worst = std::max(worst, std::abs(vec - fun));
  }
  return {worst <= 1e-10, fmt("max |A_function - A_compressed| %.1e over 20 pairs (<= 1e-10)", worst)};
}

Outcome basis_condition() {
  // Regression constants from the first verified run.
  constexpr double kFrozen[3] = {7.033888e+01, 4.791436e+03, 4.865164e+07};
  constexpr double kFrozenTolerance = 1e-4;  // relative
  const auto q = basis_quality(0.5, {20, 40, 80});
  const auto q0 = basis_quality(0.0, {80});
  const bool increasing = q[0].condition_number < q[1].condition_number && q[1].condition_number < q[2].condition_number;
  const bool separated = q[2].condition_number > 10.0 * q0[0].condition_number;
  double drift = 0.0;
  for (int k = 0; k < 3; ++k) drift = std::max(drift, std::abs(q[k].condition_number / kFrozen[k] - 1.0));
  return {increasing && separated && drift <= kFrozenTolerance,
          fmt("kappa %.6e, %.6e, %.6e (increasing), gamma 0 at 80: %.3g, frozen drift %.1e (<= 1e-4)",
              q[0].condition_number, q[1].condition_number, q[2].condition_number, q0[0].condition_number, drift)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"spectrum reproduction", spectrum_reproduction},
      {"ladder algebra", ladder_algebra},
      {"ground vector", ground_vector_check},
      {"biorthogonality and physical orthonormality", biorthogonality},
      {"eigenfunction residuals", eigenfunction_residuals},
      {"compression", compression},
      {"dynamics", dynamics},
      {"accretivity", accretivity},
      {"pseudospectrum non-triviality", pseudospectrum_nontriviality},
      {"numerical range", numerical_range},
      {"consonance", consonance},
      {"eigenvector condition growth", basis_condition},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
