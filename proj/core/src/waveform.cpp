#include "swanson/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swanson/errors.hpp"
#include "swanson/oscillator.hpp"
#include "swanson/quadrature.hpp"

namespace swanson {
namespace {

using Poly = std::vector<Complex>;

constexpr int kNodeMargin = 8;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == Complex{0.0, 0.0}) p.pop_back();
  if (p.empty()) p.push_back(Complex{0.0, 0.0});
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {Complex{0.0, 0.0}};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

Poly times_x(const Poly& p) {
  Poly r(p.size() + 1, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < p.size(); ++k) r[k + 1] = p[k];
  return r;
}

// r += s * p
void axpy(Poly& r, Complex s, const Poly& p) {
  if (s == Complex{0.0, 0.0}) return;
  if (r.size() < p.size()) r.resize(p.size(), Complex{0.0, 0.0});
  for (std::size_t k = 0; k < p.size(); ++k) r[k] += s * p[k];
}

Complex horner(const Poly& p, double x) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// Coefficients of L = A d^2 + (B0 + B1 x) d + C0 + C1 x + C2 x^2.
struct DiffOp {
  double a = 0.0, b0 = 0.0, b1 = 0.0, c0 = 0.0, c1 = 0.0, c2 = 0.0;
};

DiffOp coefficients_of(WaveOperator which, double gamma) {
  const double s = std::pow(1.0 + gamma * gamma, 0.25);
  switch (which) {
    case WaveOperator::H:
      return {-0.25, 0.0, -gamma, -0.5 * gamma, 0.0, 1.0};
    case WaveOperator::H_adjoint:
      return {-0.25, 0.0, gamma, 0.5 * gamma, 0.0, 1.0};
    case WaveOperator::H0:
      return {-0.25, 0.0, 0.0, 0.0, 0.0, 1.0 + gamma * gamma};
    case WaveOperator::a:
      return {0.0, 0.5 / s, 0.0, 0.0, s, 0.0};
    case WaveOperator::a_star:
      return {0.0, -0.5 / s, 0.0, 0.0, s, 0.0};
    case WaveOperator::d:
      return {0.0, 0.5 / s, 0.0, 0.0, s + gamma / s, 0.0};
    case WaveOperator::d_ddag:
      return {0.0, -0.5 / s, 0.0, 0.0, s - gamma / s, 0.0};
  }
  throw ContractViolation("unknown operator");
}

// Integral of p(x) conj(q(x)) exp(-c x^2).
Complex gaussian_integral(const Poly& p, const Poly& q, double c, int extra_nodes = 0) {
  if (!(c > 0.0)) {
    throw DivergentIntegral("integrand does not decay: combined Gaussian exponent " +
                                std::to_string(c) + " <= 0",
                            c);
  }
  const int deg = static_cast<int>(p.size() + q.size()) - 2;
  const int nodes = deg / 2 + 1 + kNodeMargin + extra_nodes;
  const QuadratureRule rule = gauss_hermite_rule(nodes, c);
  return rule.integrate([&](double x) { return horner(p, x) * std::conj(horner(q, x)); });
}

}  // namespace

const char* to_string(WaveOperator op) noexcept {
  switch (op) {
    case WaveOperator::H:
      return "H";
    case WaveOperator::H_adjoint:
      return "H*";
    case WaveOperator::H0:
      return "H0";
    case WaveOperator::a:
      return "a";
    case WaveOperator::a_star:
      return "a*";
    case WaveOperator::d:
      return "d";
    case WaveOperator::d_ddag:
      return "d_ddag";
  }
  return "unknown";
}

HermiteGaussian::HermiteGaussian(std::vector<Complex> coeffs, double exponent)
    : coeffs_(std::move(coeffs)), exponent_(exponent) {
  if (!(exponent_ > 0.0)) {
    throw DivergentIntegral("non-normalizable Gaussian exponent " + std::to_string(exponent_),
                            exponent_);
  }
  trim(coeffs_);
}

bool HermiteGaussian::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Complex& c) { return c == Complex{0.0, 0.0}; });
}

Complex HermiteGaussian::polynomial(double x) const { return horner(coeffs_, x); }

Complex HermiteGaussian::operator()(double x) const {
  return horner(coeffs_, x) * std::exp(-exponent_ * x * x);
}

HermiteGaussian& HermiteGaussian::operator+=(const HermiteGaussian& other) {
  if (other.exponent_ != exponent_) {
    throw ContractViolation("cannot add HermiteGaussians with different exponents");
  }
  axpy(coeffs_, Complex{1.0, 0.0}, other.coeffs_);
  trim(coeffs_);
  return *this;
}

HermiteGaussian& HermiteGaussian::operator-=(const HermiteGaussian& other) {
  if (other.exponent_ != exponent_) {
    throw ContractViolation("cannot subtract HermiteGaussians with different exponents");
  }
  axpy(coeffs_, Complex{-1.0, 0.0}, other.coeffs_);
  trim(coeffs_);
  return *this;
}

HermiteGaussian& HermiteGaussian::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  trim(coeffs_);
  return *this;
}

HermiteGaussian operator+(HermiteGaussian a, const HermiteGaussian& b) { return a += b; }
HermiteGaussian operator-(HermiteGaussian a, const HermiteGaussian& b) { return a -= b; }
HermiteGaussian operator*(Complex s, HermiteGaussian a) { return a *= s; }

HermiteGaussian shift_exponent(const HermiteGaussian& f, double delta) {
  return HermiteGaussian(f.coeffs(), f.exponent() + delta);
}

HermiteGaussian apply_operator(const HermiteGaussian& f, WaveOperator which, double gamma) {
  const DiffOp op = coefficients_of(which, gamma);
  const Poly& p = f.coeffs();
  const double c = f.exponent();

  // With f = p e^{-c x^2}:
  //   f'  = (p' - 2c x p) e
  //   f'' = (p'' - 4c x p' - 2c p + 4c^2 x^2 p) e
  const Poly dp = derivative(p);
  const Poly ddp = derivative(dp);
  const Poly xp = times_x(p);
  const Poly xxp = times_x(xp);
  const Poly xdp = times_x(dp);

  Poly r;
  axpy(r, op.a, ddp);
  axpy(r, -4.0 * c * op.a, xdp);
  axpy(r, -2.0 * c * op.a + op.c0, p);
  axpy(r, 4.0 * c * c * op.a - 2.0 * c * op.b1 + op.c2, xxp);
  axpy(r, op.b0, dp);
  axpy(r, -2.0 * c * op.b0 + op.c1, xp);
  axpy(r, op.b1, xdp);
  return HermiteGaussian(std::move(r), c);
}

HermiteGaussian phi_n_unnormalized(double gamma, int n) {
  validate_gamma(gamma);
  if (n < 0) throw ContractViolation("phi_n: n must be >= 0");
  const double omega = std::sqrt(1.0 + gamma * gamma);
  HermiteGaussian f({Complex{1.0, 0.0}}, omega);
  for (int k = 0; k < n; ++k) f = apply_operator(f, WaveOperator::a_star, gamma);
  return f;
}

HermiteGaussian phi_n(double gamma, int n) {
  validate_gamma(gamma);
  if (n < 0) throw ContractViolation("phi_n: n must be >= 0");
  const double omega = std::sqrt(1.0 + gamma * gamma);
  HermiteGaussian f({Complex{1.0, 0.0}}, omega);
  f *= 1.0 / l2_norm(f);
  for (int k = 0; k < n; ++k) {
    f = apply_operator(f, WaveOperator::a_star, gamma);
    f *= 1.0 / l2_norm(f);
  }
  return f;
}

HermiteGaussian psi_n(double gamma, int n) {
  const HermiteGaussian phi = phi_n(gamma, n);
  return HermiteGaussian(phi.coeffs(), phi.exponent() + gamma);
}

HermiteGaussian psi_tilde_n(double gamma, int n) {
  const HermiteGaussian phi = phi_n(gamma, n);
  return HermiteGaussian(phi.coeffs(), phi.exponent() - gamma);
}

HermiteGaussian eigen_combination(double gamma, std::span<const Complex> coeffs, bool tilde) {
  if (coeffs.empty()) throw ContractViolation("eigen_combination: empty coefficient list");
  const double omega = std::sqrt(1.0 + gamma * gamma);
  HermiteGaussian acc({Complex{0.0, 0.0}}, tilde ? omega - gamma : omega + gamma);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == Complex{0.0, 0.0}) continue;
    const int n = static_cast<int>(k);
    acc += coeffs[k] * (tilde ? psi_tilde_n(gamma, n) : psi_n(gamma, n));
  }
  return acc;
}

Complex inner_product(const HermiteGaussian& f, const HermiteGaussian& g) {
  return gaussian_integral(f.coeffs(), g.coeffs(), f.exponent() + g.exponent());
}

double l2_norm(const HermiteGaussian& f) { return std::sqrt(inner_product(f, f).real()); }

Complex physical_inner_product(const HermiteGaussian& f, const HermiteGaussian& g, double gamma) {
  return gaussian_integral(f.coeffs(), g.coeffs(), f.exponent() + g.exponent() - 2.0 * gamma);
}

GramData gram_matrix(double gamma, int n_modes, int extra_nodes) {
  if (n_modes < 1) throw ContractViolation("gram_matrix: n_modes must be >= 1");
  std::vector<HermiteGaussian> psi;
  psi.reserve(static_cast<std::size_t>(n_modes));
  for (int i = 0; i < n_modes; ++i) psi.push_back(psi_n(gamma, i));

  CMatrix g(n_modes, n_modes);
  for (int i = 0; i < n_modes; ++i) {
    for (int j = i; j < n_modes; ++j) {
      const Complex v = gaussian_integral(psi[i].coeffs(), psi[j].coeffs(),
                                          psi[i].exponent() + psi[j].exponent(), extra_nodes);
      g(j, i) = v;  // <Psi_i, Psi_j>
      g(i, j) = std::conj(v);
    }
    g(i, i) = Complex(g(i, i).real(), 0.0);
  }
  OperatorMatrix q_inv(std::move(g), Structure::hermitian);
  HpdSqrtFamily family = hpd_sqrt_family(q_inv);
  return GramData{n_modes, std::move(q_inv), std::move(family.q), std::move(family.q_sqrt),
                  std::move(family.q_inv_sqrt)};
}

ResolutionCheck resolution_of_identity_check(const HermiteGaussian& f, const HermiteGaussian& g,
                                             int n_terms, double gamma) {
  if (n_terms < 0) throw ContractViolation("resolution_of_identity_check: n_terms must be >= 0");
  ResolutionCheck out;
  out.partial_sum = Complex{0.0, 0.0};
  for (int n = 0; n < n_terms; ++n) {
    const HermiteGaussian psi = psi_n(gamma, n);
    const HermiteGaussian psi_t = psi_tilde_n(gamma, n);
    out.partial_sum += inner_product(f, psi_t) * inner_product(psi, g) / inner_product(psi, psi_t);
  }
  out.reference = inner_product(f, g);
  out.gap = std::abs(out.partial_sum - out.reference);
  return out;
}

Complex transition_amplitude_function(const HermiteGaussian& f, const HermiteGaussian& g,
                                      double gamma) {
  const double ff = physical_inner_product(f, f, gamma).real();
  const double gg = physical_inner_product(g, g, gamma).real();
  if (!(ff > 0.0) || !(gg > 0.0)) {
    throw DegenerateState("transition amplitude of a state with zero physical norm");
  }
  return physical_inner_product(f, g, gamma) / std::sqrt(ff * gg);
}

}  // namespace swanson
