#pragma once

#include <span>
#include <vector>

#include "swanson/linalg.hpp"

namespace swanson {

// f(x) = p(x) exp(-c x^2) with p given by ascending coefficients.
class HermiteGaussian {
 public:
  // Throws DivergentIntegral if exponent <= 0. Trailing zero coefficients are
  // dropped; the zero polynomial is stored as {0}.
  HermiteGaussian(std::vector<Complex> coeffs, double exponent);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  double exponent() const noexcept { return exponent_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept;

  Complex operator()(double x) const;
  Complex polynomial(double x) const;

  HermiteGaussian& operator+=(const HermiteGaussian& other);
  HermiteGaussian& operator-=(const HermiteGaussian& other);
  HermiteGaussian& operator*=(Complex s);

 private:
  std::vector<Complex> coeffs_;
  double exponent_;
};

HermiteGaussian operator+(HermiteGaussian a, const HermiteGaussian& b);
HermiteGaussian operator-(HermiteGaussian a, const HermiteGaussian& b);
HermiteGaussian operator*(Complex s, HermiteGaussian a);

enum class WaveOperator { H, H_adjoint, H0, a, a_star, d, d_ddag };

const char* to_string(WaveOperator op) noexcept;

// exp(-gamma x^2) prefactor moved into the Gaussian: exponent + delta.
HermiteGaussian shift_exponent(const HermiteGaussian& f, double delta);

// Unit-normalized eigenfunctions of H0: ground state exp(-sqrt(1+gamma^2) x^2),
// excited states by repeated creation, renormalized after each step.
HermiteGaussian phi_n(double gamma, int n);

// (a*)^n Phi_0 without normalization, Phi_0 = exp(-sqrt(1+gamma^2) x^2).
HermiteGaussian phi_n_unnormalized(double gamma, int n);

// Psi_n = exp(-gamma x^2) Phi_n, eigenfunctions of H.
HermiteGaussian psi_n(double gamma, int n);

// Psi~_n = exp(+gamma x^2) Phi_n, eigenfunctions of H*, <Psi_m, Psi~_n> = delta.
HermiteGaussian psi_tilde_n(double gamma, int n);

// sum_k c_k Psi_k (or Psi~_k when tilde is set)
HermiteGaussian eigen_combination(double gamma, std::span<const Complex> coeffs, bool tilde = false);

// int f(x) conj(g(x)) dx, exact by Gauss-Hermite quadrature.
Complex inner_product(const HermiteGaussian& f, const HermiteGaussian& g);
double l2_norm(const HermiteGaussian& f);

// <<f, g>> = <exp(gamma x^2) f, exp(gamma x^2) g>
Complex physical_inner_product(const HermiteGaussian& f, const HermiteGaussian& g, double gamma);

// Exact action of the differential operator on the representation.
HermiteGaussian apply_operator(const HermiteGaussian& f, WaveOperator which, double gamma);

struct GramData {
  int n_modes = 0;
  OperatorMatrix q_inv;  // (q_inv)(j, i) = <Psi_i, Psi_j>
  OperatorMatrix q;
  OperatorMatrix q_sqrt;
  OperatorMatrix q_inv_sqrt;
};

// extra_nodes adds quadrature nodes beyond the exactness budget (used by
// refinement checks).
GramData gram_matrix(double gamma, int n_modes, int extra_nodes = 0);

struct ResolutionCheck {
  Complex partial_sum;
  Complex reference;
  double gap = 0.0;
};

// f in span{Psi_n}, g in span{Psi~_n}.
ResolutionCheck resolution_of_identity_check(const HermiteGaussian& f, const HermiteGaussian& g,
                                             int n_terms, double gamma);

// <<f, g>> / sqrt(<<f, f>> <<g, g>>)
Complex transition_amplitude_function(const HermiteGaussian& f, const HermiteGaussian& g,
                                      double gamma);

}  // namespace swanson
