#pragma once

#include <vector>

#include "swanson/linalg.hpp"
#include "swanson/waveform.hpp"

namespace swanson {

// Compression of H to span{Psi_0..Psi_{n-1}}:
//   H_hat = Q^{-1/2} diag(lambda) Q^{1/2},
//   Psi_hat_i = Q^{-1/2} E_i (eigenvectors of H_hat),
//   Psi_tilde_hat_i = Q^{1/2} E_i (eigenvectors of H_hat*).
struct CompressedModel {
  double gamma = 0.0;
  int n_modes = 0;
  GramData gram;
  OperatorMatrix h_hat;
  std::vector<double> lambdas;
  CMatrix psi_hat;        // columns
  CMatrix psi_tilde_hat;  // columns
};

CompressedModel compress(double gamma, int n_modes);

// Vector image of sum_k c_k Psi_k, i.e. sum_k c_k Psi_hat_k.
CVector mode_vector(const CompressedModel& model, const CVector& c);

// <<u, v>> = <Q u, v> = v* Q u
Complex physical_inner_product_vec(const CompressedModel& model, const CVector& u, const CVector& v);

// <<H_hat u, u>> / <<u, u>>; throws DegenerateState for u = 0.
double energy_expectation(const CompressedModel& model, const CVector& u);

// Full complex quotient, for checking that its imaginary part vanishes.
Complex energy_quotient(const CompressedModel& model, const CVector& u);

Complex transition_amplitude_vec(const CompressedModel& model, const CVector& u, const CVector& v);

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<CVector> coeffs_t;  // c_k(t) = exp(-i lambda_k t) c_k(0)
  std::vector<double> phys_norms;
  std::vector<double> std_norms;
};

// Spectral propagation of mode coefficients c0.
EvolutionTrace evolve(const CompressedModel& model, const CVector& c0, const std::vector<double>& t_grid);

// exp(-i H_hat t) u0 by dense matrix exponential; cross-check only.
CVector evolve_dense(const CompressedModel& model, const CVector& u0, double t);

std::vector<double> uniform_time_grid(double t_max, double dt);

}  // namespace swanson
