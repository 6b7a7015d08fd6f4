#pragma once

#include <vector>

#include "swanson/linalg.hpp"

namespace swanson {

// Non-Hermiticity parameter gamma and the number of number-basis states kept.
class ModelConfig {
 public:
  ModelConfig(double gamma, Index dim);

  double gamma() const noexcept { return gamma_; }
  Index dim() const noexcept { return dim_; }
  // sqrt(1 + gamma^2), the level spacing.
  double omega() const noexcept { return omega_; }

  ModelConfig with_dim(Index dim) const { return ModelConfig(gamma_, dim); }

 private:
  double gamma_;
  Index dim_;
  double omega_;
};

void validate_gamma(double gamma);

struct ShiftMatrices {
  OperatorMatrix b;    // lowering: b(i, i+1) = sqrt(i+1)
  OperatorMatrix b_t;  // raising
};

struct QuadraticGenerators {
  OperatorMatrix a0;       // diag(0, 1, ..., dim-1)
  OperatorMatrix a_plus;   // (b^*)^2
  OperatorMatrix a_minus;  // b^2
};

struct ParityBlocks {
  OperatorMatrix even;
  OperatorMatrix odd;
};

// Coefficients of D = lower_b * B + lower_bt * B^T and
// D^ddag = raise_b * B + raise_bt * B^T.
struct LadderCoefficients {
  double lower_b = 0.0;
  double lower_bt = 0.0;
  double raise_b = 0.0;
  double raise_bt = 0.0;
};

struct LadderPair {
  OperatorMatrix d;
  OperatorMatrix d_ddag;
  double eta = 0.0;
  LadderCoefficients coefficients;
};

ShiftMatrices build_shift_matrices(const ModelConfig& cfg);
QuadraticGenerators build_quadratic_generators(const ModelConfig& cfg);

// H = A0 + (gamma/2)(A+ - A-) + I/2, pentadiagonal and real.
OperatorMatrix build_hamiltonian(const ModelConfig& cfg);

// Even-index and odd-index blocks of a pentadiagonal H with only the 0 and
// +-2 diagonals populated.
ParityBlocks parity_split(const OperatorMatrix& h);

// (n + 1/2) sqrt(1 + gamma^2), n = 0..n_max.
std::vector<double> analytic_spectrum(double gamma, int n_max);

LadderCoefficients ladder_coefficients(double gamma);
LadderPair build_ladder(const ModelConfig& cfg);

// (1 - gamma - omega) / (1 + gamma + omega)
double eta(double gamma);

// Components of the D-annihilated vector: entry 2k = eta^k sqrt((2k-1)!!/(2k)!!).
RVector ground_vector(const ModelConfig& cfg);

// (D^ddag)^n applied to the ground vector. Throws TailContamination when the
// last n + 2 components carry more than 1e-8 of the norm.
RVector excited_vector(const ModelConfig& cfg, int n);

// max |(M)_{ij}| over the leading (dim - k) x (dim - k) block.
double leading_block_max(const CMatrix& m, Index k);

// ||v[0 : dim-k]||_2
double leading_norm(const CVector& v, Index k);

}  // namespace swanson
