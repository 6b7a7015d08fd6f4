#include "swanson/physics.hpp"

#include <cmath>
#include <string>

#include "swanson/errors.hpp"
#include "swanson/oscillator.hpp"

namespace swanson {
namespace {

void check_length(const CompressedModel& model, const CVector& v, const char* what) {
  if (v.size() != model.n_modes) {
    throw ContractViolation(std::string(what) + ": expected length " + std::to_string(model.n_modes) +
                            ", got " + std::to_string(v.size()));
  }
}

}  // namespace

CompressedModel compress(double gamma, int n_modes) {
  if (n_modes < 1) throw ContractViolation("compress: n_modes must be >= 1");
  GramData gram = gram_matrix(gamma, n_modes);
  std::vector<double> lambdas = analytic_spectrum(gamma, n_modes - 1);

  RVector l = Eigen::Map<const RVector>(lambdas.data(), n_modes);
  const CMatrix& q_inv_sqrt = gram.q_inv_sqrt.entries();
  const CMatrix& q_sqrt = gram.q_sqrt.entries();
  CMatrix h_hat = q_inv_sqrt * l.cast<Complex>().asDiagonal() * q_sqrt;

  CompressedModel model{gamma,
                        n_modes,
                        std::move(gram),
                        OperatorMatrix(std::move(h_hat)),
                        std::move(lambdas),
                        CMatrix(),
                        CMatrix()};
  model.psi_hat = model.gram.q_inv_sqrt.entries();
  model.psi_tilde_hat = model.gram.q_sqrt.entries();
  return model;
}

CVector mode_vector(const CompressedModel& model, const CVector& c) {
  check_length(model, c, "mode_vector");
  return model.psi_hat * c;
}

Complex physical_inner_product_vec(const CompressedModel& model, const CVector& u, const CVector& v) {
  check_length(model, u, "physical_inner_product_vec");
  check_length(model, v, "physical_inner_product_vec");
  return v.dot(model.gram.q.entries() * u);  // Eigen's dot conjugates the left operand
}

Complex energy_quotient(const CompressedModel& model, const CVector& u) {
  check_length(model, u, "energy_expectation");
  const double norm = physical_inner_product_vec(model, u, u).real();
  if (!(norm > 0.0)) throw DegenerateState("energy expectation of the zero vector");
  const CVector hu = model.h_hat.entries() * u;
  return physical_inner_product_vec(model, hu, u) / norm;
}

double energy_expectation(const CompressedModel& model, const CVector& u) {
  return energy_quotient(model, u).real();
}

Complex transition_amplitude_vec(const CompressedModel& model, const CVector& u, const CVector& v) {
  const double uu = physical_inner_product_vec(model, u, u).real();
  const double vv = physical_inner_product_vec(model, v, v).real();
  if (!(uu > 0.0) || !(vv > 0.0)) {
    throw DegenerateState("transition amplitude of a state with zero physical norm");
  }
  return physical_inner_product_vec(model, u, v) / std::sqrt(uu * vv);
}

EvolutionTrace evolve(const CompressedModel& model, const CVector& c0, const std::vector<double>& t_grid) {
  check_length(model, c0, "evolve");
  if (c0.squaredNorm() == 0.0) throw DegenerateState("evolve: zero initial state");
  EvolutionTrace trace;
  trace.times = t_grid;
  trace.coeffs_t.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!std::isfinite(t)) throw ContractViolation("evolve: non-finite time");
    CVector c(model.n_modes);
    for (int k = 0; k < model.n_modes; ++k) c(k) = std::polar(1.0, -model.lambdas[k] * t) * c0(k);
    const CVector u = model.psi_hat * c;
    trace.phys_norms.push_back(physical_inner_product_vec(model, u, u).real());
    // <u, u> = c* Q^{-1} c, the squared L^2 norm of sum_k c_k Psi_k.
    trace.std_norms.push_back(u.squaredNorm());
    trace.coeffs_t.push_back(std::move(c));
  }
  return trace;
}

CVector evolve_dense(const CompressedModel& model, const CVector& u0, double t) {
  check_length(model, u0, "evolve_dense");
  const CMatrix generator = Complex(0.0, -t) * model.h_hat.entries();
  return matrix_exponential(generator) * u0;
}

std::vector<double> uniform_time_grid(double t_max, double dt) {
  if (!(dt > 0.0) || !(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw ContractViolation("time grid needs dt > 0 and finite t_max >= 0");
  }
  const auto steps = static_cast<long>(std::floor(t_max / dt + 1e-9));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps) + 1);
  for (long k = 0; k <= steps; ++k) grid.push_back(static_cast<double>(k) * dt);
  return grid;
}

}  // namespace swanson
