#include "swanson/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "swanson/errors.hpp"
#include "swanson/linalg.hpp"

namespace swanson {
namespace {

// Orthonormal Hermite values h_0..h_{n} at t (weight exp(-t^2)).
void orthonormal_hermite(int n, double t, std::vector<double>& h) {
  h.assign(static_cast<std::size_t>(n) + 1, 0.0);
  h[0] = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  if (n >= 1) h[1] = std::sqrt(2.0) * t * h[0];
  for (int k = 1; k < n; ++k) {
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * t * h[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
  }
}

QuadratureRule build_unit_rule(int n) {
  CMatrix jacobi = CMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(k / 2.0);
    jacobi(k - 1, k) = b;
    jacobi(k, k - 1) = b;
  }
  const auto dec = eigendecompose_hermitian(OperatorMatrix(jacobi, Structure::hermitian));

  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[i] = dec.eigenvalues[i].real();

  std::vector<double> h;
  for (int i = 0; i < n; ++i) {
    for (int it = 0; it < 3; ++it) {
      orthonormal_hermite(n, t[i], h);
      const double deriv = std::sqrt(2.0 * n) * h[n - 1];
      if (deriv == 0.0) break;
      const double step = h[n] / deriv;
      t[i] -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(t[i]))) break;
    }
  }

  // Enforce exact antisymmetry of the node set.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double m = 0.5 * (t[j] - t[i]);
    t[i] = -m;
    t[j] = m;
  }
  if (n % 2 == 1) t[n / 2] = 0.0;

  QuadratureRule rule;
  rule.scale = 1.0;
  rule.nodes = t;
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    orthonormal_hermite(n - 1, t[i], h);
    double s = 0.0;
    for (int k = n - 1; k >= 0; --k) s += h[k] * h[k];
    rule.weights[i] = 1.0 / s;
  }
  for (int i = 0; i < n / 2; ++i) rule.weights[n - 1 - i] = rule.weights[i];
  return rule;
}

const QuadratureRule& unit_rule(int n) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_unit_rule(n)).first;
  return it->second;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int node_count, double scale) {
  if (node_count < 1) throw ContractViolation("quadrature needs at least one node");
  if (!(scale > 0.0)) throw DivergentIntegral("quadrature scale must be positive", scale);
  QuadratureRule rule = unit_rule(node_count);
  const double inv = 1.0 / std::sqrt(scale);
  for (auto& x : rule.nodes) x *= inv;
  for (auto& w : rule.weights) w *= inv;
  rule.scale = scale;
  return rule;
}

}  // namespace swanson
