#pragma once

#include <vector>

namespace swanson {

// Gauss rule for the weight exp(-scale x^2): exact for x^k, k <= 2n - 1.
// Nodes are stored in ascending order and are exactly antisymmetric
// (nodes[n-1-i] == -nodes[i]); paired weights are identical.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double scale = 1.0;

  int size() const noexcept { return static_cast<int>(nodes.size()); }

  // sum_i w_i f(x_i), accumulated over symmetric node pairs so odd
  // integrands cancel exactly.
  template <typename F>
  auto integrate(F&& f) const -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    const std::size_t n = nodes.size();
    R sum{};
    for (std::size_t i = 0; i < n / 2; ++i) {
      const std::size_t j = n - 1 - i;
      sum += weights[i] * (f(nodes[i]) + f(nodes[j]));
    }
    if (n % 2 == 1) sum += weights[n / 2] * f(nodes[n / 2]);
    return sum;
  }
};

// Golub-Welsch nodes for exp(-t^2), Newton-polished on the orthonormal
// Hermite recurrence; weights from the Christoffel sum 1 / sum_k h_k(t)^2,
// which keeps full relative accuracy at the outermost nodes.
QuadratureRule gauss_hermite_rule(int node_count, double scale = 1.0);

}  // namespace swanson
