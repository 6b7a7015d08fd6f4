#include "swanson/oscillator.hpp"

#include <cmath>
#include <string>

#include "swanson/errors.hpp"

namespace swanson {

void validate_gamma(double gamma) {
  if (!std::isfinite(gamma) || !(std::abs(gamma) < 1.0)) {
    throw DomainError("gamma must satisfy |gamma| < 1 (got " + std::to_string(gamma) + ")");
  }
}

ModelConfig::ModelConfig(double gamma, Index dim)
    : gamma_(gamma), dim_(dim), omega_(std::sqrt(1.0 + gamma * gamma)) {
  validate_gamma(gamma);
  if (dim < 2) throw ContractViolation("truncation dim must be >= 2 (got " + std::to_string(dim) + ")");
}

ShiftMatrices build_shift_matrices(const ModelConfig& cfg) {
  const Index n = cfg.dim();
  CMatrix b = CMatrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) b(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
  CMatrix bt = b.transpose();
  return {OperatorMatrix(std::move(b), Structure::real_tridiagonal),
          OperatorMatrix(std::move(bt), Structure::real_tridiagonal)};
}

QuadraticGenerators build_quadratic_generators(const ModelConfig& cfg) {
  const Index n = cfg.dim();
  // Matrix elements of b*b and (b*)^2 in the number basis:
  // <i|b*b|i> = i, <i+2|(b*)^2|i> = sqrt((i+1)(i+2)).
  CMatrix a0 = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) a0(i, i) = Complex(static_cast<double>(i), 0.0);
  CMatrix a_plus = CMatrix::Zero(n, n);
  for (Index i = 0; i + 2 < n; ++i) {
    a_plus(i + 2, i) = std::sqrt(static_cast<double>((i + 1) * (i + 2)));
  }
  CMatrix a_minus = a_plus.transpose();
  return {OperatorMatrix(std::move(a0), Structure::hermitian),
          OperatorMatrix(std::move(a_plus), Structure::pentadiagonal),
          OperatorMatrix(std::move(a_minus), Structure::pentadiagonal)};
}

OperatorMatrix build_hamiltonian(const ModelConfig& cfg) {
  const auto gen = build_quadratic_generators(cfg);
  const Index n = cfg.dim();
  CMatrix h = gen.a0.entries() + (cfg.gamma() / 2.0) * (gen.a_plus.entries() - gen.a_minus.entries()) +
              0.5 * CMatrix::Identity(n, n);
  return OperatorMatrix(std::move(h), Structure::pentadiagonal);
}

ParityBlocks parity_split(const OperatorMatrix& h) {
  if (h.structure() != Structure::pentadiagonal) {
    throw ContractViolation(std::string("parity_split expects a pentadiagonal matrix, got ") +
                            to_string(h.structure()));
  }
  const Index n = h.dim();
  const CMatrix& a = h.entries();
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if ((i + j) % 2 != 0 && a(i, j) != Complex{0.0, 0.0}) {
        throw ContractViolation("parity_split: matrix couples even and odd indices");
      }
    }
  }
  auto extract = [&](Index offset) {
    const Index m = (n - offset + 1) / 2;
    CMatrix block(m, m);
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < m; ++i) block(i, j) = a(2 * i + offset, 2 * j + offset);
    }
    return OperatorMatrix(std::move(block), Structure::real_tridiagonal);
  };
  return {extract(0), extract(1)};
}

std::vector<double> analytic_spectrum(double gamma, int n_max) {
  validate_gamma(gamma);
  if (n_max < 0) throw ContractViolation("analytic_spectrum: n_max must be >= 0");
  const double omega = std::sqrt(1.0 + gamma * gamma);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back((n + 0.5) * omega);
  return out;
}

LadderCoefficients ladder_coefficients(double gamma) {
  const double s = std::pow(1.0 + gamma * gamma, 0.25);
  LadderCoefficients c;
  c.lower_b = 0.5 * (s + (1.0 + gamma) / s);
  c.lower_bt = 0.5 * (s - (1.0 - gamma) / s);
  c.raise_b = 0.5 * (s - (1.0 + gamma) / s);
  c.raise_bt = 0.5 * (s + (1.0 - gamma) / s);
  return c;
}

double eta(double gamma) {
  const double omega = std::sqrt(1.0 + gamma * gamma);
  return (1.0 - gamma - omega) / (1.0 + gamma + omega);
}

LadderPair build_ladder(const ModelConfig& cfg) {
  const auto [b, bt] = build_shift_matrices(cfg);
  const LadderCoefficients c = ladder_coefficients(cfg.gamma());
  CMatrix d = c.lower_b * b.entries() + c.lower_bt * bt.entries();
  CMatrix dd = c.raise_b * b.entries() + c.raise_bt * bt.entries();
  return {OperatorMatrix(std::move(d), Structure::real_tridiagonal),
          OperatorMatrix(std::move(dd), Structure::real_tridiagonal), eta(cfg.gamma()), c};
}

RVector ground_vector(const ModelConfig& cfg) {
  const double e = eta(cfg.gamma());
  if (!(std::abs(e) < 1.0)) {
    throw DomainError("|eta| >= 1: ground vector does not decay");
  }
  const Index n = cfg.dim();
  RVector v = RVector::Zero(n);
  v(0) = 1.0;
  for (Index k = 1; 2 * k < n; ++k) {
    v(2 * k) = v(2 * k - 2) * e * std::sqrt(static_cast<double>(2 * k - 1) / static_cast<double>(2 * k));
  }
  return v;
}

RVector excited_vector(const ModelConfig& cfg, int n) {
  if (n < 0) throw ContractViolation("excited_vector: n must be >= 0");
  const LadderPair ladder = build_ladder(cfg);
  const RMatrix raise = ladder.d_ddag.entries().real();
  RVector v = ground_vector(cfg);
  for (int k = 0; k < n; ++k) v = raise * v;

  const Index dim = cfg.dim();
  const Index tail = std::min<Index>(dim, n + 2);
  const double total = v.norm();
  const double tail_norm = v.tail(tail).norm();
  const double fraction = total > 0.0 ? tail_norm / total : 1.0;
  if (!(fraction <= 1e-8)) {
    throw TailContamination("excited_vector: truncation dim " + std::to_string(dim) +
                                " too small for n = " + std::to_string(n),
                            fraction);
  }
  return v;
}

double leading_block_max(const CMatrix& m, Index k) {
  const Index r = m.rows() - k;
  if (r <= 0) return 0.0;
  return max_abs(m.topLeftCorner(r, r));
}

double leading_norm(const CVector& v, Index k) {
  const Index r = v.size() - k;
  if (r <= 0) return 0.0;
  return v.head(r).norm();
}

}  // namespace swanson
