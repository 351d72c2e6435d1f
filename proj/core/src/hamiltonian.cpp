#include "ctqw/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ctqw {

void DisorderSpec::validate() const {
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw std::invalid_argument("DisorderSpec: lambda must be >= 0");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("DisorderSpec: p must lie in [0, 1]");
  }
}

DisorderSpec DisorderSpec::exponential_spec(double lambda) {
  DisorderSpec d;
  d.kind = DisorderKind::exponential;
  d.lambda = lambda;
  d.validate();
  return d;
}

DisorderSpec DisorderSpec::ws_spec(double p, std::uint64_t seed) {
  DisorderSpec d;
  d.kind = DisorderKind::ws;
  d.p = p;
  d.seed = seed;
  d.validate();
  return d;
}

Hamiltonian laplacian(const Graph& g) {
  const int n = g.n_nodes();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    h(u, v) = h(v, u) = -1.0;
    h(u, u) += 1.0;
    h(v, v) += 1.0;
  }
  return Hamiltonian{std::move(h)};
}

Eigen::VectorXd exponential_disorder(int n_nodes, double lambda) {
  if (n_nodes < 1) {
    throw std::invalid_argument("exponential_disorder: need N >= 1");
  }
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw std::invalid_argument("exponential_disorder: lambda must be >= 0");
  }
  Eigen::VectorXd diag(n_nodes);
  for (int j = 0; j < n_nodes; ++j) {
    diag[j] = std::exp(lambda * 2.0 * std::numbers::pi * j / n_nodes);
  }
  return diag;
}

Hamiltonian assemble_hamiltonian(const Graph& g,
                                 const Eigen::VectorXd& static_diagonal) {
  if (static_diagonal.size() != g.n_nodes()) {
    throw std::invalid_argument(
        "assemble_hamiltonian: diagonal has " +
        std::to_string(static_diagonal.size()) + " entries for a " +
        std::to_string(g.n_nodes()) + "-node graph");
  }
  Hamiltonian h = laplacian(g);
  h.matrix.diagonal() += static_diagonal;
  return h;
}

Hamiltonian assemble_hamiltonian(const Graph& g, const DisorderSpec& disorder) {
  disorder.validate();
  if (disorder.kind == DisorderKind::exponential) {
    return assemble_hamiltonian(g,
                                exponential_disorder(g.n_nodes(), disorder.lambda));
  }
  return laplacian(g);
}

}  // namespace ctqw
