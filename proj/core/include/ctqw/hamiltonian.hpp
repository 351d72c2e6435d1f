#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "ctqw/graph.hpp"

namespace ctqw {

enum class DisorderKind { none, exponential, ws };

/// Disorder attached to a ring: lambda drives the exponential on-site
/// term (Delta_jj = exp(lambda*2*pi*j/N)), (p, seed) drive Watts-Strogatz
/// rewiring. Exactly one mechanism is active per spec.
struct DisorderSpec {
  DisorderKind kind = DisorderKind::none;
  double lambda = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless lambda >= 0 and p in [0, 1].
  void validate() const;

  static DisorderSpec none_spec() { return {}; }
  static DisorderSpec exponential_spec(double lambda);
  static DisorderSpec ws_spec(double p, std::uint64_t seed);
};

/// Topology plus disorder; the provenance record results carry around.
struct NetworkSpec {
  RingSpec ring;
  DisorderSpec disorder;
};

/// Real symmetric Hamiltonian H = A + Delta in gamma = 1 units. Off-diagonal
/// entries are 0 or -1; without static disorder every row sums to zero.
struct Hamiltonian {
  Eigen::MatrixXd matrix;

  int size() const { return static_cast<int>(matrix.rows()); }
};

/// Graph Laplacian: H[i][i] = degree(i), H[i][j] = -1 iff i ~ j.
Hamiltonian laplacian(const Graph& g);

/// Diagonal of the exponential on-site disorder, entry exp(lambda*2*pi*j/N)
/// at node j.
Eigen::VectorXd exponential_disorder(int n_nodes, double lambda);

/// H = laplacian(g) + diag(static_diagonal). Throws std::invalid_argument
/// on a dimension mismatch.
Hamiltonian assemble_hamiltonian(const Graph& g,
                                 const Eigen::VectorXd& static_diagonal);

/// H = laplacian(g) + Delta with Delta built from the disorder kind
/// (zero for none/ws, exponential diagonal otherwise).
Hamiltonian assemble_hamiltonian(const Graph& g, const DisorderSpec& disorder);

}  // namespace ctqw
