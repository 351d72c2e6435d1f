#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "ctqw/graph.hpp"
#include "ctqw/hamiltonian.hpp"

namespace ctqw {

/// Analytic circulant spectrum. eigenvalues[n] belongs to Bloch phase
/// theta_n = 2*pi*n/N; the order is the Bloch index, not ascending.
struct BlochSpectrum {
  int n_nodes = 0;
  int neighbor_range = 0;
  Eigen::VectorXd eigenvalues;

  double phase(int n) const;
};

/// E_n = 2m - 2 sum_{z=1..m} cos(z*theta_n). The cosine argument is the
/// phase index (z*n) mod N folded to [0, N/2], so E_n == E_{N-n} holds
/// bitwise, not just within rounding.
BlochSpectrum bloch_spectrum(const RingSpec& spec);

struct SpectralData {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column n = q_n, orthonormal (H is real symmetric)
  std::vector<std::vector<int>> degeneracy_classes;
  double class_tolerance = 0.0;
};

/// Clustering tolerance rule: 1e-8 * max(1, spectral range). Bloch
/// degeneracies are exact to ~1e-15 while disordered spectra have gaps
/// far above 1e-8, so the rule separates the two regimes cleanly.
double default_degeneracy_tol(const Eigen::VectorXd& eigenvalues);

/// Single-linkage clustering: after sorting, neighbours within tol share a
/// class. Classes are returned as ascending index lists ordered by
/// eigenvalue; permutation-invariant in the input and idempotent.
std::vector<std::vector<int>> degeneracy_classes(
    const Eigen::VectorXd& eigenvalues, double tol);

/// index -> class id lookup for a partition of {0..n-1}.
std::vector<int> class_index_map(const std::vector<std::vector<int>>& classes,
                                 int n);

/// Dense symmetric eigendecomposition with degeneracy classes attached.
/// Throws std::runtime_error if the solver reports non-convergence.
SpectralData eigendecompose(const Hamiltonian& h,
                            std::optional<double> class_tol = {});

}  // namespace ctqw
