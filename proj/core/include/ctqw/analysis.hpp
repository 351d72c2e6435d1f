#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "ctqw/spectral.hpp"
#include "ctqw/wigner.hpp"

namespace ctqw {

/// Axis sums of a Wigner field. chi[x] = sum_k W(x,k) is the transition
/// probability to node x; k_marginal[k] = sum_x W(x,k).
struct MarginalReport {
  int initial_node = 0;
  Eigen::VectorXd chi;
  Eigen::VectorXd k_marginal;
};

MarginalReport marginals(const WignerField& w);

/// Half-period differences of an even-N field. dx(x,k) = W(x+N/2,k) - W(x,k)
/// for x in [0,N/2); dk(x,k) = W(x,k+N/2) - W(x,k) for k in [0,N/2);
/// chi_asym[x] = chi[x+N/2] - chi[x].
struct AsymmetryMap {
  Eigen::MatrixXd dx;        // (N/2) x N
  Eigen::MatrixXd dk;        // N x (N/2)
  Eigen::VectorXd chi_asym;  // length N/2
};

/// Throws std::invalid_argument for odd N (the mirror node x + N/2 is
/// undefined there).
AsymmetryMap asymmetry(const WignerField& w);

/// pi_x(t) = |<x| exp(-iHt) |j>|^2.
Eigen::VectorXd transition_probability(const SpectralData& s, int initial_node,
                                       double time);

/// Mean limiting field over seeded Watts-Strogatz realizations.
/// Realization r uses seed base_seed + r; mean_field and mean_chi are
/// reduced in realization order, so results are bitwise identical for any
/// thread count.
struct EnsembleResult {
  WignerField mean_field;
  Eigen::VectorXd mean_chi;
  int n_realizations = 0;
  std::uint64_t base_seed = 0;
  std::vector<std::uint8_t> connected;  // per-realization connectivity flag
};

EnsembleResult ensemble_average(const RingSpec& spec, double p,
                                int initial_node, int n_realizations,
                                std::uint64_t base_seed, int n_threads = 1,
                                std::optional<double> class_tol = {});

/// Peaks of a marginal under the 3xMAD rule: cyclic local maxima whose
/// value exceeds median(chi) + 3*MAD(chi). Returns ascending indices.
std::vector<int> detect_chi_peaks(const Eigen::VectorXd& chi);

}  // namespace ctqw
