#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>

#include "ctqw/hamiltonian.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

/// Discrete Wigner quasi-probability on the N x N phase-space grid.
/// values(x, k): row = position x, column = momentum index k. Cells may be
/// negative; column sums over k are the transition probabilities.
struct WignerField {
  int n_nodes = 0;
  int initial_node = 0;
  std::optional<double> time;            // nullopt = long-time average
  std::optional<double> degeneracy_tol;  // set by the limiting paths
  NetworkSpec source;
  Eigen::MatrixXd values;

  bool is_limit() const { return !time.has_value(); }
};

/// Evolved amplitude psi_x(t) = sum_n exp(-i E_n t) q_n(x) q_n(j).
Eigen::VectorXcd evolve_state(const SpectralData& s, int initial_node,
                              double time);

/// Circulant fast path:
///   W_j(x,k,t) = (1/N^2) sum_n exp(-it(E_n - E_{(N+k-n)%N}))
///                        * exp(2*pi*i*(2n-k)(x-j)/N)
/// using the Bloch spectrum only; no eigenvectors are materialized.
WignerField wigner_circulant(const RingSpec& spec, int initial_node,
                             double time);

/// General spectral path: evolves |j> and takes the length-N Fourier
/// transform of the density-matrix antidiagonals per position row.
WignerField wigner_general(const SpectralData& s, int initial_node,
                           double time);

/// Long-time average on the circulant fast path: only Bloch pairs with
/// E_n == E_{(N+k-n)%N} (within the degeneracy tolerance) survive.
WignerField limiting_wigner_circulant(const RingSpec& spec, int initial_node,
                                      std::optional<double> class_tol = {});

/// Long-time average for arbitrary symmetric H: the Wigner transform of
/// rho_bar = sum_C P_C |j><j| P_C with P_C the degeneracy-class projectors.
WignerField limiting_wigner_general(const SpectralData& s, int initial_node);

/// Closed-form m=1 limiting pattern; the analytic oracle. Even N: 2/N^2 on
/// even k != 0, 1/N at (k=0, x in {j, j+N/2}). Odd N: 1/N^2 on k != 0,
/// 1/N at (k=0, x=j). Zero elsewhere.
WignerField closed_form_limit_m1(int n_nodes, int initial_node);

namespace detail {

/// exp(2*pi*i*r/n) for r = 0..n-1.
std::vector<std::complex<double>> unit_roots(int n);

/// a mod n mapped into [0, n).
inline int mod_index(long long a, int n) {
  const int r = static_cast<int>(a % n);
  return r < 0 ? r + n : r;
}

/// Largest |imaginary part| tolerated before a complex-built field is
/// declared corrupt (index arithmetic bug) instead of rounded to real.
inline constexpr double kImagTol = 1e-10;

}  // namespace detail

}  // namespace ctqw
