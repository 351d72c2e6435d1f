#include "ctqw/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ctqw {

double BlochSpectrum::phase(int n) const {
  return 2.0 * std::numbers::pi * n / n_nodes;
}

BlochSpectrum bloch_spectrum(const RingSpec& spec) {
  spec.validate();
  const int n_nodes = spec.n_nodes;
  const int m = spec.neighbor_range;
  Eigen::VectorXd values(n_nodes);
  for (int n = 0; n < n_nodes; ++n) {
    double e = 0.0;
    for (int z = 1; z <= m; ++z) {
      // cos(2*pi*zn/N) evaluated at the folded phase index, so that n and
      // N-n produce the same double.
      int r = (z * n) % n_nodes;
      r = std::min(r, n_nodes - r);
      e += 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * r / n_nodes);
    }
    values[n] = e;
  }
  return BlochSpectrum{n_nodes, m, std::move(values)};
}

double default_degeneracy_tol(const Eigen::VectorXd& eigenvalues) {
  if (eigenvalues.size() == 0) return 1e-8;
  const double range = eigenvalues.maxCoeff() - eigenvalues.minCoeff();
  return 1e-8 * std::max(1.0, range);
}

std::vector<std::vector<int>> degeneracy_classes(
    const Eigen::VectorXd& eigenvalues, double tol) {
  const int n = static_cast<int>(eigenvalues.size());
  std::vector<std::vector<int>> classes;
  if (n == 0) return classes;
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(eigenvalues[i])) {
      throw std::invalid_argument("degeneracy_classes: non-finite eigenvalue");
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return eigenvalues[a] < eigenvalues[b];
  });
  classes.push_back({order[0]});
  for (int i = 1; i < n; ++i) {
    if (eigenvalues[order[i]] - eigenvalues[order[i - 1]] <= tol) {
      classes.back().push_back(order[i]);
    } else {
      classes.push_back({order[i]});
    }
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

std::vector<int> class_index_map(const std::vector<std::vector<int>>& classes,
                                 int n) {
  std::vector<int> ids(n, -1);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    for (int i : classes[c]) ids.at(i) = c;
  }
  return ids;
}

SpectralData eigendecompose(const Hamiltonian& h,
                            std::optional<double> class_tol) {
  const Eigen::MatrixXd& mat = h.matrix;
  if (mat.rows() != mat.cols() || mat.rows() == 0) {
    throw std::invalid_argument("eigendecompose: matrix must be square");
  }
  if (!mat.isApprox(mat.transpose(), 0.0)) {
    throw std::invalid_argument("eigendecompose: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: eigensolver did not converge");
  }
  SpectralData s;
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();
  s.class_tolerance = class_tol.value_or(default_degeneracy_tol(s.eigenvalues));
  s.degeneracy_classes = degeneracy_classes(s.eigenvalues, s.class_tolerance);
  return s;
}

}  // namespace ctqw
