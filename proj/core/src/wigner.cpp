#include "ctqw/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctqw {

namespace detail {

std::vector<std::complex<double>> unit_roots(int n) {
  std::vector<std::complex<double>> roots(n);
  for (int r = 0; r < n; ++r) {
    roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / n);
  }
  return roots;
}

}  // namespace detail

namespace {

using detail::mod_index;

void check_node(int n_nodes, int node, const char* where) {
  if (node < 0 || node >= n_nodes) {
    throw std::invalid_argument(std::string(where) + ": node " +
                                std::to_string(node) + " outside [0, " +
                                std::to_string(n_nodes) + ")");
  }
}

/// Asserts the field is real up to kImagTol, then drops the imaginary part.
Eigen::MatrixXd take_real(const Eigen::MatrixXcd& grid) {
  const double residue = grid.imag().cwiseAbs().maxCoeff();
  if (!(residue < detail::kImagTol)) {
    throw std::runtime_error(
        "wigner: imaginary residue " + std::to_string(residue) +
        " exceeds 1e-10; phase-index arithmetic is corrupt");
  }
  return grid.real();
}

/// W(x,k) = (1/N) sum_y exp(2*pi*i*k*y/N) rho[(x-y)%N][(x+y)%N].
/// The y-sum is a length-N Fourier transform of the antidiagonal through x.
template <typename Derived>
Eigen::MatrixXd wigner_transform(const Eigen::MatrixBase<Derived>& rho) {
  const int n = static_cast<int>(rho.rows());
  const auto roots = detail::unit_roots(n);
  Eigen::MatrixXcd grid(n, n);
  std::vector<std::complex<double>> anti(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      anti[y] = std::complex<double>(rho(mod_index(x - y, n), mod_index(x + y, n)));
    }
    for (int k = 0; k < n; ++k) {
      std::complex<double> acc{0.0, 0.0};
      int idx = 0;  // (k*y) mod N, advanced incrementally
      for (int y = 0; y < n; ++y) {
        acc += roots[idx] * anti[y];
        idx += k;
        if (idx >= n) idx -= n;
      }
      grid(x, k) = acc / static_cast<double>(n);
    }
  }
  return take_real(grid);
}

}  // namespace

Eigen::VectorXcd evolve_state(const SpectralData& s, int initial_node,
                              double time) {
  const int n = static_cast<int>(s.eigenvalues.size());
  check_node(n, initial_node, "evolve_state");
  Eigen::VectorXcd coeff(n);
  for (int mode = 0; mode < n; ++mode) {
    coeff[mode] = std::polar(s.eigenvectors(initial_node, mode),
                             -s.eigenvalues[mode] * time);
  }
  Eigen::VectorXd re = s.eigenvectors * coeff.real();
  Eigen::VectorXd im = s.eigenvectors * coeff.imag();
  Eigen::VectorXcd psi(n);
  psi.real() = re;
  psi.imag() = im;
  return psi;
}

WignerField wigner_circulant(const RingSpec& spec, int initial_node,
                             double time) {
  spec.validate();
  const int n = spec.n_nodes;
  check_node(n, initial_node, "wigner_circulant");
  const BlochSpectrum bs = bloch_spectrum(spec);
  const auto roots = detail::unit_roots(n);

  Eigen::MatrixXcd grid = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int mode = 0; mode < n; ++mode) {
      const int partner = mod_index(static_cast<long long>(k) - mode, n);
      const std::complex<double> osc = std::polar(
          1.0, -time * (bs.eigenvalues[mode] - bs.eigenvalues[partner]));
      // Phase (2n-k)(x-j) mod N advances by a fixed step per x.
      const int step = mod_index(2LL * mode - k, n);
      int idx = mod_index(-static_cast<long long>(step) * initial_node, n);
      for (int x = 0; x < n; ++x) {
        grid(x, k) += osc * roots[idx];
        idx += step;
        if (idx >= n) idx -= n;
      }
    }
  }
  grid /= static_cast<double>(n) * n;

  WignerField field;
  field.n_nodes = n;
  field.initial_node = initial_node;
  field.time = time;
  field.source = NetworkSpec{spec, DisorderSpec{}};
  field.values = take_real(grid);
  return field;
}

WignerField wigner_general(const SpectralData& s, int initial_node,
                           double time) {
  const int n = static_cast<int>(s.eigenvalues.size());
  check_node(n, initial_node, "wigner_general");
  const Eigen::VectorXcd psi = evolve_state(s, initial_node, time);
  const Eigen::MatrixXcd rho = psi * psi.adjoint();

  WignerField field;
  field.n_nodes = n;
  field.initial_node = initial_node;
  field.time = time;
  field.source.ring = RingSpec{n, 0};  // topology unknown here; caller fills it
  field.values = wigner_transform(rho);
  return field;
}

WignerField limiting_wigner_circulant(const RingSpec& spec, int initial_node,
                                      std::optional<double> class_tol) {
  spec.validate();
  const int n = spec.n_nodes;
  check_node(n, initial_node, "limiting_wigner_circulant");
  const BlochSpectrum bs = bloch_spectrum(spec);
  const double tol = class_tol.value_or(default_degeneracy_tol(bs.eigenvalues));
  const auto classes = degeneracy_classes(bs.eigenvalues, tol);
  const auto cls = class_index_map(classes, n);
  const auto roots = detail::unit_roots(n);

  Eigen::MatrixXcd grid = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int mode = 0; mode < n; ++mode) {
      // Only pairs with E_n == E_{(N+k-n)%N} survive the time average.
      if (cls[mode] != cls[mod_index(static_cast<long long>(k) - mode, n)]) {
        continue;
      }
      const int step = mod_index(2LL * mode - k, n);
      int idx = mod_index(-static_cast<long long>(step) * initial_node, n);
      for (int x = 0; x < n; ++x) {
        grid(x, k) += roots[idx];
        idx += step;
        if (idx >= n) idx -= n;
      }
    }
  }
  grid /= static_cast<double>(n) * n;

  WignerField field;
  field.n_nodes = n;
  field.initial_node = initial_node;
  field.degeneracy_tol = tol;
  field.source = NetworkSpec{spec, DisorderSpec{}};
  field.values = take_real(grid);
  return field;
}

WignerField limiting_wigner_general(const SpectralData& s, int initial_node) {
  const int n = static_cast<int>(s.eigenvalues.size());
  check_node(n, initial_node, "limiting_wigner_general");

  // rho_bar = sum_C (P_C e_j)(P_C e_j)^T with P_C the class projector;
  // grouping by class costs O(N) per eigenvector instead of the O(N^2)
  // eigenvector-pair double sum.
  Eigen::MatrixXd rho_bar = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd amp(n);
  for (const auto& cls : s.degeneracy_classes) {
    amp.setZero();
    for (int mode : cls) {
      amp += s.eigenvectors.col(mode) * s.eigenvectors(initial_node, mode);
    }
    rho_bar.noalias() += amp * amp.transpose();
  }

  WignerField field;
  field.n_nodes = n;
  field.initial_node = initial_node;
  field.degeneracy_tol = s.class_tolerance;
  field.source.ring = RingSpec{n, 0};  // caller fills provenance
  field.values = wigner_transform(rho_bar);
  return field;
}

WignerField closed_form_limit_m1(int n_nodes, int initial_node) {
  if (n_nodes < 3) {
    throw std::invalid_argument("closed_form_limit_m1: need N >= 3");
  }
  check_node(n_nodes, initial_node, "closed_form_limit_m1");
  const int n = n_nodes;
  const int j = initial_node;
  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(n, n);
  if (n % 2 == 0) {
    for (int k = 2; k < n; k += 2) values.col(k).setConstant(2.0 / (n * n));
    values(j, 0) = 1.0 / n;
    values((j + n / 2) % n, 0) = 1.0 / n;
  } else {
    for (int k = 1; k < n; ++k) values.col(k).setConstant(1.0 / (n * n));
    values(j, 0) = 1.0 / n;
  }

  WignerField field;
  field.n_nodes = n;
  field.initial_node = j;
  field.source = NetworkSpec{RingSpec{n, 1}, DisorderSpec{}};
  field.values = std::move(values);
  return field;
}

}  // namespace ctqw
