#include "ctqw/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ctqw {

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

MarginalReport marginals(const WignerField& w) {
  MarginalReport report;
  report.initial_node = w.initial_node;
  report.chi = w.values.rowwise().sum();
  report.k_marginal = w.values.colwise().sum().transpose();
  return report;
}

AsymmetryMap asymmetry(const WignerField& w) {
  const int n = w.n_nodes;
  if (n % 2 != 0) {
    throw std::invalid_argument(
        "asymmetry: mirror node x + N/2 needs even N, got N=" +
        std::to_string(n));
  }
  const int half = n / 2;
  AsymmetryMap map;
  map.dx.resize(half, n);
  for (int x = 0; x < half; ++x) {
    map.dx.row(x) = w.values.row(x + half) - w.values.row(x);
  }
  map.dk.resize(n, half);
  for (int k = 0; k < half; ++k) {
    map.dk.col(k) = w.values.col(k + half) - w.values.col(k);
  }
  const Eigen::VectorXd chi = w.values.rowwise().sum();
  map.chi_asym.resize(half);
  for (int x = 0; x < half; ++x) {
    map.chi_asym[x] = chi[x + half] - chi[x];
  }
  return map;
}

Eigen::VectorXd transition_probability(const SpectralData& s, int initial_node,
                                       double time) {
  return evolve_state(s, initial_node, time).cwiseAbs2();
}

EnsembleResult ensemble_average(const RingSpec& spec, double p,
                                int initial_node, int n_realizations,
                                std::uint64_t base_seed, int n_threads,
                                std::optional<double> class_tol) {
  spec.validate();
  if (n_realizations < 1) {
    throw std::invalid_argument("ensemble_average: need n_realizations >= 1");
  }
  if (initial_node < 0 || initial_node >= spec.n_nodes) {
    throw std::invalid_argument("ensemble_average: initial node out of range");
  }

  const int n = spec.n_nodes;
  std::vector<Eigen::MatrixXd> fields(n_realizations);
  std::vector<Eigen::VectorXd> chis(n_realizations);
  std::vector<std::uint8_t> connected(n_realizations, 0);

  std::atomic<int> cursor{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const int r = cursor.fetch_add(1);
      if (r >= n_realizations) return;
      const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(r);
      try {
        const Graph g = ws_rewire(spec, p, seed);
        connected[r] = g.is_connected() ? 1 : 0;
        SpectralData s;
        try {
          s = eigendecompose(laplacian(g), class_tol);
        } catch (const std::exception& e) {
          throw std::runtime_error("ensemble realization with seed " +
                                   std::to_string(seed) + " failed: " +
                                   e.what());
        }
        WignerField field = limiting_wigner_general(s, initial_node);
        chis[r] = field.values.rowwise().sum();
        fields[r] = std::move(field.values);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int workers =
      std::clamp(std::min(n_threads, n_realizations), 1, n_realizations);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // Reduce in realization order: the mean is bitwise independent of how
  // the realizations were scheduled above.
  Eigen::MatrixXd field_acc = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd chi_acc = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < n_realizations; ++r) {
    field_acc += fields[r];
    chi_acc += chis[r];
  }
  field_acc /= n_realizations;
  chi_acc /= n_realizations;

  EnsembleResult result;
  result.mean_field.n_nodes = n;
  result.mean_field.initial_node = initial_node;
  result.mean_field.degeneracy_tol = class_tol;
  result.mean_field.source = NetworkSpec{spec, DisorderSpec::ws_spec(p, base_seed)};
  result.mean_field.values = std::move(field_acc);
  result.mean_chi = std::move(chi_acc);
  result.n_realizations = n_realizations;
  result.base_seed = base_seed;
  result.connected = std::move(connected);
  return result;
}

std::vector<int> detect_chi_peaks(const Eigen::VectorXd& chi) {
  const int n = static_cast<int>(chi.size());
  std::vector<double> values(chi.data(), chi.data() + n);
  const double med = median_of(values);
  std::vector<double> dev(n);
  for (int i = 0; i < n; ++i) dev[i] = std::abs(values[i] - med);
  const double mad = median_of(dev);
  const double threshold = med + 3.0 * mad;

  std::vector<int> peaks;
  for (int i = 0; i < n; ++i) {
    const double left = chi[(i + n - 1) % n];
    const double right = chi[(i + 1) % n];
    if (chi[i] > threshold && chi[i] > left && chi[i] > right) {
      peaks.push_back(i);
    }
  }
  return peaks;
}

}  // namespace ctqw
