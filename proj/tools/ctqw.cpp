// ctqw: phase-space simulator CLI for continuous-time quantum walks on
// circulant rings with optional exponential or Watts-Strogatz disorder.
//
// Subcommands: spectrum | wigner | limit | marginal | asymmetry | ensemble.
// Every run writes CSV + JSON (and PNG with --png) whose headers echo the
// full configuration, so any output reproduces itself.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ctqw/analysis.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/hamiltonian.hpp"
#include "ctqw/io.hpp"
#include "ctqw/render.hpp"
#include "ctqw/spectral.hpp"
#include "ctqw/version.hpp"
#include "ctqw/wigner.hpp"

namespace fs = std::filesystem;

namespace {

struct CliConfig {
  int n_nodes = 0;
  int m = 1;
  int j = -1;  // -1 = floor(N/2)
  std::string times = "1,2,5,20";
  double lambda = 0.0;
  double p = 0.0;
  int n_real = 200;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string out;
  bool png = false;

  bool has_lambda = false;
  bool has_p = false;
  bool has_tol = false;

  std::string subcommand;
};

int resolve_initial_node(const CliConfig& cfg) {
  if (cfg.j < 0) return cfg.n_nodes / 2;
  return cfg.j;
}

std::optional<double> tol_override(const CliConfig& cfg) {
  if (cfg.has_tol) return cfg.tol;
  return std::nullopt;
}

std::vector<double> parse_times(const std::string& arg) {
  std::vector<double> times;
  std::size_t start = 0;
  while (start <= arg.size()) {
    std::size_t end = arg.find(',', start);
    if (end == std::string::npos) end = arg.size();
    std::string token = arg.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.erase(0, 1);
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) {
      throw std::invalid_argument("--t: empty time entry in '" + arg + "'");
    }
    double value = 0.0;
    const auto res =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      throw std::invalid_argument("--t: cannot parse time '" + token + "'");
    }
    times.push_back(value);
    if (end == arg.size()) break;
    start = end + 1;
  }
  if (times.empty()) throw std::invalid_argument("--t: no times given");
  return times;
}

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  int count = hw > 0 ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("CTQW_THREADS")) {
    char* tail = nullptr;
    const long cap = std::strtol(env, &tail, 10);
    if (tail != env && cap >= 1) count = std::min<long>(count, cap);
  }
  return count;
}

ctqw::DisorderSpec make_disorder(const CliConfig& cfg) {
  if (cfg.has_lambda && cfg.has_p) {
    throw std::invalid_argument("--lambda and --p are mutually exclusive");
  }
  if (cfg.has_lambda) return ctqw::DisorderSpec::exponential_spec(cfg.lambda);
  if (cfg.has_p) return ctqw::DisorderSpec::ws_spec(cfg.p, cfg.seed);
  return ctqw::DisorderSpec::none_spec();
}

ctqw::Graph make_graph(const ctqw::RingSpec& ring,
                       const ctqw::DisorderSpec& disorder) {
  if (disorder.kind == ctqw::DisorderKind::ws) {
    return ctqw::ws_rewire(ring, disorder.p, disorder.seed);
  }
  return ctqw::build_ring(ring);
}

ctqw::Metadata config_echo(const CliConfig& cfg, int initial_node) {
  ctqw::Metadata meta;
  meta.emplace_back("config.cmd", cfg.subcommand);
  meta.emplace_back("config.N", std::to_string(cfg.n_nodes));
  meta.emplace_back("config.m", std::to_string(cfg.m));
  meta.emplace_back("config.j", std::to_string(initial_node));
  meta.emplace_back("config.t", cfg.times);
  meta.emplace_back("config.lambda",
                    cfg.has_lambda ? ctqw::format_double(cfg.lambda) : "unset");
  meta.emplace_back("config.p",
                    cfg.has_p ? ctqw::format_double(cfg.p) : "unset");
  meta.emplace_back("config.real", std::to_string(cfg.n_real));
  meta.emplace_back("config.seed", std::to_string(cfg.seed));
  meta.emplace_back("config.tol",
                    cfg.has_tol ? ctqw::format_double(cfg.tol) : "auto");
  meta.emplace_back("config.png", cfg.png ? "1" : "0");
  meta.emplace_back("config.out", cfg.out);
  return meta;
}

void emit_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  ctqw::write_text_atomic(path, content);
  std::cout << path.string() << '\n';
}

void emit_heatmap(const fs::path& path, const Eigen::MatrixXd& grid) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  ctqw::render_heatmap(grid, path);
  std::cout << path.string() << '\n';
}

/// Limiting field for the configured network (fast path when ordered).
ctqw::WignerField limiting_field(const CliConfig& cfg,
                                 const ctqw::RingSpec& ring, int initial_node,
                                 const ctqw::DisorderSpec& disorder) {
  if (disorder.kind == ctqw::DisorderKind::none) {
    return ctqw::limiting_wigner_circulant(ring, initial_node,
                                           tol_override(cfg));
  }
  const ctqw::Graph g = make_graph(ring, disorder);
  const ctqw::SpectralData s = ctqw::eigendecompose(
      ctqw::assemble_hamiltonian(g, disorder), tol_override(cfg));
  ctqw::WignerField field = ctqw::limiting_wigner_general(s, initial_node);
  field.source = ctqw::NetworkSpec{ring, disorder};
  return field;
}

void run_spectrum(const CliConfig& cfg, const ctqw::RingSpec& ring,
                  int initial_node, const ctqw::DisorderSpec& disorder,
                  const ctqw::Metadata& echo) {
  Eigen::VectorXd eigenvalues;
  double tol = 0.0;
  std::vector<std::vector<int>> classes;
  std::string order;
  if (disorder.kind == ctqw::DisorderKind::none) {
    const ctqw::BlochSpectrum bs = ctqw::bloch_spectrum(ring);
    eigenvalues = bs.eigenvalues;
    tol = tol_override(cfg).value_or(
        ctqw::default_degeneracy_tol(eigenvalues));
    classes = ctqw::degeneracy_classes(eigenvalues, tol);
    order = "bloch";
  } else {
    const ctqw::Graph g = make_graph(ring, disorder);
    const ctqw::SpectralData s = ctqw::eigendecompose(
        ctqw::assemble_hamiltonian(g, disorder), tol_override(cfg));
    eigenvalues = s.eigenvalues;
    tol = s.class_tolerance;
    classes = s.degeneracy_classes;
    order = "ascending";
  }
  const auto class_ids =
      ctqw::class_index_map(classes, static_cast<int>(eigenvalues.size()));

  ctqw::Metadata meta;
  meta.emplace_back("version", ctqw::kVersion);
  meta.emplace_back("N", std::to_string(cfg.n_nodes));
  meta.emplace_back("m", std::to_string(cfg.m));
  meta.emplace_back("index_order", order);
  meta.emplace_back("degeneracy_tol", ctqw::format_double(tol));
  meta.insert(meta.end(), echo.begin(), echo.end());

  emit_file(cfg.out + ".csv", ctqw::spectrum_csv(eigenvalues, class_ids, meta));
  emit_file(cfg.out + ".json",
            ctqw::spectrum_json(eigenvalues, class_ids, meta));
  if (cfg.png) {
    emit_heatmap(cfg.out + ".png", Eigen::MatrixXd(eigenvalues));
  }
}

void run_wigner(const CliConfig& cfg, const ctqw::RingSpec& ring,
                int initial_node, const ctqw::DisorderSpec& disorder,
                const ctqw::Metadata& echo) {
  const std::vector<double> times = parse_times(cfg.times);
  std::optional<ctqw::SpectralData> spectral;
  if (disorder.kind != ctqw::DisorderKind::none) {
    const ctqw::Graph g = make_graph(ring, disorder);
    spectral = ctqw::eigendecompose(ctqw::assemble_hamiltonian(g, disorder),
                                    tol_override(cfg));
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    ctqw::WignerField field =
        spectral ? ctqw::wigner_general(*spectral, initial_node, times[i])
                 : ctqw::wigner_circulant(ring, initial_node, times[i]);
    field.source = ctqw::NetworkSpec{ring, disorder};

    char suffix[16];
    std::snprintf(suffix, sizeof(suffix), "_%03zu", i);
    const std::string base = cfg.out + suffix;
    emit_file(base + ".csv", ctqw::wigner_csv(field, echo));
    emit_file(base + ".json", ctqw::wigner_json(field, echo));
    if (cfg.png) emit_heatmap(base + ".png", field.values);
  }
}

void run_limit(const CliConfig& cfg, const ctqw::RingSpec& ring,
               int initial_node, const ctqw::DisorderSpec& disorder,
               const ctqw::Metadata& echo) {
  const ctqw::WignerField field =
      limiting_field(cfg, ring, initial_node, disorder);
  emit_file(cfg.out + ".csv", ctqw::wigner_csv(field, echo));
  emit_file(cfg.out + ".json", ctqw::wigner_json(field, echo));
  if (cfg.png) emit_heatmap(cfg.out + ".png", field.values);
}

void run_marginal(const CliConfig& cfg, const ctqw::RingSpec& ring,
                  int initial_node, const ctqw::DisorderSpec& disorder,
                  const ctqw::Metadata& echo) {
  const ctqw::WignerField field =
      limiting_field(cfg, ring, initial_node, disorder);
  const ctqw::MarginalReport report = ctqw::marginals(field);

  ctqw::Metadata meta = ctqw::field_metadata(field);
  meta.insert(meta.end(), echo.begin(), echo.end());
  emit_file(cfg.out + ".csv", ctqw::marginal_csv(report, meta));
  emit_file(cfg.out + ".json", ctqw::marginal_json(report, meta));
  if (cfg.png) {
    emit_heatmap(cfg.out + "_chi.png", Eigen::MatrixXd(report.chi));
    emit_heatmap(cfg.out + "_ksum.png",
                 Eigen::MatrixXd(report.k_marginal.transpose()));
  }
}

void run_asymmetry(const CliConfig& cfg, const ctqw::RingSpec& ring,
                   int initial_node, const ctqw::DisorderSpec& disorder,
                   const ctqw::Metadata& echo) {
  const ctqw::WignerField field =
      limiting_field(cfg, ring, initial_node, disorder);
  const ctqw::AsymmetryMap map = ctqw::asymmetry(field);

  ctqw::Metadata meta = ctqw::field_metadata(field);
  meta.insert(meta.end(), echo.begin(), echo.end());
  ctqw::Metadata dx_meta = meta;
  dx_meta.emplace_back("grid", "dx");
  ctqw::Metadata dk_meta = meta;
  dk_meta.emplace_back("grid", "dk");

  emit_file(cfg.out + "_dx.csv", ctqw::matrix_csv(map.dx, dx_meta));
  emit_file(cfg.out + "_dk.csv", ctqw::matrix_csv(map.dk, dk_meta));
  emit_file(cfg.out + "_chi_asym.csv",
            ctqw::vector_csv(map.chi_asym, "chi_asym", meta));
  emit_file(cfg.out + ".json", ctqw::asymmetry_json(map, meta));
  if (cfg.png) {
    emit_heatmap(cfg.out + "_dx.png", map.dx);
    emit_heatmap(cfg.out + "_dk.png", map.dk);
  }
}

void run_ensemble(const CliConfig& cfg, const ctqw::RingSpec& ring,
                  int initial_node, const ctqw::DisorderSpec& disorder,
                  const ctqw::Metadata& echo) {
  if (disorder.kind != ctqw::DisorderKind::ws) {
    throw std::invalid_argument("ensemble requires --p (Watts-Strogatz)");
  }
  if (cfg.n_real < 1) {
    throw std::invalid_argument("ensemble requires --real >= 1");
  }
  const ctqw::EnsembleResult result =
      ctqw::ensemble_average(ring, disorder.p, initial_node, cfg.n_real,
                             cfg.seed, worker_count(), tol_override(cfg));

  int n_connected = 0;
  for (const auto flag : result.connected) n_connected += flag;
  ctqw::Metadata meta = echo;
  meta.emplace_back("n_realizations", std::to_string(result.n_realizations));
  meta.emplace_back("base_seed", std::to_string(result.base_seed));
  meta.emplace_back("n_connected", std::to_string(n_connected));

  emit_file(cfg.out + ".csv", ctqw::wigner_csv(result.mean_field, meta));
  emit_file(cfg.out + "_chi.csv",
            ctqw::vector_csv(result.mean_chi, "mean_chi", meta));
  emit_file(cfg.out + ".json", ctqw::ensemble_json(result, echo));
  if (cfg.png) emit_heatmap(cfg.out + ".png", result.mean_field.values);
}

int run(const CliConfig& cfg) {
  const ctqw::RingSpec ring{cfg.n_nodes, cfg.m};
  ring.validate();
  const int initial_node = resolve_initial_node(cfg);
  if (initial_node < 0 || initial_node >= cfg.n_nodes) {
    throw std::invalid_argument("--j must lie in [0, N)");
  }
  const ctqw::DisorderSpec disorder = make_disorder(cfg);
  const ctqw::Metadata echo = config_echo(cfg, initial_node);

  if (cfg.subcommand == "spectrum") {
    run_spectrum(cfg, ring, initial_node, disorder, echo);
  } else if (cfg.subcommand == "wigner") {
    run_wigner(cfg, ring, initial_node, disorder, echo);
  } else if (cfg.subcommand == "limit") {
    run_limit(cfg, ring, initial_node, disorder, echo);
  } else if (cfg.subcommand == "marginal") {
    run_marginal(cfg, ring, initial_node, disorder, echo);
  } else if (cfg.subcommand == "asymmetry") {
    run_asymmetry(cfg, ring, initial_node, disorder, echo);
  } else if (cfg.subcommand == "ensemble") {
    run_ensemble(cfg, ring, initial_node, disorder, echo);
  } else {
    throw std::invalid_argument("unknown subcommand " + cfg.subcommand);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Discrete Wigner phase-space fields for continuous-time "
               "quantum walks on ordered and disordered rings"};
  app.set_config("--config", "", "Flat key=value config file; flags override");
  app.require_subcommand(1);

  app.add_option("--N", cfg.n_nodes, "Node count (N >= 3)");
  app.add_option("--m", cfg.m, "Neighbor range per side", true);
  app.add_option("--j", cfg.j, "Initial node (default: floor(N/2))");
  app.add_option("--t", cfg.times, "Comma-separated times for 'wigner'", true);
  app.add_option("--lambda", cfg.lambda, "Exponential disorder strength");
  app.add_option("--p", cfg.p, "Watts-Strogatz rewiring probability");
  app.add_option("--real", cfg.n_real, "Ensemble realization count", true);
  app.add_option("--seed", cfg.seed, "Base seed (splitmix64 stream)", true);
  app.add_option("--tol", cfg.tol,
                 "Degeneracy clustering tolerance (default: 1e-8*max(1,range))");
  app.add_option("--out", cfg.out, "Output path prefix");
  app.add_flag("--png", cfg.png, "Also render heatmap PNGs");

  for (const char* name :
       {"spectrum", "wigner", "limit", "marginal", "asymmetry", "ensemble"}) {
    app.add_subcommand(name)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ctqw: " << e.what() << '\n';
    return 1;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.has_lambda = app.count("--lambda") > 0;
  cfg.has_p = app.count("--p") > 0;
  cfg.has_tol = app.count("--tol") > 0;
  if (app.count("--N") == 0) {
    std::cerr << "ctqw: --N is required\n";
    return 1;
  }
  if (cfg.out.empty()) cfg.out = "ctqw_" + cfg.subcommand;

  try {
    return run(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "ctqw: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ctqw: " << e.what() << '\n';
    return 2;
  }
}
