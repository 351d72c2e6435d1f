#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "ctqw/analysis.hpp"
#include "ctqw/graph.hpp"
#include "ctqw/hamiltonian.hpp"
#include "ctqw/wigner.hpp"

namespace ctqw {

/// Ordered key=value pairs echoed into every output header, so a file is
/// reproducible from its own metadata.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double v);

/// Writes to <path>.tmp and renames, so a reader never sees partial output.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content);

/// Metadata derived from the field itself: N, m, j, t or "limit",
/// disorder kind/parameters, seed, degeneracy tolerance.
Metadata field_metadata(const WignerField& field);

/// Edge list, one "u,v" line per edge, header "# N=<N>".
std::string graph_csv(const Graph& g);

/// Dense matrix dump for debugging.
std::string hamiltonian_csv(const Hamiltonian& h);

/// Columns: index, eigenvalue, class_id.
std::string spectrum_csv(const Eigen::VectorXd& eigenvalues,
                         const std::vector<int>& class_ids,
                         const Metadata& meta = {});
std::string spectrum_json(const Eigen::VectorXd& eigenvalues,
                          const std::vector<int>& class_ids,
                          const Metadata& meta = {});

/// Generic numeric grid: "# key=value" header lines, then one row per line.
std::string matrix_csv(const Eigen::MatrixXd& grid, const Metadata& meta = {});

/// Generic numeric column with an index column.
std::string vector_csv(const Eigen::VectorXd& v, const std::string& value_name,
                       const Metadata& meta = {});

/// Wigner field as CSV: rows are x, columns are k.
std::string wigner_csv(const WignerField& field, const Metadata& extra = {});

/// Wigner field as a JSON envelope {"metadata": {...}, "values": [[...]]}.
std::string wigner_json(const WignerField& field, const Metadata& extra = {});

/// chi and k_marginal side by side, indexed by node.
std::string marginal_csv(const MarginalReport& report,
                         const Metadata& meta = {});
std::string marginal_json(const MarginalReport& report,
                          const Metadata& meta = {});

std::string asymmetry_json(const AsymmetryMap& map, const Metadata& meta = {});

/// Mean field, mean chi, and per-realization connectivity flags.
std::string ensemble_json(const EnsembleResult& result,
                          const Metadata& extra = {});

}  // namespace ctqw
