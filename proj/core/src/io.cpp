#include "ctqw/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "ctqw/rng.hpp"
#include "ctqw/version.hpp"

namespace ctqw {

namespace {

const char* disorder_name(DisorderKind kind) {
  switch (kind) {
    case DisorderKind::none: return "none";
    case DisorderKind::exponential: return "exponential";
    case DisorderKind::ws: return "ws";
  }
  return "unknown";
}

std::string meta_block(const Metadata& meta) {
  std::string out;
  for (const auto& [key, value] : meta) {
    out += "# ";
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

nlohmann::json meta_object(const Metadata& meta) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [key, value] : meta) obj[key] = value;
  return obj;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_json(const Eigen::VectorXd& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw std::runtime_error("rename " + tmp.string() + " -> " + path.string() +
                             " failed: " + ec.message());
  }
}

Metadata field_metadata(const WignerField& field) {
  Metadata meta;
  meta.emplace_back("version", kVersion);
  meta.emplace_back("N", std::to_string(field.n_nodes));
  meta.emplace_back("m", std::to_string(field.source.ring.neighbor_range));
  meta.emplace_back("j", std::to_string(field.initial_node));
  meta.emplace_back("time", field.is_limit() ? "limit"
                                             : format_double(*field.time));
  const DisorderSpec& d = field.source.disorder;
  meta.emplace_back("disorder", disorder_name(d.kind));
  meta.emplace_back("lambda", format_double(d.lambda));
  meta.emplace_back("p", format_double(d.p));
  meta.emplace_back("seed", std::to_string(d.seed));
  meta.emplace_back("prng", SplitMix64::name());
  if (field.is_limit()) {
    meta.emplace_back("degeneracy_tol", field.degeneracy_tol
                                            ? format_double(*field.degeneracy_tol)
                                            : "auto");
  }
  meta.emplace_back("rows", "x");
  meta.emplace_back("cols", "k");
  return meta;
}

std::string graph_csv(const Graph& g) {
  std::string out = "# N=" + std::to_string(g.n_nodes()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ',';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string hamiltonian_csv(const Hamiltonian& h) {
  return matrix_csv(h.matrix,
                    {{"N", std::to_string(h.size())}, {"matrix", "hamiltonian"}});
}

std::string spectrum_csv(const Eigen::VectorXd& eigenvalues,
                         const std::vector<int>& class_ids,
                         const Metadata& meta) {
  if (static_cast<std::size_t>(eigenvalues.size()) != class_ids.size()) {
    throw std::invalid_argument("spectrum_csv: class id count mismatch");
  }
  std::string out = meta_block(meta);
  out += "index,eigenvalue,class_id\n";
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(eigenvalues[i]);
    out += ',';
    out += std::to_string(class_ids[static_cast<std::size_t>(i)]);
    out += '\n';
  }
  return out;
}

std::string spectrum_json(const Eigen::VectorXd& eigenvalues,
                          const std::vector<int>& class_ids,
                          const Metadata& meta) {
  nlohmann::json doc;
  doc["metadata"] = meta_object(meta);
  doc["eigenvalues"] = vector_json(eigenvalues);
  doc["class_ids"] = class_ids;
  return doc.dump(2) + "\n";
}

std::string matrix_csv(const Eigen::MatrixXd& grid, const Metadata& meta) {
  std::string out = meta_block(meta);
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      if (c > 0) out += ',';
      out += format_double(grid(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string vector_csv(const Eigen::VectorXd& v, const std::string& value_name,
                       const Metadata& meta) {
  std::string out = meta_block(meta);
  out += "index," + value_name + "\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(v[i]);
    out += '\n';
  }
  return out;
}

namespace {

Metadata merged(const WignerField& field, const Metadata& extra) {
  Metadata meta = field_metadata(field);
  meta.insert(meta.end(), extra.begin(), extra.end());
  return meta;
}

}  // namespace

std::string wigner_csv(const WignerField& field, const Metadata& extra) {
  return matrix_csv(field.values, merged(field, extra));
}

std::string wigner_json(const WignerField& field, const Metadata& extra) {
  nlohmann::json doc;
  doc["metadata"] = meta_object(merged(field, extra));
  doc["values"] = matrix_json(field.values);
  return doc.dump(2) + "\n";
}

std::string marginal_csv(const MarginalReport& report, const Metadata& meta) {
  std::string out = meta_block(meta);
  out += "index,chi,k_marginal\n";
  for (Eigen::Index i = 0; i < report.chi.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(report.chi[i]);
    out += ',';
    out += format_double(report.k_marginal[i]);
    out += '\n';
  }
  return out;
}

std::string marginal_json(const MarginalReport& report, const Metadata& meta) {
  nlohmann::json doc;
  doc["metadata"] = meta_object(meta);
  doc["initial_node"] = report.initial_node;
  doc["chi"] = vector_json(report.chi);
  doc["k_marginal"] = vector_json(report.k_marginal);
  return doc.dump(2) + "\n";
}

std::string asymmetry_json(const AsymmetryMap& map, const Metadata& meta) {
  nlohmann::json doc;
  doc["metadata"] = meta_object(meta);
  doc["dx"] = matrix_json(map.dx);
  doc["dk"] = matrix_json(map.dk);
  doc["chi_asym"] = vector_json(map.chi_asym);
  return doc.dump(2) + "\n";
}

std::string ensemble_json(const EnsembleResult& result, const Metadata& extra) {
  nlohmann::json doc;
  Metadata meta = merged(result.mean_field, extra);
  meta.emplace_back("n_realizations", std::to_string(result.n_realizations));
  meta.emplace_back("base_seed", std::to_string(result.base_seed));
  doc["metadata"] = meta_object(meta);
  doc["mean_field"] = matrix_json(result.mean_field.values);
  doc["mean_chi"] = vector_json(result.mean_chi);
  doc["connected"] = result.connected;
  return doc.dump(2) + "\n";
}

}  // namespace ctqw
