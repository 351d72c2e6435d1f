#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ctqw {

/// Circulant ring parameters: N nodes, each connected to its m nearest
/// neighbours on either side (degree 2m).
struct RingSpec {
  int n_nodes = 0;
  int neighbor_range = 0;

  /// Throws std::invalid_argument unless N >= 3, m >= 1 and 2m <= N-1.
  void validate() const;
};

/// Simple undirected graph on nodes 0..N-1. Edges are normalized to
/// u < v and kept sorted, so equal graphs compare and serialize equal.
class Graph {
 public:
  Graph(int n_nodes, std::vector<std::pair<int, int>> edges);

  int n_nodes() const { return n_nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<int> degrees() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  int n_nodes_;
  std::vector<std::pair<int, int>> edges_;
};

/// Circulant ring: i ~ j iff (i - j) mod N lies in {1..m} u {N-m..N-1}.
Graph build_ring(const RingSpec& spec);

/// Watts-Strogatz rewiring. Visits the ring edges (i, i+z mod N) for
/// i = 0..N-1, z = 1..m in that order; each is replaced with probability p
/// by (i, w), w uniform over the nodes that are neither i nor currently
/// adjacent to i. If node i has no free target the attempt is skipped
/// (counted in *skipped when given). The result is a simple graph with
/// exactly N*m edges and depends only on (spec, p, seed).
Graph ws_rewire(const RingSpec& spec, double p, std::uint64_t seed,
                int* skipped = nullptr);

}  // namespace ctqw
