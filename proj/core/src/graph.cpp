#include "ctqw/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "ctqw/rng.hpp"

namespace ctqw {

void RingSpec::validate() const {
  if (n_nodes < 3) {
    throw std::invalid_argument("RingSpec: need N >= 3, got N=" +
                                std::to_string(n_nodes));
  }
  if (neighbor_range < 1) {
    throw std::invalid_argument("RingSpec: need m >= 1, got m=" +
                                std::to_string(neighbor_range));
  }
  if (2 * neighbor_range > n_nodes - 1) {
    throw std::invalid_argument(
        "RingSpec: 2m <= N-1 violated (N=" + std::to_string(n_nodes) +
        ", m=" + std::to_string(neighbor_range) + ")");
  }
}

Graph::Graph(int n_nodes, std::vector<std::pair<int, int>> edges)
    : n_nodes_(n_nodes), edges_(std::move(edges)) {
  if (n_nodes_ < 1) throw std::invalid_argument("Graph: need at least 1 node");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_nodes_) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("Graph: self-loop on node " +
                                  std::to_string(u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("Graph: duplicate edge");
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_nodes_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

bool Graph::is_connected() const {
  if (n_nodes_ <= 1) return true;
  std::vector<std::vector<int>> adj(n_nodes_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n_nodes_, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n_nodes_;
}

Graph build_ring(const RingSpec& spec) {
  spec.validate();
  const int n = spec.n_nodes;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * spec.neighbor_range);
  for (int i = 0; i < n; ++i) {
    for (int z = 1; z <= spec.neighbor_range; ++z) {
      edges.emplace_back(i, (i + z) % n);
    }
  }
  return Graph(n, std::move(edges));
}

Graph ws_rewire(const RingSpec& spec, double p, std::uint64_t seed,
                int* skipped) {
  spec.validate();
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("ws_rewire: p must lie in [0, 1]");
  }
  const int n = spec.n_nodes;
  const int m = spec.neighbor_range;

  // Dense adjacency keeps neighbour tests O(1); desk-scale N makes the
  // N^2 bytes irrelevant.
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int z = 1; z <= m; ++z) {
      const int v = (i + z) % n;
      adj[i][v] = adj[v][i] = 1;
    }
  }

  SplitMix64 rng(seed);
  int skips = 0;
  std::vector<int> candidates;
  candidates.reserve(n);
  for (int i = 0; i < n; ++i) {
    for (int z = 1; z <= m; ++z) {
      if (!(rng.unit() < p)) continue;
      const int old_target = (i + z) % n;
      candidates.clear();
      for (int w = 0; w < n; ++w) {
        if (w != i && !adj[i][w]) candidates.push_back(w);
      }
      if (candidates.empty()) {
        // Node already adjacent to everything; leave the edge in place.
        ++skips;
        continue;
      }
      const int w = candidates[rng.bounded(candidates.size())];
      adj[i][old_target] = adj[old_target][i] = 0;
      adj[i][w] = adj[w][i] = 1;
    }
  }
  if (skipped) *skipped = skips;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * m);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace ctqw
