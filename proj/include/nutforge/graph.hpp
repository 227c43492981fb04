#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/matrix.hpp"

namespace nutforge {

/// Simple undirected graph on vertices 0..order-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order) : adj_(static_cast<std::size_t>(order)) {}

  [[nodiscard]] int order() const noexcept {
    return static_cast<int>(adj_.size());
  }

  /// Adds edge uv. Loops and repeated edges are rejected.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidParamsError("simple graph cannot have a loop");
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
      throw InvalidParamsError("simple graph cannot have parallel edges");
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
  }

  [[nodiscard]] bool has_edge(int u, int v) const {
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  [[nodiscard]] const std::vector<int>& neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }

  [[nodiscard]] int degree(int v) const {
    return static_cast<int>(neighbors(v).size());
  }

  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

  /// Edges as (u, v) with u < v in lexicographic order.
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  [[nodiscard]] IntMatrix adjacency_matrix() const {
    const auto n = adj_.size();
    IntMatrix a(n, n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (int v : adj_[u]) a(u, static_cast<std::size_t>(v)) = 1;
    return a;
  }

  /// Graph with vertex `order[i]` of this graph renamed to i.
  [[nodiscard]] Graph relabeled(const std::vector<int>& order) const {
    std::vector<int> position(adj_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    Graph g(this->order());
    for (auto [u, v] : edges())
      g.add_edge(position[static_cast<std::size_t>(u)],
                 position[static_cast<std::size_t>(v)]);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= order())
      throw InvalidParamsError("vertex index out of range");
  }

  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Connected components labelled 0..k-1 in order of smallest vertex.
inline std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::queue<int> frontier;
    frontier.push(s);
    comp[static_cast<std::size_t>(s)] = next;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          frontier.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          frontier.push(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool has_leaf(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) return true;
  return false;
}

inline bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != degree) return false;
  return true;
}

}  // namespace nutforge
