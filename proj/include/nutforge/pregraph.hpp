#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/matrix.hpp"

namespace nutforge {

using Vertex = int;
using Dart = int;

/// A pregraph in the dart formalism: every dart has an initial vertex and an
/// inverse dart. A dart equal to its own inverse is a semi-edge; a dart pair
/// with both ends at one vertex is a loop. Parallel edges are allowed.
///
/// Immutable once built.
class Pregraph {
 public:
  Pregraph() = default;

  /// Validates that `inv` is an involution and `beg` lands in range.
  Pregraph(int vertex_count, std::vector<Vertex> beg, std::vector<Dart> inv)
      : vertex_count_(vertex_count), beg_(std::move(beg)), inv_(std::move(inv)) {
    if (vertex_count_ <= 0)
      throw InvalidParamsError("pregraph needs at least one vertex");
    if (beg_.size() != inv_.size())
      throw InvalidParamsError("beg and inv must cover the same darts");
    const auto darts = static_cast<Dart>(beg_.size());
    for (Dart a = 0; a < darts; ++a) {
      const auto i = static_cast<std::size_t>(a);
      if (beg_[i] < 0 || beg_[i] >= vertex_count_)
        throw InvalidParamsError("dart " + std::to_string(a) +
                                 " begins outside the vertex set");
      if (inv_[i] < 0 || inv_[i] >= darts ||
          inv_[static_cast<std::size_t>(inv_[i])] != a)
        throw InvalidParamsError("inv is not an involution at dart " +
                                 std::to_string(a));
    }
  }

  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int dart_count() const noexcept {
    return static_cast<int>(beg_.size());
  }

  [[nodiscard]] Vertex beg(Dart a) const {
    return beg_[static_cast<std::size_t>(a)];
  }
  [[nodiscard]] Dart inv(Dart a) const {
    return inv_[static_cast<std::size_t>(a)];
  }
  /// Initial vertex of the inverse dart.
  [[nodiscard]] Vertex end(Dart a) const { return beg(inv(a)); }

  [[nodiscard]] bool is_semi_edge(Dart a) const { return inv(a) == a; }
  [[nodiscard]] bool is_loop(Dart a) const {
    return inv(a) != a && beg(a) == end(a);
  }

  [[nodiscard]] std::vector<Dart> darts_at(Vertex v) const {
    std::vector<Dart> out;
    for (Dart a = 0; a < dart_count(); ++a)
      if (beg(a) == v) out.push_back(a);
    return out;
  }

  [[nodiscard]] int degree(Vertex v) const {
    int d = 0;
    for (Vertex b : beg_) d += (b == v);
    return d;
  }

  /// One representative dart per edge (the smaller id of each inverse pair,
  /// or the semi-edge itself), in increasing id order.
  [[nodiscard]] std::vector<Dart> edges() const {
    std::vector<Dart> out;
    for (Dart a = 0; a < dart_count(); ++a)
      if (a <= inv(a)) out.push_back(a);
    return out;
  }

  [[nodiscard]] int semi_edge_count(Vertex v) const {
    int k = 0;
    for (Dart a = 0; a < dart_count(); ++a) k += (beg(a) == v && is_semi_edge(a));
    return k;
  }
  [[nodiscard]] int loop_count(Vertex v) const {
    int k = 0;
    for (Dart a = 0; a < dart_count(); ++a) k += (beg(a) == v && is_loop(a));
    return k / 2;
  }

  friend bool operator==(const Pregraph&, const Pregraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Vertex> beg_;
  std::vector<Dart> inv_;
};

/// Incremental construction. Darts are numbered in call order: each edge or
/// loop takes two consecutive ids (forward dart first), a semi-edge takes one.
class PregraphBuilder {
 public:
  explicit PregraphBuilder(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count <= 0)
      throw InvalidParamsError("pregraph needs at least one vertex");
  }

  /// Adds `multiplicity` parallel edges u-v. Returns the first forward dart.
  Dart add_edge(Vertex u, Vertex v, int multiplicity = 1) {
    check(u);
    check(v);
    if (u == v) return add_loop(u, multiplicity);
    const auto first = static_cast<Dart>(beg_.size());
    for (int i = 0; i < multiplicity; ++i) push_pair(u, v);
    return first;
  }

  Dart add_loop(Vertex v, int count = 1) {
    check(v);
    const auto first = static_cast<Dart>(beg_.size());
    for (int i = 0; i < count; ++i) push_pair(v, v);
    return first;
  }

  Dart add_semi_edge(Vertex v, int count = 1) {
    check(v);
    const auto first = static_cast<Dart>(beg_.size());
    for (int i = 0; i < count; ++i) {
      const auto a = static_cast<Dart>(beg_.size());
      beg_.push_back(v);
      inv_.push_back(a);
    }
    return first;
  }

  [[nodiscard]] Pregraph build() const { return {vertex_count_, beg_, inv_}; }

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= vertex_count_)
      throw InvalidParamsError("vertex " + std::to_string(v) + " out of range");
  }
  void push_pair(Vertex u, Vertex v) {
    const auto a = static_cast<Dart>(beg_.size());
    beg_.push_back(u);
    inv_.push_back(a + 1);
    beg_.push_back(v);
    inv_.push_back(a);
  }

  int vertex_count_;
  std::vector<Vertex> beg_;
  std::vector<Dart> inv_;
};

/// A(X): entry (x, y) counts darts a with beg a = x and beg(inv a) = y.
/// A semi-edge adds 1 to its diagonal entry, a loop adds 2.
inline IntMatrix adjacency_matrix(const Pregraph& p) {
  const auto n = static_cast<std::size_t>(p.vertex_count());
  IntMatrix a(n, n, 0);
  for (Dart d = 0; d < p.dart_count(); ++d)
    ++a(static_cast<std::size_t>(p.beg(d)), static_cast<std::size_t>(p.end(d)));
  return a;
}

/// Drops semi-edges, loops and duplicate edges.
inline Graph underlying_graph(const Pregraph& p) {
  Graph g(p.vertex_count());
  const auto a = adjacency_matrix(p);
  for (std::size_t x = 0; x < a.rows(); ++x)
    for (std::size_t y = x + 1; y < a.cols(); ++y)
      if (a(x, y) >= 1) g.add_edge(static_cast<int>(x), static_cast<int>(y));
  return g;
}

/// Views a simple graph as a pregraph (one edge per adjacency).
inline Pregraph as_pregraph(const Graph& g) {
  PregraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  return b.build();
}

inline bool is_connected(const Pregraph& p) {
  return is_connected(underlying_graph(p));
}

inline bool is_cubic(const Pregraph& p) {
  std::vector<int> deg(static_cast<std::size_t>(p.vertex_count()), 0);
  for (Dart a = 0; a < p.dart_count(); ++a) ++deg[static_cast<std::size_t>(p.beg(a))];
  for (int d : deg)
    if (d != 3) return false;
  return true;
}

inline constexpr int kLoopWeight = 64;

/// The pregraph up to dart relabelling: symmetric matrix whose off-diagonal
/// entries are edge multiplicities and whose diagonal packs the decorations
/// of a vertex as kLoopWeight * loops + semi-edges.
inline IntMatrix decoration_matrix(const Pregraph& p) {
  const auto n = static_cast<std::size_t>(p.vertex_count());
  IntMatrix m(n, n, 0);
  for (Dart a = 0; a < p.dart_count(); ++a) {
    const auto x = static_cast<std::size_t>(p.beg(a));
    if (p.is_semi_edge(a)) {
      m(x, x) += 1;
    } else if (p.is_loop(a)) {
      if (a < p.inv(a)) m(x, x) += kLoopWeight;
    } else {
      ++m(x, static_cast<std::size_t>(p.end(a)));
    }
  }
  return m;
}

/// Inverse of decoration_matrix. Darts come out grouped: edges (u < v, in
/// lexicographic order), then loops, then semi-edges, by vertex.
inline Pregraph pregraph_from_decoration(const IntMatrix& m) {
  const auto n = m.rows();
  PregraphBuilder b(static_cast<int>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (m(u, v) > 0)
        b.add_edge(static_cast<int>(u), static_cast<int>(v), m(u, v));
  for (std::size_t v = 0; v < n; ++v)
    if (m(v, v) / kLoopWeight > 0)
      b.add_loop(static_cast<int>(v), m(v, v) / kLoopWeight);
  for (std::size_t v = 0; v < n; ++v)
    if (m(v, v) % kLoopWeight > 0)
      b.add_semi_edge(static_cast<int>(v), m(v, v) % kLoopWeight);
  return b.build();
}

}  // namespace nutforge
