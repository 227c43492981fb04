#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/pregraph.hpp"

namespace nutforge {

/// Representative of v modulo n in [0, n).
inline int mod(long v, int n) {
  long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// A pregraph with a Z_n voltage on every dart, satisfying
/// voltage(inv a) = -voltage(a) mod n. Voltages are stored in [0, n).
class VoltagePregraph {
 public:
  VoltagePregraph(Pregraph base, int modulus, std::vector<int> voltages)
      : base_(std::move(base)), modulus_(modulus), voltage_(std::move(voltages)) {
    if (modulus_ <= 0) throw InvalidParamsError("modulus must be positive");
    if (static_cast<int>(voltage_.size()) != base_.dart_count())
      throw InvalidParamsError("one voltage per dart is required");
    for (auto& g : voltage_) g = mod(g, modulus_);
    for (Dart a = 0; a < base_.dart_count(); ++a)
      if (voltage(base_.inv(a)) != mod(-static_cast<long>(voltage(a)), modulus_))
        throw InvalidParamsError("voltage of dart " + std::to_string(a) +
                                 " is not inverted on its inverse dart");
  }

  /// Assigns `edge_voltages[i]` to the i-th edge of base.edges() (its
  /// representative dart) and the negation to the inverse dart.
  static VoltagePregraph from_edge_voltages(Pregraph base, int modulus,
                                            std::span<const int> edge_voltages) {
    const auto reps = base.edges();
    if (reps.size() != edge_voltages.size())
      throw InvalidParamsError("expected " + std::to_string(reps.size()) +
                               " edge voltages, got " +
                               std::to_string(edge_voltages.size()));
    std::vector<int> v(static_cast<std::size_t>(base.dart_count()), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Dart a = reps[i];
      v[static_cast<std::size_t>(a)] = mod(edge_voltages[i], modulus);
      v[static_cast<std::size_t>(base.inv(a))] = mod(-static_cast<long>(edge_voltages[i]), modulus);
    }
    return {std::move(base), modulus, std::move(v)};
  }

  [[nodiscard]] const Pregraph& base() const noexcept { return base_; }
  [[nodiscard]] int modulus() const noexcept { return modulus_; }
  [[nodiscard]] int voltage(Dart a) const {
    return voltage_[static_cast<std::size_t>(a)];
  }
  [[nodiscard]] const std::vector<int>& voltages() const noexcept { return voltage_; }

  /// Voltages of base().edges() in order.
  [[nodiscard]] std::vector<int> edge_voltages() const {
    std::vector<int> out;
    for (Dart a : base_.edges()) out.push_back(voltage(a));
    return out;
  }

  friend bool operator==(const VoltagePregraph&, const VoltagePregraph&) = default;

 private:
  Pregraph base_;
  int modulus_;
  std::vector<int> voltage_;
};

/// Vertex set of a lift is (quotient vertex) x Z_n, flattened as x * n + j.
class Lift {
 public:
  Lift(Graph graph, int orbit_count, int modulus)
      : graph_(std::move(graph)), orbit_count_(orbit_count), modulus_(modulus) {}

  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] int orbit_count() const noexcept { return orbit_count_; }
  [[nodiscard]] int modulus() const noexcept { return modulus_; }

  [[nodiscard]] int vertex(Vertex x, long j) const {
    return x * modulus_ + mod(j, modulus_);
  }
  /// The quotient map: lifted vertex -> quotient vertex.
  [[nodiscard]] Vertex quotient(int v) const { return v / modulus_; }
  [[nodiscard]] int residue(int v) const { return v % modulus_; }

 private:
  Graph graph_;
  int orbit_count_;
  int modulus_;
};

/// Darts whose lifts collide: for each vertex x, the darts leaving x are
/// sent to (end vertex, voltage); the lift is simple iff these targets are
/// pairwise distinct and none equals (x, 0). This covers zero-voltage loops
/// and semi-edges, loops of voltage n/2, and parallel darts with equal voltage.
inline std::vector<Dart> non_simple_darts(const VoltagePregraph& vp) {
  const auto& p = vp.base();
  std::vector<Dart> bad;
  for (Vertex x = 0; x < p.vertex_count(); ++x) {
    const auto darts = p.darts_at(x);
    for (std::size_t i = 0; i < darts.size(); ++i) {
      const Dart a = darts[i];
      const std::pair<Vertex, int> ta{p.end(a), vp.voltage(a)};
      bool clash = ta == std::pair<Vertex, int>{x, 0};
      for (std::size_t k = 0; k < darts.size() && !clash; ++k)
        clash = k != i && ta == std::pair<Vertex, int>{p.end(darts[k]), vp.voltage(darts[k])};
      if (clash) bad.push_back(a);
    }
  }
  return bad;
}

inline bool lift_is_simple(const VoltagePregraph& vp) {
  return non_simple_darts(vp).empty();
}

/// The derived graph: dart a from x to y with voltage g yields the edges
/// (x, j) ~ (y, j + g) for every j in Z_n.
inline Lift derive(const VoltagePregraph& vp) {
  auto bad = non_simple_darts(vp);
  if (!bad.empty()) {
    std::string msg = "lift is not simple; offending darts:";
    for (Dart a : bad) msg += " " + std::to_string(a);
    throw NonSimpleLiftError(std::move(bad), msg);
  }
  const auto& p = vp.base();
  const int n = vp.modulus();
  Lift shape(Graph(p.vertex_count() * n), p.vertex_count(), n);
  Graph g(p.vertex_count() * n);
  for (Dart a = 0; a < p.dart_count(); ++a) {
    if (a > p.inv(a)) continue;  // each edge once
    for (int j = 0; j < n; ++j) {
      const int u = shape.vertex(p.beg(a), j);
      const int v = shape.vertex(p.end(a), static_cast<long>(j) + vp.voltage(a));
      // a semi-edge of voltage n/2 meets each lifted edge twice
      if (a == p.inv(a) && u > v) continue;
      g.add_edge(u, v);
    }
  }
  return {std::move(g), p.vertex_count(), n};
}

}  // namespace nutforge
