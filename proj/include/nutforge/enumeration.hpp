#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nutforge/canonical.hpp"
#include "nutforge/error.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/pregraph.hpp"

namespace nutforge {

struct EnumerationOptions {
  /// Largest order accepted before raising ResourceLimitError.
  int max_order = 10;
};

struct EnumerationReport {
  int order = 0;
  std::size_t underlying_count = 0;  // U(order)
  std::size_t quotient_count = 0;    // Q(order)
  std::vector<Pregraph> pregraphs;   // canonical order
};

namespace detail {

inline void check_order(int order, const EnumerationOptions& opts) {
  if (order < 1) throw InvalidParamsError("order must be positive");
  if (order > opts.max_order)
    throw ResourceLimitError("order " + std::to_string(order) +
                             " exceeds the configured bound " +
                             std::to_string(opts.max_order));
}

inline std::vector<int> graph_code(const Graph& g) {
  return canonical_form(g.adjacency_matrix()).code;
}

}  // namespace detail

/// All connected simple graphs of the given order with maximum degree at
/// most 3, one per isomorphism class, canonically labelled and sorted by
/// canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// each class on k+1 vertices arises from some class on k vertices by adding
/// a vertex joined to 1..3 vertices of degree below 3.
inline std::vector<Graph> enumerate_subcubic_connected(
    int order, const EnumerationOptions& opts = {}) {
  detail::check_order(order, opts);
  std::map<std::vector<int>, Graph> level;
  {
    Graph single(1);
    level.emplace(detail::graph_code(single), single);
  }
  for (int k = 1; k < order; ++k) {
    std::map<std::vector<int>, Graph> next;
    for (const auto& [code, g] : level) {
      std::vector<int> open;
      for (int v = 0; v < k; ++v)
        if (g.degree(v) < 3) open.push_back(v);
      const auto m = open.size();
      // subsets of `open` with 1..3 elements
      for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        if (std::popcount(mask) > 3) continue;
        Graph h(k + 1);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (std::size_t i = 0; i < m; ++i)
          if (mask >> i & 1U) h.add_edge(open[i], k);
        auto cf = canonical_form(h.adjacency_matrix());
        if (!next.contains(cf.code))
          next.emplace(std::move(cf.code), h.relabeled(cf.order));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

/// All cubic pregraphs with underlying graph `g` (up to isomorphism), with at
/// most one semi-edge per vertex and, for three or more vertices, no triple
/// edges. The missing degree at each vertex is filled by doubling existing
/// edges, then one loop per two missing darts and a semi-edge for an odd one.
inline std::vector<Pregraph> decorate_to_cubic(const Graph& g) {
  const int n = g.order();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 3)
      throw PreconditionError("decorate_to_cubic needs a subcubic graph");
  if (!is_connected(g))
    throw PreconditionError("decorate_to_cubic needs a connected graph");

  const auto edges = g.edges();
  const int max_extra = n >= 3 ? 1 : 2;
  std::vector<int> deficit(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deficit[static_cast<std::size_t>(v)] = 3 - g.degree(v);

  std::map<std::vector<int>, IntMatrix> found;
  std::vector<int> extra(edges.size(), 0);

  auto emit = [&]() {
    const auto un = static_cast<std::size_t>(n);
    IntMatrix m(un, un, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      const int mult = 1 + extra[i];
      m(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = mult;
      m(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = mult;
    }
    for (std::size_t v = 0; v < un; ++v) {
      const int r = deficit[v];
      m(v, v) = (r / 2) * kLoopWeight + (r % 2);
    }
    auto cf = canonical_form(m);
    if (!found.contains(cf.code))
      found.emplace(std::move(cf.code), permute(m, cf.order));
  };

  // Backtrack over per-edge extra multiplicity, keeping deficits >= 0.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      emit();
      return;
    }
    auto [u, v] = edges[i];
    auto& du = deficit[static_cast<std::size_t>(u)];
    auto& dv = deficit[static_cast<std::size_t>(v)];
    for (int e = 0; e <= max_extra; ++e) {
      if (du < e || dv < e) break;
      du -= e;
      dv -= e;
      extra[i] = e;
      self(self, i + 1);
      du += e;
      dv += e;
    }
    extra[i] = 0;
  };
  recurse(recurse, 0);

  std::vector<Pregraph> out;
  out.reserve(found.size());
  for (const auto& [code, m] : found) out.push_back(pregraph_from_decoration(m));
  return out;
}

/// Connected cubic quotient pregraphs of the given order. The list is ordered
/// by underlying graph, then by decoration, both by canonical code.
inline EnumerationReport enumerate_quotients(int order,
                                             const EnumerationOptions& opts = {}) {
  detail::check_order(order, opts);
  if (order < 3)
    throw PreconditionError("quotient enumeration covers orders >= 3");
  EnumerationReport report;
  report.order = order;
  const auto graphs = enumerate_subcubic_connected(order, opts);
  report.underlying_count = graphs.size();
  for (const auto& g : graphs) {
    auto decorated = decorate_to_cubic(g);
    report.pregraphs.insert(report.pregraphs.end(), decorated.begin(),
                            decorated.end());
  }
  report.quotient_count = report.pregraphs.size();
  return report;
}

}  // namespace nutforge
