#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nutforge/nutforge.hpp"

namespace nutforge::testing {

/// Three orbits: double edge 0-1, edges 0-2 and 1-2, semi-edge at 2. The dart
/// order matches data/three_orbit_z10.txt.
inline Pregraph three_orbit() {
  PregraphBuilder b(3);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  b.add_edge(0, 1, 2);
  b.add_semi_edge(2);
  return b.build();
}

/// The three-orbit quotient with voltages 0, 0, 2, 4, 5 over Z_10.
inline VoltagePregraph three_orbit_z10() {
  const std::vector<int> volts{0, 0, 2, 4, 5};
  return VoltagePregraph::from_edge_voltages(three_orbit(), 10, volts);
}

inline Rational frac(long num, long den) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Rank by plain Gauss-Jordan elimination over mpq, independent of the
/// fraction-free code under test.
template <typename T>
std::size_t rank_by_gauss(const Matrix<T>& m) {
  std::vector<RationalVector> a(m.rows(), RationalVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// True iff some vertex permutation maps decoration matrix x onto y.
inline bool isomorphic_by_brute_force(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows()) return false;
  std::vector<std::size_t> perm(x.rows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < x.rows() && same; ++i)
      for (std::size_t j = 0; j < x.rows() && same; ++j) same = x(perm[i], perm[j]) == y(i, j);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace nutforge::testing
