#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/matrix.hpp"
#include "nutforge/polynomial.hpp"

namespace nutforge {

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Basis of a right null space. Each vector is a primitive integer vector
/// (stored as rationals) whose first nonzero entry is positive.
struct KernelBasis {
  std::vector<RationalVector> vectors;

  [[nodiscard]] std::size_t dimension() const noexcept { return vectors.size(); }
};

namespace detail {

inline Rational to_rational(const Rational& r) { return r; }
inline Rational to_rational(const Integer& z) { return Rational(z); }
template <typename T>
  requires std::is_integral_v<T>
Rational to_rational(T v) {
  return Rational(static_cast<long>(v));
}

/// Integer matrix with the same null space: each row scaled by the lcm of
/// its denominators.
template <typename T>
Matrix<Integer> integral_rows(const Matrix<T>& m) {
  Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational q = to_rational(m(i, j));
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational q = to_rational(m(i, j)) * scale;
      out(i, j) = q.get_num();
    }
  }
  return out;
}

inline double to_double(const Integer& z) { return z.get_d(); }
template <typename T>
  requires std::is_integral_v<T>
double to_double(T v) {
  return static_cast<double>(v);
}

/// log2 of the Hadamard bound prod_i max(1, |row_i|). Every minor of the
/// matrix, hence every entry produced by fraction-free elimination, is
/// bounded in absolute value by 2 to this power.
template <typename T>
double hadamard_log2(const Matrix<T>& m) {
  double total = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double norm2 = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double v = to_double(m(i, j));
      norm2 += v * v;
    }
    if (norm2 > 1.0) total += 0.5 * std::log2(norm2);
  }
  return total;
}

/// Machine words suffice when every minor fits comfortably in 62 bits.
inline constexpr double kMachineHadamardLimit = 61.0;

struct MachineIntOps {
  using Int = std::int64_t;
  static bool is_zero(Int v) { return v == 0; }
  // t <- (p * t - a * b) / prev, exact
  static void update(Int& t, Int p, Int a, Int b, Int prev) {
    __int128 v = static_cast<__int128>(p) * t - static_cast<__int128>(a) * b;
    if (v % prev != 0) throw std::logic_error("inexact fraction-free step");
    t = static_cast<Int>(v / prev);
  }
};

struct GmpIntOps {
  using Int = Integer;
  static bool is_zero(const Integer& v) { return sgn(v) == 0; }
  static void update(Integer& t, const Integer& p, const Integer& a,
                     const Integer& b, const Integer& prev) {
    thread_local Integer tmp;
    mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), t.get_mpz_t());
    mpz_submul(tmp.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(t.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  }
};

template <typename Int>
struct Echelon {
  std::vector<std::vector<Int>> rows;  // row echelon form, pivot rows first
  std::vector<std::size_t> pivots;     // pivot column of each pivot row
};

/// Bareiss fraction-free elimination to row echelon form. All intermediate
/// entries are minors of the input, so they stay integral.
template <typename Ops>
Echelon<typename Ops::Int> bareiss(std::vector<std::vector<typename Ops::Int>> m) {
  using Int = typename Ops::Int;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Int prev(1);
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && Ops::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Int piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int a = m[i][c];
      auto& row = m[i];
      const auto& prow = m[r];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (Ops::is_zero(a)) {
          if (Ops::is_zero(row[j])) continue;
          Ops::update(row[j], piv, Int(0), Int(0), prev);
        } else {
          Ops::update(row[j], piv, a, prow[j], prev);
        }
      }
      row[c] = Int(0);
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Int, typename T, typename Conv>
std::vector<std::vector<Int>> to_rows(const Matrix<T>& m, Conv conv) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = conv(m(i, j));
  return out;
}

/// Runs fn on the echelon form of m (or of its row-scaled integral version),
/// computed in machine words when the Hadamard bound allows.
template <typename T, typename Fn>
decltype(auto) with_echelon(const Matrix<T>& m, Fn&& fn) {
  if constexpr (std::is_integral_v<T>) {
    if (hadamard_log2(m) < kMachineHadamardLimit)
      return fn(bareiss<MachineIntOps>(
          to_rows<std::int64_t>(m, [](T v) { return static_cast<std::int64_t>(v); })));
  }
  const auto integral = integral_rows(m);
  if (hadamard_log2(integral) < kMachineHadamardLimit)
    return fn(bareiss<MachineIntOps>(
        to_rows<std::int64_t>(integral, [](const Integer& z) { return std::int64_t{z.get_si()}; })));
  return fn(bareiss<GmpIntOps>(to_rows<Integer>(integral, [](const Integer& z) { return z; })));
}

inline Rational rational_of(const Integer& z) { return Rational(z); }
inline Rational rational_of(std::int64_t v) { return Rational(static_cast<long>(v)); }

/// Scales v to a primitive integer vector with positive leading entry.
inline void make_primitive(RationalVector& v) {
  Integer den = 1;
  for (const auto& q : v)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (auto& q : v) {
    q *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g == 0) return;
  int sign = 0;
  for (const auto& q : v) {
    if (sgn(q) != 0) {
      sign = sgn(q);
      break;
    }
  }
  if (sign < 0) g = -g;
  for (auto& q : v) q /= g;
}

template <typename Int>
KernelBasis back_substitute(const Echelon<Int>& ech, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  KernelBasis basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = ech.pivots.size(); i-- > 0;) {
      const std::size_t c = ech.pivots[i];
      const auto& row = ech.rows[i];
      Rational s = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (sgn(x[j]) != 0 && row[j] != 0) s += rational_of(row[j]) * x[j];
      x[c] = -s / rational_of(row[c]);
    }
    make_primitive(x);
    basis.vectors.push_back(std::move(x));
  }
  return basis;
}

}  // namespace detail

/// Exact basis of the right null space; dimension equals cols - rank.
template <typename T>
KernelBasis nullspace(const Matrix<T>& m) {
  return detail::with_echelon(m, [&](const auto& ech) {
    return detail::back_substitute(ech, m.cols());
  });
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return detail::with_echelon(m, [](const auto& ech) { return ech.pivots.size(); });
}

/// True iff no entry is zero. The empty vector is vacuously full.
inline bool is_full(std::span<const Rational> v) {
  return std::none_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

template <typename T>
bool is_zero_product(const Matrix<T>& m, std::span<const Rational> v) {
  const auto prod = multiply<T, Rational>(m, v);
  return std::all_of(prod.begin(), prod.end(), [](const Rational& q) { return sgn(q) == 0; });
}

struct NutVerdict {
  bool is_nut = false;
  KernelBasis kernel;
};

/// Nut test: kernel of the adjacency matrix is one-dimensional and spanned
/// by a full vector. The kernel is returned as a certificate either way.
inline NutVerdict is_nut(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("nut test needs order >= 2");
  NutVerdict verdict;
  verdict.kernel = nullspace(g.adjacency_matrix());
  verdict.is_nut = verdict.kernel.dimension() == 1 &&
                   is_full(verdict.kernel.vectors.front());
  return verdict;
}

/// Representer polynomial sum_j c_j x^j of a circulant with the given first
/// row. The circulant's eigenvalues are its values at the n-th roots of unity.
template <typename T>
IntPolynomial circulant_spectrum_poly(std::span<const T> first_row) {
  std::vector<Integer> coeffs;
  coeffs.reserve(first_row.size());
  for (const auto& c : first_row) coeffs.emplace_back(c);
  return IntPolynomial(std::move(coeffs));
}

/// Circulant matrix whose row i is the first row shifted right by i.
template <typename T>
Matrix<T> circulant_matrix(std::span<const T> first_row) {
  const std::size_t n = first_row.size();
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
  return m;
}

}  // namespace nutforge
