#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/exactla.hpp"

namespace nutforge {

/// coeffs . x >= bound
struct Inequality {
  std::vector<Integer> coeffs;
  Integer bound;
};

struct FourierMotzkinOptions {
  /// Abort with ResourceLimitError when an elimination stage grows past this.
  std::size_t max_constraints = 200000;
};

namespace detail {

/// Keeps the tightest bound per primitive coefficient vector; drops
/// constraints with all-zero coefficients that hold trivially. Returns false
/// if some all-zero constraint is violated (0 >= positive bound).
class ConstraintSet {
 public:
  bool insert(Inequality in) {
    Integer g = 0;
    for (const auto& c : in.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return in.bound <= 0;
    for (auto& c : in.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    Rational scaled(in.bound, g);
    scaled.canonicalize();
    auto [it, inserted] = rows_.try_emplace(std::move(in.coeffs), scaled);
    if (!inserted && scaled > it->second) it->second = scaled;
    return true;
  }

  [[nodiscard]] std::size_t size() const { return rows_.size(); }

  /// Materialises as integer inequalities (bounds cleared of denominators).
  [[nodiscard]] std::vector<Inequality> take() const {
    std::vector<Inequality> out;
    out.reserve(rows_.size());
    for (const auto& [coeffs, bound] : rows_) {
      Inequality in{coeffs, bound.get_num()};
      const Integer& den = bound.get_den();
      if (den != 1) {
        for (auto& c : in.coeffs) c *= den;
      }
      out.push_back(std::move(in));
    }
    return out;
  }

 private:
  std::map<std::vector<Integer>, Rational> rows_;
};

}  // namespace detail

/// Decides whether {x : coeffs_i . x >= bound_i for all i} is nonempty by
/// Fourier-Motzkin elimination over the rationals, and returns a point in it.
/// Variables are eliminated last to first; the point is rebuilt first to
/// last from the midpoint of each variable's surviving interval (or its
/// finite end when the interval is a ray).
inline std::optional<RationalVector> solve_inequalities(
    const std::vector<Inequality>& system, std::size_t vars,
    const FourierMotzkinOptions& opts = {}) {
  std::vector<std::vector<Inequality>> stages;
  {
    detail::ConstraintSet start;
    for (const auto& in : system) {
      if (in.coeffs.size() != vars)
        throw InvalidParamsError("inequality has the wrong number of coefficients");
      if (!start.insert(in)) return std::nullopt;
    }
    stages.push_back(start.take());
  }

  for (std::size_t v = vars; v-- > 0;) {
    const auto& current = stages.back();
    std::vector<const Inequality*> lower, upper;
    detail::ConstraintSet next;
    for (const auto& in : current) {
      const int s = sgn(in.coeffs[v]);
      if (s > 0) {
        lower.push_back(&in);
      } else if (s < 0) {
        upper.push_back(&in);
      } else if (!next.insert(in)) {
        return std::nullopt;
      }
    }
    for (const auto* lo : lower) {
      for (const auto* up : upper) {
        const Integer wl = -up->coeffs[v];  // > 0
        const Integer wu = lo->coeffs[v];   // > 0
        Inequality comb;
        comb.coeffs.resize(vars);
        for (std::size_t j = 0; j < vars; ++j)
          comb.coeffs[j] = wl * lo->coeffs[j] + wu * up->coeffs[j];
        comb.bound = wl * lo->bound + wu * up->bound;
        if (!next.insert(std::move(comb))) return std::nullopt;
      }
      if (next.size() > opts.max_constraints)
        throw ResourceLimitError("Fourier-Motzkin elimination exceeded its constraint bound");
    }
    stages.push_back(next.take());
  }

  RationalVector x(vars, Rational(0));
  for (std::size_t v = 0; v < vars; ++v) {
    const auto& stage = stages[vars - 1 - v];
    std::optional<Rational> lo, hi;
    for (const auto& in : stage) {
      const int s = sgn(in.coeffs[v]);
      if (s == 0) continue;
      Rational rhs(in.bound);
      for (std::size_t j = 0; j < v; ++j) rhs -= in.coeffs[j] * x[j];
      Rational limit = rhs / Rational(in.coeffs[v]);
      if (s > 0) {
        if (!lo || limit > *lo) lo = limit;
      } else {
        if (!hi || limit < *hi) hi = limit;
      }
    }
    if (lo && hi) {
      x[v] = (*lo + *hi) / 2;
    } else if (lo) {
      x[v] = *lo;
    } else if (hi) {
      x[v] = *hi;
    }
  }
  return x;
}

/// A strictly positive vector in the right null space of m, as a primitive
/// integer vector, or nothing if none exists. Positivity is scale-invariant,
/// so the search is for kernel vectors with every coordinate >= 1.
template <typename T>
std::optional<RationalVector> positive_kernel_vector(const Matrix<T>& m,
                                                     const FourierMotzkinOptions& opts = {}) {
  const auto kernel = nullspace(m);
  const std::size_t k = kernel.dimension();
  if (k == 0) return std::nullopt;
  const std::size_t n = m.cols();

  // v = sum_j lambda_j K_j; basis vectors are integral already.
  std::vector<Inequality> system(n);
  for (std::size_t i = 0; i < n; ++i) {
    system[i].coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j)
      system[i].coeffs[j] = kernel.vectors[j][i].get_num();
    system[i].bound = 1;
  }
  auto lambda = solve_inequalities(system, k, opts);
  if (!lambda) return std::nullopt;

  RationalVector v(n, Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) v[i] += (*lambda)[j] * kernel.vectors[j][i];
  detail::make_primitive(v);
  return v;
}

}  // namespace nutforge
