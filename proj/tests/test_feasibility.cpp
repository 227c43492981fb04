#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace nutforge;

namespace {

bool satisfies(const std::vector<Inequality>& sys, const RationalVector& x) {
  for (const auto& in : sys) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += in.coeffs[j] * x[j];
    if (lhs < in.bound) return false;
  }
  return true;
}

bool strictly_positive(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) > 0; });
}

/// Independent decision for kernels of dimension <= 2: the cone of positive
/// kernel vectors, if nonempty, contains a direction that is the sum of two
/// consecutive critical directions (where some coordinate vanishes), or one of
/// them when a single coordinate form is nonzero.
bool positive_combination_exists(const KernelBasis& k) {
  if (k.dimension() == 0) return false;
  const auto& p = k.vectors[0];
  if (k.dimension() == 1) {
    const bool pos = std::all_of(p.begin(), p.end(), [](const Rational& q) { return sgn(q) > 0; });
    const bool neg = std::all_of(p.begin(), p.end(), [](const Rational& q) { return sgn(q) < 0; });
    return pos || neg;
  }
  const auto& q = k.vectors[1];
  std::vector<std::pair<Rational, Rational>> dirs{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0 && sgn(q[i]) == 0) return false;  // coordinate always zero
    dirs.emplace_back(q[i], -p[i]);
    dirs.emplace_back(-q[i], p[i]);
  }
  auto positive_at = [&](const Rational& s, const Rational& t) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (sgn(s * p[i] + t * q[i]) <= 0) return false;
    return true;
  };
  for (const auto& [s1, t1] : dirs)
    for (const auto& [s2, t2] : dirs)
      if (positive_at(s1 + s2, t1 + t2) || positive_at(s1, t1)) return true;
  return false;
}

}  // namespace

TEST_CASE("small hand systems") {
  // x >= 1, y >= 1, x + y <= 3  -> feasible
  std::vector<Inequality> sys{{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, -3}};
  auto x = solve_inequalities(sys, 2);
  REQUIRE(x);
  CHECK(satisfies(sys, *x));
  // x >= 2 and x <= 1 -> infeasible
  std::vector<Inequality> bad{{{1}, 2}, {{-1}, -1}};
  CHECK_FALSE(solve_inequalities(bad, 1));
  // trivially violated constant row
  std::vector<Inequality> zero{{{0, 0}, 1}};
  CHECK_FALSE(solve_inequalities(zero, 2));
  // unconstrained
  CHECK(solve_inequalities({}, 3));
}

TEST_CASE("random systems agree with a bounded grid witness") {
  std::mt19937 rng(21);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t vars = 1 + rng() % 3;
    const std::size_t rows = 1 + rng() % 6;
    std::vector<Inequality> sys;
    for (std::size_t r = 0; r < rows; ++r) {
      Inequality in;
      for (std::size_t j = 0; j < vars; ++j) in.coeffs.emplace_back(static_cast<long>(rng() % 7) - 3);
      in.bound = static_cast<long>(rng() % 7) - 3;
      sys.push_back(in);
    }
    const auto x = solve_inequalities(sys, vars);
    if (x) {
      ++feasible;
      REQUIRE(satisfies(sys, *x));
    } else {
      // no point on a fine grid may satisfy an infeasible system
      const int steps = vars == 1 ? 400 : (vars == 2 ? 40 : 12);
      std::vector<int> idx(vars, 0);
      while (true) {
        RationalVector pt(vars);
        for (std::size_t j = 0; j < vars; ++j) pt[j] = nutforge::testing::frac(idx[j] - steps / 2, 2);
        REQUIRE_FALSE(satisfies(sys, pt));
        std::size_t j = 0;
        while (j < vars && ++idx[j] > steps) idx[j++] = 0;
        if (j == vars) break;
      }
    }
  }
  CHECK(feasible > 0);
}

TEST_CASE("positive kernel of the displayed sign matrix") {
  const IntMatrix b{{0, 2, -1}, {2, 0, -1}, {1, 1, -1}};
  const auto v = positive_kernel_vector(b);
  REQUIRE(v);
  CHECK(*v == RationalVector{1, 1, 2});
  const IntMatrix a{{0, 2, 1}, {2, 0, 1}, {1, 1, 1}};
  CHECK_FALSE(positive_kernel_vector(a));
  CHECK_FALSE(positive_kernel_vector(IntMatrix::identity(3)));
}

TEST_CASE("positive kernels agree with the planar oracle on all small sign matrices") {
  std::size_t compared = 0;
  for (int l = 3; l <= 5; ++l) {
    for (const auto& p : enumerate_quotients(l).pregraphs) {
      for (const auto& b : sign_matrices(p)) {
        const auto k = nullspace(b);
        const auto v = has_positive_kernel(b);
        if (v) {
          REQUIRE(strictly_positive(*v));
          REQUIRE(is_zero_product(b, *v));
        }
        if (k.dimension() <= 2) {
          REQUIRE(v.has_value() == positive_combination_exists(k));
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("higher-dimensional kernels") {
  // kernel of [1 1 -1 -1] is three-dimensional and contains (1,1,1,1)
  const IntMatrix m{{1, 1, -1, -1}};
  const auto v = positive_kernel_vector(m);
  REQUIRE(v);
  CHECK(strictly_positive(*v));
  CHECK(is_zero_product(m, *v));
  // kernel of [1 1 1 1] contains no positive vector
  CHECK_FALSE(positive_kernel_vector(IntMatrix{{1, 1, 1, 1}}));
  // zero matrix: everything is in the kernel
  CHECK(positive_kernel_vector(IntMatrix(2, 5, 0)));
}
