#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace nutforge;

namespace {

RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

void check_basis(const RationalMatrix& m, const KernelBasis& k) {
  for (const auto& v : k.vectors) REQUIRE(is_zero_product(m, v));
  REQUIRE(rank(m) + k.dimension() == m.cols());
}

}  // namespace

TEST_CASE("kernel of the three-orbit quotient matrix") {
  const IntMatrix a{{0, 2, 1}, {2, 0, 1}, {1, 1, 1}};
  const auto k = nullspace(a);
  REQUIRE(k.dimension() == 1);
  CHECK(k.vectors[0] == ints({1, 1, -2}));
}

TEST_CASE("identity and path kernels") {
  CHECK(nullspace(IntMatrix::identity(4)).dimension() == 0);
  const auto k = nullspace(nutforge::testing::path(3).adjacency_matrix());
  REQUIRE(k.dimension() == 1);
  CHECK(k.vectors[0] == ints({1, 0, -1}));
}

TEST_CASE("full vectors") {
  CHECK(is_full(ints({1, 1, -2})));
  CHECK_FALSE(is_full(ints({1, 0, -1})));
  CHECK(is_full(RationalVector{}));
}

TEST_CASE("nut verdicts for small graphs") {
  const auto c8 = is_nut(nutforge::testing::cycle(8));
  CHECK_FALSE(c8.is_nut);
  CHECK(c8.kernel.dimension() == 2);
  const auto k4 = is_nut(nutforge::testing::complete(4));
  CHECK_FALSE(k4.is_nut);
  CHECK(k4.kernel.dimension() == 0);
  const auto g0 = is_nut(derive(nutforge::testing::three_orbit_z10()).graph());
  CHECK(g0.is_nut);
  CHECK_THROWS_AS(is_nut(Graph(1)), PreconditionError);
}

TEST_CASE("random rational matrices: exact kernels and rank-nullity") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    RationalMatrix m(rows, cols, Rational(0));
    const int density = static_cast<int>(rng() % 4);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (static_cast<int>(rng() % 4) <= density)
          m(i, j) = nutforge::testing::frac(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    // sometimes force dependent rows
    if (rows >= 2 && rng() % 2 == 0)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 3 - m(1, j);
    const auto k = nullspace(m);
    check_basis(m, k);
    REQUIRE(rank(m) == nutforge::testing::rank_by_gauss(m));
  }
}

TEST_CASE("large entries take the arbitrary precision path") {
  // a rank-deficient matrix whose Hadamard bound is far beyond 64 bits
  const std::size_t n = 12;
  Matrix<Integer> m(n, n, Integer(0));
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(static_cast<long>(rng() >> 2));
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) + m(1, j);
  REQUIRE(detail::hadamard_log2(m) > 64.0);
  const auto k = nullspace(m);
  REQUIRE(k.dimension() == 1);
  REQUIRE(is_zero_product(m, k.vectors[0]));
  REQUIRE(rank(m) == nutforge::testing::rank_by_gauss(m));
}

TEST_CASE("local condition form of the kernel") {
  // A u = 0 iff the entries on the neighbours of each vertex sum to zero
  std::mt19937 rng(9);
  const auto g = derive(nutforge::testing::three_orbit_z10()).graph();
  const auto a = g.adjacency_matrix();
  const auto kernel = is_nut(g).kernel.vectors.front();
  for (int trial = 0; trial < 50; ++trial) {
    RationalVector u(static_cast<std::size_t>(g.order()));
    if (trial % 2 == 0) {
      for (auto& x : u) x = nutforge::testing::frac(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    } else {
      const Rational s = nutforge::testing::frac(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5));
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = s * kernel[i];
    }
    bool local = true;
    for (int x = 0; x < g.order(); ++x) {
      Rational sum = 0;
      for (int y : g.neighbors(x)) sum += u[static_cast<std::size_t>(y)];
      local = local && sum == 0;
    }
    REQUIRE(is_zero_product(a, u) == local);
  }
}

TEST_CASE("circulant representer polynomial") {
  const std::vector<int> c8{0, 1, 0, 0, 0, 0, 0, 1};
  CHECK(circulant_spectrum_poly<int>(c8) == IntPolynomial::monomial(1, 1) + IntPolynomial::monomial(1, 7));
  const std::vector<int> zero(5, 0);
  CHECK(circulant_spectrum_poly<int>(zero).is_zero());
  // nullity of a circulant = sum of phi(d) over d | n with Phi_d dividing the polynomial
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    std::vector<int> row(static_cast<std::size_t>(n));
    for (auto& c : row) c = static_cast<int>(rng() % 5) - 2;
    if (trial % 3 == 0) {
      // (x - 1) * something has a guaranteed root at 1
      row.assign(static_cast<std::size_t>(n), 0);
      row[0] = -1;
      row[1] = 1;
    }
    const auto poly = circulant_spectrum_poly<int>(row);
    if (poly.is_zero()) continue;
    int expected = 0;
    for (int d : unity_root_divisors(poly, n)) expected += euler_phi(d);
    const auto k = nullspace(circulant_matrix<int>(row));
    REQUIRE(static_cast<int>(k.dimension()) == expected);
  }
}
