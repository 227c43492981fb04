#pragma once

#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/polynomial.hpp"

namespace nutforge {

/// Positive divisors of n in increasing order.
inline std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Entries up to this index are memoised.
inline constexpr int kCyclotomicMemoBound = 512;

/// Phi_b via Phi_b = (x^b - 1) / prod_{d | b, d < b} Phi_d.
inline IntPolynomial cyclotomic_polynomial(int b) {
  if (b < 1) throw InvalidParamsError("cyclotomic index must be positive");
  static std::mutex guard;
  static std::map<int, IntPolynomial> memo;
  if (b <= kCyclotomicMemoBound) {
    std::lock_guard lock(guard);
    if (auto it = memo.find(b); it != memo.end()) return it->second;
  }
  IntPolynomial num = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(b));
  for (int d : divisors(b)) {
    if (d == b) continue;
    auto division = divide(num, cyclotomic_polynomial(d));
    num = std::move(division.quotient);
  }
  if (b <= kCyclotomicMemoBound) {
    std::lock_guard lock(guard);
    memo.emplace(b, num);
  }
  return num;
}

/// The divisors d of n such that Phi_d divides p; the n-th roots of unity
/// that are roots of p are exactly the primitive d-th roots for these d.
inline std::set<int> unity_root_divisors(const IntPolynomial& p, int n) {
  if (p.is_zero())
    throw InvalidParamsError("every root of unity is a root of the zero polynomial");
  if (n < 1) throw InvalidParamsError("n must be positive");
  std::set<int> out;
  for (int d : divisors(n)) {
    const auto phi = cyclotomic_polynomial(d);
    if (phi.degree() > p.degree()) continue;
    if (divides(phi, p)) out.insert(d);
  }
  return out;
}

/// Whether -1 is the only n-th root of unity among the roots of p.
inline bool only_minus_one(const IntPolynomial& p, int n) {
  if (n % 2 != 0) throw PreconditionError("only_minus_one needs an even n");
  return unity_root_divisors(p, n) == std::set<int>{2};
}

}  // namespace nutforge
