#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nutforge/error.hpp"

namespace nutforge {

using Integer = mpz_class;

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial monomial(const Integer& coeff, std::size_t exponent) {
    std::vector<Integer> c(exponent + 1, 0);
    c[exponent] = coeff;
    return IntPolynomial(std::move(c));
  }

  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n) {
    std::vector<Integer> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return IntPolynomial(std::move(c));
  }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept {
    return static_cast<long>(coeffs_.size()) - 1;
  }
  [[nodiscard]] const std::vector<Integer>& coefficients() const noexcept {
    return coeffs_;
  }
  [[nodiscard]] Integer coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
  }
  [[nodiscard]] const Integer& leading() const { return coeffs_.back(); }

  /// Adds coeff * x^exponent in place, combining like terms.
  void add_term(const Integer& coeff, std::size_t exponent) {
    if (coeffs_.size() <= exponent) coeffs_.resize(exponent + 1, 0);
    coeffs_[exponent] += coeff;
    normalize();
  }

  [[nodiscard]] Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                   b.coeffs_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(c));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
      const Integer& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (mag != 1 || k == 0) os << mag.get_str();
      if (k >= 1) os << 'x';
      if (k >= 2) os << '^' << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of a / b over the integers. Requires the leading
/// coefficient of b to divide every leading coefficient met along the way;
/// otherwise `exact` is false and the result is meaningless.
struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
  bool exact = true;
};

inline PolynomialDivision divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidParamsError("division by the zero polynomial");
  std::vector<Integer> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {IntPolynomial{}, a, true};
  std::vector<Integer> quo(rem.size() - db, 0);
  const Integer& lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
      return {IntPolynomial{}, IntPolynomial{}, false};
    Integer q = rem[k] / lead;
    quo[k - db] = q;
    for (std::size_t i = 0; i <= db; ++i)
      mpz_submul(rem[k - db + i].get_mpz_t(), q.get_mpz_t(),
                 b.coefficients()[i].get_mpz_t());
  }
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem)), true};
}

/// True iff b divides a in Z[x] (b monic or leading coefficient permitting).
inline bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  auto d = divide(a, b);
  return d.exact && d.remainder.is_zero();
}

}  // namespace nutforge
