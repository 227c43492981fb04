#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nutforge/cyclotomic.hpp"
#include "nutforge/error.hpp"
#include "nutforge/polynomial.hpp"
#include "nutforge/pregraph.hpp"
#include "nutforge/voltage.hpp"

namespace nutforge {

enum class Family { kG7, kG11 };

struct FamilyParams {
  Family family = Family::kG7;
  int n = 0;
  int alpha = 0;
  int beta = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

inline std::string to_string(Family f) { return f == Family::kG7 ? "g7" : "g11"; }

/// Orbit names in vertex order.
inline const std::vector<std::string>& g7_orbit_names() {
  static const std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g"};
  return names;
}
inline const std::vector<std::string>& g11_orbit_names() {
  static const std::vector<std::string> names{"a'", "a''", "b'", "b''", "c'", "c''",
                                              "d'", "d''", "e'", "e''", "f"};
  return names;
}

/// A polynomial written as base + x^(n/2) * shifted. Evaluating at an n-th
/// root of unity w gives base(w) + shifted(w) if w^(n/2) = 1 and
/// base(w) - shifted(w) otherwise.
struct HalfShiftPolynomial {
  IntPolynomial base;
  IntPolynomial shifted;

  [[nodiscard]] IntPolynomial expand(int n) const {
    return base + IntPolynomial::monomial(1, static_cast<std::size_t>(n / 2)) * shifted;
  }
};

namespace detail {

inline IntPolynomial sum_of_terms(std::initializer_list<std::pair<long, long>> terms) {
  IntPolynomial p;
  for (auto [c, e] : terms) p.add_term(c, static_cast<std::size_t>(e));
  return p;
}

inline void check_g7_range(const FamilyParams& p) {
  if (p.n < 4 || p.n % 2 != 0)
    throw InvalidParamsError("g7 needs an even n >= 4, got n = " + std::to_string(p.n));
  if (p.alpha < 1 || p.alpha >= p.n || p.beta < 1 || p.beta >= p.n)
    throw InvalidParamsError("g7 needs 1 <= alpha, beta < n");
}

inline void check_g7_half_range(const FamilyParams& p) {
  if (p.alpha >= p.n / 2 || p.beta >= p.n / 2)
    throw InvalidParamsError("g7 needs 1 <= alpha, beta < n/2");
}

inline void check_g11_range(const FamilyParams& p) {
  if (p.n < 2 || p.n % 2 != 0)
    throw InvalidParamsError("g11 needs an even n, got n = " + std::to_string(p.n));
  if (p.alpha < 1 || p.alpha >= p.n || p.beta < 1 || p.beta >= p.n)
    throw InvalidParamsError("g11 needs 1 <= alpha, beta < n");
}

inline void require_simple(const VoltagePregraph& vp) {
  auto bad = non_simple_darts(vp);
  if (bad.empty()) return;
  std::string msg = "lift is not simple; offending darts:";
  for (Dart a : bad) msg += " " + std::to_string(a);
  throw NonSimpleLiftError(std::move(bad), msg);
}

}  // namespace detail

/// Orbits a..g as vertices 0..6. Path a-b-c, edges c-d, c-e, d-f, e-f, f-g,
/// all of voltage 0; semi-edges of voltage n/2 at b, d, e; a loop of voltage
/// alpha at a and one of voltage beta at g.
inline VoltagePregraph build_g7(const FamilyParams& p) {
  detail::check_g7_range(p);
  enum : Vertex { a, b, c, d, e, f, g };
  PregraphBuilder builder(7);
  std::vector<int> volts;
  auto edge = [&](Vertex u, Vertex v, int volt) {
    builder.add_edge(u, v);
    volts.insert(volts.end(), {volt, -volt});
  };
  auto semi = [&](Vertex v) {
    builder.add_semi_edge(v);
    volts.push_back(p.n / 2);
  };
  edge(a, b, 0);
  edge(b, c, 0);
  edge(c, d, 0);
  edge(c, e, 0);
  edge(d, f, 0);
  edge(e, f, 0);
  edge(f, g, 0);
  edge(a, a, p.alpha);
  edge(g, g, p.beta);
  semi(b);
  semi(d);
  semi(e);
  VoltagePregraph vp(builder.build(), p.n, std::move(volts));
  detail::require_simple(vp);
  detail::check_g7_half_range(p);
  return vp;
}

/// 3x^(2a+b+n/2) + 3x^(b+n/2) + 2x^(2a+2b) + 2x^(2a) - 2x^(a+b) + 2x^(2b) + 2,
/// split at x^(n/2).
inline HalfShiftPolynomial g7_polynomial_parts(int alpha, int beta) {
  const long a = alpha;
  const long b = beta;
  return {detail::sum_of_terms({{2, 2 * a + 2 * b}, {2, 2 * a}, {-2, a + b}, {2, 2 * b}, {2, 0}}),
          detail::sum_of_terms({{3, 2 * a + b}, {3, b}})};
}

inline IntPolynomial g7_polynomial(const FamilyParams& p) {
  detail::check_g7_range(p);
  return g7_polynomial_parts(p.alpha, p.beta).expand(p.n);
}

inline bool g7_is_nut_condition(const FamilyParams& p) {
  return only_minus_one(g7_polynomial(p), p.n);
}

/// Orbits in the order a', a'', b', b'', c', c'', d', d'', e', e'', f. A
/// zero-voltage path c'-d'-e'-e''-d''-c''-b''; parallel darts a''->b'' with
/// voltages beta and 0, and a'->b' with voltages alpha and 0; zero-voltage
/// edges a''-a', b'-c', e'-f, e''-f; semi-edges of voltage n/2 at c', c'',
/// d', d'', f.
inline VoltagePregraph build_g11(const FamilyParams& p) {
  detail::check_g11_range(p);
  enum : Vertex { a1, a2, b1, b2, c1, c2, d1, d2, e1, e2, f };
  PregraphBuilder builder(11);
  std::vector<int> volts;
  auto edge = [&](Vertex u, Vertex v, int volt) {
    builder.add_edge(u, v);
    volts.insert(volts.end(), {volt, -volt});
  };
  edge(c1, d1, 0);
  edge(d1, e1, 0);
  edge(e1, e2, 0);
  edge(e2, d2, 0);
  edge(d2, c2, 0);
  edge(c2, b2, 0);
  edge(a2, b2, p.beta);
  edge(a2, b2, 0);
  edge(a2, a1, 0);
  edge(a1, b1, p.alpha);
  edge(a1, b1, 0);
  edge(b1, c1, 0);
  edge(e1, f, 0);
  edge(e2, f, 0);
  for (Vertex v : {c1, c2, d1, d2, f}) {
    builder.add_semi_edge(v);
    volts.push_back(p.n / 2);
  }
  VoltagePregraph vp(builder.build(), p.n, std::move(volts));
  detail::require_simple(vp);
  return vp;
}

/// x^(2a+2b) + x^(2a+b) + x^(a+2b) + x^a + x^b + 1
///   + x^(n/2) (x^(2a+b) + x^(a+2b) + x^a + x^b + x^(2a) + x^(2b)).
inline HalfShiftPolynomial g11_polynomial_parts(int alpha, int beta) {
  const long a = alpha;
  const long b = beta;
  return {detail::sum_of_terms(
              {{1, 2 * a + 2 * b}, {1, 2 * a + b}, {1, a + 2 * b}, {1, a}, {1, b}, {1, 0}}),
          detail::sum_of_terms(
              {{1, 2 * a + b}, {1, a + 2 * b}, {1, a}, {1, b}, {1, 2 * a}, {1, 2 * b}})};
}

inline IntPolynomial g11_polynomial(const FamilyParams& p) {
  detail::check_g11_range(p);
  return g11_polynomial_parts(p.alpha, p.beta).expand(p.n);
}

inline bool g11_is_nut_condition(const FamilyParams& p) {
  detail::check_g11_range(p);
  if (p.alpha % 2 != 0 || p.beta % 2 != 0 || p.n % 4 != 2) return false;
  return only_minus_one(g11_polynomial(p), p.n);
}

inline VoltagePregraph build_family(const FamilyParams& p) {
  return p.family == Family::kG7 ? build_g7(p) : build_g11(p);
}

inline bool family_is_nut_condition(const FamilyParams& p) {
  return p.family == Family::kG7 ? g7_is_nut_condition(p) : g11_is_nut_condition(p);
}

/// The G7 parameters known to give nut graphs for a given n: alpha = beta = 1
/// when 4 | n, alpha = beta = 2 when n = 2 mod 4 and n >= 6.
inline std::optional<FamilyParams> prop3_params(int n) {
  if (n < 4 || n % 2 != 0) return std::nullopt;
  if (n % 4 == 0) return FamilyParams{Family::kG7, n, 1, 1};
  if (n >= 6) return FamilyParams{Family::kG7, n, 2, 2};
  return std::nullopt;
}

/// The G11 parameters alpha = beta = 2 for n >= 6 with n = 2 mod 4.
inline std::optional<FamilyParams> prop4_params(int n) {
  if (n < 6 || n % 4 != 2) return std::nullopt;
  return FamilyParams{Family::kG11, n, 2, 2};
}

}  // namespace nutforge
