#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nutforge/error.hpp"
#include "nutforge/exactla.hpp"
#include "nutforge/pregraph.hpp"
#include "nutforge/voltage.hpp"

namespace nutforge {

struct OrbitMagnitudes {
  /// Common |kernel entry| per quotient vertex, scaled so the smallest is 1.
  std::vector<Rational> values;
  /// The lift's kernel vector they were read from (primitive integral).
  RationalVector kernel;

  [[nodiscard]] const Rational& operator[](Vertex x) const {
    return values[static_cast<std::size_t>(x)];
  }
};

/// Magnitudes of the kernel vector of a nut lift, orbit by orbit.
inline OrbitMagnitudes orbit_magnitudes(const VoltagePregraph& vp) {
  const auto lift = derive(vp);
  if (lift.graph().order() < 2)
    throw PreconditionError(PreconditionError::Reason::kNotNut, "lift is too small to be a nut graph");
  auto verdict = is_nut(lift.graph());
  if (!verdict.is_nut)
    throw PreconditionError(PreconditionError::Reason::kNotNut, "lift is not a nut graph");
  OrbitMagnitudes out;
  out.kernel = std::move(verdict.kernel.vectors.front());
  const int n = vp.modulus();
  for (Vertex x = 0; x < lift.orbit_count(); ++x) {
    const Rational m = abs(out.kernel[static_cast<std::size_t>(lift.vertex(x, 0))]);
    for (int j = 1; j < n; ++j)
      if (abs(out.kernel[static_cast<std::size_t>(lift.vertex(x, j))]) != m)
        throw PreconditionError(PreconditionError::Reason::kOrbitInconsistency,
                                "kernel magnitude varies along orbit " + std::to_string(x));
    out.values.push_back(m);
  }
  const Rational smallest = *std::min_element(out.values.begin(), out.values.end());
  for (auto& m : out.values) m /= smallest;
  return out;
}

/// Replaces the edge of dart a -> b (voltage g) by a path through three new
/// orbits c, d, e (numbered l, l+1, l+2): darts a -> c (g), c -> d (n/2),
/// e -> d (g), e -> b (g), and a semi-edge of voltage n/2 at each of c, d, e.
/// The two darts of the removed edge are dropped and the remaining darts keep
/// their relative order; the new darts follow, in the order listed above.
inline VoltagePregraph presubdivide(const VoltagePregraph& vp, Dart dart) {
  using Reason = PreconditionError::Reason;
  const auto& p = vp.base();
  const int n = vp.modulus();
  if (n % 2 != 0)
    throw PreconditionError(Reason::kOddModulus, "pre-subdivision needs an even modulus");
  if (dart < 0 || dart >= p.dart_count())
    throw InvalidParamsError("dart " + std::to_string(dart) + " does not exist");
  if (p.is_semi_edge(dart) || p.is_loop(dart))
    throw PreconditionError(Reason::kNotAnEdgeDart,
                            "dart " + std::to_string(dart) + " is a loop or semi-edge");
  const auto mags = orbit_magnitudes(vp);
  const Vertex a = p.beg(dart);
  const Vertex b = p.end(dart);
  if (mags[a] == mags[b])
    throw PreconditionError(Reason::kEqualMagnitudes,
                            "orbits " + std::to_string(a) + " and " + std::to_string(b) +
                                " have equal magnitudes");

  const int gamma = vp.voltage(dart);
  const Dart gone = p.inv(dart);
  std::vector<Dart> renum(static_cast<std::size_t>(p.dart_count()), -1);
  Dart next = 0;
  for (Dart x = 0; x < p.dart_count(); ++x)
    if (x != dart && x != gone) renum[static_cast<std::size_t>(x)] = next++;

  std::vector<Vertex> beg;
  std::vector<Dart> inv;
  std::vector<int> volts;
  for (Dart x = 0; x < p.dart_count(); ++x) {
    if (renum[static_cast<std::size_t>(x)] < 0) continue;
    beg.push_back(p.beg(x));
    inv.push_back(renum[static_cast<std::size_t>(p.inv(x))]);
    volts.push_back(vp.voltage(x));
  }
  const Vertex c = p.vertex_count();
  const Vertex d = c + 1;
  const Vertex e = c + 2;
  auto pair = [&](Vertex u, Vertex v, int g) {
    const auto id = static_cast<Dart>(beg.size());
    beg.insert(beg.end(), {u, v});
    inv.insert(inv.end(), {id + 1, id});
    volts.insert(volts.end(), {g, -g});
  };
  auto semi = [&](Vertex v) {
    const auto id = static_cast<Dart>(beg.size());
    beg.push_back(v);
    inv.push_back(id);
    volts.push_back(n / 2);
  };
  pair(a, c, gamma);
  pair(c, d, n / 2);
  pair(e, d, gamma);
  pair(e, b, gamma);
  semi(c);
  semi(d);
  semi(e);
  return {Pregraph(p.vertex_count() + 3, std::move(beg), std::move(inv)), n, std::move(volts)};
}

/// First dart, scanning vertices and then dart ids in increasing order, that
/// joins two distinct orbits of different magnitude. Requires a nut lift.
inline std::optional<Dart> first_eligible_dart(const VoltagePregraph& vp) {
  const auto& p = vp.base();
  const auto mags = orbit_magnitudes(vp);
  for (Vertex x = 0; x < p.vertex_count(); ++x)
    for (Dart a : p.darts_at(x))
      if (!p.is_semi_edge(a) && !p.is_loop(a) && mags[x] != mags[p.end(a)]) return a;
  return std::nullopt;
}

/// Applies presubdivide t times, each time at first_eligible_dart.
inline VoltagePregraph presub_closure(VoltagePregraph vp, int t) {
  if (t < 0) throw InvalidParamsError("iteration count must be nonnegative");
  for (int step = 0; step < t; ++step) {
    const auto dart = first_eligible_dart(vp);
    if (!dart)
      throw PreconditionError(PreconditionError::Reason::kNoEligibleDart,
                              "no dart joins orbits of different magnitude");
    vp = presubdivide(vp, *dart);
  }
  return vp;
}

}  // namespace nutforge
