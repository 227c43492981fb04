#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nutforge/enumeration.hpp"
#include "nutforge/error.hpp"
#include "nutforge/exactla.hpp"
#include "nutforge/feasibility.hpp"
#include "nutforge/parallel.hpp"
#include "nutforge/pregraph.hpp"
#include "nutforge/voltage.hpp"

namespace nutforge {

/// Integer matrix B with |B| = A(X) entrywise, first nonzero entry of each
/// row positive.
using SignMatrix = IntMatrix;

struct Step1Verdict {
  enum class Status { kPassed, kExcluded };
  Status status = Status::kPassed;
  KernelBasis kernel;
  /// Nonzero nonfull kernel vector when excluded.
  std::optional<RationalVector> witness;

  [[nodiscard]] bool excluded() const noexcept { return status == Status::kExcluded; }
};

struct Step2Verdict {
  enum class Status { kSkipped, kExcluded, kCandidate };
  Status status = Status::kSkipped;
  std::uint64_t matrices_examined = 0;
  std::optional<SignMatrix> witness_matrix;
  std::optional<RationalVector> witness_vector;
};

struct PregraphVerdict {
  Pregraph pregraph;
  Step1Verdict step1;
  Step2Verdict step2;

  [[nodiscard]] bool is_candidate() const noexcept {
    return step2.status == Step2Verdict::Status::kCandidate;
  }
};

struct SearchReport {
  int order = 0;
  std::vector<PregraphVerdict> verdicts;  // enumeration order
  std::size_t excluded_step1 = 0;
  std::size_t excluded_step2 = 0;
  std::size_t candidates = 0;
};

struct SearchOptions {
  int workers = 1;
  int max_order = 10;
  FourierMotzkinOptions feasibility;
};

/// First step: a nonzero nonfull vector in the quotient kernel rules out every
/// lift. Excluded when dim >= 2, or dim = 1 with a nonfull basis vector.
inline Step1Verdict test_prop1(const Pregraph& x) {
  Step1Verdict v;
  v.kernel = nullspace(adjacency_matrix(x));
  const auto& basis = v.kernel.vectors;
  if (basis.size() == 1 && !is_full(basis.front())) {
    v.status = Step1Verdict::Status::kExcluded;
    v.witness = basis.front();
  } else if (basis.size() >= 2) {
    // cancel one coordinate of the first vector against the second
    const auto& p = basis[0];
    const auto& q = basis[1];
    std::size_t i = 0;
    while (sgn(p[i]) == 0) ++i;
    RationalVector w(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) w[j] = q[i] * p[j] - p[i] * q[j];
    detail::make_primitive(w);
    v.status = Step1Verdict::Status::kExcluded;
    v.witness = std::move(w);
  }
  return v;
}

/// prod over rows of 2^(nonzeros in row - 1).
inline std::uint64_t sign_matrix_count(const Pregraph& x) {
  const auto a = adjacency_matrix(x);
  std::uint64_t total = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    int k = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) k += a(r, c) != 0;
    if (k > 0) total <<= (k - 1);
  }
  return total;
}

/// Streams every sign matrix of A(x) to `visit` in a fixed order: rows are
/// mixed-radix digits with the last row varying fastest; within a row, bit j
/// of the digit flips the (j+1)-th nonzero entry. Stops early when `visit`
/// returns false. Returns the number of matrices visited.
inline std::uint64_t for_each_sign_matrix(
    const Pregraph& x, const std::function<bool(const SignMatrix&)>& visit) {
  const auto a = adjacency_matrix(x);
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> nz(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a(r, c) != 0) nz[r].push_back(c);

  SignMatrix b = a;
  std::vector<std::uint32_t> digit(n, 0);
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(b)) return visited;
    // increment from the last row
    std::size_t r = n;
    while (r-- > 0) {
      const auto width = nz[r].empty() ? 0 : nz[r].size() - 1;
      if (width == 0) continue;
      const std::uint32_t next = digit[r] + 1;
      if (next < (1U << width)) {
        digit[r] = next;
        for (std::size_t j = 0; j < width; ++j) {
          const auto c = nz[r][j + 1];
          b(r, c) = ((next >> j) & 1U) ? -a(r, c) : a(r, c);
        }
        break;
      }
      digit[r] = 0;
      for (std::size_t j = 1; j < nz[r].size(); ++j) b(r, nz[r][j]) = a(r, nz[r][j]);
    }
    if (r == static_cast<std::size_t>(-1)) return visited;
  }
}

inline std::vector<SignMatrix> sign_matrices(const Pregraph& x) {
  std::vector<SignMatrix> out;
  for_each_sign_matrix(x, [&](const SignMatrix& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

/// Strictly positive primitive integer vector in the kernel of b, if any.
inline std::optional<RationalVector> has_positive_kernel(
    const SignMatrix& b, const FourierMotzkinOptions& opts = {}) {
  return positive_kernel_vector(b, opts);
}

/// Second step: excluded iff no sign matrix has a positive kernel vector.
/// Stops at the first witness.
inline Step2Verdict test_prop2(const Pregraph& x, const FourierMotzkinOptions& opts = {}) {
  Step2Verdict v;
  v.status = Step2Verdict::Status::kExcluded;
  v.matrices_examined = for_each_sign_matrix(x, [&](const SignMatrix& b) {
    auto w = has_positive_kernel(b, opts);
    if (!w) return true;
    v.status = Step2Verdict::Status::kCandidate;
    v.witness_matrix = b;
    v.witness_vector = std::move(w);
    return false;
  });
  return v;
}

inline PregraphVerdict classify_pregraph(const Pregraph& x,
                                         const FourierMotzkinOptions& opts = {}) {
  if (!is_cubic(x)) throw PreconditionError("classification needs a cubic pregraph");
  if (!is_connected(x)) throw PreconditionError("classification needs a connected pregraph");
  PregraphVerdict v{x, test_prop1(x), {}};
  if (!v.step1.excluded()) v.step2 = test_prop2(x, opts);
  return v;
}

inline SearchReport classify(int order, const SearchOptions& opts = {}) {
  EnumerationOptions eopts;
  eopts.max_order = opts.max_order;
  const auto quotients = enumerate_quotients(order, eopts);
  SearchReport report;
  report.order = order;
  std::vector<std::optional<PregraphVerdict>> slots(quotients.pregraphs.size());
  parallel_for(slots.size(), opts.workers, [&](std::size_t i) {
    slots[i] = classify_pregraph(quotients.pregraphs[i], opts.feasibility);
  });
  for (auto& s : slots) {
    if (s->step1.excluded()) {
      ++report.excluded_step1;
    } else if (s->is_candidate()) {
      ++report.candidates;
    } else {
      ++report.excluded_step2;
    }
    report.verdicts.push_back(std::move(*s));
  }
  return report;
}

struct SweepOptions {
  /// Largest lift order (quotient order times n) accepted.
  int max_lift_order = 512;
  /// Largest number of voltage assignments accepted.
  std::uint64_t max_assignments = 50'000'000;
  int workers = 1;
};

struct SweepEntry {
  std::vector<int> edge_voltages;  // in base.edges() order
  NutVerdict verdict;
};

/// Every assignment of Z_n voltages to the edges of x (in x.edges() order,
/// inverse darts implied) whose lift is simple, with the nut verdict of the
/// lift. A semi-edge only admits voltages g with 2g = 0.
inline std::vector<SweepEntry> brute_force_voltage_sweep(const Pregraph& x, int n,
                                                         const SweepOptions& opts = {}) {
  if (n < 1) throw InvalidParamsError("modulus must be positive");
  if (static_cast<long>(x.vertex_count()) * n > opts.max_lift_order)
    throw ResourceLimitError("lift order " + std::to_string(x.vertex_count() * n) +
                             " exceeds the configured bound " +
                             std::to_string(opts.max_lift_order));
  const auto reps = x.edges();
  std::vector<std::vector<int>> choices(reps.size());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int g = 0; g < n; ++g)
      if (!x.is_semi_edge(reps[i]) || (2 * g) % n == 0) choices[i].push_back(g);
    total *= choices[i].size();
    if (total > opts.max_assignments)
      throw ResourceLimitError("voltage sweep exceeds the configured assignment bound");
  }

  std::vector<std::optional<SweepEntry>> slots(total);
  parallel_for(static_cast<std::size_t>(total), opts.workers, [&](std::size_t index) {
    std::vector<int> volts(reps.size());
    auto rest = index;
    for (std::size_t i = reps.size(); i-- > 0;) {
      volts[i] = choices[i][rest % choices[i].size()];
      rest /= choices[i].size();
    }
    auto vp = VoltagePregraph::from_edge_voltages(x, n, volts);
    if (!lift_is_simple(vp)) return;
    const auto lift = derive(vp);
    if (lift.graph().order() < 2) return;
    slots[index] = SweepEntry{std::move(volts), is_nut(lift.graph())};
  });
  std::vector<SweepEntry> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace nutforge
