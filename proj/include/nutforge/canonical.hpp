#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "nutforge/matrix.hpp"

namespace nutforge {

/// Canonical form of a small symmetric integer matrix under simultaneous
/// row/column permutation. Two matrices are permutation-equivalent iff their
/// codes are equal.
struct CanonicalForm {
  /// Lower triangle (diagonal included) of the permuted matrix, row by row.
  std::vector<int> code;
  /// order[i] is the original index placed at position i.
  std::vector<int> order;
};

namespace detail {

/// Isomorphism-invariant vertex colouring by iterated neighbourhood
/// signatures (colour refinement). Colours are dense ranks 0..k-1.
inline std::vector<int> refine_colours(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> colour(n);
  {
    std::vector<std::pair<int, int>> seed(n);
    for (std::size_t v = 0; v < n; ++v) {
      int weight = 0;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v) weight += m(v, w);
      seed[v] = {m(v, v), weight};
    }
    auto sorted = seed;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v)
      colour[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), seed[v]) -
          sorted.begin());
  }

  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  std::size_t classes = 0;
  while (true) {
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && m(v, w) != 0) sig[v].second.emplace_back(colour[w], m(v, w));
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v)
      colour[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const IntMatrix& m)
      : m_(m), n_(m.rows()), colour_(refine_colours(m)) {
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    used_.assign(n_, false);
    current_.resize(n_ * (n_ + 1) / 2);
    perm_.resize(n_);
  }

  CanonicalForm run() {
    if (n_ > 0) explore(0);
    return {best_code_, best_order_};
  }

 private:
  static std::size_t offset(std::size_t pos) { return pos * (pos + 1) / 2; }

  // Branch and bound over colour-respecting orderings, minimising the code
  // lexicographically. A prefix is pursued only while it is not larger than
  // the corresponding prefix of the best leaf found so far.
  void explore(std::size_t pos) {
    if (pos == n_) {
      best_code_ = current_;
      best_order_.assign(perm_.begin(), perm_.end());
      have_best_ = true;
      return;
    }
    const std::size_t start = offset(pos);
    const std::size_t len = pos + 1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[pos]) continue;
      for (std::size_t k = 0; k < pos; ++k)
        current_[start + k] = m_(v, static_cast<std::size_t>(perm_[k]));
      current_[start + pos] = m_(v, v);

      if (have_best_ && std::equal(current_.begin(),
                                   current_.begin() + static_cast<long>(start),
                                   best_code_.begin())) {
        auto cmp = std::lexicographical_compare_three_way(
            current_.begin() + static_cast<long>(start),
            current_.begin() + static_cast<long>(start + len),
            best_code_.begin() + static_cast<long>(start),
            best_code_.begin() + static_cast<long>(start + len));
        if (cmp > 0) continue;
      }
      used_[v] = true;
      perm_[pos] = static_cast<int>(v);
      explore(pos + 1);
      used_[v] = false;
    }
  }

  const IntMatrix& m_;
  std::size_t n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<bool> used_;
  std::vector<int> current_;
  std::vector<int> perm_;
  std::vector<int> best_code_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace detail

/// Canonical labelling of a symmetric matrix. Diagonal entries act as vertex
/// labels, off-diagonal entries as edge labels.
inline CanonicalForm canonical_form(const IntMatrix& m) {
  return detail::CanonicalSearch(m).run();
}

template <typename T>
Matrix<T> permute(const Matrix<T>& m, const std::vector<int>& order) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      out(i, j) = m(static_cast<std::size_t>(order[i]),
                    static_cast<std::size_t>(order[j]));
  return out;
}

}  // namespace nutforge
