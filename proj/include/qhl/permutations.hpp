#pragma once

#include <vector>

#include "qhl/tableaux.hpp"

namespace qhl {

/// Permutation of [n] in one-line notation (1-based values).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int n() const { return static_cast<int>(values_.size()); }
  /// 1-based position access: pi(i).
  int operator()(int i) const { return values_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;
  /// (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& rhs) const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& rhs) const { return values_ < rhs.values_; }

 private:
  std::vector<int> values_;
};

/// {i : pi(i) > pi(i+1)}, sorted.
std::vector<int> descent_set(const Permutation& p);

/// {i in [2, n-1] : pi(i-1) < pi(i) > pi(i+1)}, sorted.
std::vector<int> peak_set(const Permutation& p);

/// The permutation whose values sit in the same relative order as the word;
/// entries must be distinct.
Permutation standardize_word(const std::vector<int>& word);

/// All interleavings of pi with sigma shifted up by pi.n(); the C(n+m, n)
/// results are pairwise distinct permutations of [n+m].
std::vector<Permutation> shuffle_shifted(const Permutation& pi, const Permutation& sigma);

/// Row-insertion Robinson-Schensted correspondence. Returns (P, Q) of the
/// same straight shape with Des(pi) = Des(Q) and Des(pi^{-1}) = Des(P).
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace qhl
