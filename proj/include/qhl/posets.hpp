#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qhl/partitions.hpp"
#include "qhl/permutations.hpp"
#include "qhl/poly.hpp"

namespace qhl {

/// Total order on {+-1, ..., +-m} given by an explicit rank table. The
/// default is -1 < 1 < -2 < 2 < ...; every identity in the library holds for
/// arbitrary orders and the alternates below exercise that.
class TotalSignedOrder {
 public:
  TotalSignedOrder(int m, std::vector<int> rank_by_slot, std::string name);

  static TotalSignedOrder standard(int m);
  /// 1 < -1 < 2 < -2 < ... (swaps each sign pair).
  static TotalSignedOrder sign_swapped(int m);
  /// -1 < -2 < ... < -m < 1 < 2 < ... < m.
  static TotalSignedOrder negatives_first(int m);
  /// Seeded random shuffle of all 2m values.
  static TotalSignedOrder shuffled(int m, uint64_t seed);

  int m() const { return m_; }
  const std::string& name() const { return name_; }
  int rank(int value) const { return rank_by_slot_[static_cast<size_t>(signed_slot(value))]; }
  bool less(int a, int b) const { return rank(a) < rank(b); }
  bool leq(int a, int b) const { return rank(a) <= rank(b); }
  /// All 2m values sorted ascending by rank.
  const std::vector<int>& values_ascending() const { return ascending_; }

 private:
  int m_;
  std::vector<int> rank_by_slot_;
  std::vector<int> ascending_;
  std::string name_;
};

/// Map [n] -> nonzero signed integers, indexed 1-based.
struct EnrichedMap {
  std::vector<int> values;
  int operator()(int node) const { return values[static_cast<size_t>(node - 1)]; }
  bool operator==(const EnrichedMap&) const = default;
};

/// Partial order on labels [n] with positive integer node weights. Relations
/// are stored transitively closed; covering pairs are cached since the
/// enrichment conditions only need them.
class LabelledWeightedPoset {
 public:
  /// Builds from covering (or arbitrary generating) relations i <_P j.
  /// Weights default to 1^n.
  LabelledWeightedPoset(int n, const std::vector<std::pair<int, int>>& relations,
                        std::vector<int> weights = {});

  int n() const { return n_; }
  bool less(int i, int j) const { return lt_[static_cast<size_t>((i - 1) * n_ + (j - 1))]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int weight(int node) const { return weights_[static_cast<size_t>(node - 1)]; }
  const std::vector<int>& weights() const { return weights_; }

  /// Deterministic linear extension (smallest available label first).
  std::vector<int> linear_extension() const;

  /// Fixture format: first line n, then "i < j" covering lines, then
  /// optional "w i k" weight lines.
  static LabelledWeightedPoset parse(const std::string& text);
  std::string format() const;

 private:
  int n_;
  std::vector<char> lt_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> weights_;
};

/// Chain pi_1 <_P pi_2 <_P ... <_P pi_n with weights 1^n.
LabelledWeightedPoset chain_poset(const Permutation& pi);

/// Skew-diagram poset: boxes numbered left to right, bottom to top;
/// i <_P j iff box i lies weakly northwest of box j.
LabelledWeightedPoset skew_poset(const SkewShape& shape);

/// Streams every f : [n] -> {+-1..+-max_abs} satisfying the enriched
/// conditions: for each covering i <_P j,
///   labels i < j:  f(i) before f(j) in the order, or equal positive;
///   labels i > j:  f(i) before f(j), or equal negative.
void for_each_enriched(const LabelledWeightedPoset& poset, const TotalSignedOrder& order,
                       int max_abs, const std::function<void(const EnrichedMap&)>& fn);

std::vector<EnrichedMap> enumerate_enriched(const LabelledWeightedPoset& poset,
                                            const TotalSignedOrder& order, int max_abs);

/// Generating function sum_f prod_i q^[f(i)<0] x_{|f(i)|}^{weight(i)};
/// requires ctx.m == order.m().
TruncPoly gamma_q(const LabelledWeightedPoset& poset, const EvalContext& ctx,
                  const TotalSignedOrder& order);

/// Signed lift sum_f prod_i x_{f(i)}^{weight(i)}; varpi of it is gamma_q.
SignedTruncPoly gamma_pm(const LabelledWeightedPoset& poset, const EvalContext& ctx,
                         const TotalSignedOrder& order);

/// Chain generating function on the product alphabet XY: P_pi-partitions
/// (f,g) into [mx] x {+-1..+-my} under the lexicographic order with a pair
/// negative iff its second coordinate is; contributes q^[g<0] x_f y_|g|.
PairTruncPoly gamma_q_product(const Permutation& pi, const PairContext& ctx);

}  // namespace qhl
