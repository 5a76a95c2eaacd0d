#pragma once

#include <string>
#include <vector>

#include "qhl/partitions.hpp"
#include "qhl/poly.hpp"

namespace qhl {

/// Rank of a nonzero signed entry in the order -1 < 1 < -2 < 2 < -3 < 3 < ...
/// (Coincides with the signed variable slot layout.)
inline int signed_entry_rank(int v) { return signed_slot(v); }

/// Filling by 1..n, rows and columns strictly increasing. Entries are stored
/// in the shape's reading order.
class StandardTableau {
 public:
  StandardTableau(SkewShape shape, std::vector<int> entries);
  const SkewShape& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int entry(int row, int col) const;
  bool operator==(const StandardTableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
};

/// Positive entries, rows weakly and columns strictly increasing.
class SemistandardTableau {
 public:
  SemistandardTableau(SkewShape shape, std::vector<int> entries);
  const SkewShape& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int entry(int row, int col) const;
  bool operator==(const SemistandardTableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
};

/// Nonzero signed entries under the order -1 < 1 < -2 < 2 < ...; rows and
/// columns weakly increase, rows repeat no negative value, columns repeat
/// no positive value.
class MarkedTableau {
 public:
  MarkedTableau(SkewShape shape, std::vector<int> entries);
  const SkewShape& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int entry(int row, int col) const;
  bool operator==(const MarkedTableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
};

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape);
std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry);
std::vector<MarkedTableau> enumerate_marked(const SkewShape& shape, int max_abs);

/// {i : i lies in a strictly higher row than i+1}, as a sorted list.
std::vector<int> descent_set(const StandardTableau& t);

/// Number of negative entries.
int neg(const MarkedTableau& t);

/// q^neg(t) * prod_i x_{|entry_i|}; entries must not exceed ctx.m in
/// absolute value.
TruncPoly weight_monomial(const MarkedTableau& t, const EvalContext& ctx);
/// prod_i x_{entry_i}; entries must not exceed ctx.m.
TruncPoly weight_monomial(const SemistandardTableau& t, const EvalContext& ctx);

/// Relabels with 1..n: distinct entries keep their signed relative order,
/// equal negatives are numbered top to bottom, equal positives left to right.
StandardTableau standardize(const MarkedTableau& t);
StandardTableau standardize(const SemistandardTableau& t);

/// Text fixture format: one row per line, spaces between entries, inner
/// boxes rendered as ".".
std::string format_tableau(const SkewShape& shape, const std::vector<int>& entries);
/// Parses the fixture format back to a shape plus reading-order entries.
std::pair<SkewShape, std::vector<int>> parse_tableau(const std::string& text);

}  // namespace qhl
