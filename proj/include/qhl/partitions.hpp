#pragma once

#include <string>
#include <vector>

namespace qhl {

/// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  /// 1-based part access; parts beyond the length are 0.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Partition& inner) const;

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "6,4,2,1,1"; "" for the empty partition
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
};

/// All partitions of n, largest-part-first order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// All mu with mu_i <= lambda_i, including the empty one and lambda itself.
std::vector<Partition> subpartitions(const Partition& lambda);

struct Box {
  int row = 0;  // 1-based, row 1 on top (English convention)
  int col = 0;
  bool operator==(const Box&) const = default;
};

/// Skew diagram lambda/mu. Boxes are kept in reading order (top row first,
/// left to right).
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int cells() const { return static_cast<int>(boxes_.size()); }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool has_box(int row, int col) const;
  /// Index into boxes() for the cell at (row, col); -1 if absent.
  int box_index(int row, int col) const;

  bool operator==(const SkewShape&) const = default;

  std::string to_string() const;  // "6,4,2,1,1/2,1"
  /// Accepts "6,4,2,1,1/2,1", "2/" and "2" (straight shapes).
  static SkewShape parse(const std::string& text);

 private:
  Partition outer_, inner_;
  std::vector<Box> boxes_;
};

/// All skew shapes with |lambda| <= max_outer_size and at least one cell,
/// in deterministic order.
std::vector<SkewShape> enumerate_skew_shapes(int max_outer_size);

}  // namespace qhl
