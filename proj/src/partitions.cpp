#include "qhl/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
  return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("Partition::parse: bad part '" + token + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

void subpartitions_rec(const Partition& lambda, int row, int prev, std::vector<int>& prefix,
                       std::vector<Partition>& out) {
  out.push_back(Partition(prefix));  // mu may stop before any row
  if (row > lambda.length()) return;
  for (int p = std::min(prev, lambda.part(row)); p >= 1; --p) {
    prefix.push_back(p);
    subpartitions_rec(lambda, row + 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  subpartitions_rec(lambda, 1, lambda.empty() ? 0 : lambda.part(1), prefix, out);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("SkewShape: inner partition must fit inside the outer one");
  for (int r = 1; r <= outer_.length(); ++r)
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) boxes_.push_back(Box{r, c});
}

bool SkewShape::has_box(int row, int col) const {
  return row >= 1 && row <= outer_.length() && col > inner_.part(row) && col <= outer_.part(row);
}

int SkewShape::box_index(int row, int col) const {
  if (!has_box(row, col)) return -1;
  int idx = 0;
  for (int r = 1; r < row; ++r) idx += outer_.part(r) - inner_.part(r);
  return idx + (col - inner_.part(row) - 1);
}

std::string SkewShape::to_string() const {
  std::string s = outer_.to_string();
  if (!inner_.empty()) s += "/" + inner_.to_string();
  return s;
}

SkewShape SkewShape::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(Partition::parse(text), Partition());
  return SkewShape(Partition::parse(text.substr(0, slash)),
                   Partition::parse(text.substr(slash + 1)));
}

std::vector<SkewShape> enumerate_skew_shapes(int max_outer_size) {
  if (max_outer_size < 1) throw std::invalid_argument("enumerate_skew_shapes: bound must be >= 1");
  std::vector<SkewShape> out;
  for (int n = 1; n <= max_outer_size; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& mu : subpartitions(lambda)) {
        if (mu.size() == lambda.size()) continue;  // at least one cell
        out.emplace_back(lambda, mu);
      }
    }
  }
  return out;
}

}  // namespace qhl
