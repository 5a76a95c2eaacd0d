#include "qhl/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qhl {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: values must be a rearrangement of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (size_t i = 0; i < values_.size(); ++i)
    inv[static_cast<size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("Permutation::compose: size mismatch");
  std::vector<int> out(values_.size());
  for (size_t i = 0; i < values_.size(); ++i)
    out[i] = values_[static_cast<size_t>(rhs.values_[i] - 1)];
  return Permutation(std::move(out));
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> des;
  for (int i = 1; i < p.n(); ++i)
    if (p(i) > p(i + 1)) des.push_back(i);
  return des;
}

std::vector<int> peak_set(const Permutation& p) {
  std::vector<int> peaks;
  for (int i = 2; i < p.n(); ++i)
    if (p(i - 1) < p(i) && p(i) > p(i + 1)) peaks.push_back(i);
  return peaks;
}

Permutation standardize_word(const std::vector<int>& word) {
  std::vector<int> sorted(word);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize_word: entries must be distinct");
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return word[static_cast<size_t>(a)] < word[static_cast<size_t>(b)];
  });
  std::vector<int> out(word.size());
  for (size_t k = 0; k < order.size(); ++k) out[static_cast<size_t>(order[k])] = static_cast<int>(k) + 1;
  return Permutation(std::move(out));
}

namespace {

void shuffles_rec(const std::vector<int>& a, const std::vector<int>& b, size_t i, size_t j,
                  std::vector<int>& word, std::vector<Permutation>& out) {
  if (i == a.size() && j == b.size()) {
    out.push_back(Permutation(word));
    return;
  }
  if (i < a.size()) {
    word.push_back(a[i]);
    shuffles_rec(a, b, i + 1, j, word, out);
    word.pop_back();
  }
  if (j < b.size()) {
    word.push_back(b[j]);
    shuffles_rec(a, b, i, j + 1, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<Permutation> shuffle_shifted(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> shifted(sigma.values());
  for (int& v : shifted) v += pi.n();
  std::vector<Permutation> out;
  std::vector<int> word;
  shuffles_rec(pi.values(), shifted, 0, 0, word, out);
  return out;
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p) {
  std::vector<std::vector<int>> rows_p, rows_q;
  for (int i = 1; i <= p.n(); ++i) {
    int v = p(i);
    size_t r = 0;
    while (true) {
      if (r == rows_p.size()) {
        rows_p.emplace_back();
        rows_q.emplace_back();
      }
      auto& row = rows_p[r];
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        rows_q[r].push_back(i);
        break;
      }
      std::swap(*it, v);  // bump and insert into the next row
      ++r;
    }
  }
  std::vector<int> shape_parts, entries_p, entries_q;
  for (size_t r = 0; r < rows_p.size(); ++r) {
    shape_parts.push_back(static_cast<int>(rows_p[r].size()));
    entries_p.insert(entries_p.end(), rows_p[r].begin(), rows_p[r].end());
    entries_q.insert(entries_q.end(), rows_q[r].begin(), rows_q[r].end());
  }
  SkewShape shape(Partition(std::move(shape_parts)), Partition());
  return {StandardTableau(shape, std::move(entries_p)), StandardTableau(shape, std::move(entries_q))};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace qhl
