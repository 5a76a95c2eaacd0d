#include "qhl/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhl {

namespace {

int entry_at(const SkewShape& shape, const std::vector<int>& entries, int row, int col) {
  int idx = shape.box_index(row, col);
  if (idx < 0) throw std::out_of_range("tableau: no box at the requested cell");
  return entries[static_cast<size_t>(idx)];
}

void check_arity(const SkewShape& shape, const std::vector<int>& entries) {
  if (static_cast<int>(entries.size()) != shape.cells())
    throw std::invalid_argument("tableau: entry count must match the shape");
}

// Rows strictly increase left to right, columns strictly top to bottom.
void validate_standard(const SkewShape& shape, const std::vector<int>& entries) {
  check_arity(shape, entries);
  const int n = shape.cells();
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n || used[static_cast<size_t>(v)])
      throw std::invalid_argument("StandardTableau: entries must be a permutation of 1..n");
    used[static_cast<size_t>(v)] = true;
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    const Box b = shape.boxes()[i];
    int left = shape.box_index(b.row, b.col - 1);
    if (left >= 0 && entries[static_cast<size_t>(left)] >= entries[i])
      throw std::invalid_argument("StandardTableau: rows must strictly increase");
    int above = shape.box_index(b.row - 1, b.col);
    if (above >= 0 && entries[static_cast<size_t>(above)] >= entries[i])
      throw std::invalid_argument("StandardTableau: columns must strictly increase");
  }
}

void validate_semistandard(const SkewShape& shape, const std::vector<int>& entries) {
  check_arity(shape, entries);
  for (int v : entries)
    if (v < 1) throw std::invalid_argument("SemistandardTableau: entries must be positive");
  for (size_t i = 0; i < entries.size(); ++i) {
    const Box b = shape.boxes()[i];
    int left = shape.box_index(b.row, b.col - 1);
    if (left >= 0 && entries[static_cast<size_t>(left)] > entries[i])
      throw std::invalid_argument("SemistandardTableau: rows must weakly increase");
    int above = shape.box_index(b.row - 1, b.col);
    if (above >= 0 && entries[static_cast<size_t>(above)] >= entries[i])
      throw std::invalid_argument("SemistandardTableau: columns must strictly increase");
  }
}

// With weak increase, a repeated negative in a row (positive in a column)
// forces an equal adjacent pair, so adjacency checks capture all three rules.
void validate_marked(const SkewShape& shape, const std::vector<int>& entries) {
  check_arity(shape, entries);
  for (int v : entries)
    if (v == 0) throw std::invalid_argument("MarkedTableau: entries must be nonzero");
  for (size_t i = 0; i < entries.size(); ++i) {
    const Box b = shape.boxes()[i];
    const int cur = entries[i];
    int left = shape.box_index(b.row, b.col - 1);
    if (left >= 0) {
      int lv = entries[static_cast<size_t>(left)];
      if (signed_entry_rank(lv) > signed_entry_rank(cur) || (lv == cur && cur < 0))
        throw std::invalid_argument("MarkedTableau: row rule violated");
    }
    int above = shape.box_index(b.row - 1, b.col);
    if (above >= 0) {
      int av = entries[static_cast<size_t>(above)];
      if (signed_entry_rank(av) > signed_entry_rank(cur) || (av == cur && cur > 0))
        throw std::invalid_argument("MarkedTableau: column rule violated");
    }
  }
}

}  // namespace

StandardTableau::StandardTableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  validate_standard(shape_, entries_);
}

int StandardTableau::entry(int row, int col) const { return entry_at(shape_, entries_, row, col); }

SemistandardTableau::SemistandardTableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  validate_semistandard(shape_, entries_);
}

int SemistandardTableau::entry(int row, int col) const {
  return entry_at(shape_, entries_, row, col);
}

MarkedTableau::MarkedTableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  validate_marked(shape_, entries_);
}

int MarkedTableau::entry(int row, int col) const { return entry_at(shape_, entries_, row, col); }

namespace {

// Shared backtracking driver: fills boxes in reading order; `candidates`
// yields the admissible values for box i given the partial filling.
template <class CandidateFn, class EmitFn>
void fill_boxes(const SkewShape& shape, CandidateFn candidates, EmitFn emit) {
  const int n = shape.cells();
  std::vector<int> entries(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      emit(entries);
      return;
    }
    for (int v : candidates(i, entries)) {
      entries[static_cast<size_t>(i)] = v;
      self(self, i + 1);
    }
    entries[static_cast<size_t>(i)] = 0;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape) {
  std::vector<StandardTableau> out;
  const int n = shape.cells();
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto candidates = [&](int i, const std::vector<int>& entries) {
    // Undo bookkeeping from the previous branch at this depth.
    for (int v = 1; v <= n; ++v) used[static_cast<size_t>(v)] = false;
    for (int j = 0; j < i; ++j) used[static_cast<size_t>(entries[static_cast<size_t>(j)])] = true;
    const Box b = shape.boxes()[static_cast<size_t>(i)];
    int lo = 1;
    int left = shape.box_index(b.row, b.col - 1);
    if (left >= 0) lo = std::max(lo, entries[static_cast<size_t>(left)] + 1);
    int above = shape.box_index(b.row - 1, b.col);
    if (above >= 0) lo = std::max(lo, entries[static_cast<size_t>(above)] + 1);
    std::vector<int> vals;
    for (int v = lo; v <= n; ++v)
      if (!used[static_cast<size_t>(v)]) vals.push_back(v);
    return vals;
  };
  fill_boxes(shape, candidates, [&](const std::vector<int>& entries) {
    out.emplace_back(shape, entries);
  });
  return out;
}

std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  if (max_entry < 1) throw std::invalid_argument("enumerate_ssyt: max_entry must be >= 1");
  std::vector<SemistandardTableau> out;
  auto candidates = [&](int i, const std::vector<int>& entries) {
    const Box b = shape.boxes()[static_cast<size_t>(i)];
    int lo = 1;
    int left = shape.box_index(b.row, b.col - 1);
    if (left >= 0) lo = std::max(lo, entries[static_cast<size_t>(left)]);
    int above = shape.box_index(b.row - 1, b.col);
    if (above >= 0) lo = std::max(lo, entries[static_cast<size_t>(above)] + 1);
    std::vector<int> vals;
    for (int v = lo; v <= max_entry; ++v) vals.push_back(v);
    return vals;
  };
  fill_boxes(shape, candidates, [&](const std::vector<int>& entries) {
    out.emplace_back(shape, entries);
  });
  return out;
}

std::vector<MarkedTableau> enumerate_marked(const SkewShape& shape, int max_abs) {
  if (max_abs < 1) throw std::invalid_argument("enumerate_marked: max_abs must be >= 1");
  std::vector<MarkedTableau> out;
  auto candidates = [&](int i, const std::vector<int>& entries) {
    const Box b = shape.boxes()[static_cast<size_t>(i)];
    std::vector<int> vals;
    for (int r = 0; r < 2 * max_abs; ++r) {
      const int v = signed_var_of_slot(r);
      int left = shape.box_index(b.row, b.col - 1);
      if (left >= 0) {
        int lv = entries[static_cast<size_t>(left)];
        if (signed_entry_rank(lv) > r || (lv == v && v < 0)) continue;
      }
      int above = shape.box_index(b.row - 1, b.col);
      if (above >= 0) {
        int av = entries[static_cast<size_t>(above)];
        if (signed_entry_rank(av) > r || (av == v && v > 0)) continue;
      }
      vals.push_back(v);
    }
    return vals;
  };
  fill_boxes(shape, candidates, [&](const std::vector<int>& entries) {
    out.emplace_back(shape, entries);
  });
  return out;
}

std::vector<int> descent_set(const StandardTableau& t) {
  const int n = t.shape().cells();
  std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
  for (size_t i = 0; i < t.entries().size(); ++i)
    row_of[static_cast<size_t>(t.entries()[i])] = t.shape().boxes()[i].row;
  std::vector<int> des;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<size_t>(i)] < row_of[static_cast<size_t>(i + 1)]) des.push_back(i);
  return des;
}

int neg(const MarkedTableau& t) {
  return static_cast<int>(std::count_if(t.entries().begin(), t.entries().end(),
                                        [](int v) { return v < 0; }));
}

TruncPoly weight_monomial(const MarkedTableau& t, const EvalContext& ctx) {
  ExpVec exp(static_cast<size_t>(ctx.m), 0);
  for (int v : t.entries()) {
    int a = v > 0 ? v : -v;
    if (a > ctx.m) throw std::invalid_argument("weight_monomial: entry exceeds context m");
    ++exp[static_cast<size_t>(a - 1)];
  }
  return TruncPoly::monomial(ctx, std::move(exp), QCoeff::q_power(neg(t)));
}

TruncPoly weight_monomial(const SemistandardTableau& t, const EvalContext& ctx) {
  ExpVec exp(static_cast<size_t>(ctx.m), 0);
  for (int v : t.entries()) {
    if (v > ctx.m) throw std::invalid_argument("weight_monomial: entry exceeds context m");
    ++exp[static_cast<size_t>(v - 1)];
  }
  return TruncPoly::monomial(ctx, std::move(exp), QCoeff(1));
}

namespace {

StandardTableau standardize_entries(const SkewShape& shape, const std::vector<int>& entries) {
  const int n = shape.cells();
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int va = entries[static_cast<size_t>(a)], vb = entries[static_cast<size_t>(b)];
    if (va != vb) return signed_entry_rank(va) < signed_entry_rank(vb);
    const Box ba = shape.boxes()[static_cast<size_t>(a)], bb = shape.boxes()[static_cast<size_t>(b)];
    // Equal negatives: top to bottom. Equal positives: left to right.
    if (va < 0) return ba.row < bb.row;
    return ba.col < bb.col;
  });
  std::vector<int> relabelled(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) relabelled[static_cast<size_t>(order[static_cast<size_t>(k)])] = k + 1;
  return StandardTableau(shape, std::move(relabelled));
}

}  // namespace

StandardTableau standardize(const MarkedTableau& t) {
  return standardize_entries(t.shape(), t.entries());
}

StandardTableau standardize(const SemistandardTableau& t) {
  return standardize_entries(t.shape(), t.entries());
}

std::string format_tableau(const SkewShape& shape, const std::vector<int>& entries) {
  if (static_cast<int>(entries.size()) != shape.cells())
    throw std::invalid_argument("format_tableau: entry count must match the shape");
  std::ostringstream os;
  size_t idx = 0;
  for (int r = 1; r <= shape.outer().length(); ++r) {
    for (int c = 1; c <= shape.outer().part(r); ++c) {
      if (c > 1) os << " ";
      if (c <= shape.inner().part(r))
        os << ".";
      else
        os << entries[idx++];
    }
    os << "\n";
  }
  return os.str();
}

std::pair<SkewShape, std::vector<int>> parse_tableau(const std::string& text) {
  std::vector<int> outer, inner;
  std::vector<int> entries;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string tok;
    int dots = 0, filled = 0;
    bool seen_entry = false;
    while (tokens >> tok) {
      if (tok == ".") {
        if (seen_entry)
          throw std::invalid_argument("parse_tableau: inner boxes must precede entries");
        ++dots;
      } else {
        entries.push_back(std::stoi(tok));
        seen_entry = true;
        ++filled;
      }
    }
    if (dots == 0 && filled == 0) continue;  // blank line
    outer.push_back(dots + filled);
    if (dots > 0) inner.push_back(dots);
    if (dots > 0 && inner.size() != outer.size())
      throw std::invalid_argument("parse_tableau: inner boxes must form a partition prefix");
  }
  return {SkewShape(Partition(std::move(outer)), Partition(std::move(inner))), entries};
}

}  // namespace qhl
