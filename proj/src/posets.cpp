#include "qhl/posets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qhl {

TotalSignedOrder::TotalSignedOrder(int m, std::vector<int> rank_by_slot, std::string name)
    : m_(m), rank_by_slot_(std::move(rank_by_slot)), name_(std::move(name)) {
  if (m_ < 1) throw std::invalid_argument("TotalSignedOrder: m must be >= 1");
  if (static_cast<int>(rank_by_slot_.size()) != 2 * m_)
    throw std::invalid_argument("TotalSignedOrder: rank table must cover 2m values");
  std::vector<bool> seen(rank_by_slot_.size(), false);
  for (int r : rank_by_slot_) {
    if (r < 0 || r >= 2 * m_ || seen[static_cast<size_t>(r)])
      throw std::invalid_argument("TotalSignedOrder: ranks must be a bijection onto 0..2m-1");
    seen[static_cast<size_t>(r)] = true;
  }
  ascending_.resize(rank_by_slot_.size());
  for (int slot = 0; slot < 2 * m_; ++slot)
    ascending_[static_cast<size_t>(rank_by_slot_[static_cast<size_t>(slot)])] = signed_var_of_slot(slot);
}

TotalSignedOrder TotalSignedOrder::standard(int m) {
  std::vector<int> rank(static_cast<size_t>(2 * m));
  std::iota(rank.begin(), rank.end(), 0);
  return TotalSignedOrder(m, std::move(rank), "standard");
}

TotalSignedOrder TotalSignedOrder::sign_swapped(int m) {
  std::vector<int> rank(static_cast<size_t>(2 * m));
  for (int k = 0; k < m; ++k) {
    rank[static_cast<size_t>(2 * k)] = 2 * k + 1;  // -(k+1)
    rank[static_cast<size_t>(2 * k + 1)] = 2 * k;  // +(k+1)
  }
  return TotalSignedOrder(m, std::move(rank), "sign-swapped");
}

TotalSignedOrder TotalSignedOrder::negatives_first(int m) {
  std::vector<int> rank(static_cast<size_t>(2 * m));
  for (int k = 0; k < m; ++k) {
    rank[static_cast<size_t>(2 * k)] = k;          // -(k+1)
    rank[static_cast<size_t>(2 * k + 1)] = m + k;  // +(k+1)
  }
  return TotalSignedOrder(m, std::move(rank), "negatives-first");
}

TotalSignedOrder TotalSignedOrder::shuffled(int m, uint64_t seed) {
  std::vector<int> rank(static_cast<size_t>(2 * m));
  std::iota(rank.begin(), rank.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(rank.begin(), rank.end(), rng);
  return TotalSignedOrder(m, std::move(rank), "shuffled-" + std::to_string(seed));
}

LabelledWeightedPoset::LabelledWeightedPoset(int n,
                                             const std::vector<std::pair<int, int>>& relations,
                                             std::vector<int> weights)
    : n_(n), lt_(static_cast<size_t>(n) * static_cast<size_t>(n), 0), weights_(std::move(weights)) {
  if (n_ < 0) throw std::invalid_argument("LabelledWeightedPoset: n must be nonnegative");
  if (weights_.empty()) weights_.assign(static_cast<size_t>(n_), 1);
  if (static_cast<int>(weights_.size()) != n_)
    throw std::invalid_argument("LabelledWeightedPoset: weight table size mismatch");
  for (int w : weights_)
    if (w < 1) throw std::invalid_argument("LabelledWeightedPoset: weights must be positive");

  auto at = [&](int i, int j) -> char& {
    return lt_[static_cast<size_t>((i - 1) * n_ + (j - 1))];
  };
  for (auto [i, j] : relations) {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
      throw std::invalid_argument("LabelledWeightedPoset: bad relation endpoints");
    at(i, j) = 1;
  }
  // Warshall transitive closure.
  for (int k = 1; k <= n_; ++k)
    for (int i = 1; i <= n_; ++i)
      if (at(i, k))
        for (int j = 1; j <= n_; ++j)
          if (at(k, j)) at(i, j) = 1;
  for (int i = 1; i <= n_; ++i)
    if (at(i, i)) throw std::invalid_argument("LabelledWeightedPoset: relations contain a cycle");

  // Covering pairs: i < j with nothing strictly between.
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      if (!at(i, j)) continue;
      bool cover = true;
      for (int k = 1; k <= n_ && cover; ++k)
        if (at(i, k) && at(k, j)) cover = false;
      if (cover) covers_.emplace_back(i, j);
    }
}

std::vector<int> LabelledWeightedPoset::linear_extension() const {
  std::vector<int> indeg(static_cast<size_t>(n_), 0);
  for (auto [i, j] : covers_) ++indeg[static_cast<size_t>(j - 1)];
  std::vector<bool> taken(static_cast<size_t>(n_), false);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n_));
  for (int step = 0; step < n_; ++step) {
    int pick = -1;
    for (int v = 1; v <= n_; ++v)
      if (!taken[static_cast<size_t>(v - 1)] && indeg[static_cast<size_t>(v - 1)] == 0) {
        pick = v;
        break;
      }
    taken[static_cast<size_t>(pick - 1)] = true;
    out.push_back(pick);
    for (auto [i, j] : covers_)
      if (i == pick) --indeg[static_cast<size_t>(j - 1)];
  }
  return out;
}

LabelledWeightedPoset LabelledWeightedPoset::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> rels;
  std::vector<int> weights;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0) throw std::invalid_argument("poset fixture: bad first line");
      weights.assign(static_cast<size_t>(n), 1);
      continue;
    }
    std::string a;
    if (!(ls >> a)) continue;  // blank line
    if (a == "w") {
      int node, w;
      if (!(ls >> node >> w) || node < 1 || node > n)
        throw std::invalid_argument("poset fixture: bad weight line");
      weights[static_cast<size_t>(node - 1)] = w;
    } else {
      std::string op;
      int i = std::stoi(a), j;
      if (!(ls >> op >> j) || op != "<")
        throw std::invalid_argument("poset fixture: expected 'i < j'");
      rels.emplace_back(i, j);
    }
  }
  if (n < 0) throw std::invalid_argument("poset fixture: empty input");
  return LabelledWeightedPoset(n, rels, std::move(weights));
}

std::string LabelledWeightedPoset::format() const {
  std::ostringstream os;
  os << n_ << "\n";
  for (auto [i, j] : covers_) os << i << " < " << j << "\n";
  for (int v = 1; v <= n_; ++v)
    if (weight(v) != 1) os << "w " << v << " " << weight(v) << "\n";
  return os.str();
}

LabelledWeightedPoset chain_poset(const Permutation& pi) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 1; i < pi.n(); ++i) rels.emplace_back(pi(i), pi(i + 1));
  return LabelledWeightedPoset(pi.n(), rels);
}

LabelledWeightedPoset skew_poset(const SkewShape& shape) {
  if (shape.cells() < 1) throw std::invalid_argument("skew_poset: shape must have cells");
  // Number boxes left to right, bottom to top.
  const int rows = shape.outer().length();
  std::vector<std::vector<int>> number(static_cast<size_t>(rows) + 1);
  for (int r = 1; r <= rows; ++r)
    number[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.outer().part(r)) + 1, 0);
  int next = 1;
  for (int r = rows; r >= 1; --r)
    for (int c = shape.inner().part(r) + 1; c <= shape.outer().part(r); ++c)
      number[static_cast<size_t>(r)][static_cast<size_t>(c)] = next++;
  std::vector<std::pair<int, int>> rels;
  for (int r = 1; r <= rows; ++r)
    for (int c = shape.inner().part(r) + 1; c <= shape.outer().part(r); ++c) {
      const int id = number[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (shape.has_box(r, c + 1))
        rels.emplace_back(id, number[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]);
      if (shape.has_box(r + 1, c))
        rels.emplace_back(id, number[static_cast<size_t>(r + 1)][static_cast<size_t>(c)]);
    }
  return LabelledWeightedPoset(shape.cells(), rels);
}

void for_each_enriched(const LabelledWeightedPoset& poset, const TotalSignedOrder& order,
                       int max_abs, const std::function<void(const EnrichedMap&)>& fn) {
  if (max_abs < 1) throw std::invalid_argument("for_each_enriched: max_abs must be >= 1");
  if (max_abs > order.m())
    throw std::invalid_argument("for_each_enriched: max_abs exceeds the order's domain");
  const int n = poset.n();
  const std::vector<int> ext = poset.linear_extension();

  // Covering predecessors of each node; by the time a node is reached along
  // the linear extension all of them carry values.
  std::vector<std::vector<int>> preds(static_cast<size_t>(n) + 1);
  for (auto [i, j] : poset.covers()) preds[static_cast<size_t>(j)].push_back(i);

  EnrichedMap f;
  f.values.assign(static_cast<size_t>(n), 0);
  std::vector<int> domain;
  for (int v : order.values_ascending())
    if (std::abs(v) <= max_abs) domain.push_back(v);

  auto admissible = [&](int node, int value) {
    for (int p : preds[static_cast<size_t>(node)]) {
      const int fp = f.values[static_cast<size_t>(p - 1)];
      if (order.less(fp, value)) continue;
      if (fp == value && ((p < node && value > 0) || (p > node && value < 0))) continue;
      return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      fn(f);
      return;
    }
    const int node = ext[static_cast<size_t>(depth)];
    for (int v : domain) {
      if (!admissible(node, v)) continue;
      f.values[static_cast<size_t>(node - 1)] = v;
      self(self, depth + 1);
    }
    f.values[static_cast<size_t>(node - 1)] = 0;
  };
  rec(rec, 0);
}

std::vector<EnrichedMap> enumerate_enriched(const LabelledWeightedPoset& poset,
                                            const TotalSignedOrder& order, int max_abs) {
  std::vector<EnrichedMap> out;
  for_each_enriched(poset, order, max_abs, [&](const EnrichedMap& f) { out.push_back(f); });
  return out;
}

TruncPoly gamma_q(const LabelledWeightedPoset& poset, const EvalContext& ctx,
                  const TotalSignedOrder& order) {
  if (ctx.m != order.m())
    throw std::invalid_argument("gamma_q: context m must equal the order's domain bound");
  TruncPoly out(ctx);
  for_each_enriched(poset, order, ctx.m, [&](const EnrichedMap& f) {
    ExpVec exp(static_cast<size_t>(ctx.m), 0);
    int negs = 0;
    for (int node = 1; node <= poset.n(); ++node) {
      const int v = f(node);
      exp[static_cast<size_t>(std::abs(v) - 1)] += poset.weight(node);
      if (v < 0) ++negs;
    }
    out.add_term(std::move(exp), QCoeff::q_power(negs));
  });
  return out;
}

SignedTruncPoly gamma_pm(const LabelledWeightedPoset& poset, const EvalContext& ctx,
                         const TotalSignedOrder& order) {
  if (ctx.m != order.m())
    throw std::invalid_argument("gamma_pm: context m must equal the order's domain bound");
  SignedTruncPoly out(ctx);
  for_each_enriched(poset, order, ctx.m, [&](const EnrichedMap& f) {
    ExpVec exp(static_cast<size_t>(2 * ctx.m), 0);
    for (int node = 1; node <= poset.n(); ++node)
      exp[static_cast<size_t>(signed_slot(f(node)))] += poset.weight(node);
    out.add_term(std::move(exp), QCoeff(1));
  });
  return out;
}

PairTruncPoly gamma_q_product(const Permutation& pi, const PairContext& ctx) {
  PairTruncPoly out(ctx);
  const int n = pi.n();
  if (n == 0) return PairTruncPoly::constant(ctx, QCoeff(1));

  // Values along the chain positions; node labels pi(1..n) drive the
  // equality-sign rule. Pairs compare lexicographically, the second
  // coordinate in the standard signed order; a pair is negative iff its
  // second coordinate is.
  std::vector<int> fs(static_cast<size_t>(n)), gs(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      ExpVec exp(static_cast<size_t>(ctx.mx + ctx.my), 0);
      int negs = 0;
      for (int k = 0; k < n; ++k) {
        ++exp[static_cast<size_t>(fs[static_cast<size_t>(k)] - 1)];
        ++exp[static_cast<size_t>(ctx.mx + std::abs(gs[static_cast<size_t>(k)]) - 1)];
        if (gs[static_cast<size_t>(k)] < 0) ++negs;
      }
      out.add_term(std::move(exp), QCoeff::q_power(negs));
      return;
    }
    for (int fv = 1; fv <= ctx.mx; ++fv) {
      for (int slot = 0; slot < 2 * ctx.my; ++slot) {
        const int gv = signed_var_of_slot(slot);
        if (j > 0) {
          const int pf = fs[static_cast<size_t>(j - 1)], pg = gs[static_cast<size_t>(j - 1)];
          bool ok;
          if (pf != fv) {
            ok = pf < fv;
          } else if (pg != gv) {
            ok = signed_slot(pg) < slot;
          } else {
            // Equal pair: admissible sign depends on the label step.
            ok = pi(j) < pi(j + 1) ? gv > 0 : gv < 0;
          }
          if (!ok) continue;
        }
        fs[static_cast<size_t>(j)] = fv;
        gs[static_cast<size_t>(j)] = gv;
        self(self, j + 1);
      }
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace qhl
