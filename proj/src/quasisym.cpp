#include "qhl/quasisym.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qhl/poly_json.hpp"
#include "qhl/posets.hpp"

namespace qhl {

SubsetDescent::SubsetDescent(int n_, std::vector<int> elems_) : n(n_), elems(std::move(elems_)) {
  if (n < 0) throw std::invalid_argument("SubsetDescent: n must be nonnegative");
  std::sort(elems.begin(), elems.end());
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n - 1 || (i > 0 && elems[i] == elems[i - 1]))
      throw std::invalid_argument("SubsetDescent: I must be a subset of [n-1]");
  }
}

SubsetDescent SubsetDescent::from_mask(int n, uint32_t mask) {
  std::vector<int> elems;
  for (int j = 1; j <= n - 1; ++j)
    if (mask & (1u << (j - 1))) elems.push_back(j);
  return SubsetDescent(n, std::move(elems));
}

uint32_t SubsetDescent::mask() const {
  uint32_t m = 0;
  for (int j : elems) m |= 1u << (j - 1);
  return m;
}

SubsetDescent descents_of(const Permutation& p) {
  return SubsetDescent(p.n(), descent_set(p));
}

Composition::Composition(std::vector<int> parts_) : parts(std::move(parts_)) {
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

Composition Composition::from_subset(const SubsetDescent& s) {
  std::vector<int> parts;
  int prev = 0;
  for (int i : s.elems) {
    parts.push_back(i - prev);
    prev = i;
  }
  if (s.n > prev) parts.push_back(s.n - prev);
  return Composition(std::move(parts));
}

SubsetDescent Composition::to_subset() const {
  std::vector<int> elems;
  int acc = 0;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    acc += parts[i];
    elems.push_back(acc);
  }
  return SubsetDescent(total(), std::move(elems));
}

nlohmann::json to_json(const QSymExpansion& e) {
  nlohmann::json j;
  j["n"] = e.n;
  j["basis"] = e.basis;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mask, c] : e.coeffs) {
    nlohmann::json item;
    item["I"] = SubsetDescent::from_mask(e.n, mask).elems;
    item["coeff"] = to_json(c);
    arr.push_back(std::move(item));
  }
  j["coeffs"] = std::move(arr);
  return j;
}

TruncPoly monomial_qsym(const Composition& alpha, const EvalContext& ctx) {
  TruncPoly out(ctx);
  const int p = static_cast<int>(alpha.parts.size());
  if (p == 0) return TruncPoly::constant(ctx, QCoeff(1));
  if (p > ctx.m) return out;
  ExpVec exp(static_cast<size_t>(ctx.m), 0);
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == p) {
      out.add_term(exp, QCoeff(1));
      return;
    }
    for (int i = from; i <= ctx.m - (p - depth - 1); ++i) {
      exp[static_cast<size_t>(i - 1)] = alpha.parts[static_cast<size_t>(depth)];
      self(self, i + 1, depth + 1);
      exp[static_cast<size_t>(i - 1)] = 0;
    }
  };
  rec(rec, 1, 0);
  return out;
}

namespace {

std::vector<int> composition_of_exponents(const ExpVec& exp) {
  std::vector<int> comp;
  for (int e : exp)
    if (e > 0) comp.push_back(e);
  return comp;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExpVec packed_exponents(const Composition& alpha, int m) {
  ExpVec exp(static_cast<size_t>(m), 0);
  for (size_t i = 0; i < alpha.parts.size(); ++i) exp[i] = alpha.parts[i];
  return exp;
}

}  // namespace

bool is_quasisymmetric(const TruncPoly& f) {
  const int m = f.context().m;
  std::map<std::vector<int>, std::pair<QCoeff, long long>> groups;
  for (const auto& [exp, c] : f.terms()) {
    auto comp = composition_of_exponents(exp);
    auto it = groups.find(comp);
    if (it == groups.end()) {
      groups.emplace(std::move(comp), std::make_pair(c, 1LL));
    } else {
      if (!(it->second.first == c)) return false;
      ++it->second.second;
    }
  }
  for (const auto& [comp, entry] : groups)
    if (entry.second != binomial(m, static_cast<int>(comp.size()))) return false;
  return true;
}

TruncPoly l_q_closed(const SubsetDescent& idx, const EvalContext& ctx) {
  const int n = idx.n;
  if (n == 0) return TruncPoly::constant(ctx, QCoeff(1));
  TruncPoly out(ctx);

  std::vector<bool> des(static_cast<size_t>(n) + 1, false);
  std::vector<bool> peak(static_cast<size_t>(n) + 1, false);
  for (int j : idx.elems) des[static_cast<size_t>(j)] = true;
  // Peak positions of any permutation with descent set I.
  for (int j = 2; j <= n - 1; ++j)
    peak[static_cast<size_t>(j)] = des[static_cast<size_t>(j)] && !des[static_cast<size_t>(j - 1)];

  std::vector<QCoeff> one_plus_q_pow(static_cast<size_t>(n) + 1);
  one_plus_q_pow[0] = QCoeff(1);
  QCoeff base = QCoeff(1) + QCoeff::q();
  for (int k = 1; k <= n; ++k) one_plus_q_pow[static_cast<size_t>(k)] = one_plus_q_pow[static_cast<size_t>(k - 1)] * base;

  ExpVec exp(static_cast<size_t>(ctx.m), 0);
  // pos is 1-based; prev and prev2 are the previous two sequence values.
  auto rec = [&](auto&& self, int pos, int prev, int prev2, int des_eq, int strict) -> void {
    if (pos > n) {
      out.add_term(exp, QCoeff::q_power(des_eq) * one_plus_q_pow[static_cast<size_t>(strict + 1)]);
      return;
    }
    for (int v = (pos == 1 ? 1 : prev); v <= ctx.m; ++v) {
      if (pos >= 3 && peak[static_cast<size_t>(pos - 1)] && v <= prev2) continue;
      ++exp[static_cast<size_t>(v - 1)];
      self(self, pos + 1, v, prev,
           des_eq + ((pos >= 2 && v == prev && des[static_cast<size_t>(pos - 1)]) ? 1 : 0),
           strict + ((pos >= 2 && v > prev) ? 1 : 0));
      --exp[static_cast<size_t>(v - 1)];
    }
  };
  rec(rec, 1, 0, 0, 0, 0);
  return out;
}

ConsistencyReport l_q_consistency(const Permutation& pi, const EvalContext& ctx) {
  ConsistencyReport rep;
  const TotalSignedOrder order = TotalSignedOrder::standard(ctx.m);
  const TruncPoly closed = l_q_closed(descents_of(pi), ctx);
  rep.closed_matches_chain = gamma_q(chain_poset(pi), ctx, order) == closed;
  rep.descent_class_consistent = true;
  const std::vector<int> des = descent_set(pi);
  for (const Permutation& sigma : all_permutations(pi.n())) {
    if (descent_set(sigma) != des) continue;
    if (!(gamma_q(chain_poset(sigma), ctx, order) == closed)) {
      rep.descent_class_consistent = false;
      break;
    }
  }
  rep.pass = rep.closed_matches_chain && rep.descent_class_consistent;
  return rep;
}

QSymExpansion expand_fundamental_q0(const TruncPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("expand_fundamental_q0: n must be nonnegative");
  if (f.context().m < n)
    throw std::invalid_argument("expand_fundamental_q0: requires m >= n (faithful truncation)");
  if (f.context().D < n)
    throw std::invalid_argument("expand_fundamental_q0: requires D >= n");
  if (!f.is_homogeneous(n))
    throw std::invalid_argument("expand_fundamental_q0: input must be homogeneous of degree n");
  if (!is_quasisymmetric(f))
    throw std::invalid_argument("expand_fundamental_q0: input is not quasisymmetric");

  const uint32_t count = n >= 1 ? (1u << (n - 1)) : 1u;
  std::vector<QCoeff> d(count);
  for (uint32_t mask = 0; mask < count; ++mask) {
    Composition alpha = Composition::from_subset(SubsetDescent::from_mask(n, mask));
    d[mask] = f.coeff(packed_exponents(alpha, f.context().m));
  }
  QSymExpansion ex;
  ex.n = n;
  // Moebius inversion of L^0_{n,I} = sum_{J >= I} M_{n,J} over the subset lattice.
  for (uint32_t K = 0; K < count; ++K) {
    QCoeff c;
    uint32_t J = K;
    while (true) {
      const int sign_bits = std::popcount(K) - std::popcount(J);
      c += (sign_bits % 2 == 0) ? d[J] : -d[J];
      if (J == 0) break;
      J = (J - 1) & K;
    }
    if (!c.is_zero()) ex.coeffs.emplace(K, std::move(c));
  }
  return ex;
}

TruncPoly theta_q_apply(const TruncPoly& f, int n, const EvalContext& ctx) {
  const QSymExpansion ex = expand_fundamental_q0(f, n);
  TruncPoly out(ctx);
  for (const auto& [mask, c] : ex.coeffs)
    out += c * l_q_closed(SubsetDescent::from_mask(n, mask), ctx);
  return out;
}

ProductReport product_rule_check(const Permutation& pi, const Permutation& sigma,
                                 const EvalContext& ctx) {
  ProductReport rep;
  rep.lhs = l_q_closed(descents_of(pi), ctx) * l_q_closed(descents_of(sigma), ctx);
  rep.rhs = TruncPoly(ctx);
  for (const Permutation& tau : shuffle_shifted(pi, sigma))
    rep.rhs += l_q_closed(descents_of(tau), ctx);
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

CoproductReport coproduct_check(const Permutation& pi, int mx, int my, int D) {
  CoproductReport rep;
  const PairContext pctx{mx, my, D};
  const EvalContext concat_ctx{mx + my, D};
  rep.lhs = split_alphabet(l_q_closed(descents_of(pi), concat_ctx), pctx);
  rep.rhs = PairTruncPoly(pctx);
  const EvalContext xctx{mx, D}, yctx{my, D};
  const auto& w = pi.values();
  for (int i = 0; i <= pi.n(); ++i) {
    std::vector<int> prefix(w.begin(), w.begin() + i);
    std::vector<int> suffix(w.begin() + i, w.end());
    TruncPoly left = l_q_closed(descents_of(standardize_word(prefix)), xctx);
    TruncPoly right = l_q_closed(descents_of(standardize_word(suffix)), yctx);
    rep.rhs += embed_x(left, pctx) * embed_y(right, pctx);
  }
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

int bareiss_rank(std::vector<std::vector<QCoeff>> mat) {
  if (mat.empty()) return 0;
  const size_t rows = mat.size(), cols = mat[0].size();
  for (const auto& row : mat)
    if (row.size() != cols) throw std::invalid_argument("bareiss_rank: ragged matrix");
  QCoeff prev(1);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[pivot], mat[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        mat[i][j] = (mat[rank][col] * mat[i][j] - mat[i][col] * mat[rank][j]).div_exact(prev);
      mat[i][col] = QCoeff();
    }
    prev = mat[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

std::vector<std::vector<QCoeff>> l_family_matrix(int n) {
  const EvalContext ctx{n, n};
  const uint32_t count = n >= 1 ? (1u << (n - 1)) : 1u;
  std::vector<std::vector<QCoeff>> mat;
  mat.reserve(count);
  for (uint32_t I = 0; I < count; ++I) {
    const TruncPoly f = l_q_closed(SubsetDescent::from_mask(n, I), ctx);
    std::vector<QCoeff> row;
    row.reserve(count);
    for (uint32_t K = 0; K < count; ++K) {
      Composition alpha = Composition::from_subset(SubsetDescent::from_mask(n, K));
      row.push_back(f.coeff(packed_exponents(alpha, n)));
    }
    mat.push_back(std::move(row));
  }
  return mat;
}

}  // namespace

GenericRankReport rank_check_generic(int n) {
  if (n < 1) throw std::invalid_argument("rank_check_generic: n must be >= 1");
  GenericRankReport rep;
  rep.n = n;
  rep.expected = 1 << (n - 1);
  rep.rank = bareiss_rank(l_family_matrix(n));
  rep.pass = rep.rank == rep.expected;
  return rep;
}

PeakRankReport rank_check_peak(int n) {
  if (n < 1) throw std::invalid_argument("rank_check_peak: n must be >= 1");
  PeakRankReport rep;
  rep.n = n;
  auto mat = l_family_matrix(n);
  const uint32_t count = static_cast<uint32_t>(mat.size());
  std::vector<std::vector<QCoeff>> at_one, sub;
  for (uint32_t I = 0; I < count; ++I) {
    std::vector<QCoeff> row;
    row.reserve(count);
    for (const QCoeff& c : mat[I]) row.emplace_back(c.eval_int(1));
    // I is admissible when I union {0} has no two consecutive elements:
    // bit 0 encodes 1 in I, so the mask must avoid bit 0 and adjacent bits.
    const bool admissible = (I & 1u) == 0 && (I & (I >> 1)) == 0;
    if (admissible) {
      sub.push_back(row);
      ++rep.admissible_count;
    }
    at_one.push_back(std::move(row));
  }
  rep.full_rank = bareiss_rank(std::move(at_one));
  rep.sub_rank = bareiss_rank(std::move(sub));
  rep.pass = rep.sub_rank == rep.admissible_count && rep.full_rank == rep.sub_rank;
  return rep;
}

}  // namespace qhl
