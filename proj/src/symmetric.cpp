#include "qhl/symmetric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qhl/quasisym.hpp"
#include "qhl/tableaux.hpp"

namespace qhl {

TruncPoly elementary(int k, const EvalContext& ctx) {
  TruncPoly out(ctx);
  if (k < 0 || k > ctx.m) return out;
  if (k == 0) return TruncPoly::constant(ctx, QCoeff(1));
  ExpVec exp(static_cast<size_t>(ctx.m), 0);
  auto rec = [&](auto&& self, int from, int left) -> void {
    if (left == 0) {
      out.add_term(exp, QCoeff(1));
      return;
    }
    for (int i = from; i <= ctx.m - left + 1; ++i) {
      exp[static_cast<size_t>(i - 1)] = 1;
      self(self, i + 1, left - 1);
      exp[static_cast<size_t>(i - 1)] = 0;
    }
  };
  rec(rec, 1, k);
  return out;
}

TruncPoly complete_homogeneous(int k, const EvalContext& ctx) {
  TruncPoly out(ctx);
  if (k < 0) return out;
  if (k == 0) return TruncPoly::constant(ctx, QCoeff(1));
  ExpVec exp(static_cast<size_t>(ctx.m), 0);
  auto rec = [&](auto&& self, int from, int left) -> void {
    if (left == 0) {
      out.add_term(exp, QCoeff(1));
      return;
    }
    for (int i = from; i <= ctx.m; ++i) {
      ++exp[static_cast<size_t>(i - 1)];
      self(self, i, left - 1);
      --exp[static_cast<size_t>(i - 1)];
    }
  };
  rec(rec, 1, k);
  return out;
}

TruncPoly power_sum(int k, const EvalContext& ctx) {
  if (k < 1) throw std::invalid_argument("power_sum: only k >= 1 is defined here");
  TruncPoly out(ctx);
  for (int i = 1; i <= ctx.m; ++i) {
    ExpVec exp(static_cast<size_t>(ctx.m), 0);
    exp[static_cast<size_t>(i - 1)] = k;
    out.add_term(std::move(exp), QCoeff(1));
  }
  return out;
}

TruncPoly monomial_sym(const Partition& lambda, const EvalContext& ctx) {
  TruncPoly out(ctx);
  if (lambda.empty()) return TruncPoly::constant(ctx, QCoeff(1));
  if (lambda.length() > ctx.m) return out;
  ExpVec exp(static_cast<size_t>(ctx.m), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exp.begin());
  std::sort(exp.begin(), exp.end());
  do {
    out.add_term(exp, QCoeff(1));
  } while (std::next_permutation(exp.begin(), exp.end()));
  return out;
}

TruncPoly schur(const SkewShape& shape, const EvalContext& ctx) {
  TruncPoly out(ctx);
  if (shape.cells() == 0) return TruncPoly::constant(ctx, QCoeff(1));
  for (const auto& t : enumerate_ssyt(shape, ctx.m)) out += weight_monomial(t, ctx);
  return out;
}

TruncPoly hl_qn(int n, const EvalContext& ctx) {
  if (n < 0) return TruncPoly(ctx);
  if (n == 0) return TruncPoly::constant(ctx, QCoeff(1));
  TruncPoly out(ctx);
  for (int k = 0; k <= n; ++k) {
    TruncPoly ek = elementary(k, ctx);
    if (ek.is_zero()) continue;
    out += QCoeff::q_power(k) * (ek * complete_homogeneous(n - k, ctx));
  }
  return out;
}

std::pair<mpq_class, mpq_class> hl_qn_ratcheck(int n, const std::vector<mpq_class>& xs,
                                               const mpq_class& t) {
  const int k = static_cast<int>(xs.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (xs[static_cast<size_t>(i)] == xs[static_cast<size_t>(j)])
        throw std::invalid_argument("hl_qn_ratcheck: coordinates must be pairwise distinct");

  mpq_class direct;
  if (n < 0) {
    direct = 0;
  } else if (n == 0) {
    direct = 1;
  } else {
    direct = 0;
    for (int i = 0; i < k; ++i) {
      mpq_class term = 1;
      for (int p = 0; p < n; ++p) term *= xs[static_cast<size_t>(i)];
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        mpq_class num = xs[static_cast<size_t>(i)] - t * xs[static_cast<size_t>(j)];
        mpq_class den = xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
        term *= num / den;
      }
      direct += term;
    }
    direct *= (1 - t);
    direct.canonicalize();
  }

  EvalContext ctx{k, std::max(n, 0)};
  mpq_class via_poly = eval_rational(hl_qn(n, ctx), xs, mpq_class(-t));
  return {direct, via_poly};
}

GenfunReport hl_qn_genfun_check(int N, const EvalContext& ctx) {
  if (N < 0 || N > ctx.D)
    throw std::invalid_argument("hl_qn_genfun_check: need 0 <= N <= D");
  // u-series with TruncPoly coefficients, truncated at u^N.
  std::vector<TruncPoly> series(static_cast<size_t>(N) + 1, TruncPoly(ctx));
  series[0] = TruncPoly::constant(ctx, QCoeff(1));
  for (int i = 1; i <= ctx.m; ++i) {
    ExpVec exp(static_cast<size_t>(ctx.m), 0);
    exp[static_cast<size_t>(i - 1)] = 1;
    TruncPoly xi = TruncPoly::monomial(ctx, exp, QCoeff(1));
    // (1 + q x_i u)
    for (int j = N; j >= 1; --j) series[static_cast<size_t>(j)] += QCoeff::q() * (xi * series[static_cast<size_t>(j - 1)]);
    // 1/(1 - x_i u) = sum_k x_i^k u^k
    for (int j = 1; j <= N; ++j) series[static_cast<size_t>(j)] += xi * series[static_cast<size_t>(j - 1)];
  }
  GenfunReport rep;
  rep.N = N;
  rep.pass = true;
  for (int n = 0; n <= N; ++n) {
    bool ok = series[static_cast<size_t>(n)] == hl_qn(n, ctx);
    rep.coefficient_matches.push_back(ok);
    rep.pass = rep.pass && ok;
  }
  return rep;
}

TruncPoly hl_s_skew(const SkewShape& shape, const EvalContext& ctx) {
  const int k = shape.outer().length();
  std::map<int, TruncPoly> qn_cache;
  auto entry = [&](int n) -> const TruncPoly& {
    auto it = qn_cache.find(n);
    if (it == qn_cache.end()) it = qn_cache.emplace(n, hl_qn(n, ctx)).first;
    return it->second;
  };
  std::vector<std::vector<TruncPoly>> mat(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      mat[static_cast<size_t>(i - 1)].push_back(
          entry(shape.outer().part(i) - shape.inner().part(j) - i + j));
  return determinant(mat, ctx);
}

SignedTruncPoly h_signed(int n, const RelationR& r, const EvalContext& ctx) {
  if (r.order().m() != ctx.m)
    throw std::invalid_argument("h_signed: order domain must match context m");
  SignedTruncPoly out(ctx);
  if (n < 0) return out;
  if (n == 0) return SignedTruncPoly::constant(ctx, QCoeff(1));
  const auto& domain = r.order().values_ascending();
  ExpVec exp(static_cast<size_t>(2 * ctx.m), 0);
  auto rec = [&](auto&& self, int depth, int prev) -> void {
    if (depth == n) {
      out.add_term(exp, QCoeff(1));
      return;
    }
    for (int v : domain) {
      if (depth > 0 && !r.rel(prev, v)) continue;
      ++exp[static_cast<size_t>(signed_slot(v))];
      self(self, depth + 1, v);
      --exp[static_cast<size_t>(signed_slot(v))];
    }
  };
  rec(rec, 0, 0);
  return out;
}

SignedTruncPoly h_signed_subset_form(int n, const EvalContext& ctx) {
  SignedTruncPoly out(ctx);
  if (n < 0) return out;
  const int m = ctx.m;
  // e_k over the negative letters.
  std::vector<SignedTruncPoly> eneg(static_cast<size_t>(std::min(n, m)) + 1, SignedTruncPoly(ctx));
  {
    ExpVec exp(static_cast<size_t>(2 * m), 0);
    auto rec = [&](auto&& self, int from, int chosen, int k) -> void {
      if (chosen == k) {
        eneg[static_cast<size_t>(k)].add_term(exp, QCoeff(1));
        return;
      }
      for (int i = from; i <= m; ++i) {
        ++exp[static_cast<size_t>(signed_slot(-i))];
        self(self, i + 1, chosen + 1, k);
        --exp[static_cast<size_t>(signed_slot(-i))];
      }
    };
    for (int k = 0; k <= std::min(n, m); ++k) rec(rec, 1, 0, k);
  }
  // h_j over the positive letters.
  std::vector<SignedTruncPoly> hpos(static_cast<size_t>(n) + 1, SignedTruncPoly(ctx));
  {
    ExpVec exp(static_cast<size_t>(2 * m), 0);
    auto rec = [&](auto&& self, int from, int left, int j) -> void {
      if (left == 0) {
        hpos[static_cast<size_t>(j)].add_term(exp, QCoeff(1));
        return;
      }
      for (int i = from; i <= m; ++i) {
        ++exp[static_cast<size_t>(signed_slot(i))];
        self(self, i, left - 1, j);
        --exp[static_cast<size_t>(signed_slot(i))];
      }
    };
    for (int j = 0; j <= n; ++j) rec(rec, 1, j, j);
  }
  for (int k = 0; k <= std::min(n, m); ++k) out += eneg[static_cast<size_t>(k)] * hpos[static_cast<size_t>(n - k)];
  return out;
}

DetHReport det_h_identity(const SkewShape& shape, const RelationR& r, const EvalContext& ctx) {
  DetHReport rep;
  rep.lhs = gamma_pm(skew_poset(shape), ctx, r.order());
  const int k = shape.outer().length();
  std::map<int, SignedTruncPoly> cache;
  auto entry = [&](int n) -> const SignedTruncPoly& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, h_signed(n, r, ctx)).first;
    return it->second;
  };
  std::vector<std::vector<SignedTruncPoly>> mat(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      mat[static_cast<size_t>(i - 1)].push_back(
          entry(shape.outer().part(i) - shape.inner().part(j) - i + j));
  rep.rhs = determinant(mat, ctx);
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

ThetaPnReport theta_pn_check(int n, const EvalContext& ctx) {
  if (n < 1) throw std::invalid_argument("theta_pn_check: n must be >= 1");
  ThetaPnReport rep;
  TruncPoly pn = power_sum(n, ctx);
  rep.lhs = theta_q_apply(pn, n, ctx);
  QCoeff factor(1);
  factor += (n % 2 == 0) ? -QCoeff::q_power(n) : QCoeff::q_power(n);
  rep.rhs = factor * pn;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace qhl
