#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhl/qcoeff.hpp"

namespace qhl {

/// Truncation context: m visible variables per alphabet, total-degree cap D.
/// Operands of any binary operation must share one context.
struct EvalContext {
  int m = 1;
  int D = 1;
  bool operator==(const EvalContext&) const = default;
};

/// Context for two-alphabet polynomials: mx X-slots, my Y-slots, shared cap D.
struct PairContext {
  int mx = 1;
  int my = 1;
  int D = 1;
  bool operator==(const PairContext&) const = default;
};

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic term order: total degree first, then lex on the
/// exponent tuple. Fixes the canonical serialization order.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

using TermMap = std::map<ExpVec, QCoeff, GradedLexLess>;

struct PlainTag {
  using Context = EvalContext;
  static int slots(const EvalContext& c) { return c.m; }
};
struct SignedTag {
  using Context = EvalContext;
  static int slots(const EvalContext& c) { return 2 * c.m; }
};
struct PairTag {
  using Context = PairContext;
  static int slots(const PairContext& c) { return c.mx + c.my; }
};

/// Sparse multivariate polynomial over Z[q], truncated to total degree <= D.
/// Immutable value semantics; all arithmetic is exact and re-canonicalizes
/// (no zero coefficients, no over-cap terms stored).
template <class Tag>
class BasicPoly {
 public:
  using Context = typename Tag::Context;

  BasicPoly() = default;
  explicit BasicPoly(Context ctx) : ctx_(ctx) { check_context(ctx); }

  static BasicPoly constant(Context ctx, QCoeff c) {
    BasicPoly p(ctx);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<size_t>(Tag::slots(ctx)), 0), std::move(c));
    return p;
  }
  static BasicPoly monomial(Context ctx, ExpVec exp, QCoeff c) {
    BasicPoly p(ctx);
    p.add_term(std::move(exp), std::move(c));
    return p;
  }

  const Context& context() const { return ctx_; }
  int slots() const { return Tag::slots(ctx_); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QCoeff coeff(const ExpVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? QCoeff() : it->second;
  }

  /// Accumulates c * x^exp, dropping it if the degree exceeds the cap.
  void add_term(ExpVec exp, QCoeff c) {
    if (static_cast<int>(exp.size()) != slots())
      throw std::invalid_argument("BasicPoly::add_term: exponent arity mismatch");
    for (int e : exp)
      if (e < 0) throw std::invalid_argument("BasicPoly::add_term: negative exponent");
    if (c.is_zero() || total_degree(exp) > ctx_.D) return;
    accumulate(terms_, std::move(exp), std::move(c));
  }

  BasicPoly operator-() const {
    BasicPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  BasicPoly& operator+=(const BasicPoly& rhs) {
    require_same_context(rhs);
    for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
    return *this;
  }

  BasicPoly& operator-=(const BasicPoly& rhs) {
    require_same_context(rhs);
    for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, -c);
    return *this;
  }

  friend BasicPoly operator+(BasicPoly lhs, const BasicPoly& rhs) { return lhs += rhs; }
  friend BasicPoly operator-(BasicPoly lhs, const BasicPoly& rhs) { return lhs -= rhs; }

  friend BasicPoly operator*(const BasicPoly& lhs, const BasicPoly& rhs) {
    lhs.require_same_context(rhs);
    BasicPoly out(lhs.ctx_);
    const int cap = lhs.ctx_.D;
    const int n = lhs.slots();
    ExpVec sum(static_cast<size_t>(n));
    for (const auto& [ea, ca] : lhs.terms_) {
      const int da = total_degree(ea);
      for (const auto& [eb, cb] : rhs.terms_) {
        if (da + total_degree(eb) > cap) continue;
        for (int i = 0; i < n; ++i) sum[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
        accumulate(out.terms_, sum, ca * cb);
      }
    }
    return out;
  }

  BasicPoly& operator*=(const BasicPoly& rhs) { return *this = *this * rhs; }

  friend BasicPoly operator*(const QCoeff& s, const BasicPoly& p) {
    BasicPoly out(p.ctx_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : p.terms_) {
      QCoeff sc = s * c;
      if (!sc.is_zero()) out.terms_.emplace(e, std::move(sc));
    }
    return out;
  }
  friend BasicPoly operator*(const BasicPoly& p, const QCoeff& s) { return s * p; }

  bool operator==(const BasicPoly& rhs) const = default;

  /// Copy truncated to a smaller cap D' <= D.
  BasicPoly retruncate(int new_cap) const {
    if (new_cap > ctx_.D) throw std::invalid_argument("BasicPoly::retruncate: cap may only shrink");
    Context c2 = ctx_;
    c2.D = new_cap;
    BasicPoly out(c2);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= new_cap) out.terms_.emplace(e, c);
    return out;
  }

  /// Substitutes an integer for q, keeping the result in the same ring.
  BasicPoly specialize_q(const mpz_class& q_value) const {
    BasicPoly out(ctx_);
    for (const auto& [e, c] : terms_) {
      QCoeff v(c.eval_int(q_value));
      if (!v.is_zero()) out.terms_.emplace(e, std::move(v));
    }
    return out;
  }

  bool is_homogeneous(int deg) const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != deg) return false;
    return true;
  }

 private:
  static void accumulate(TermMap& map, ExpVec key, QCoeff val) {
    if (val.is_zero()) return;
    auto it = map.find(key);
    if (it == map.end()) {
      map.emplace(std::move(key), std::move(val));
    } else {
      it->second += val;
      if (it->second.is_zero()) map.erase(it);
    }
  }

  static void check_context(const Context& ctx) {
    if (Tag::slots(ctx) <= 0 || ctx.D < 0)
      throw std::invalid_argument("BasicPoly: context requires positive variable count and D >= 0");
  }

  void require_same_context(const BasicPoly& rhs) const {
    if (!(ctx_ == rhs.ctx_))
      throw std::invalid_argument("BasicPoly: operands have mismatched contexts");
  }

  Context ctx_{};
  TermMap terms_;
};

using TruncPoly = BasicPoly<PlainTag>;
using SignedTruncPoly = BasicPoly<SignedTag>;
using PairTruncPoly = BasicPoly<PairTag>;

/// Slot of the signed variable x_i, i in {+-1,..,+-m}: layout x_{-1},x_1,x_{-2},x_2,...
inline int signed_slot(int var) {
  if (var == 0) throw std::invalid_argument("signed_slot: 0 is not a signed variable");
  int k = var > 0 ? var : -var;
  return 2 * (k - 1) + (var > 0 ? 1 : 0);
}

/// Signed variable at a slot (inverse of signed_slot).
inline int signed_var_of_slot(int slot) {
  int k = slot / 2 + 1;
  return (slot % 2 == 1) ? k : -k;
}

/// The substitution x_{-i} -> q*x_i, x_i -> x_i, re-canonicalized over the
/// plain m-variable alphabet. A ring homomorphism.
TruncPoly varpi(const SignedTruncPoly& f);

/// Exact evaluation at rational points; xs.size() must equal ctx.m.
mpq_class eval_rational(const TruncPoly& f, const std::vector<mpq_class>& xs,
                        const mpq_class& q_value);

/// X-only (resp. Y-only) polynomial viewed inside the two-alphabet ring.
PairTruncPoly embed_x(const TruncPoly& f, const PairContext& ctx);
PairTruncPoly embed_y(const TruncPoly& f, const PairContext& ctx);

/// Reinterprets a polynomial in mx+my ordered variables as an (X,Y)-polynomial;
/// f.context().m must equal ctx.mx + ctx.my.
PairTruncPoly split_alphabet(const TruncPoly& f, const PairContext& ctx);

std::string to_string(const TruncPoly& f, const std::string& var = "x");
std::string to_string(const SignedTruncPoly& f);
std::string to_string(const PairTruncPoly& f);

}  // namespace qhl
