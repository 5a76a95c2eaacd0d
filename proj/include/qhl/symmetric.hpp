#pragma once

#include <vector>

#include "qhl/partitions.hpp"
#include "qhl/poly.hpp"
#include "qhl/posets.hpp"

namespace qhl {

/// Truncated classical bases. e_k vanishes for k > m; e_0 = h_0 = 1.
TruncPoly elementary(int k, const EvalContext& ctx);
TruncPoly complete_homogeneous(int k, const EvalContext& ctx);
/// p_k for k >= 1; p_0 has no convention here and is rejected.
TruncPoly power_sum(int k, const EvalContext& ctx);
TruncPoly monomial_sym(const Partition& lambda, const EvalContext& ctx);

/// Skew Schur polynomial as the semistandard-tableau generating function.
TruncPoly schur(const SkewShape& shape, const EvalContext& ctx);

/// Hall-Littlewood generator q_n(X;-q) = sum_{k=0}^n q^k e_k h_{n-k};
/// q_0 = 1 and q_n = 0 for n < 0.
TruncPoly hl_qn(int n, const EvalContext& ctx);

/// Both sides of the rational-root formula
///   q_n(x_1..x_k;t) = (1-t) sum_i x_i^n prod_{j!=i} (x_i-t x_j)/(x_i-x_j):
/// first the direct evaluation, then hl_qn evaluated at xs with q = -t.
/// Coordinates must be pairwise distinct.
std::pair<mpq_class, mpq_class> hl_qn_ratcheck(int n, const std::vector<mpq_class>& xs,
                                               const mpq_class& t);

struct GenfunReport {
  int N = 0;
  std::vector<bool> coefficient_matches;  // index n = 0..N
  bool pass = false;
};

/// Expands prod_i (1+q x_i u)/(1-x_i u) to order u^N and compares every
/// u^n coefficient against hl_qn(n).
GenfunReport hl_qn_genfun_check(int N, const EvalContext& ctx);

/// Hall-Littlewood S-function S_{lambda/mu}(X;-q) as the k x k determinant
/// det(q_{lambda_i - mu_j - i + j}), k = l(lambda), expanded exactly.
TruncPoly hl_s_skew(const SkewShape& shape, const EvalContext& ctx);

/// Laplace-expansion determinant over the exact polynomial ring.
template <class Poly>
Poly determinant(const std::vector<std::vector<Poly>>& mat, const typename Poly::Context& ctx) {
  const size_t k = mat.size();
  for (const auto& row : mat)
    if (row.size() != k) throw std::invalid_argument("determinant: matrix must be square");
  if (k == 0) return Poly::constant(ctx, QCoeff(1));
  std::vector<size_t> cols(k);
  for (size_t j = 0; j < k; ++j) cols[j] = j;
  auto rec = [&](auto&& self, size_t row, std::vector<size_t>& live) -> Poly {
    if (live.size() == 1) return mat[row][live[0]];
    Poly acc(ctx);
    for (size_t pos = 0; pos < live.size(); ++pos) {
      const size_t col = live[pos];
      if (mat[row][col].is_zero()) continue;
      std::vector<size_t> rest;
      rest.reserve(live.size() - 1);
      for (size_t other : live)
        if (other != col) rest.push_back(other);
      Poly minor = self(self, row + 1, rest);
      Poly term = mat[row][col] * minor;
      if (pos % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  };
  return rec(rec, 0, cols);
}

/// Relation i R j <=> i before-or-equal j in the order, excluding equal
/// negatives. Its complement is transitive, making R semitransitive.
class RelationR {
 public:
  explicit RelationR(TotalSignedOrder order) : order_(std::move(order)) {}
  const TotalSignedOrder& order() const { return order_; }
  bool rel(int i, int j) const { return order_.leq(i, j) && !(i == j && i < 0); }

 private:
  TotalSignedOrder order_;
};

/// H_n: sum of x_{i_1}...x_{i_n} over R-chains i_1 R ... R i_n with entries
/// in {+-1..+-m}; H_0 = 1, H_n = 0 for n < 0.
SignedTruncPoly h_signed(int n, const RelationR& r, const EvalContext& ctx);

/// Order-free form: sum_k e_k(negative letters) h_{n-k}(positive letters).
SignedTruncPoly h_signed_subset_form(int n, const EvalContext& ctx);

struct DetHReport {
  SignedTruncPoly lhs;  // enriched enumeration of the skew poset
  SignedTruncPoly rhs;  // det(H_{lambda_i - mu_j - i + j})
  bool pass = false;
};

/// Gessel-Viennot identity: Gamma^pm(P_{lambda/mu}) = det(H_...), both sides
/// under the given order.
DetHReport det_h_identity(const SkewShape& shape, const RelationR& r, const EvalContext& ctx);

struct ThetaPnReport {
  TruncPoly lhs;  // Theta_q(p_n) through the fundamental expansion
  TruncPoly rhs;  // (1 - (-q)^n) p_n
  bool pass = false;
};

/// theta_{-q}(p_n) = (1-(-q)^n) p_n, with the left side computed through the
/// quasisymmetric expansion route. Requires ctx.m >= n.
ThetaPnReport theta_pn_check(int n, const EvalContext& ctx);

}  // namespace qhl
