#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "qhl/permutations.hpp"
#include "qhl/poly.hpp"

namespace qhl {

/// Subset I of [n-1]; the index of L^{(q)}_{n,I}.
struct SubsetDescent {
  int n = 0;
  std::vector<int> elems;  // sorted

  SubsetDescent() = default;
  SubsetDescent(int n_, std::vector<int> elems_);
  static SubsetDescent from_mask(int n, uint32_t mask);
  uint32_t mask() const;
  bool operator==(const SubsetDescent&) const = default;
};

SubsetDescent descents_of(const Permutation& p);

/// Composition of n; bijective with SubsetDescent via partial sums.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> parts_);
  int total() const;
  static Composition from_subset(const SubsetDescent& s);
  SubsetDescent to_subset() const;
  bool operator==(const Composition&) const = default;
};

/// Coefficients of a degree-n quasisymmetric function on the q=0
/// fundamental basis, keyed by descent-set mask.
struct QSymExpansion {
  int n = 0;
  std::string basis = "L0";
  std::map<uint32_t, QCoeff> coeffs;
  bool operator==(const QSymExpansion&) const = default;
};

nlohmann::json to_json(const QSymExpansion& e);

/// Monomial quasisymmetric M_alpha truncated to ctx; zero if alpha has more
/// parts than m.
TruncPoly monomial_qsym(const Composition& alpha, const EvalContext& ctx);

/// True iff every monomial coefficient matches the coefficient of the
/// corresponding front-packed monomial (complete check within the context).
bool is_quasisymmetric(const TruncPoly& f);

/// The q-fundamental L^{(q)}_{n,I} by the closed formula: weakly increasing
/// sequences with i_{j-1} < i_{j+1} at peaks (derived from I as
/// {j >= 2 : j in I, j-1 not in I}), weighted
/// q^{#{j in I : i_j = i_{j+1}}} (q+1)^{#distinct values}.
TruncPoly l_q_closed(const SubsetDescent& idx, const EvalContext& ctx);

struct ConsistencyReport {
  bool closed_matches_chain = false;    // Gamma^q(P_pi) equals the closed form
  bool descent_class_consistent = false;  // all sigma with Des sigma = Des pi agree
  bool pass = false;
};

/// Cross-checks the closed formula against the chain-poset enumeration and
/// the descent-set-only dependence.
ConsistencyReport l_q_consistency(const Permutation& pi, const EvalContext& ctx);

/// Expands a homogeneous degree-n quasisymmetric f on the q=0 fundamental
/// basis by monomial read-off and subset inclusion-exclusion. Requires
/// ctx.m >= n (faithful truncation); rejects non-quasisymmetric input.
QSymExpansion expand_fundamental_q0(const TruncPoly& f, int n);

/// Theta_q on a homogeneous degree-n input: expand on L^(0) and replace each
/// L^{(0)}_{n,I} by L^{(q)}_{n,I}.
TruncPoly theta_q_apply(const TruncPoly& f, int n, const EvalContext& ctx);

struct ProductReport {
  TruncPoly lhs, rhs;
  bool pass = false;
};

/// L^q_pi L^q_sigma = sum over shifted shuffles tau of L^q_tau.
ProductReport product_rule_check(const Permutation& pi, const Permutation& sigma,
                                 const EvalContext& ctx);

struct CoproductReport {
  PairTruncPoly lhs, rhs;
  bool pass = false;
};

/// Coproduct through alphabet concatenation: L^q_pi on the ordered alphabet
/// x_1 < .. < x_mx < y_1 < .. < y_my equals
/// sum_i L^q_{std(prefix)}(X) L^q_{std(suffix)}(Y).
CoproductReport coproduct_check(const Permutation& pi, int mx, int my, int D);

struct GenericRankReport {
  int n = 0;
  int rank = 0;
  int expected = 0;
  bool pass = false;
};

/// Rank of {L^{(q)}_{n,I}}_I over Q(q) on the monomial basis with m = n;
/// generic q gives full rank 2^{n-1}.
GenericRankReport rank_check_generic(int n);

struct PeakRankReport {
  int n = 0;
  int full_rank = 0;
  int sub_rank = 0;
  int admissible_count = 0;  // I with I union {0} having no 2 consecutive
  bool pass = false;
};

/// q = 1 specialization: the admissible subfamily is independent and spans
/// the whole family.
PeakRankReport rank_check_peak(int n);

/// Fraction-free (Bareiss) rank over Z[q]; works on any matrix shape.
int bareiss_rank(std::vector<std::vector<QCoeff>> mat);

}  // namespace qhl
