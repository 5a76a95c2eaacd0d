#include <doctest.h>

#include <random>
#include <set>

#include "qhl/quasisym.hpp"
#include "qhl/symmetric.hpp"
#include "qhl/poly_json.hpp"

using namespace qhl;

namespace {

QCoeff one_plus_q() { return QCoeff(1) + QCoeff::q(); }

TruncPoly var(const EvalContext& ctx, int i, int power = 1) {
  ExpVec e(static_cast<size_t>(ctx.m), 0);
  e[static_cast<size_t>(i - 1)] = power;
  return TruncPoly::monomial(ctx, std::move(e), QCoeff(1));
}

// Independent Gessel-fundamental oracle: direct sum over weakly increasing
// sequences with strict growth exactly at the positions in I.
TruncPoly gessel_oracle(int n, const std::vector<int>& I, const EvalContext& ctx) {
  TruncPoly out(ctx);
  std::set<int> strict(I.begin(), I.end());
  std::vector<int> seq(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      ExpVec e(static_cast<size_t>(ctx.m), 0);
      for (int v : seq) ++e[static_cast<size_t>(v - 1)];
      out.add_term(std::move(e), QCoeff(1));
      return;
    }
    int lo = pos == 0 ? 1 : seq[static_cast<size_t>(pos - 1)] + (strict.count(pos) ? 1 : 0);
    for (int v = lo; v <= ctx.m; ++v) {
      seq[static_cast<size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("subset and composition indexing") {
  SubsetDescent s(5, {2, 3});
  Composition alpha = Composition::from_subset(s);
  CHECK(alpha.parts == std::vector<int>{2, 1, 2});
  CHECK(alpha.to_subset() == s);
  CHECK(SubsetDescent::from_mask(5, s.mask()) == s);
  CHECK(Composition::from_subset(SubsetDescent(3, {})).parts == std::vector<int>{3});
  CHECK_THROWS_AS(SubsetDescent(3, {3}), std::invalid_argument);
}

TEST_CASE("monomial quasisymmetric functions") {
  EvalContext ctx{2, 3};
  CHECK(monomial_qsym(Composition({3}), ctx) == power_sum(3, ctx));
  CHECK(monomial_qsym(Composition({1, 1}), ctx) == var(ctx, 1) * var(ctx, 2));
  CHECK(monomial_qsym(Composition({2, 1}), ctx) == var(ctx, 1, 2) * var(ctx, 2));
  CHECK(monomial_qsym(Composition({1, 1, 1}), ctx).is_zero());
}

TEST_CASE("quasisymmetry predicate") {
  EvalContext c3{3, 2};
  CHECK(is_quasisymmetric(monomial_qsym(Composition({1, 1}), c3)));
  CHECK_FALSE(is_quasisymmetric(var(c3, 1)));
  CHECK(is_quasisymmetric(TruncPoly(c3)));

  EvalContext ctx{3, 3};
  for (const Permutation& pi : all_permutations(3))
    CHECK(is_quasisymmetric(gamma_q(chain_poset(pi), ctx, TotalSignedOrder::standard(3))));
}

TEST_CASE("closed form of the q-fundamentals") {
  EvalContext ctx{3, 3};
  TruncPoly l1 = l_q_closed(SubsetDescent(1, {}), ctx);
  CHECK(l1 == one_plus_q() * (var(ctx, 1) + var(ctx, 2) + var(ctx, 3)));

  EvalContext c1{1, 2};
  CHECK(l_q_closed(SubsetDescent(2, {}), c1) ==
        one_plus_q() * TruncPoly::monomial(c1, {2}, QCoeff(1)));

  CHECK(l_q_closed(SubsetDescent(0, {}), ctx) == TruncPoly::constant(ctx, QCoeff(1)));
}

TEST_CASE("q = 0 specializes to the Gessel fundamentals") {
  for (int n = 1; n <= 5; ++n) {
    EvalContext ctx{4, n};
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      SubsetDescent idx = SubsetDescent::from_mask(n, mask);
      CHECK(l_q_closed(idx, ctx).specialize_q(0) == gessel_oracle(n, idx.elems, ctx));
    }
  }
}

TEST_CASE("q = 1 depends only on the derived peak set") {
  for (int n = 2; n <= 5; ++n) {
    EvalContext ctx{3, n};
    std::map<std::vector<int>, TruncPoly> by_peak;
    for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      SubsetDescent idx = SubsetDescent::from_mask(n, mask);
      std::vector<int> peaks;
      std::set<int> des(idx.elems.begin(), idx.elems.end());
      for (int j = 2; j <= n - 1; ++j)
        if (des.count(j) && !des.count(j - 1)) peaks.push_back(j);
      TruncPoly at_one = l_q_closed(idx, ctx).specialize_q(1);
      auto it = by_peak.find(peaks);
      if (it == by_peak.end())
        by_peak.emplace(peaks, at_one);
      else
        CHECK(it->second == at_one);
    }
  }
}

TEST_CASE("consistency between the closed form and the chain enumeration") {
  EvalContext ctx{3, 3};
  for (const Permutation& pi : all_permutations(3)) {
    ConsistencyReport rep = l_q_consistency(pi, ctx);
    CHECK(rep.pass);
  }
}

TEST_CASE("closed form matches every chain in S4 and S5") {
  // Validates the peak-from-descents reconstruction permutation by
  // permutation, not just within descent classes.
  for (int n = 4; n <= 5; ++n) {
    EvalContext ctx{4, n};
    const TotalSignedOrder order = TotalSignedOrder::standard(4);
    std::map<uint32_t, TruncPoly> closed;
    for (const Permutation& pi : all_permutations(n)) {
      const SubsetDescent idx = descents_of(pi);
      auto it = closed.find(idx.mask());
      if (it == closed.end()) it = closed.emplace(idx.mask(), l_q_closed(idx, ctx)).first;
      CHECK(gamma_q(chain_poset(pi), ctx, order) == it->second);
    }
  }
}

TEST_CASE("skew-shape generating functions are quasisymmetric") {
  EvalContext ctx{3, 4};
  const TotalSignedOrder order = TotalSignedOrder::standard(3);
  for (const char* s : {"2,1", "3,1/1", "2,2"})
    CHECK(is_quasisymmetric(gamma_q(skew_poset(SkewShape::parse(s)), ctx, order)));
}

TEST_CASE("expansion on the q0 fundamental basis") {
  const int n = 3;
  EvalContext ctx{3, 3};
  QSymExpansion hn = expand_fundamental_q0(complete_homogeneous(n, ctx), n);
  REQUIRE(hn.coeffs.size() == 1);
  CHECK(hn.coeffs.at(0) == QCoeff(1));

  QSymExpansion s21 = expand_fundamental_q0(schur(SkewShape::parse("2,1"), ctx), 3);
  REQUIRE(s21.coeffs.size() == 2);
  CHECK(s21.coeffs.at(SubsetDescent(3, {1}).mask()) == QCoeff(1));
  CHECK(s21.coeffs.at(SubsetDescent(3, {2}).mask()) == QCoeff(1));

  EvalContext c2{2, 2};
  QSymExpansion m11 = expand_fundamental_q0(monomial_qsym(Composition({1, 1}), c2), 2);
  REQUIRE(m11.coeffs.size() == 1);
  CHECK(m11.coeffs.at(SubsetDescent(2, {1}).mask()) == QCoeff(1));

  CHECK_THROWS_AS(expand_fundamental_q0(var(ctx, 1), 1), std::invalid_argument);
  EvalContext narrow{2, 3};
  CHECK_THROWS_AS(expand_fundamental_q0(power_sum(3, narrow), 3), std::invalid_argument);
}

TEST_CASE("expansion round trip") {
  std::mt19937_64 rng(13);
  const int n = 3;
  EvalContext ctx{3, 3};
  std::uniform_int_distribution<long> cv(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<uint32_t, QCoeff> coeffs;
    for (uint32_t mask = 0; mask < 4; ++mask) {
      QCoeff c(cv(rng));
      if (!c.is_zero()) coeffs[mask] = c;
    }
    TruncPoly f(ctx);
    for (const auto& [mask, c] : coeffs)
      f += c * l_q_closed(SubsetDescent::from_mask(n, mask), ctx).specialize_q(0);
    QSymExpansion back = expand_fundamental_q0(f, n);
    CHECK(back.coeffs == coeffs);
  }
}

TEST_CASE("theta on complete homogeneous and schur inputs") {
  for (int n = 1; n <= 4; ++n) {
    EvalContext ctx{n, n};
    CHECK(theta_q_apply(complete_homogeneous(n, ctx), n, ctx) == hl_qn(n, ctx));
  }
  EvalContext ctx{4, 4};
  for (const SkewShape& shape : enumerate_skew_shapes(4))
    CHECK(theta_q_apply(schur(shape, ctx), shape.cells(), ctx) == hl_s_skew(shape, ctx));
}

TEST_CASE("theta is linear") {
  std::mt19937_64 rng(19);
  const int n = 3;
  EvalContext ctx{3, 3};
  std::uniform_int_distribution<long> cv(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    QCoeff a(cv(rng)), b(cv(rng));
    TruncPoly f = schur(SkewShape::parse("2,1"), ctx);
    TruncPoly g = complete_homogeneous(3, ctx);
    CHECK(theta_q_apply(a * f + b * g, n, ctx) ==
          a * theta_q_apply(f, n, ctx) + b * theta_q_apply(g, n, ctx));
  }
}

TEST_CASE("product rule") {
  EvalContext ctx{2, 2};
  ProductReport base = product_rule_check(Permutation({1}), Permutation({1}), ctx);
  CHECK(base.pass);
  CHECK(base.lhs == l_q_closed(SubsetDescent(2, {}), ctx) + l_q_closed(SubsetDescent(2, {1}), ctx));

  EvalContext c4{4, 4};
  CHECK(product_rule_check(Permutation({2, 1}), Permutation({1, 2}), c4).pass);
  CHECK(product_rule_check(Permutation(), Permutation({2, 1}), c4).pass);
}

TEST_CASE("coproduct by alphabet concatenation") {
  CHECK(coproduct_check(Permutation({1}), 2, 2, 1).pass);
  CHECK(coproduct_check(Permutation({2, 1}), 2, 2, 2).pass);
  CHECK(coproduct_check(Permutation({1, 3, 2}), 3, 3, 3).pass);
}

TEST_CASE("generic rank evidence") {
  CHECK(rank_check_generic(1).rank == 1);
  CHECK(rank_check_generic(3).rank == 4);
  CHECK(rank_check_generic(4).rank == 8);
  CHECK(rank_check_generic(4).pass);
}

TEST_CASE("peak rank evidence at q = 1") {
  PeakRankReport r2 = rank_check_peak(2);
  CHECK(r2.full_rank == 1);
  CHECK(r2.admissible_count == 1);
  CHECK(r2.pass);

  PeakRankReport r3 = rank_check_peak(3);
  CHECK(r3.full_rank == 2);
  CHECK(r3.admissible_count == 2);
  CHECK(r3.pass);

  CHECK(rank_check_peak(1).pass);
  CHECK(rank_check_peak(4).pass);
}

TEST_CASE("bareiss rank against rational elimination") {
  // Oracle: plain Gaussian elimination over mpq.
  auto mpq_rank = [](std::vector<std::vector<mpq_class>> a) {
    size_t rank = 0;
    const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    for (size_t c = 0; c < cols && rank < rows; ++c) {
      size_t p = rank;
      while (p < rows && a[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[rank]);
      for (size_t i = rank + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        mpq_class factor = a[i][c] / a[rank][c];
        for (size_t j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
      }
      ++rank;
    }
    return static_cast<int>(rank);
  };

  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> val(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    std::vector<std::vector<QCoeff>> m(rows, std::vector<QCoeff>(cols));
    std::vector<std::vector<mpq_class>> mq(rows, std::vector<mpq_class>(cols));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        long v = val(rng);
        m[i][j] = QCoeff(v);
        mq[i][j] = v;
      }
    CHECK(bareiss_rank(m) == mpq_rank(mq));
  }
}

TEST_CASE("expansion report JSON") {
  EvalContext ctx{3, 3};
  QSymExpansion ex = expand_fundamental_q0(schur(SkewShape::parse("2,1"), ctx), 3);
  CHECK(dump_canonical(to_json(ex)) ==
        R"({"basis":"L0","coeffs":[{"I":[1],"coeff":[1]},{"I":[2],"coeff":[1]}],"n":3})");
}
