#include <doctest.h>

#include <random>

#include "qhl/poly.hpp"
#include "qhl/poly_json.hpp"
#include "qhl/symmetric.hpp"

using namespace qhl;

namespace {

QCoeff qc(std::initializer_list<long> v) {
  std::vector<mpz_class> c;
  for (long x : v) c.emplace_back(x);
  return QCoeff(std::move(c));
}

TruncPoly var(const EvalContext& ctx, int i, int power = 1) {
  ExpVec e(static_cast<size_t>(ctx.m), 0);
  e[static_cast<size_t>(i - 1)] = power;
  return TruncPoly::monomial(ctx, std::move(e), QCoeff(1));
}

SignedTruncPoly svar(const EvalContext& ctx, int v) {
  ExpVec e(static_cast<size_t>(2 * ctx.m), 0);
  e[static_cast<size_t>(signed_slot(v))] = 1;
  return SignedTruncPoly::monomial(ctx, std::move(e), QCoeff(1));
}

template <class Poly>
Poly random_poly(std::mt19937_64& rng, const typename Poly::Context& ctx, int slots, int terms) {
  Poly p(ctx);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<long> cv(-9, 9);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(static_cast<size_t>(slots), 0);
    for (int& x : e) x = expo(rng);
    std::vector<mpz_class> cs(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = cv(rng);
    p.add_term(std::move(e), QCoeff(std::move(cs)));
  }
  return p;
}

}  // namespace

TEST_CASE("square of a sum") {
  EvalContext ctx{2, 2};
  TruncPoly f = var(ctx, 1) + var(ctx, 2);
  TruncPoly sq = f * f;
  CHECK(sq.coeff({2, 0}) == QCoeff(1));
  CHECK(sq.coeff({1, 1}) == QCoeff(2));
  CHECK(sq.coeff({0, 2}) == QCoeff(1));
  CHECK(sq.terms().size() == 3);
}

TEST_CASE("truncation drops over-cap products") {
  EvalContext ctx{1, 1};
  TruncPoly x = var(ctx, 1);
  CHECK((x * x).is_zero());
}

TEST_CASE("coefficient ring carries through products") {
  EvalContext ctx{2, 2};
  TruncPoly f = qc({1, 1}) * var(ctx, 1);
  TruncPoly g = qc({1, 1}) * var(ctx, 2);
  CHECK((f * g).coeff({1, 1}) == qc({1, 2, 1}));
}

TEST_CASE("context mismatch is rejected") {
  TruncPoly a(EvalContext{2, 3});
  TruncPoly b(EvalContext{2, 4});
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("varpi on basic terms") {
  EvalContext ctx{2, 2};
  CHECK(varpi(svar(ctx, -1)) == QCoeff::q() * var(ctx, 1));
  CHECK(varpi(svar(ctx, 1) * svar(ctx, 2)) == var(ctx, 1) * var(ctx, 2));
  SignedTruncPoly mixed = svar(ctx, -1) * svar(ctx, -2) + svar(ctx, 1) * svar(ctx, -2);
  TruncPoly x1x2 = var(ctx, 1) * var(ctx, 2);
  CHECK(varpi(mixed) == QCoeff::q_power(2) * x1x2 + QCoeff::q() * x1x2);
}

TEST_CASE("varpi is a ring homomorphism") {
  std::mt19937_64 rng(23);
  EvalContext ctx{2, 8};
  for (int i = 0; i < 100; ++i) {
    SignedTruncPoly f = random_poly<SignedTruncPoly>(rng, ctx, 4, 3);
    SignedTruncPoly g = random_poly<SignedTruncPoly>(rng, ctx, 4, 3);
    CHECK(varpi(f + g) == varpi(f) + varpi(g));
    CHECK(varpi(f * g) == varpi(f) * varpi(g));
  }
}

TEST_CASE("rational evaluation") {
  EvalContext ctx{2, 2};
  TruncPoly f = var(ctx, 1) + var(ctx, 2);
  CHECK(eval_rational(f, {mpq_class(1, 2), mpq_class(1, 3)}, 0) == mpq_class(5, 6));

  EvalContext c1{1, 1};
  TruncPoly g = QCoeff::q() * var(c1, 1);
  CHECK(eval_rational(g, {mpq_class(2)}, 3) == 6);

  // Value of q_2 = h_2 + q e_1 h_1 + q^2 e_2 at x = (1,1), q = 1:
  // 3 + 4 + 1 = 8, worked out term by term from the qeh sum.
  EvalContext c2{2, 2};
  CHECK(eval_rational(hl_qn(2, c2), {mpq_class(1), mpq_class(1)}, 1) == 8);

  CHECK_THROWS_AS(eval_rational(f, {mpq_class(1)}, 0), std::invalid_argument);
}

TEST_CASE("serialization round trip is byte exact") {
  std::mt19937_64 rng(31);
  EvalContext ctx{3, 6};
  PairContext pctx{2, 2, 6};
  for (int i = 0; i < 50; ++i) {
    TruncPoly f = random_poly<TruncPoly>(rng, ctx, 3, 4);
    SignedTruncPoly g = random_poly<SignedTruncPoly>(rng, ctx, 6, 3);
    PairTruncPoly h = random_poly<PairTruncPoly>(rng, pctx, 4, 3);
    CHECK(trunc_poly_from_json(to_json(f)) == f);
    CHECK(signed_poly_from_json(to_json(g)) == g);
    CHECK(pair_poly_from_json(to_json(h)) == h);
    CHECK(dump_canonical(to_json(f)) == dump_canonical(to_json(trunc_poly_from_json(to_json(f)))));
  }
}

TEST_CASE("canonical JSON layout") {
  EvalContext ctx{2, 3};
  TruncPoly f = qc({0, 1}) * var(ctx, 2) + var(ctx, 1, 2);
  // Terms in graded lex order: degree 1 term first, then the degree-2 one.
  CHECK(dump_canonical(to_json(f)) ==
        R"({"context":{"D":3,"m":2},"terms":[{"coeff":[0,1],"exp":[0,1]},{"coeff":[1],"exp":[2,0]}]})");
}

TEST_CASE("big coefficients survive JSON") {
  EvalContext ctx{1, 1};
  mpz_class big("123456789012345678901234567890");
  TruncPoly f = TruncPoly::monomial(ctx, {1}, QCoeff(big));
  CHECK(trunc_poly_from_json(to_json(f)) == f);
  CHECK(dump_canonical(to_json(f)).find("\"123456789012345678901234567890\"") != std::string::npos);
}

TEST_CASE("truncation coherence") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    EvalContext wide{2, 6}, narrow{2, 3};
    TruncPoly f = random_poly<TruncPoly>(rng, wide, 2, 4);
    TruncPoly g = random_poly<TruncPoly>(rng, wide, 2, 4);
    TruncPoly wide_then_cut = (f * g).retruncate(3);
    TruncPoly cut_then_mul = f.retruncate(3) * g.retruncate(3);
    CHECK(wide_then_cut == cut_then_mul);
    CHECK((f + g).retruncate(3) == f.retruncate(3) + g.retruncate(3));
    (void)narrow;
  }
}

TEST_CASE("pair embeddings agree with alphabet splitting") {
  PairContext pctx{2, 2, 4};
  EvalContext xctx{2, 4};
  TruncPoly f = var(xctx, 1) + var(xctx, 2);
  PairTruncPoly fx = embed_x(f, pctx);
  PairTruncPoly fy = embed_y(f, pctx);
  CHECK(fx.coeff({1, 0, 0, 0}) == QCoeff(1));
  CHECK(fy.coeff({0, 0, 0, 1}) == QCoeff(1));
  EvalContext both{4, 4};
  TruncPoly g = var(both, 1) + var(both, 2) + var(both, 3) + var(both, 4);
  CHECK(split_alphabet(g, pctx) == fx + fy);
}
