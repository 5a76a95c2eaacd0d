#include "qhl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qhl/partitions.hpp"
#include "qhl/permutations.hpp"
#include "qhl/poly_json.hpp"
#include "qhl/posets.hpp"
#include "qhl/quasisym.hpp"
#include "qhl/symmetric.hpp"
#include "qhl/tableaux.hpp"

namespace qhl {

bool VerificationReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

int VerificationReport::failed_count() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const CaseResult& c) { return !c.pass; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["params"] = params;
  j["pass"] = pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const CaseResult& c : cases) {
    nlohmann::json jc;
    jc["id"] = c.id;
    jc["pass"] = c.pass;
    jc["left"] = c.left_digest;
    jc["right"] = c.right_digest;
    arr.push_back(std::move(jc));
  }
  j["cases"] = std::move(arr);
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "  params " << params.dump() << "\n";
  for (const CaseResult& c : cases)
    os << (c.pass ? "  [ ok ] " : "  [FAIL] ") << c.id << "  " << c.left_digest << " vs "
       << c.right_digest << "\n";
  os << (pass() ? "PASS" : "FAIL") << "  " << cases.size() << " cases, " << failed_count()
     << " failed, " << elapsed_seconds << "s\n";
  return os.str();
}

VerifyLimits verify_limits() { return VerifyLimits{}; }

void check_bounds(const VerifyBounds& b) {
  const VerifyLimits lim = verify_limits();
  auto refuse = [](const std::string& what, int value, int max) {
    std::ostringstream os;
    os << "bound " << what << "=" << value << " exceeds the documented maximum " << max;
    throw std::invalid_argument(os.str());
  };
  if (b.max_outer < 1 || b.max_outer > lim.max_outer) refuse("max-outer", b.max_outer, lim.max_outer);
  if (b.max_outer_sl < 1 || b.max_outer_sl > lim.max_outer)
    refuse("max-outer", b.max_outer_sl, lim.max_outer);
  if (b.m < 1 || b.m > lim.m) refuse("m", b.m, lim.m);
  if (b.D < 1 || b.D > lim.D) refuse("D", b.D, lim.D);
  if (b.n_max < 1 || b.n_max > lim.n_max) refuse("n-max", b.n_max, lim.n_max);
  if (b.mx < 1 || b.mx > lim.m) refuse("mx", b.mx, lim.m);
  if (b.my < 1 || b.my > lim.m) refuse("my", b.my, lim.m);
}

namespace {

int thread_budget() {
  if (const char* env = std::getenv("QHL_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(0..count-1); results must go to preallocated slots so the report
// is identical whatever QHL_THREADS says.
template <class Fn>
void parallel_cases(size_t count, const Fn& fn) {
  const int threads = static_cast<int>(std::min<size_t>(static_cast<size_t>(thread_budget()), count));
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (auto& th : pool) th.join();
}

using Clock = std::chrono::steady_clock;

// Case order must not depend on scheduling: reports are sorted by id before
// emission, and wall time is attached here (and only rendered in text mode).
VerificationReport finalize(VerificationReport rep, Clock::time_point start) {
  std::sort(rep.cases.begin(), rep.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

template <class Poly>
CaseResult make_case(std::string id, const Poly& lhs, const Poly& rhs) {
  return CaseResult{std::move(id), lhs == rhs, digest(to_json(lhs)), digest(to_json(rhs))};
}

CaseResult make_flag_case(std::string id, bool pass, const nlohmann::json& left,
                          const nlohmann::json& right) {
  return CaseResult{std::move(id), pass, digest(left), digest(right)};
}

TruncPoly sum_l_over_syt(const SkewShape& shape, const EvalContext& ctx) {
  TruncPoly acc(ctx);
  for (const StandardTableau& t : enumerate_syt(shape))
    acc += l_q_closed(SubsetDescent(shape.cells(), descent_set(t)), ctx);
  return acc;
}

std::vector<mpq_class> random_distinct_rationals(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<mpq_class> xs;
  while (static_cast<int>(xs.size()) < k) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    if (x == 0) continue;
    if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
    xs.push_back(x);
  }
  return xs;
}

QCoeff random_qcoeff(std::mt19937_64& rng, int max_deg = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<mpz_class> cs(static_cast<size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = coeff(rng);
  return QCoeff(std::move(cs));
}

template <class Poly>
Poly random_poly(std::mt19937_64& rng, const typename Poly::Context& ctx, int slots, int terms) {
  Poly p(ctx);
  std::uniform_int_distribution<int> expo(0, 2);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(static_cast<size_t>(slots), 0);
    for (int& v : e) v = expo(rng);
    p.add_term(std::move(e), random_qcoeff(rng));
  }
  return p;
}

}  // namespace

VerificationReport verify_thm_sg(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "thm-sg";
  rep.params = {{"max_outer", b.max_outer}, {"m", b.m}, {"D", b.D}, {"order", "standard"},
                {"seed", b.seed}};
  const auto start = Clock::now();
  const EvalContext ctx{b.m, b.D};
  const TotalSignedOrder order = TotalSignedOrder::standard(b.m);
  const auto shapes = enumerate_skew_shapes(b.max_outer);
  rep.cases.resize(shapes.size());
  parallel_cases(shapes.size(), [&](size_t i) {
    const SkewShape& shape = shapes[i];
    const TruncPoly lhs = gamma_q(skew_poset(shape), ctx, order);
    const TruncPoly rhs = hl_s_skew(shape, ctx);
    rep.cases[i] = make_case(shape.to_string(), lhs, rhs);
  });
  return finalize(std::move(rep), start);
}

VerificationReport verify_thm_sl(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "thm-sl";
  const int max_outer = std::max(b.max_outer, b.max_outer_sl);
  rep.params = {{"max_outer", max_outer}, {"m", b.m}, {"D", b.D}, {"seed", b.seed}};
  const auto start = Clock::now();
  const EvalContext ctx{b.m, std::max(b.D, max_outer)};
  const auto shapes = enumerate_skew_shapes(max_outer);
  rep.cases.resize(shapes.size());
  parallel_cases(shapes.size(), [&](size_t i) {
    const SkewShape& shape = shapes[i];
    const TruncPoly lhs = sum_l_over_syt(shape, ctx);
    const TruncPoly rhs = hl_s_skew(shape, ctx);
    rep.cases[i] = make_case(shape.to_string(), lhs, rhs);
  });
  return finalize(std::move(rep), start);
}

VerificationReport verify_gessel(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "gessel";
  rep.params = {{"max_outer", b.max_outer}, {"m", b.m}, {"D", b.D}, {"q", 0}, {"seed", b.seed}};
  const auto start = Clock::now();
  const EvalContext ctx{b.m, b.D};
  const auto shapes = enumerate_skew_shapes(b.max_outer);
  rep.cases.resize(shapes.size());
  parallel_cases(shapes.size(), [&](size_t i) {
    const SkewShape& shape = shapes[i];
    const TruncPoly via_ssyt = schur(shape, ctx);
    const TruncPoly via_det = hl_s_skew(shape, ctx).specialize_q(0);
    const TruncPoly via_l = sum_l_over_syt(shape, ctx).specialize_q(0);
    CaseResult c = make_case(shape.to_string(), via_l, via_ssyt);
    c.pass = c.pass && via_det == via_ssyt;
    rep.cases[i] = std::move(c);
  });
  return finalize(std::move(rep), start);
}

VerificationReport verify_stembridge(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "stembridge";
  rep.params = {{"max_outer", b.max_outer}, {"m", b.m}, {"D", b.D}, {"q", 1}, {"seed", b.seed}};
  const auto start = Clock::now();
  const EvalContext ctx{b.m, b.D};
  const auto shapes = enumerate_skew_shapes(b.max_outer);
  rep.cases.resize(shapes.size());
  parallel_cases(shapes.size(), [&](size_t i) {
    const SkewShape& shape = shapes[i];
    const TruncPoly lhs = sum_l_over_syt(shape, ctx).specialize_q(1);
    const TruncPoly rhs = hl_s_skew(shape, ctx).specialize_q(1);
    rep.cases[i] = make_case(shape.to_string(), lhs, rhs);
  });
  return finalize(std::move(rep), start);
}

VerificationReport verify_theta(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "theta";
  const int n_hi = std::max(b.n_max, 5);
  rep.params = {{"max_outer", b.max_outer}, {"n_max", n_hi}, {"m", b.m}, {"D", b.D},
                {"seed", b.seed}};
  const auto start = Clock::now();

  struct Case {
    std::string id;
    int kind;  // 0: h_n, 1: p_n, 2: schur shape
    int n = 0;
    SkewShape shape;
  };
  std::vector<Case> todo;
  for (int n = 1; n <= n_hi; ++n) todo.push_back({"h_" + std::to_string(n), 0, n, {}});
  for (int n = 1; n <= n_hi; ++n) todo.push_back({"p_" + std::to_string(n), 1, n, {}});
  for (const SkewShape& shape : enumerate_skew_shapes(b.max_outer))
    todo.push_back({"s_" + shape.to_string(), 2, shape.cells(), shape});

  rep.cases.resize(todo.size());
  parallel_cases(todo.size(), [&](size_t i) {
    const Case& c = todo[i];
    // The fundamental-expansion route needs m >= degree for faithfulness.
    const EvalContext ctx{std::max(b.m, c.n), std::max(b.D, c.n)};
    switch (c.kind) {
      case 0: {
        const TruncPoly lhs = theta_q_apply(complete_homogeneous(c.n, ctx), c.n, ctx);
        rep.cases[i] = make_case(c.id, lhs, hl_qn(c.n, ctx));
        break;
      }
      case 1: {
        const ThetaPnReport r = theta_pn_check(c.n, ctx);
        rep.cases[i] = make_case(c.id, r.lhs, r.rhs);
        break;
      }
      default: {
        const TruncPoly lhs = theta_q_apply(schur(c.shape, ctx), c.n, ctx);
        rep.cases[i] = make_case(c.id, lhs, hl_s_skew(c.shape, ctx));
        break;
      }
    }
  });
  return finalize(std::move(rep), start);
}

VerificationReport verify_cauchy(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "cauchy";
  const int n_hi = std::min(b.n_max, 3);
  rep.params = {{"n_max", n_hi}, {"mx", b.mx}, {"my", b.my}, {"seed", b.seed}};
  const auto start = Clock::now();

  for (int n = 1; n <= n_hi; ++n) {
    const PairContext pctx{b.mx, b.my, 2 * n};
    const EvalContext xctx{b.mx, 2 * n}, yctx{b.my, 2 * n};
    // Macdonald's Cauchy identity: LHS by pair enumeration, RHS via
    // SSYT-Schur times determinant S-functions.
    {
      const PairTruncPoly lhs = gamma_q_product(Permutation::identity(n), pctx);
      PairTruncPoly rhs(pctx);
      for (const Partition& lambda : partitions_of(n)) {
        const SkewShape shape(lambda, Partition());
        rhs += embed_x(schur(shape, xctx), pctx) * embed_y(hl_s_skew(shape, yctx), pctx);
      }
      rep.cases.push_back(make_case("qn-cauchy-n" + std::to_string(n), lhs, rhs));
    }
    // Factorization of L^q_pi(XY) through pairs (sigma, tau) with
    // tau o sigma = pi; the X factor is the q=0 fundamental.
    for (const Permutation& pi : all_permutations(n)) {
      const PairTruncPoly lhs = gamma_q_product(pi, pctx);
      PairTruncPoly rhs(pctx);
      for (const Permutation& tau : all_permutations(n)) {
        const Permutation sigma = tau.inverse().compose(pi);
        const TruncPoly left = l_q_closed(descents_of(sigma), xctx).specialize_q(0);
        const TruncPoly right = l_q_closed(descents_of(tau), yctx);
        rhs += embed_x(left, pctx) * embed_y(right, pctx);
      }
      std::string word;
      for (int v : pi.values()) word += std::to_string(v);
      rep.cases.push_back(make_case("factor-n" + std::to_string(n) + "-pi" + word, lhs, rhs));
    }
  }
  return finalize(std::move(rep), start);
}

VerificationReport verify_product(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "product";
  const EvalContext ctx{std::max(b.m, 4), std::max(b.D, 4)};
  rep.params = {{"m", ctx.m}, {"D", ctx.D}, {"seed", b.seed}};
  const auto start = Clock::now();
  auto word_of = [](const Permutation& p) {
    std::string w;
    for (int v : p.values()) w += std::to_string(v);
    return w.empty() ? "e" : w;
  };
  auto run_pairs = [&](int n1, int n2) {
    for (const Permutation& pi : all_permutations(n1))
      for (const Permutation& sigma : all_permutations(n2)) {
        const ProductReport r = product_rule_check(pi, sigma, ctx);
        rep.cases.push_back(
            make_case("L" + word_of(pi) + "*L" + word_of(sigma), r.lhs, r.rhs));
      }
  };
  run_pairs(2, 2);
  run_pairs(1, 3);
  return finalize(std::move(rep), start);
}

VerificationReport verify_coproduct(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "coproduct";
  const int n = std::min(b.n_max, 3);
  rep.params = {{"n", n}, {"mx", b.mx}, {"my", b.my}, {"D", n}, {"seed", b.seed}};
  const auto start = Clock::now();
  for (const Permutation& pi : all_permutations(n)) {
    const CoproductReport r = coproduct_check(pi, b.mx, b.my, n);
    std::string word;
    for (int v : pi.values()) word += std::to_string(v);
    rep.cases.push_back(make_case("pi" + word, r.lhs, r.rhs));
  }
  return finalize(std::move(rep), start);
}

VerificationReport verify_order_free(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "order-free";
  const int n_hi = b.n_max;
  const int m_hi = std::min(b.m, 3);
  rep.params = {{"n_max", n_hi}, {"m_max", m_hi}, {"orders", 4}, {"seed", b.seed}};
  const auto start = Clock::now();
  for (int m = 1; m <= m_hi; ++m) {
    const EvalContext ctx{m, std::max(b.D, n_hi)};
    const std::vector<TotalSignedOrder> orders = {
        TotalSignedOrder::standard(m), TotalSignedOrder::sign_swapped(m),
        TotalSignedOrder::negatives_first(m), TotalSignedOrder::shuffled(m, b.seed)};
    for (int n = 0; n <= n_hi; ++n) {
      const SignedTruncPoly subset_form = h_signed_subset_form(n, ctx);
      bool all_equal = true;
      for (const TotalSignedOrder& order : orders)
        all_equal = all_equal && h_signed(n, RelationR(order), ctx) == subset_form;
      CaseResult chains = make_case("hn-order-free-m" + std::to_string(m) + "-n" + std::to_string(n),
                                    h_signed(n, RelationR(orders[0]), ctx), subset_form);
      chains.pass = chains.pass && all_equal;
      rep.cases.push_back(std::move(chains));
      rep.cases.push_back(make_case("varpi-hn-m" + std::to_string(m) + "-n" + std::to_string(n),
                                    varpi(subset_form), hl_qn(n, ctx)));
    }
  }
  return finalize(std::move(rep), start);
}

VerificationReport verify_det_h(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "det-h";
  const int max_outer = std::min(b.max_outer, 4);
  const int m = std::min(b.m, 3);
  rep.params = {{"max_outer", max_outer}, {"m", m}, {"orders", 3}, {"seed", b.seed}};
  const auto start = Clock::now();
  const EvalContext ctx{m, std::max(b.D, max_outer)};
  const std::vector<TotalSignedOrder> orders = {TotalSignedOrder::standard(m),
                                                TotalSignedOrder::negatives_first(m),
                                                TotalSignedOrder::shuffled(m, b.seed)};
  const auto shapes = enumerate_skew_shapes(max_outer);
  struct Job {
    size_t shape_idx;
    size_t order_idx;
  };
  std::vector<Job> jobs;
  for (size_t s = 0; s < shapes.size(); ++s)
    for (size_t o = 0; o < orders.size(); ++o) jobs.push_back({s, o});
  rep.cases.resize(jobs.size());
  parallel_cases(jobs.size(), [&](size_t i) {
    const SkewShape& shape = shapes[jobs[i].shape_idx];
    const TotalSignedOrder& order = orders[jobs[i].order_idx];
    const DetHReport r = det_h_identity(shape, RelationR(order), ctx);
    rep.cases[i] = make_case(shape.to_string() + "@" + order.name(), r.lhs, r.rhs);
  });
  return finalize(std::move(rep), start);
}

VerificationReport verify_qn_routes(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "qn-routes";
  const int N = std::max(b.n_max, 5);
  rep.params = {{"N", N}, {"m", b.m}, {"points", 20}, {"k", 4}, {"seed", b.seed}};
  const auto start = Clock::now();

  const EvalContext ctx{b.m, std::max(b.D, N)};
  const GenfunReport gf = hl_qn_genfun_check(N, ctx);
  for (int n = 0; n <= N; ++n) {
    rep.cases.push_back(make_flag_case("genfun-u" + std::to_string(n),
                                       gf.coefficient_matches[static_cast<size_t>(n)],
                                       {{"route", "series"}, {"n", n}},
                                       {{"route", "qeh-sum"}, {"n", n}}));
  }

  std::mt19937_64 rng(b.seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int pt = 0; pt < 20; ++pt) {
    const std::vector<mpq_class> xs = random_distinct_rationals(rng, 4);
    mpq_class t(num(rng), den(rng));
    t.canonicalize();
    bool ok = true;
    nlohmann::json left, right;
    for (int n = 0; n <= N; ++n) {
      const auto [direct, via_poly] = hl_qn_ratcheck(n, xs, t);
      ok = ok && direct == via_poly;
      left["n" + std::to_string(n)] = direct.get_str();
      right["n" + std::to_string(n)] = via_poly.get_str();
    }
    std::ostringstream id;
    id << "eq1-point" << (pt < 10 ? "0" : "") << pt;
    rep.cases.push_back(make_flag_case(id.str(), ok, left, right));
  }
  return finalize(std::move(rep), start);
}

VerificationReport verify_ranks(const VerifyBounds& b) {
  check_bounds(b);
  VerificationReport rep;
  rep.suite = "ranks";
  rep.params = {{"n_max", b.n_max}, {"seed", b.seed}};
  const auto start = Clock::now();
  for (int n = 1; n <= b.n_max; ++n) {
    const GenericRankReport g = rank_check_generic(n);
    rep.cases.push_back(make_flag_case("generic-n" + std::to_string(n), g.pass,
                                       {{"rank", g.rank}}, {{"expected", g.expected}}));
    const PeakRankReport p = rank_check_peak(n);
    rep.cases.push_back(make_flag_case(
        "peak-n" + std::to_string(n), p.pass,
        {{"full_rank", p.full_rank}, {"sub_rank", p.sub_rank}},
        {{"admissible", p.admissible_count}}));
  }
  return finalize(std::move(rep), start);
}

VerificationReport selftest(uint64_t seed) {
  VerificationReport rep;
  rep.suite = "selftest";
  rep.params = {{"seed", seed}};
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);

  // Ring axioms on random coefficients and polynomials.
  {
    bool ok = true;
    for (int i = 0; i < 60 && ok; ++i) {
      const QCoeff a = random_qcoeff(rng), b = random_qcoeff(rng), c = random_qcoeff(rng);
      ok = ok && (a + b) + c == a + (b + c);
      ok = ok && a * b == b * a;
      ok = ok && a * (b + c) == a * b + a * c;
      ok = ok && (a * b) * c == a * (b * c);
    }
    const EvalContext ctx{3, 6};
    for (int i = 0; i < 25 && ok; ++i) {
      const TruncPoly f = random_poly<TruncPoly>(rng, ctx, 3, 4);
      const TruncPoly g = random_poly<TruncPoly>(rng, ctx, 3, 4);
      const TruncPoly h = random_poly<TruncPoly>(rng, ctx, 3, 4);
      ok = ok && f * g == g * f;
      ok = ok && f * (g + h) == f * g + f * h;
      ok = ok && (f * g) * h == f * (g * h);
    }
    rep.cases.push_back(make_flag_case("ring-axioms", ok, {{"samples", 85}}, {{"samples", 85}}));
  }

  // varpi is a ring homomorphism (200 seeded cases).
  {
    const EvalContext ctx{3, 8};
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      const SignedTruncPoly f = random_poly<SignedTruncPoly>(rng, ctx, 6, 3);
      const SignedTruncPoly g = random_poly<SignedTruncPoly>(rng, ctx, 6, 3);
      ok = ok && varpi(f * g) == varpi(f) * varpi(g);
      ok = ok && varpi(f + g) == varpi(f) + varpi(g);
    }
    rep.cases.push_back(make_flag_case("varpi-homomorphism", ok, {{"cases", 200}}, {{"cases", 200}}));
  }

  // RSK: descent-preserving bijection on S_n, n <= 5.
  {
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n) {
      std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> seen;
      for (const Permutation& pi : all_permutations(n)) {
        const auto [P, Q] = rsk(pi);
        ok = ok && P.shape() == Q.shape();
        ok = ok && descent_set(Q) == descent_set(pi);
        ok = ok && descent_set(P) == descent_set(pi.inverse());
        seen.insert({P.shape().outer().parts(), P.entries(), Q.entries()});
        if (!ok) break;
      }
      ok = ok && seen.size() == all_permutations(n).size();
    }
    rep.cases.push_back(make_flag_case("rsk-descents-bijection", ok, {{"n_max", 5}}, {{"n_max", 5}}));
  }

  // Serialization round-trips, byte-exact.
  {
    bool ok = true;
    const EvalContext ctx{3, 7};
    const PairContext pctx{2, 2, 7};
    for (int i = 0; i < 40 && ok; ++i) {
      const TruncPoly f = random_poly<TruncPoly>(rng, ctx, 3, 4);
      const SignedTruncPoly g = random_poly<SignedTruncPoly>(rng, ctx, 6, 3);
      const PairTruncPoly h = random_poly<PairTruncPoly>(rng, pctx, 4, 3);
      ok = ok && trunc_poly_from_json(to_json(f)) == f;
      ok = ok && signed_poly_from_json(to_json(g)) == g;
      ok = ok && pair_poly_from_json(to_json(h)) == h;
      ok = ok && dump_canonical(to_json(trunc_poly_from_json(to_json(f)))) == dump_canonical(to_json(f));
    }
    rep.cases.push_back(make_flag_case("serialization-roundtrip", ok, {{"cases", 40}}, {{"cases", 40}}));
  }
  return finalize(std::move(rep), start);
}

std::vector<std::string> suite_names() {
  return {"thm-sg", "thm-sl", "theta", "cauchy", "product", "coproduct", "order-free",
          "gessel", "stembridge", "det-h", "qn-routes", "ranks", "all"};
}

VerificationReport run_suite(const std::string& name, const VerifyBounds& b) {
  if (name == "thm-sg") return verify_thm_sg(b);
  if (name == "thm-sl") return verify_thm_sl(b);
  if (name == "theta") return verify_theta(b);
  if (name == "cauchy") return verify_cauchy(b);
  if (name == "product") return verify_product(b);
  if (name == "coproduct") return verify_coproduct(b);
  if (name == "order-free") return verify_order_free(b);
  if (name == "gessel") return verify_gessel(b);
  if (name == "stembridge") return verify_stembridge(b);
  if (name == "det-h") return verify_det_h(b);
  if (name == "qn-routes") return verify_qn_routes(b);
  if (name == "ranks") return verify_ranks(b);
  if (name == "all") {
    const auto start = Clock::now();
    VerificationReport all;
    all.suite = "all";
    all.params = {{"seed", b.seed}};
    for (const std::string& s : suite_names()) {
      if (s == "all") continue;
      VerificationReport r = run_suite(s, b);
      for (CaseResult& c : r.cases) {
        c.id = s + "/" + c.id;
        all.cases.push_back(std::move(c));
      }
    }
    return finalize(std::move(all), start);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace qhl
