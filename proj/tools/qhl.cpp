#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qhl/partitions.hpp"
#include "qhl/permutations.hpp"
#include "qhl/poly_json.hpp"
#include "qhl/posets.hpp"
#include "qhl/quasisym.hpp"
#include "qhl/symmetric.hpp"
#include "qhl/verify.hpp"

namespace {

// Re-raise parse failures with the flag name in front, so usage errors
// always point at the offending option.
template <class Fn>
auto named(const char* flag, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

qhl::Permutation parse_permutation(const std::string& word) {
  std::istringstream is(word);
  std::vector<int> vals;
  int v;
  while (is >> v) vals.push_back(v);
  return qhl::Permutation(std::move(vals));
}

std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  return out;
}

qhl::TotalSignedOrder make_order(const std::string& name, int m) {
  if (name == "standard") return qhl::TotalSignedOrder::standard(m);
  if (name == "sign-swapped") return qhl::TotalSignedOrder::sign_swapped(m);
  if (name == "negatives-first") return qhl::TotalSignedOrder::negatives_first(m);
  throw std::invalid_argument("--order must be standard, sign-swapped or negatives-first");
}

void emit(const nlohmann::json& j, bool text, const std::string& pretty) {
  if (text)
    std::cout << pretty << "\n";
  else
    std::cout << qhl::dump_canonical(j) << "\n";
}

struct ComputeCommon {
  int m = 2;
  int D = 4;
  long at_q = 0;
  bool has_at_q = false;
  bool text = false;
};

void add_common(CLI::App* cmd, ComputeCommon& c) {
  cmd->add_option("--m", c.m, "visible variables per alphabet")->check(CLI::PositiveNumber);
  cmd->add_option("--D", c.D, "total-degree truncation cap")->check(CLI::PositiveNumber);
  cmd->add_option("--at-q", c.at_q, "specialize q to this integer")
      ->each([&c](const std::string&) { c.has_at_q = true; });
  cmd->add_flag("--text", c.text, "human-readable output instead of canonical JSON");
}

void emit_poly(qhl::TruncPoly f, const ComputeCommon& c) {
  if (c.has_at_q) f = f.specialize_q(c.at_q);
  emit(qhl::to_json(f), c.text, qhl::to_string(f));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhl: exact computations and identity verification for "
               "q-fundamental quasisymmetric and Hall-Littlewood S-functions"};
  app.require_subcommand(1);

  // ---- compute -------------------------------------------------------
  CLI::App* compute = app.add_subcommand("compute", "print one polynomial as canonical JSON");
  compute->require_subcommand(1);

  ComputeCommon qn_c;
  int qn_n = 0;
  CLI::App* qn_cmd = compute->add_subcommand("qn", "Hall-Littlewood generator q_n(X;-q)");
  qn_cmd->add_option("--n", qn_n, "index n")->required();
  add_common(qn_cmd, qn_c);

  ComputeCommon s_c;
  std::string s_shape;
  CLI::App* s_cmd = compute->add_subcommand("S", "Hall-Littlewood S-function S_{shape}(X;-q)");
  s_cmd->add_option("--shape", s_shape, "skew shape, e.g. 6,4,2,1,1/2,1")->required();
  add_common(s_cmd, s_c);

  ComputeCommon l_c;
  int l_n = 0;
  std::string l_subset;
  CLI::App* l_cmd = compute->add_subcommand("L", "q-fundamental L^(q)_{n,I}");
  l_cmd->add_option("--n", l_n, "degree n")->required();
  l_cmd->add_option("--I", l_subset, "descent subset of [n-1], e.g. \"1,3\" (empty for {})");
  add_common(l_cmd, l_c);

  ComputeCommon schur_c;
  std::string schur_shape;
  CLI::App* schur_cmd = compute->add_subcommand("schur", "skew Schur polynomial");
  schur_cmd->add_option("--shape", schur_shape, "skew shape")->required();
  add_common(schur_cmd, schur_c);

  ComputeCommon hn_c;
  int hn_n = 0;
  std::string hn_order = "standard";
  CLI::App* hn_cmd = compute->add_subcommand("Hn", "signed-alphabet series H_n");
  hn_cmd->add_option("--n", hn_n, "index n")->required();
  hn_cmd->add_option("--order", hn_order, "total order on the signed alphabet");
  add_common(hn_cmd, hn_c);

  ComputeCommon gamma_c;
  std::string gamma_shape, gamma_perm, gamma_poset;
  std::string gamma_order = "standard";
  bool gamma_signed = false;
  CLI::App* gamma_cmd = compute->add_subcommand("gamma", "enriched P-partition generating function");
  auto* opt_shape = gamma_cmd->add_option("--shape", gamma_shape, "skew shape poset");
  auto* opt_perm = gamma_cmd->add_option("--perm", gamma_perm, "chain poset of a permutation, e.g. \"2 3 1\"");
  auto* opt_poset = gamma_cmd->add_option("--poset", gamma_poset, "poset fixture file");
  opt_shape->excludes(opt_perm)->excludes(opt_poset);
  opt_perm->excludes(opt_poset);
  gamma_cmd->add_option("--order", gamma_order, "total order on the signed alphabet");
  gamma_cmd->add_flag("--signed", gamma_signed, "emit the signed lift Gamma^pm instead of Gamma^q");
  add_common(gamma_cmd, gamma_c);

  // ---- verify / selftest ----------------------------------------------
  qhl::VerifyBounds bounds;
  std::string suite;
  bool verify_text = false;
  CLI::App* verify = app.add_subcommand("verify", "run an identity suite and report per-case results");
  verify->add_option("suite", suite, "one of: thm-sg thm-sl theta cauchy product coproduct "
                                     "order-free gessel stembridge det-h qn-routes ranks all")
      ->required();
  auto* opt_mo = verify->add_option("--max-outer", bounds.max_outer, "bound on |lambda|");
  verify->add_option("--m", bounds.m, "visible variables");
  verify->add_option("--D", bounds.D, "degree cap");
  verify->add_option("--n-max", bounds.n_max, "degree bound for cauchy/coproduct/ranks");
  verify->add_option("--mx", bounds.mx, "X-alphabet size for two-alphabet suites");
  verify->add_option("--my", bounds.my, "Y-alphabet size for two-alphabet suites");
  verify->add_option("--seed", bounds.seed, "seed for randomized spot checks");
  verify->add_flag("--text", verify_text, "pretty text report instead of canonical JSON");

  uint64_t selftest_seed = 1;
  bool selftest_text = false;
  CLI::App* st = app.add_subcommand("selftest", "module invariants at minimal sizes");
  st->add_option("--seed", selftest_seed, "seed");
  st->add_flag("--text", selftest_text, "pretty text report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (qn_cmd->parsed()) {
      emit_poly(qhl::hl_qn(qn_n, {qn_c.m, qn_c.D}), qn_c);
    } else if (s_cmd->parsed()) {
      auto shape = named("--shape", [&] { return qhl::SkewShape::parse(s_shape); });
      emit_poly(qhl::hl_s_skew(shape, {s_c.m, s_c.D}), s_c);
    } else if (l_cmd->parsed()) {
      auto idx = named("--I", [&] { return qhl::SubsetDescent(l_n, parse_subset(l_subset)); });
      emit_poly(qhl::l_q_closed(idx, {l_c.m, l_c.D}), l_c);
    } else if (schur_cmd->parsed()) {
      auto shape = named("--shape", [&] { return qhl::SkewShape::parse(schur_shape); });
      emit_poly(qhl::schur(shape, {schur_c.m, schur_c.D}), schur_c);
    } else if (hn_cmd->parsed()) {
      qhl::RelationR r(named("--order", [&] { return make_order(hn_order, hn_c.m); }));
      qhl::SignedTruncPoly h = qhl::h_signed(hn_n, r, {hn_c.m, hn_c.D});
      if (hn_c.has_at_q) h = h.specialize_q(hn_c.at_q);
      emit(qhl::to_json(h), hn_c.text, qhl::to_string(h));
    } else if (gamma_cmd->parsed()) {
      qhl::EvalContext ctx{gamma_c.m, gamma_c.D};
      qhl::TotalSignedOrder order = named("--order", [&] { return make_order(gamma_order, ctx.m); });
      qhl::LabelledWeightedPoset poset = [&] {
        if (opt_shape->count())
          return named("--shape", [&] { return qhl::skew_poset(qhl::SkewShape::parse(gamma_shape)); });
        if (opt_perm->count())
          return named("--perm", [&] { return qhl::chain_poset(parse_permutation(gamma_perm)); });
        if (opt_poset->count()) {
          std::ifstream in(gamma_poset);
          if (!in) throw std::invalid_argument("--poset: cannot open '" + gamma_poset + "'");
          std::ostringstream buf;
          buf << in.rdbuf();
          return named("--poset", [&] { return qhl::LabelledWeightedPoset::parse(buf.str()); });
        }
        throw std::invalid_argument("gamma needs one of --shape, --perm, --poset");
      }();
      if (gamma_signed) {
        qhl::SignedTruncPoly g = qhl::gamma_pm(poset, ctx, order);
        if (gamma_c.has_at_q) g = g.specialize_q(gamma_c.at_q);
        emit(qhl::to_json(g), gamma_c.text, qhl::to_string(g));
      } else {
        emit_poly(qhl::gamma_q(poset, ctx, order), gamma_c);
      }
    } else if (verify->parsed()) {
      if (opt_mo->count()) bounds.max_outer_sl = bounds.max_outer;
      qhl::VerificationReport rep = qhl::run_suite(suite, bounds);
      if (verify_text)
        std::cout << rep.to_text();
      else
        std::cout << qhl::dump_canonical(rep.to_json()) << "\n";
      std::cerr << "suite " << rep.suite << ": " << rep.cases.size() << " cases, "
                << rep.failed_count() << " failed, " << rep.elapsed_seconds << "s\n";
      return rep.pass() ? 0 : 1;
    } else if (st->parsed()) {
      qhl::VerificationReport rep = qhl::selftest(selftest_seed);
      if (selftest_text)
        std::cout << rep.to_text();
      else
        std::cout << qhl::dump_canonical(rep.to_json()) << "\n";
      return rep.pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
