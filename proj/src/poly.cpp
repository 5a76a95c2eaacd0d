#include "qhl/poly.hpp"

#include <sstream>

namespace qhl {

TruncPoly varpi(const SignedTruncPoly& f) {
  const EvalContext ctx = f.context();
  TruncPoly out(ctx);
  for (const auto& [e, c] : f.terms()) {
    ExpVec plain(static_cast<size_t>(ctx.m), 0);
    int neg_degree = 0;
    for (int k = 0; k < ctx.m; ++k) {
      plain[static_cast<size_t>(k)] = e[static_cast<size_t>(2 * k)] + e[static_cast<size_t>(2 * k + 1)];
      neg_degree += e[static_cast<size_t>(2 * k)];
    }
    out.add_term(std::move(plain), QCoeff::q_power(neg_degree) * c);
  }
  return out;
}

mpq_class eval_rational(const TruncPoly& f, const std::vector<mpq_class>& xs,
                        const mpq_class& q_value) {
  if (static_cast<int>(xs.size()) != f.context().m)
    throw std::invalid_argument("eval_rational: point arity must equal context m");
  mpq_class acc = 0;
  for (const auto& [e, c] : f.terms()) {
    mpq_class term = c.eval_rational(q_value);
    for (size_t i = 0; i < xs.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= xs[i];
    term.canonicalize();
    acc += term;
    acc.canonicalize();
  }
  return acc;
}

PairTruncPoly embed_x(const TruncPoly& f, const PairContext& ctx) {
  if (f.context().m != ctx.mx)
    throw std::invalid_argument("embed_x: f must live on exactly the X alphabet");
  PairTruncPoly out(ctx);
  for (const auto& [e, c] : f.terms()) {
    ExpVec exp(static_cast<size_t>(ctx.mx + ctx.my), 0);
    std::copy(e.begin(), e.end(), exp.begin());
    out.add_term(std::move(exp), c);
  }
  return out;
}

PairTruncPoly embed_y(const TruncPoly& f, const PairContext& ctx) {
  if (f.context().m != ctx.my)
    throw std::invalid_argument("embed_y: f must live on exactly the Y alphabet");
  PairTruncPoly out(ctx);
  for (const auto& [e, c] : f.terms()) {
    ExpVec exp(static_cast<size_t>(ctx.mx + ctx.my), 0);
    std::copy(e.begin(), e.end(), exp.begin() + ctx.mx);
    out.add_term(std::move(exp), c);
  }
  return out;
}

PairTruncPoly split_alphabet(const TruncPoly& f, const PairContext& ctx) {
  if (f.context().m != ctx.mx + ctx.my)
    throw std::invalid_argument("split_alphabet: slot counts must agree");
  PairTruncPoly out(ctx);
  for (const auto& [e, c] : f.terms()) out.add_term(e, c);
  return out;
}

namespace {

void append_factor(std::ostringstream& os, bool& any, const std::string& name, int exp) {
  if (exp == 0) return;
  if (any) os << "*";
  os << name;
  if (exp > 1) os << "^" << exp;
  any = true;
}

template <class Poly, class SlotName>
std::string render(const Poly& f, SlotName name) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    bool any = false;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) append_factor(mono, any, name(static_cast<int>(i)), e[i]);
    if (any) os << "*" << mono.str();
  }
  return os.str();
}

}  // namespace

std::string to_string(const TruncPoly& f, const std::string& var) {
  return render(f, [&](int slot) { return var + std::to_string(slot + 1); });
}

std::string to_string(const SignedTruncPoly& f) {
  return render(f, [](int slot) {
    int v = signed_var_of_slot(slot);
    return v > 0 ? "x" + std::to_string(v) : "x(" + std::to_string(v) + ")";
  });
}

std::string to_string(const PairTruncPoly& f) {
  const PairContext& c = f.context();
  return render(f, [&](int slot) {
    return slot < c.mx ? "x" + std::to_string(slot + 1) : "y" + std::to_string(slot - c.mx + 1);
  });
}

}  // namespace qhl
