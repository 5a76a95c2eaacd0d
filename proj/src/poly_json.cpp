#include "qhl/poly_json.hpp"

#include <cstdint>
#include <stdexcept>

namespace qhl {

namespace {

nlohmann::json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return nlohmann::json(static_cast<int64_t>(v.get_si()));
  return nlohmann::json(v.get_str());
}

mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("polynomial JSON: coefficient entries must be integers or decimal strings");
}

template <class Poly>
nlohmann::json terms_to_json(const Poly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::json t;
    t["exp"] = e;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

template <class Poly>
void terms_from_json(const nlohmann::json& j, Poly& f) {
  for (const auto& t : j.at("terms")) {
    ExpVec exp = t.at("exp").get<ExpVec>();
    f.add_term(std::move(exp), qcoeff_from_json(t.at("coeff")));
  }
}

}  // namespace

nlohmann::json to_json(const QCoeff& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : c.coeffs()) arr.push_back(mpz_to_json(v));
  return arr;
}

QCoeff qcoeff_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("QCoeff JSON: expected an array");
  std::vector<mpz_class> coeffs;
  coeffs.reserve(j.size());
  for (const auto& v : j) coeffs.push_back(mpz_from_json(v));
  return QCoeff(std::move(coeffs));
}

nlohmann::json to_json(const TruncPoly& f) {
  nlohmann::json j;
  j["context"] = {{"m", f.context().m}, {"D", f.context().D}};
  j["terms"] = terms_to_json(f);
  return j;
}

nlohmann::json to_json(const SignedTruncPoly& f) {
  nlohmann::json j;
  j["context"] = {{"m", f.context().m}, {"D", f.context().D}};
  j["terms"] = terms_to_json(f);
  return j;
}

nlohmann::json to_json(const PairTruncPoly& f) {
  nlohmann::json j;
  j["context"] = {{"mx", f.context().mx}, {"my", f.context().my}, {"D", f.context().D}};
  j["terms"] = terms_to_json(f);
  return j;
}

TruncPoly trunc_poly_from_json(const nlohmann::json& j) {
  EvalContext ctx{j.at("context").at("m").get<int>(), j.at("context").at("D").get<int>()};
  TruncPoly f(ctx);
  terms_from_json(j, f);
  return f;
}

SignedTruncPoly signed_poly_from_json(const nlohmann::json& j) {
  EvalContext ctx{j.at("context").at("m").get<int>(), j.at("context").at("D").get<int>()};
  SignedTruncPoly f(ctx);
  terms_from_json(j, f);
  return f;
}

PairTruncPoly pair_poly_from_json(const nlohmann::json& j) {
  PairContext ctx{j.at("context").at("mx").get<int>(), j.at("context").at("my").get<int>(),
                  j.at("context").at("D").get<int>()};
  PairTruncPoly f(ctx);
  terms_from_json(j, f);
  return f;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(); }

std::string digest(const nlohmann::json& j) {
  const std::string s = dump_canonical(j);
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace qhl
