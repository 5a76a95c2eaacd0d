#pragma once

#include <string>

#include <json.hpp>

#include "qhl/poly.hpp"

namespace qhl {

/// Canonical JSON for polynomials:
///   {"context":{"D":d,"m":m},"terms":[{"coeff":[c0,c1,...],"exp":[e0,...]},...]}
/// Terms are emitted in graded-lex order; coeff arrays list Z[q] coefficients
/// low degree first; integers that do not fit in 64 bits are emitted as
/// decimal strings. Keys are sorted, so dumps are byte-deterministic.
nlohmann::json to_json(const QCoeff& c);
nlohmann::json to_json(const TruncPoly& f);
nlohmann::json to_json(const SignedTruncPoly& f);
nlohmann::json to_json(const PairTruncPoly& f);

QCoeff qcoeff_from_json(const nlohmann::json& j);
TruncPoly trunc_poly_from_json(const nlohmann::json& j);
SignedTruncPoly signed_poly_from_json(const nlohmann::json& j);
PairTruncPoly pair_poly_from_json(const nlohmann::json& j);

std::string dump_canonical(const nlohmann::json& j);

/// FNV-1a 64-bit digest of the canonical dump, as fixed-width hex.
/// Stable across platforms; used to make verification reports diffable.
std::string digest(const nlohmann::json& j);

}  // namespace qhl
