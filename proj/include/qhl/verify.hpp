#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhl {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string left_digest;   // digest of the side computed by enumeration
  std::string right_digest;  // digest of the side computed by algebra
};

/// Result of one verification suite. The canonical JSON is byte-deterministic
/// for a fixed invocation (cases sorted by identifier, seed recorded, wall
/// time kept out of it); the text rendering adds timing for humans.
struct VerificationReport {
  std::string suite;
  nlohmann::json params;
  std::vector<CaseResult> cases;
  double elapsed_seconds = 0.0;

  bool pass() const;
  int failed_count() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Desk-scale bounds for the suites; verify_limits() documents the maxima
/// the harness refuses to exceed.
struct VerifyBounds {
  int max_outer = 5;     // |lambda| bound for skew-shape suites
  int max_outer_sl = 6;  // thm-sl runs a notch further by default
  int m = 4;
  int D = 6;
  int n_max = 4;  // degree bound for cauchy/coproduct/rank suites
  int mx = 3;
  int my = 3;
  uint64_t seed = 1;
};

struct VerifyLimits {
  int max_outer = 7;
  int m = 6;
  int D = 10;
  int n_max = 5;
};

VerifyLimits verify_limits();

/// Throws std::invalid_argument naming the offending bound and its maximum.
void check_bounds(const VerifyBounds& b);

VerificationReport verify_thm_sg(const VerifyBounds& b);
VerificationReport verify_thm_sl(const VerifyBounds& b);
VerificationReport verify_gessel(const VerifyBounds& b);
VerificationReport verify_stembridge(const VerifyBounds& b);
VerificationReport verify_theta(const VerifyBounds& b);
VerificationReport verify_cauchy(const VerifyBounds& b);
VerificationReport verify_product(const VerifyBounds& b);
VerificationReport verify_coproduct(const VerifyBounds& b);
VerificationReport verify_order_free(const VerifyBounds& b);
VerificationReport verify_det_h(const VerifyBounds& b);
VerificationReport verify_qn_routes(const VerifyBounds& b);
VerificationReport verify_ranks(const VerifyBounds& b);

/// Module-level invariants at minimal sizes: ring axioms, varpi homomorphism
/// (seeded, 200 cases), RSK bijectivity and descent preservation, JSON
/// round-trips.
VerificationReport selftest(uint64_t seed);

std::vector<std::string> suite_names();

/// Runs a named suite; "all" concatenates every suite with prefixed ids.
VerificationReport run_suite(const std::string& name, const VerifyBounds& b);

}  // namespace qhl
