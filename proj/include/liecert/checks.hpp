#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecert/liealg.hpp"

namespace liecert {

/// One verdict of a named check. check_id is "<check>/<sub-check>"; status is
/// "pass", "fail" or "unknown" (inconclusive search, not a refutation).
struct CheckResult {
  std::string check_id;
  std::string status;
  std::string witness;
  unsigned seed = 0;

  bool operator==(const CheckResult& o) const {
    return check_id == o.check_id && status == o.status && witness == o.witness &&
           seed == o.seed;
  }
};

/// Parameters common to all checks. The optional n/m/r restrict a
/// parametrized check to a single instance; otherwise the check runs over its
/// default range clipped by max_rank.
struct CheckOptions {
  int max_rank = 6;
  std::optional<int> n;  // sl_n instances
  std::optional<int> m;  // sl_2m instances
  std::optional<int> r;  // so_2r instances
  std::string case_id;   // sing-level sub-case: v1, v1sq, v0, w1
  int degree_bound = 2;  // slice certificate search bound
  std::string natural_levels_path;  // empty: $LIECERT_DATA or data/
  unsigned seed = 0;     // base seed for sampling certificates
};

/// Registered check names ("all" is accepted by run_check but not listed).
std::vector<std::string> all_check_ids();

/// Runs one named check (or every check for id "all", concurrently, with the
/// merged results ordered by check_id). Throws std::invalid_argument on an
/// unknown id.
std::vector<CheckResult> run_check(const std::string& id, const CheckOptions& opt);

/// Jacobi identity and invariant-form compatibility over all basis triples.
/// Exposed separately so a deliberately corrupted copy of the structure
/// constants can be fed in (mutation smoke test).
bool jacobi_identity_ok(const LieAlgebra& g);

}  // namespace liecert
