#pragma once

// The acceptance checks, shared by `gogkit verify all` and the acceptance
// test binary. Each check runs against the shipped fixtures with fixed
// seeds, sample counts and time limits.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gogkit {

  struct CheckResult {
    int         id;
    std::string name;
    bool        pass    = true;
    bool        skipped = false;
    std::size_t cases   = 0;
    std::size_t failures = 0;
    double      seconds = 0;
    double      limit   = 0;
    std::string detail;
  };

  struct VerifyOptions {
    // Restrict to checks touching this fixture (case-insensitive name).
    std::optional<std::string> fixture;
    unsigned                   seed = 20240601;
  };

  CheckResult check_derivation_law(VerifyOptions const& o = {});
  CheckResult check_gluing(VerifyOptions const& o = {});
  CheckResult check_kernel(VerifyOptions const& o = {});
  CheckResult check_vertex_derivation(VerifyOptions const& o = {});
  CheckResult check_tree_axioms(VerifyOptions const& o = {});
  CheckResult check_fixed_points(VerifyOptions const& o = {});
  CheckResult check_malnormality(VerifyOptions const& o = {});
  CheckResult check_surgery(VerifyOptions const& o = {});
  CheckResult check_separation(VerifyOptions const& o = {});
  CheckResult check_complement_functional(VerifyOptions const& o = {});

  std::vector<CheckResult> verify_all(VerifyOptions const& o = {});

  // "PASS [n] name: detail (cases, failures, seconds / limit)".
  std::string format_result(CheckResult const& r);

}  // namespace gogkit
