#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace degcx {

// Randomized checks of the decomposition identities, one registry entry per
// identity. Every check rebuilds both sides independently (formula path
// versus direct computation on the assembled ideal) on seeded random
// instances, so a report with no failures is a machine check of the
// identity at desk scale.
struct VerifyOptions {
  std::uint64_t seed = 7;
  int instances = 200;
  int max_n = 8;
  int max_s = 3;
  int max_degree = 3;
};

struct VerifyFailure {
  std::string instance;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

struct VerifyReport {
  std::string theorem;
  std::uint64_t seed = 0;
  int instances = 0;
  std::vector<VerifyFailure> failures;
  std::map<std::string, std::string> notes;

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Registry ids in canonical order.
const std::vector<std::string>& verify_registry();

// Accepts a registry id or its descriptive alias; throws std::invalid_argument
// for anything else.
VerifyReport run_verify(const std::string& id, const VerifyOptions& opts = {});

}  // namespace degcx
