#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ytab/rng.hpp"

namespace ytab {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The invariant suite behind `verify`: exact corner law, mixture identity,
/// g polynomials, validators, sampler validity and agreement, limit-shape
/// numerics, reference tables and determinism. Sizes are kept small enough
/// to finish in well under a minute.
std::vector<VerifyCheck> run_invariant_suite(const SeedSpec& seed);

nlohmann::json to_json(const std::vector<VerifyCheck>& checks);

}  // namespace ytab
