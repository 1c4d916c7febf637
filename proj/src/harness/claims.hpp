#pragma once

// Claim evaluators, one per claim kind. Private to the harness.

#include "cubtors/harness.hpp"

namespace cubtors::harness::detail {

struct Outcome {
  Status status = Status::Fail;
  json computed;
};

/// Evaluates a claim; library errors propagate to the caller.
Outcome evaluate(const Catalog& catalog, const ClaimRecord& claim, const RunConfig& config);

/// Q(r) for a root r of a monic rational cubic, built from the integral
/// polynomial of s*r for the least s making it integral; returns the field
/// and r as an element of it.
std::pair<FieldRef, FieldElement> field_of_root(const QPoly& monic_cubic, const std::string& label);

}  // namespace cubtors::harness::detail
