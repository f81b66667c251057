// Copyright 2026 The dgdd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Machine-checked claim catalog. Each claim belongs to a group (selectable
// with `only`) and to one numbered acceptance criterion.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dgdd/claim_status.hpp"

namespace dgdd {

struct VerifyOptions {
  // Group names or claim ids; empty selects everything.
  std::vector<std::string> only;
  int threads = 1;
  std::uint64_t max_elements = 5'000'000;
  int property_cases = 1000;
  std::uint64_t seed = 0x5eed2026;
};

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::kFail;
  std::string details;
};

struct Claim {
  std::string id;
  std::string group;
  int criterion = 0;
  std::string description;
  std::function<ClaimOutcome(const VerifyOptions&)> run;
};

struct ClaimResult {
  std::string id;
  std::string group;
  int criterion = 0;
  std::string description;
  ClaimStatus status = ClaimStatus::kFail;
  std::string details;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<ClaimResult> results;

  int count(ClaimStatus s) const;
  // No claim failed (flagged-typo and skipped-scale do not count).
  bool ok() const { return count(ClaimStatus::kFail) == 0; }
};

const std::vector<Claim>& claim_catalog();
std::vector<std::string> claim_groups();

// Throws DomainError when an `only` entry matches no group or claim.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace dgdd
