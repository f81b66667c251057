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

#include <string_view>

namespace dgdd {

// Outcome of one machine-checked claim.
enum class ClaimStatus { kPass, kFail, kFlaggedTypo, kSkippedScale };

constexpr std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kFlaggedTypo: return "flagged-typo";
    case ClaimStatus::kSkippedScale: return "skipped-scale";
  }
  return "?";
}

}  // namespace dgdd
