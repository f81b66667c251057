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

// Prints one PASS/FAIL line per acceptance criterion. A criterion passes when
// none of its claims fail and it finishes inside its time budget.

#include <array>
#include <cstdio>
#include <string>

#include "dgdd/verify.hpp"

namespace {

struct Criterion {
  const char* title;
  double budget_seconds;
};

constexpr std::array<Criterion, 12> kCriteria{{
    {"Alegre digraph has diameter 4", 1.0},
    {"Example 5 CDD reproduces the Alegre companion", 1.0},
    {"Shift isomorphism applied twice", 1.0},
    {"Hoffman-Singleton groupoid digraph", 5.0},
    {"Groupoid tables of examples 1 and 2", 1.0},
    {"Alegre covering group and its relations", 60.0},
    {"Example 8 digraph and line digraph of Alegre", 60.0},
    {"Example 9 group order and diameter", 10.0},
    {"Six-vertex diameter-two classes", 10.0},
    {"Twelve-vertex diameter-three classes", 600.0},
    {"Wreath product generators", 120.0},
    {"Randomised property suites", 600.0},
}};

}  // namespace

int main() {
  dgdd::VerifyOptions options;
  const dgdd::VerifyReport report = dgdd::run_verify(options);

  int failures = 0;
  for (std::size_t k = 0; k < kCriteria.size(); ++k) {
    const int criterion = static_cast<int>(k) + 1;
    int claims = 0;
    int flagged = 0;
    int skipped = 0;
    double seconds = 0.0;
    std::string failed;
    for (const auto& r : report.results) {
      if (r.criterion != criterion) continue;
      ++claims;
      seconds += r.seconds;
      switch (r.status) {
        case dgdd::ClaimStatus::kPass:
          break;
        case dgdd::ClaimStatus::kFlaggedTypo:
          ++flagged;
          break;
        case dgdd::ClaimStatus::kSkippedScale:
          ++skipped;
          break;
        case dgdd::ClaimStatus::kFail:
          failed += (failed.empty() ? "" : ", ") + r.id;
          break;
      }
    }
    const bool slow = seconds > kCriteria[k].budget_seconds;
    const bool pass = claims > 0 && failed.empty() && !slow;
    if (!pass) ++failures;
    std::printf("AC-%02d %s %s (%d claims, %d flagged-typo, %d skipped-scale, %.2fs)", criterion,
                pass ? "PASS" : "FAIL", kCriteria[k].title, claims, flagged, skipped, seconds);
    if (claims == 0) std::printf(" no claims registered");
    if (!failed.empty()) std::printf(" failed: %s", failed.c_str());
    if (slow) std::printf(" over budget of %.0fs", kCriteria[k].budget_seconds);
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
