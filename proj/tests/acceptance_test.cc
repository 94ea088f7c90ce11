// Copyright 2026 The adaptplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs every acceptance criterion and prints one line per primary criterion.
//
// Criteria listed in kKnownFailures are expected to fail; see README.md. The
// test fails if any other primary criterion fails or if a listed one passes.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>

#include "adaptplay/verify.h"

namespace {

const std::set<std::string> kKnownFailures = {"dichotomy"};

}  // namespace

int main() {
  int unexpected = 0;
  for (const adaptplay::CriterionResult& r : adaptplay::RunVerify("all")) {
    if (!r.primary) continue;
    const bool known = kKnownFailures.count(r.id) > 0;
    std::cout << adaptplay::FormatResultLine(r);
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    if (known) std::cout << (r.passed ? " [listed as known failure]" : " [known failure]");
    std::cout << std::endl;
    if (r.passed == known) ++unexpected;
  }
  std::cout << (unexpected ? "acceptance: unexpected outcomes: " : "acceptance: ok")
            << (unexpected ? std::to_string(unexpected) : "") << std::endl;
  return unexpected ? 1 : 0;
}
