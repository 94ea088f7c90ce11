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

#ifndef ADAPTPLAY_VERIFY_H_
#define ADAPTPLAY_VERIFY_H_

#include <string>
#include <utility>
#include <vector>

#include "adaptplay/kernels.h"

namespace adaptplay {

// Outcome of one acceptance criterion with the values it was judged on.
struct CriterionResult {
  std::string suite;
  std::string id;
  std::string title;
  bool passed = false;
  bool primary = true;
  std::vector<std::pair<std::string, double>> measured;
  std::string note;
};

struct VerifyOptions {
  ExecPolicy policy = ExecPolicy::kSerial;
  // Negative control: feeds a decreasing rate series to the monotone-rate
  // check, which must then fail.
  bool tamper_rates = false;
};

// Suite names accepted by RunVerify: geometry, template, regret,
// convergence, figure, equivalence, invariants, all.
std::vector<std::string> SuiteNames();

// Runs the selected suite (or a single criterion id). Simulations shared by
// several criteria run once per call. Throws ConfigError on unknown names.
std::vector<CriterionResult> RunVerify(const std::string& selector,
                                       const VerifyOptions& options = {});

// One JSON object per line.
std::string FormatResultJson(const CriterionResult& result);
// "PASS <id>: <title> [key=value ...]".
std::string FormatResultLine(const CriterionResult& result);

}  // namespace adaptplay

#endif  // ADAPTPLAY_VERIFY_H_
