// Copyright 2026 The purecav Authors
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


// Acceptance suite: one check per numbered criterion, tolerances fixed here.

#ifndef PURECAV_ACCEPTANCE_HPP
#define PURECAV_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace purecav {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id);

/// Runs the listed criteria (all when empty) in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int> &ids = {});

}  // namespace purecav

#endif
