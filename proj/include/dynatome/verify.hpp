/*
   Copyright 2026 The dynatome Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DYNATOME_VERIFY_HPP
#define DYNATOME_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dynatome/classify.hpp"
#include "dynatome/numeric.hpp"

namespace dynatome {

struct VerifyOptions {
    Options exact;
    NumericOptions numeric;
    std::int64_t descent_bound = 20;
    std::int64_t descent_rational_bound = 400;
    long sandwich_bound = 10'000;
    long d3_height = 100;
    int random_samples = 200;
    long random_height = 30;
    std::uint64_t seed = 20260101;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<NamedCheck> checks;
    double seconds = 0;
    double budget_seconds = 0;
    bool checks_pass() const;
    bool within_budget() const { return seconds < budget_seconds; }
    bool pass() const { return checks_pass() && within_budget(); }
};

inline constexpr int criterion_count = 7;

/// Runs one acceptance criterion (1..7). Library errors inside a criterion
/// are recorded as failed checks.
CriterionResult run_criterion(int id, const VerifyOptions &opts = {});
std::vector<CriterionResult> run_all_criteria(const VerifyOptions &opts = {});

/// Rationals p/q in lowest terms with max(|p|, q) <= h, ascending.
std::vector<Rational> rationals_of_height(long h);

} // namespace dynatome

#endif
