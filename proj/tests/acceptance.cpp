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

#include <cstdio>

#include "dynatome/verify.hpp"

// One line per acceptance criterion; failed checks are listed below the line.
int main()
{
    dynatome::VerifyOptions opts;
    bool all = true;
    for (int id = 1; id <= dynatome::criterion_count; ++id) {
        const auto r = dynatome::run_criterion(id, opts);
        std::printf("criterion %d: %s  %s (%.2f s, budget %.0f s)\n", r.id, r.pass() ? "PASS" : "FAIL",
                    r.title.c_str(), r.seconds, r.budget_seconds);
        for (const auto &c : r.checks)
            if (!c.pass)
                std::printf("    failed: %s\n", c.name.c_str());
        std::fflush(stdout);
        all = all && r.pass();
    }
    return all ? 0 : 1;
}
