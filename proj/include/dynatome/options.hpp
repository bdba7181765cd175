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

#ifndef DYNATOME_OPTIONS_HPP
#define DYNATOME_OPTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>

#include "dynatome/integer.hpp"

namespace dynatome {

struct Options {
    /// Worker threads for evaluation grids and exhaustive searches. Results
    /// never depend on this value.
    unsigned threads = 1;
    /// Largest admissible d^n when iterating a family.
    std::size_t degree_cap = 100'000;
    /// Trial-division bound for squarefree parts.
    std::uint64_t trial_bound = default_trial_bound;
};

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index is
/// handled exactly once; callers write into per-index slots.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn);

} // namespace dynatome

#endif
