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

#ifndef DYNATOME_ERROR_HPP
#define DYNATOME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dynatome {

enum class errc {
    not_divisible,
    not_a_power,
    factorization_too_large,
    size_limit,
    degenerate_degree,
    wrong_family,
    bad_param,
    div_by_zero,
    non_convergence,
    mismatched_count,
    internal
};

std::string_view errc_name(errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can report it without parsing messages.
class error : public std::runtime_error {
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace dynatome

#endif
