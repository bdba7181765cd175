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

#ifndef DYNATOME_INTEGER_HPP
#define DYNATOME_INTEGER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dynatome {

// Canonical forms are maintained by GMP: no negative zero, and mpq_class keeps
// den > 0 with gcd(num, den) = 1 after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer &num, const Integer &den);
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer &x);
/// Always "p/q", also when q = 1.
std::string to_string(const Rational &x);

Integer isqrt(const Integer &x);
/// Returns the nonnegative square root when x is a perfect square.
std::optional<Integer> exact_sqrt(const Integer &x);
/// Returns r >= 0 with r^2 = q, if q is the square of a rational.
std::optional<Rational> is_rational_square(const Rational &q);

/// Height of p/q in lowest terms: max(|p|, q).
Integer height(const Rational &x);

struct SquarefreeSplit {
    Integer squarefree; // sign follows the input
    Integer root;       // > 0
};

inline constexpr std::uint64_t default_trial_bound = 1'000'000;

/// n = squarefree * root^2. Trial division by primes up to `trial_bound`; the
/// leftover cofactor m is classified exactly when m is a square or
/// m < trial_bound^3, otherwise factorization_too_large is raised.
SquarefreeSplit squarefree_part(const Integer &n, std::uint64_t trial_bound = default_trial_bound);

Integer ipow(const Integer &base, unsigned long exp);
Rational rpow(const Rational &base, long exp);

} // namespace dynatome

#endif
