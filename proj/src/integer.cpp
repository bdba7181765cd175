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

#include "dynatome/integer.hpp"

#include <string>

#include "dynatome/error.hpp"

namespace dynatome {

std::string_view errc_name(errc code) noexcept
{
    switch (code) {
    case errc::not_divisible: return "NotDivisible";
    case errc::not_a_power: return "NotAPower";
    case errc::factorization_too_large: return "FactorizationTooLarge";
    case errc::size_limit: return "SizeLimit";
    case errc::degenerate_degree: return "DegenerateDegree";
    case errc::wrong_family: return "WrongFamily";
    case errc::bad_param: return "BadParam";
    case errc::div_by_zero: return "DivByZero";
    case errc::non_convergence: return "NonConvergence";
    case errc::mismatched_count: return "MismatchedCount";
    case errc::internal: return "InternalError";
    }
    return "Unknown";
}

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw error(errc::div_by_zero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0)
        throw error(errc::bad_param, "not an integer: '" + std::string(text) + "'");
    return x;
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer &x) { return x.get_str(10); }

std::string to_string(const Rational &x)
{
    return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

Integer isqrt(const Integer &x)
{
    if (x < 0)
        throw error(errc::bad_param, "isqrt of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

std::optional<Integer> exact_sqrt(const Integer &x)
{
    if (x < 0)
        return std::nullopt;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
    if (rem != 0)
        return std::nullopt;
    return r;
}

std::optional<Rational> is_rational_square(const Rational &q)
{
    auto num = exact_sqrt(q.get_num());
    if (!num)
        return std::nullopt;
    auto den = exact_sqrt(q.get_den());
    if (!den)
        return std::nullopt;
    return Rational(*num, *den);
}

Integer height(const Rational &x)
{
    Integer p = abs(x.get_num());
    return p > x.get_den() ? p : Integer(x.get_den());
}

SquarefreeSplit squarefree_part(const Integer &n, std::uint64_t trial_bound)
{
    if (n == 0)
        throw error(errc::bad_param, "squarefree_part of zero");
    Integer m = abs(n);
    Integer a = 1;
    Integer r = 1;
    bool exhausted = true;
    // Odd trial divisors after 2; composite divisors never divide m because
    // their prime factors were removed earlier.
    for (std::uint64_t d = 2; d <= trial_bound; d = (d == 2 ? 3 : d + 2)) {
        Integer dd(static_cast<unsigned long>(d));
        if (dd * dd > m) {
            exhausted = false;
            break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2)
            r *= dd;
        if (e % 2 == 1)
            a *= dd;
    }
    if (m != 1) {
        if (!exhausted) {
            a *= m; // m is prime
        } else if (auto s = exact_sqrt(m)) {
            r *= *s;
        } else {
            Integer b(static_cast<unsigned long>(trial_bound));
            if (m < b * b * b)
                a *= m;
            else
                throw error(errc::factorization_too_large,
                            "cofactor " + to_string(m) + " has no prime factor below the trial bound " +
                                std::to_string(trial_bound));
        }
    }
    if (n < 0)
        a = -a;
    return {a, r};
}

Integer ipow(const Integer &base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rpow(const Rational &base, long exp)
{
    if (exp < 0) {
        if (base == 0)
            throw error(errc::div_by_zero, "negative power of zero");
        Rational inv = 1 / base;
        return rpow(inv, -exp);
    }
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp)),
               ipow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

} // namespace dynatome
