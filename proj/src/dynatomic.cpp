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

#include "dynatome/dynatomic.hpp"

#include <string>

#include "dynatome/exact_ops.hpp"

namespace dynatome {

ParamFamily::ParamFamily(FamilyKind kind, ParamPoly poly, std::string symbol)
    : kind_(kind), poly_(std::move(poly)), symbol_(std::move(symbol))
{
    if (poly_.degree() < 2 || !poly_.is_monic())
        throw error(errc::bad_param, "a family must be monic of degree >= 2 in z");
}

ParamFamily ParamFamily::unicritical(int d)
{
    if (d < 2)
        throw error(errc::bad_param, "unicritical family needs d >= 2");
    std::vector<IntPoly> c(static_cast<std::size_t>(d + 1));
    c[0] = int_poly({0, 1});
    c.back() = IntPoly(1);
    return {FamilyKind::unicritical, ParamPoly::from_coeffs(std::move(c)), "c"};
}

ParamFamily ParamFamily::symcubic() { return {FamilyKind::symcubic, param_poly({{0}, {0, 1}, {0}, {1}}), "a"}; }

ParamFamily ParamFamily::custom(ParamPoly f, std::string param_symbol)
{
    return {FamilyKind::custom, std::move(f), std::move(param_symbol)};
}

std::string ParamFamily::id() const
{
    switch (kind_) {
    case FamilyKind::unicritical:
        return "unicritical(" + std::to_string(degree()) + ")";
    case FamilyKind::symcubic:
        return "symcubic";
    case FamilyKind::custom:
        break;
    }
    return "custom";
}

int mobius(long n)
{
    if (n < 1)
        throw error(errc::bad_param, "mobius needs n >= 1");
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

long euler_phi(long n)
{
    if (n < 1)
        throw error(errc::bad_param, "euler_phi needs n >= 1");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::vector<long> divisors(long n)
{
    if (n < 1)
        throw error(errc::bad_param, "divisors needs n >= 1");
    std::vector<long> out;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0)
            out.push_back(k);
    return out;
}

Integer nu(int d, int n)
{
    if (d < 2 || n < 1)
        throw error(errc::bad_param, "nu needs d >= 2 and n >= 1");
    Integer total = 0;
    for (long k : divisors(n))
        total += mobius(n / k) * ipow(d, static_cast<unsigned long>(k));
    if (!mpz_divisible_ui_p(total.get_mpz_t(), static_cast<unsigned long>(n)))
        throw error(errc::internal, "n does not divide nu(n)");
    return total;
}

namespace {

void check_size(const ParamFamily &fam, int n, const Options &opts)
{
    if (n < 1)
        throw error(errc::bad_param, "period must be >= 1");
    Integer size = ipow(fam.degree(), static_cast<unsigned long>(n));
    if (size > Integer(static_cast<unsigned long>(opts.degree_cap)))
        throw error(errc::size_limit, "degree " + to_string(size) + " exceeds the cap " +
                                          std::to_string(opts.degree_cap));
}

ParamPoly z_poly() { return param_poly({{0}, {1}}); }

} // namespace

ParamPoly iterate(const ParamFamily &fam, int n, const Options &opts)
{
    check_size(fam, n, opts);
    ParamPoly g = fam.poly();
    for (int k = 1; k < n; ++k)
        g = fam.poly().compose(g);
    return g;
}

ParamPoly dynatomic_poly(const ParamFamily &fam, int n, const Options &opts)
{
    check_size(fam, n, opts);
    ParamPoly num(IntPoly(1)), den(IntPoly(1));
    ParamPoly g = fam.poly();
    for (int k = 1; k <= n; ++k) {
        if (k > 1)
            g = fam.poly().compose(g);
        if (n % k != 0)
            continue;
        const int mu = mobius(n / k);
        if (mu == 1)
            num *= g - z_poly();
        else if (mu == -1)
            den *= g - z_poly();
    }
    auto q = exact_div(num, den);
    if (!q)
        throw error(errc::internal, "Moebius quotient for the dynatomic polynomial is not exact");
    return std::move(*q);
}

IntPoly cyclotomic(long l)
{
    if (l < 1)
        throw error(errc::bad_param, "cyclotomic needs l >= 1");
    std::vector<Integer> c(static_cast<std::size_t>(l + 1), Integer(0));
    c[0] = -1;
    c.back() = 1;
    IntPoly p = IntPoly::from_coeffs(std::move(c));
    for (long k : divisors(l))
        if (k < l)
            p = exact_divide(p, cyclotomic(k));
    return p;
}

} // namespace dynatome
