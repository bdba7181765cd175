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

#include "dynatome/disc_factor.hpp"

#include "dynatome/exact_ops.hpp"
#include "dynatome/resultant.hpp"

namespace dynatome {

IntPoly delta_n(const MultiplierPoly &m, const Options &opts)
{
    if (m.poly.degree() < 1)
        throw error(errc::degenerate_degree, "multiplier polynomial has degree < 1 in lambda");
    return discriminant_x(m.poly, opts);
}

IntPoly delta_n(const ParamFamily &fam, int n, const Options &opts)
{
    return delta_n(multiplier_poly(fam, n, opts), opts);
}

IntPoly p_kl(const MultiplierPoly &m_k, long l, const Options &opts)
{
    if (l < 2)
        throw error(errc::bad_param, "P_{k,l} needs l >= 2");
    return resultant_x(lift_constant(cyclotomic(l)), m_k.poly, opts);
}

IntPoly p_kl(const ParamFamily &fam, int k, long l, const Options &opts)
{
    if (k < 1)
        throw error(errc::bad_param, "P_{k,l} needs k >= 1");
    return p_kl(multiplier_poly(fam, k, opts), l, opts);
}

IntPoly q_n(const ParamFamily &fam, int n, const Options &opts)
{
    IntPoly value = evaluate_main(multiplier_poly(fam, n, opts).poly, Integer(1));
    IntPoly den(1);
    for (long k : divisors(n))
        if (k < n)
            den *= p_kl(fam, static_cast<int>(k), n / k, opts);
    return exact_divide(value, den);
}

DeltaFactorization factor_delta(const ParamFamily &fam, int n, const Options &opts)
{
    DeltaFactorization f;
    f.family_id = fam.id();
    f.period = n;
    f.delta = delta_n(fam, n, opts);
    if (f.delta.is_zero())
        throw error(errc::bad_param, "Delta_n vanishes identically");
    f.q = q_n(fam, n, opts);
    IntPoly s = exact_divide(f.delta, f.q);

    const Integer cont = content(s) * sgn(s.leading());
    const IntPoly prim = primitive_part(s); // s = cont * prim
    bool found = false;
    for (int sign : {1, -1}) {
        auto root = int_poly_sqrt(prim.scaled(Integer(sign)));
        if (!root)
            continue;
        SquarefreeSplit split = squarefree_part(cont * sign, opts.trial_bound);
        f.a = split.squarefree;
        f.r = root->scaled(split.root);
        f.square_sign = sign;
        found = true;
        break;
    }
    if (!found)
        throw error(errc::not_a_power, "Delta_n / Q_n is not a constant times a square");
    if (f.q * f.r.pow(2) * IntPoly(f.a) != f.delta)
        throw error(errc::internal, "factorization does not reassemble");
    return f;
}

bool common_root_check(const DeltaFactorization &f)
{
    if (f.r.degree() < 1 || f.q.degree() < 1)
        return false;
    return gcd(f.q, f.r).degree() >= 1;
}

SymcubicPeriod3 symcubic_period3(const Options &opts)
{
    SymcubicPeriod3 s;
    s.n3 = nth_root_poly(multiplier_poly(ParamFamily::symcubic(), 3, opts).poly, 2);
    s.disc = discriminant_x(s.n3, opts);
    s.cofactor = IntPoly(ipow(6, 12)) * int_poly({-27, -3, 12, 4}).pow(2) * int_poly({-3, 1}).pow(4) *
                 int_poly({3, 1}).pow(4) * int_poly({0, 1}).pow(12);
    s.d3 = exact_divide(s.disc, s.cofactor);
    return s;
}

} // namespace dynatome
