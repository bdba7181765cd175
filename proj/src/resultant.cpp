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

#include "dynatome/resultant.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dynatome {

namespace {

using Vec = std::vector<Integer>;

int deg(const Vec &v) { return static_cast<int>(v.size()) - 1; }

void trim(Vec &v)
{
    while (!v.empty() && sgn(v.back()) == 0)
        v.pop_back();
}

Integer vec_content(const Vec &v)
{
    Integer g = 0;
    for (const auto &c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

void divexact_all(Vec &v, const Integer &d)
{
    if (d == 1)
        return;
    for (auto &c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// r <- lc(b)^(deg a - deg b + 1) * a mod b, in place on a copy of a.
Vec prem(Vec r, const Vec &b)
{
    const int db = deg(b);
    const Integer &lc = b.back();
    int e = deg(r) - db + 1;
    Integer tmp;
    for (int k = deg(r); k >= db; --k) {
        Integer top = r[static_cast<std::size_t>(k)];
        if (sgn(top) != 0) {
            for (int i = 0; i < k; ++i)
                r[static_cast<std::size_t>(i)] *= lc;
            const int shift = k - db;
            for (int i = 0; i < db; ++i)
                mpz_submul(r[static_cast<std::size_t>(shift + i)].get_mpz_t(), top.get_mpz_t(),
                           b[static_cast<std::size_t>(i)].get_mpz_t());
        } else {
            for (int i = 0; i < k; ++i)
                r[static_cast<std::size_t>(i)] *= lc;
        }
        r[static_cast<std::size_t>(k)] = 0;
        --e;
    }
    r.resize(static_cast<std::size_t>(std::max(db, 0)));
    trim(r);
    if (e > 0 && !r.empty()) {
        Integer f = ipow(lc, static_cast<unsigned long>(e));
        for (auto &c : r)
            c *= f;
    }
    return r;
}

} // namespace

Integer resultant(const IntPoly &pa, const IntPoly &pb)
{
    if (pa.is_zero() || pb.is_zero())
        return 0;
    Vec a = pa.coeffs(), b = pb.coeffs();
    if (deg(a) == 0)
        return ipow(a[0], static_cast<unsigned long>(deg(b)));
    if (deg(b) == 0)
        return ipow(b[0], static_cast<unsigned long>(deg(a)));

    Integer ca = vec_content(a), cb = vec_content(b);
    divexact_all(a, ca);
    divexact_all(b, cb);
    Integer g = 1, h = 1;
    int s = 1;
    Integer t = ipow(ca, static_cast<unsigned long>(deg(b))) * ipow(cb, static_cast<unsigned long>(deg(a)));
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
            s = -s;
    }
    while (true) {
        const int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
            s = -s;
        Vec r = prem(a, b);
        a = std::move(b);
        if (r.empty())
            return 0;
        Integer div = g * ipow(h, static_cast<unsigned long>(delta));
        divexact_all(r, div);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            Integer num = ipow(g, static_cast<unsigned long>(delta));
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (deg(b) == 0)
            break;
    }
    // deg(b) == 0 here, deg(a) >= 1.
    const int da = deg(a);
    Integer num = ipow(b[0], static_cast<unsigned long>(da));
    Integer den = ipow(h, static_cast<unsigned long>(da - 1));
    Integer hh;
    mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * hh;
}

Integer discriminant(const IntPoly &p)
{
    const int m = p.degree();
    if (m < 1)
        throw error(errc::degenerate_degree, "discriminant of a constant");
    Integer r = resultant(p, p.derivative());
    Integer q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    return ((m * (m - 1) / 2) % 2 == 0) ? q : Integer(-q);
}

Integer node(std::size_t index)
{
    long k = static_cast<long>((index + 1) / 2);
    return Integer(index % 2 == 1 ? k : -k);
}

IntPoly interpolate(const std::vector<Integer> &nodes, const std::vector<Integer> &values)
{
    const std::size_t n = nodes.size();
    if (values.size() != n)
        throw error(errc::internal, "interpolate: size mismatch");
    // Newton divided differences, in place.
    std::vector<Integer> dd = values;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            Integer num = dd[i] - dd[i - 1];
            Integer den = nodes[i] - nodes[i - level];
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
                throw error(errc::internal, "interpolation produced a non-integral divided difference");
            mpz_divexact(dd[i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    // Expand the Newton form: p = dd0 + (t - x0)(dd1 + (t - x1)(...)).
    std::vector<Integer> acc;
    for (std::size_t i = n; i-- > 0;) {
        // acc <- acc * (t - x_i) + dd_i
        std::vector<Integer> next(acc.size() + 1, Integer(0));
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k];
            next[k] -= acc[k] * nodes[i];
        }
        next[0] += dd[i];
        acc = std::move(next);
    }
    return IntPoly::from_coeffs(std::move(acc));
}

int sylvester_degree_bound(const ParamPoly &a, const ParamPoly &b)
{
    return std::max(0, a.degree()) * std::max(0, max_param_degree(b)) +
           std::max(0, b.degree()) * std::max(0, max_param_degree(a));
}

IntPoly resultant_x(const ParamPoly &a, const ParamPoly &b, const Options &opts, std::optional<int> degree_bound)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const int bound = degree_bound.value_or(sylvester_degree_bound(a, b));
    const std::size_t need = static_cast<std::size_t>(bound + 1);
    // Nodes where a leading coefficient vanishes change the degree in x and
    // are skipped.
    std::vector<Integer> nodes;
    for (std::size_t i = 0; nodes.size() < need; ++i) {
        Integer t0 = node(i);
        if (sgn(a.leading().eval(t0)) != 0 && sgn(b.leading().eval(t0)) != 0)
            nodes.push_back(t0);
    }
    std::vector<Integer> values(need);
    parallel_for(need, opts.threads, [&](std::size_t i) {
        values[i] = resultant(specialize_param(a, nodes[i]), specialize_param(b, nodes[i]));
    });
    return interpolate(nodes, values);
}

IntPoly resultant_x_bareiss(const ParamPoly &a, const ParamPoly &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    return bareiss_determinant(sylvester_matrix(a, b));
}

IntPoly discriminant_x(const ParamPoly &p, const Options &opts)
{
    const int m = p.degree();
    if (m < 1)
        throw error(errc::degenerate_degree, "discriminant needs degree >= 1 in the main variable");
    IntPoly r = resultant_x(p, p.derivative(), opts);
    auto q = exact_div(r, p.leading());
    if (!q)
        throw error(errc::internal, "resultant not divisible by the leading coefficient");
    return ((m * (m - 1) / 2) % 2 == 0) ? *q : -*q;
}

} // namespace dynatome
