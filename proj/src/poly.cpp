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

#include "dynatome/poly.hpp"

#include <sstream>

namespace dynatome {

IntPoly int_poly(std::initializer_list<long> ascending)
{
    std::vector<Integer> v;
    for (long c : ascending)
        v.emplace_back(c);
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly int_poly_from_strings(const std::vector<std::string> &ascending)
{
    std::vector<Integer> v;
    for (const auto &s : ascending)
        v.push_back(parse_integer(s));
    return IntPoly::from_coeffs(std::move(v));
}

ParamPoly param_poly(std::initializer_list<std::initializer_list<long>> ascending)
{
    std::vector<IntPoly> v;
    for (const auto &row : ascending)
        v.push_back(int_poly(row));
    return ParamPoly::from_coeffs(std::move(v));
}

Integer content(const IntPoly &p)
{
    Integer g = 0;
    for (const auto &c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly &p)
{
    if (p.is_zero())
        return p;
    Integer g = content(p);
    if (sgn(p.leading()) < 0)
        g = -g;
    std::vector<Integer> v = p.coeffs();
    for (auto &c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly::from_coeffs(std::move(v));
}

IntPoly gcd(const IntPoly &a, const IntPoly &b)
{
    if (a.is_zero())
        return primitive_part(b).scaled(content(b));
    if (b.is_zero())
        return primitive_part(a).scaled(content(a));
    Integer g;
    Integer ca = content(a), cb = content(b);
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree())
        std::swap(u, v);
    while (!v.is_zero() && v.degree() > 0) {
        IntPoly r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.is_zero() ? r : primitive_part(r);
    }
    if (!v.is_zero())
        return IntPoly(g); // nonzero constant remainder: coprime
    return primitive_part(u).scaled(g);
}

namespace {

RatPoly monic(const RatPoly &p)
{
    if (p.is_zero())
        return p;
    Rational inv = 1 / p.leading();
    return p.scaled(inv);
}

RatPoly rat_gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        RatPoly r = divide_with_remainder(a, b)->second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

RatPoly rat_quotient(const RatPoly &a, const RatPoly &b) { return divide_with_remainder(a, b)->first; }

} // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly &p, Integer *unit_content)
{
    if (p.is_zero())
        throw error(errc::bad_param, "squarefree decomposition of zero");
    if (unit_content) {
        Integer c = content(p);
        *unit_content = sgn(p.leading()) < 0 ? Integer(-c) : c;
    }
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() <= 0)
        return out;
    // Yun's algorithm over Q; factors are converted back to primitive form.
    RatPoly f = monic(to_rat_poly(p));
    RatPoly df = f.derivative();
    RatPoly a = rat_gcd(f, df);
    RatPoly b = rat_quotient(f, a);
    RatPoly c = rat_quotient(df, a);
    RatPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly g = rat_gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(clear_denominators(g), i);
        b = rat_quotient(b, g);
        c = rat_quotient(d, g);
        d = c - b.derivative();
    }
    return out;
}

std::optional<IntPoly> int_poly_sqrt(const IntPoly &p)
{
    if (p.is_zero())
        return IntPoly();
    if (p.degree() % 2 != 0)
        return std::nullopt;
    auto lead = exact_sqrt(p.leading());
    if (!lead)
        return std::nullopt;
    const std::size_t k = static_cast<std::size_t>(p.degree() / 2);
    std::vector<Integer> r(k + 1, Integer(0));
    r[k] = *lead;
    const Integer two_lead = 2 * *lead;
    // Match coefficient of t^(2k - j) for j = 1..k.
    for (std::size_t j = 1; j <= k; ++j) {
        Integer known = 0;
        for (std::size_t i = 1; i < j; ++i)
            known += r[k - i] * r[k - (j - i)];
        Integer rhs = p[2 * k - j] - known;
        auto q = exact_div(rhs, two_lead);
        if (!q)
            return std::nullopt;
        r[k - j] = *q;
    }
    IntPoly root = IntPoly::from_coeffs(std::move(r));
    if (root * root != p)
        return std::nullopt;
    return root;
}

RatPoly to_rat_poly(const IntPoly &p)
{
    std::vector<Rational> v;
    for (const auto &c : p.coeffs())
        v.emplace_back(c);
    return RatPoly::from_coeffs(std::move(v));
}

IntPoly clear_denominators(const RatPoly &p)
{
    Integer den = 1;
    for (const auto &x : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> v;
    for (const auto &x : p.coeffs())
        v.push_back(Integer(x * den));
    return primitive_part(IntPoly::from_coeffs(std::move(v)));
}

int max_param_degree(const ParamPoly &p)
{
    int d = -1;
    for (const auto &c : p.coeffs())
        d = std::max(d, c.degree());
    return d;
}

IntPoly specialize_param(const ParamPoly &p, const Integer &t0)
{
    std::vector<Integer> v;
    v.reserve(p.size());
    for (const auto &c : p.coeffs())
        v.push_back(c.eval(t0));
    return IntPoly::from_coeffs(std::move(v));
}

RatPoly specialize_param(const ParamPoly &p, const Rational &t0)
{
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto &c : p.coeffs())
        v.push_back(c.eval(t0));
    return RatPoly::from_coeffs(std::move(v));
}

IntPoly evaluate_main(const ParamPoly &p, const Integer &x0)
{
    IntPoly acc;
    for (std::size_t k = p.size(); k-- > 0;)
        acc = acc.scaled(x0) + p[k];
    return acc;
}

ParamPoly swap_variables(const ParamPoly &p)
{
    const int dt = max_param_degree(p);
    if (dt < 0)
        return {};
    std::vector<std::vector<Integer>> grid(static_cast<std::size_t>(dt + 1),
                                           std::vector<Integer>(p.size(), Integer(0)));
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t t = 0; t < p[x].size(); ++t)
            grid[t][x] = p[x][t];
    std::vector<IntPoly> out;
    for (auto &row : grid)
        out.push_back(IntPoly::from_coeffs(std::move(row)));
    return ParamPoly::from_coeffs(std::move(out));
}

ParamPoly lift_constant(const IntPoly &p_in_x)
{
    std::vector<IntPoly> v;
    for (const auto &c : p_in_x.coeffs())
        v.emplace_back(c);
    return ParamPoly::from_coeffs(std::move(v));
}

namespace {

template <class Coeff>
std::string render_terms(const std::vector<Coeff> &coeffs, std::string_view var)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Coeff &c = coeffs[k];
        if (sgn(c) == 0)
            continue;
        Coeff mag = abs(c);
        if (first) {
            if (sgn(c) < 0)
                os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (!unit || k == 0)
            os << mag.get_str(10);
        if (k > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return first ? "0" : os.str();
}

} // namespace

std::string format_poly(const IntPoly &p, std::string_view var) { return render_terms(p.coeffs(), var); }

std::string format_poly(const RatPoly &p, std::string_view var) { return render_terms(p.coeffs(), var); }

std::string format_poly(const ParamPoly &p, std::string_view main_var, std::string_view param_var)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const IntPoly &c = p[k];
        if (c.is_zero())
            continue;
        std::string body = format_poly(c, param_var);
        bool single_term = c.size() == 1 || (c.degree() >= 0 && std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                                              [](const Integer &x) { return sgn(x) != 0; }) == 1);
        bool negative = sgn(c.leading()) < 0;
        if (!first)
            os << (single_term && negative ? " - " : " + ");
        else if (single_term && negative)
            os << "-";
        if (single_term && negative)
            body = format_poly(-c, param_var);
        first = false;
        if (k == 0) {
            os << (single_term ? body : "(" + body + ")");
            continue;
        }
        if (single_term && body == "1") {
            // bare power of the main variable
        } else if (single_term) {
            os << body << "*";
        } else {
            os << "(" << body << ")*";
        }
        os << main_var;
        if (k > 1)
            os << "^" << k;
    }
    return first ? "0" : os.str();
}

} // namespace dynatome
