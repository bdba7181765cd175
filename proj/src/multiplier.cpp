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

#include "dynatome/multiplier.hpp"

#include <string>

#include "dynatome/exact_ops.hpp"
#include "dynatome/resultant.hpp"

namespace dynatome {

namespace {

struct MultiplierSetup {
    ParamPoly phi;
    ParamPoly derivative; // (f^n)' reduced modulo phi
};

MultiplierSetup setup(const ParamFamily &fam, int n, const Options &opts)
{
    MultiplierSetup s;
    s.phi = dynatomic_poly(fam, n, opts);
    ParamPoly full = iterate(fam, n, opts).derivative();
    // phi is monic, so reduction is exact over Z[t] and leaves the product
    // of lambda - D(alpha) over the roots alpha unchanged.
    auto qr = divide_with_remainder(full, s.phi);
    if (!qr)
        throw error(errc::internal, "reduction modulo a monic polynomial failed");
    s.derivative = std::move(qr->second);
    return s;
}

int degree_bound(const ParamFamily &fam, int n, const ParamPoly &phi)
{
    // Periodic points grow like |t|^rho (Fujiwara bound on the monic phi); a
    // multiplier is a product of n values of f' along the orbit, and each
    // lambda coefficient of the resultant is a symmetric function of nu of
    // them.
    const int big = phi.degree();
    Rational rho = 0;
    for (int k = 0; k < big; ++k) {
        const IntPoly &a = phi[static_cast<std::size_t>(k)];
        if (a.is_zero())
            continue;
        Rational r(a.degree(), big - k);
        if (r > rho)
            rho = r;
    }
    const ParamPoly fp = fam.poly().derivative();
    Rational gamma = 0;
    for (int k = 0; k <= fp.degree(); ++k) {
        const IntPoly &a = fp[static_cast<std::size_t>(k)];
        if (a.is_zero())
            continue;
        Rational g = Rational(a.degree()) + rho * k;
        if (g > gamma)
            gamma = g;
    }
    Rational total = gamma * big * n;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
    return static_cast<int>(fl.get_si());
}

std::vector<Integer> nodes_upto(std::size_t count)
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(node(i));
    return out;
}

// Rebuilds a polynomial in lambda over Z[t] from rows indexed by the t-power
// (each row a polynomial in lambda).
ParamPoly from_rows_in_t(const std::vector<IntPoly> &rows)
{
    return swap_variables(ParamPoly::from_coeffs(std::vector<IntPoly>(rows)));
}

} // namespace

int multiplier_resultant_degree_bound(const ParamFamily &fam, int n, const Options &opts)
{
    return degree_bound(fam, n, dynatomic_poly(fam, n, opts));
}

ParamPoly multiplier_resultant(const ParamFamily &fam, int n, const Options &opts)
{
    const MultiplierSetup s = setup(fam, n, opts);
    const int nu_n = s.phi.degree();
    const std::size_t t_count = static_cast<std::size_t>(degree_bound(fam, n, s.phi) + 1);
    const std::size_t l_count = static_cast<std::size_t>(nu_n + 1);
    const std::vector<Integer> t_nodes = nodes_upto(t_count);
    const std::vector<Integer> l_nodes = nodes_upto(l_count);

    // For each t node, the resultant as a polynomial in lambda.
    std::vector<IntPoly> in_lambda(t_count);
    parallel_for(t_count, opts.threads, [&](std::size_t i) {
        const IntPoly phi = specialize_param(s.phi, t_nodes[i]);
        const IntPoly der = specialize_param(s.derivative, t_nodes[i]);
        std::vector<Integer> values(l_count);
        for (std::size_t j = 0; j < l_count; ++j)
            values[j] = resultant(phi, IntPoly(l_nodes[j]) - der);
        in_lambda[i] = interpolate(l_nodes, values);
    });

    std::vector<IntPoly> coeffs(l_count);
    for (std::size_t k = 0; k < l_count; ++k) {
        std::vector<Integer> values(t_count);
        for (std::size_t i = 0; i < t_count; ++i)
            values[i] = in_lambda[i][k];
        coeffs[k] = interpolate(t_nodes, values);
    }
    ParamPoly res = ParamPoly::from_coeffs(std::move(coeffs));
    if (res.degree() != nu_n || !res.is_monic())
        throw error(errc::internal, "multiplier resultant is not monic of degree nu(n)");
    return res;
}

ParamPoly multiplier_resultant_bareiss(const ParamFamily &fam, int n)
{
    const MultiplierSetup s = setup(fam, n, Options{});
    const std::size_t l_count = static_cast<std::size_t>(s.phi.degree() + 1);
    const std::vector<Integer> l_nodes = nodes_upto(l_count);
    std::vector<IntPoly> at_node(l_count);
    int t_degree = 0;
    for (std::size_t j = 0; j < l_count; ++j) {
        ParamPoly b = lift_param(IntPoly(l_nodes[j])) - s.derivative;
        at_node[j] = b.is_zero() ? IntPoly() : resultant_x_bareiss(s.phi, b);
        t_degree = std::max(t_degree, at_node[j].degree());
    }
    std::vector<IntPoly> rows;
    for (int m = 0; m <= t_degree; ++m) {
        std::vector<Integer> values(l_count);
        for (std::size_t j = 0; j < l_count; ++j)
            values[j] = at_node[j][static_cast<std::size_t>(m)];
        rows.push_back(interpolate(l_nodes, values));
    }
    return from_rows_in_t(rows);
}

MultiplierPoly multiplier_poly(const ParamFamily &fam, int n, const Options &opts)
{
    ParamPoly res = multiplier_resultant(fam, n, opts);
    MultiplierPoly m;
    m.poly = nth_root_poly(res, static_cast<unsigned>(n));
    m.family_id = fam.id();
    m.kind = fam.kind();
    m.degree = fam.degree();
    m.period = n;
    return m;
}

MultiplierPoly closed_form_m1(int d)
{
    if (d < 2)
        throw error(errc::bad_param, "closed_form_m1 needs d >= 2");
    const ParamPoly lambda = param_poly({{0}, {1}});
    ParamPoly p = lambda * (lambda - lift_param(IntPoly(d))).pow(static_cast<unsigned>(d - 1));
    std::vector<Integer> c(static_cast<std::size_t>(d), Integer(0));
    c.back() = ipow(-d, static_cast<unsigned long>(d));
    p += lift_param(IntPoly::from_coeffs(std::move(c)));
    MultiplierPoly m;
    m.poly = std::move(p);
    m.family_id = ParamFamily::unicritical(d).id();
    m.kind = FamilyKind::unicritical;
    m.degree = d;
    m.period = 1;
    return m;
}

std::optional<IntPoly> in_power_variable(const IntPoly &p, int e)
{
    if (e < 1)
        throw error(errc::bad_param, "exponent must be positive");
    std::vector<Integer> q;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k % static_cast<std::size_t>(e) == 0)
            q.push_back(p[k]);
        else if (sgn(p[k]) != 0)
            return std::nullopt;
    }
    return IntPoly::from_coeffs(std::move(q));
}

std::optional<IntPoly> in_u_variable(const IntPoly &p, int d)
{
    auto q = in_power_variable(p, d - 1);
    if (!q)
        return std::nullopt;
    std::vector<Integer> c = q->coeffs();
    const Integer dd = ipow(d, static_cast<unsigned long>(d));
    Integer scale = 1;
    for (auto &x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), scale.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), scale.get_mpz_t());
        scale *= dd;
    }
    return IntPoly::from_coeffs(std::move(c));
}

StructureReport verify_coefficient_structure(const MultiplierPoly &m)
{
    if (m.kind != FamilyKind::unicritical)
        throw error(errc::wrong_family, "coefficient structure applies to z^d + c only");
    const int d = m.degree;
    const Integer nu_n = nu(d, m.period);
    StructureReport r;

    r.coefficient_subring.pass = true;
    r.coefficient_subring.witness = "all coefficients are polynomials in " + std::to_string(d) + "^" +
                                    std::to_string(d) + "*c^" + std::to_string(d - 1);
    for (int k = 0; k <= m.poly.degree(); ++k) {
        if (!in_u_variable(m.poly[static_cast<std::size_t>(k)], d)) {
            r.coefficient_subring.pass = false;
            r.coefficient_subring.witness = "coefficient of lambda^" + std::to_string(k) + " is not";
            break;
        }
    }

    const int deg_c = max_param_degree(m.poly);
    Integer expected_c = nu_n * (d - 1) / d;
    r.degree_in_c.pass = Integer(deg_c) == expected_c;
    r.degree_in_c.witness = "deg_c = " + std::to_string(deg_c) + ", expected " + to_string(expected_c);

    std::vector<Integer> top;
    for (int k = 0; k <= m.poly.degree(); ++k)
        top.push_back(m.poly[static_cast<std::size_t>(k)][static_cast<std::size_t>(std::max(deg_c, 0))]);
    IntPoly lead = IntPoly::from_coeffs(std::move(top));
    const Integer target = ipow(d, nu_n.get_ui());
    r.leading_coefficient.pass = lead.degree() == 0 && abs(lead[0]) == target;
    r.leading_coefficient.witness = "coefficient of c^" + std::to_string(deg_c) + " is " + format_poly(lead, "lambda") +
                                    ", expected +-" + to_string(target);

    Integer expected_l = nu_n / m.period;
    r.degree_in_lambda.pass = Integer(m.poly.degree()) == expected_l;
    r.degree_in_lambda.witness =
        "deg_lambda = " + std::to_string(m.poly.degree()) + ", expected " + to_string(expected_l);
    return r;
}

} // namespace dynatome
