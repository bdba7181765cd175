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

#include "dynatome/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dynatome {

namespace {

// Evaluates p(t) at t = value, or p at u = value when p only involves t^e.
Rational eval_param(const IntPoly &p, const Rational &value, int e)
{
    if (e <= 1)
        return to_rat_poly(p).eval(value);
    auto q = in_power_variable(p, e);
    if (!q)
        throw error(errc::internal, "coefficient is not a polynomial in t^" + std::to_string(e));
    return to_rat_poly(*q).eval(value);
}

bool is_square_value(const Rational &x) { return is_rational_square(x).has_value(); }

} // namespace

MultiplierTable::MultiplierTable(const ParamFamily &fam, int max_period, const Options &opts) : fam_(fam)
{
    if (max_period < 1)
        throw error(errc::bad_param, "max period must be at least 1");
    for (int n = 1; n <= max_period; ++n) {
        m_.push_back(multiplier_poly(fam, n, opts));
        delta_.push_back(delta_n(m_.back(), opts));
    }
}

static int power_exponent(const ParamFamily &fam, bool is_power)
{
    if (!is_power)
        return 1;
    if (fam.kind() != FamilyKind::unicritical)
        throw error(errc::wrong_family, "u = c^(d-1) input needs z^d + c");
    return fam.degree() - 1;
}

RatPoly MultiplierTable::m_at(int n, const Rational &value, bool is_power) const
{
    const int e = power_exponent(fam_, is_power);
    const auto &p = m(n).poly;
    std::vector<Rational> coeffs;
    for (const auto &c : p.coeffs())
        coeffs.push_back(eval_param(c, value, e));
    return RatPoly::from_coeffs(std::move(coeffs));
}

Rational MultiplierTable::delta_at(int n, const Rational &value, bool is_power) const
{
    return eval_param(delta(n), value, power_exponent(fam_, is_power));
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::power:
        return "power";
    case Verdict::chebyshev:
        return "chebyshev";
    case Verdict::all_integer:
        return "all-integer";
    case Verdict::all_rational:
        return "all-rational";
    case Verdict::fails:
        return "fails";
    }
    return "fails";
}

std::string ClassificationReport::verdict_text() const
{
    switch (verdict) {
    case Verdict::all_integer:
    case Verdict::all_rational:
        return verdict_name(verdict) + "-up-to-" + std::to_string(max_period);
    case Verdict::fails:
        return "fails-at-period-" + std::to_string(failing_period);
    default:
        return verdict_name(verdict);
    }
}

static std::optional<Verdict> special_map(const ParamFamily &fam, const Rational &value)
{
    if (fam.kind() == FamilyKind::unicritical) {
        if (sgn(value) == 0)
            return Verdict::power;
        if (fam.degree() == 2 && value == -2)
            return Verdict::chebyshev;
    } else if (fam.kind() == FamilyKind::symcubic) {
        if (sgn(value) == 0)
            return Verdict::power;
        if (value == 3 || value == -3)
            return Verdict::chebyshev;
    }
    return std::nullopt;
}

ClassificationReport classify_parameter(const MultiplierTable &table, const Rational &value, int max_period,
                                        bool is_power)
{
    if (max_period < 1 || max_period > table.max_period())
        throw error(errc::bad_param, "max period outside the table");
    const auto &fam = table.family();
    if (fam.kind() == FamilyKind::unicritical && fam.degree() == 2)
        is_power = false; // u = c
    ClassificationReport rep;
    rep.family_id = fam.id();
    rep.value = value;
    rep.value_is_power = is_power;
    rep.max_period = max_period;
    bool all_z = true;
    for (int n = 1; n <= max_period; ++n) {
        PeriodRecord rec;
        rec.period = n;
        rec.m = table.m_at(n, value, is_power);
        auto roots = rational_roots(rec.m);
        rec.roots = roots.roots;
        rec.splits_over_q = roots.splits_over_q;
        rec.splits_over_z = roots.splits_over_z;
        rec.delta = table.delta_at(n, value, is_power);
        rec.delta_is_square = is_square_value(rec.delta);
        if (!rec.splits_over_q && rep.failing_period == 0)
            rep.failing_period = n;
        all_z = all_z && rec.splits_over_z;
        rep.periods.push_back(std::move(rec));
    }
    if (rep.failing_period != 0)
        rep.verdict = Verdict::fails;
    else if (auto s = special_map(fam, value))
        rep.verdict = *s;
    else
        rep.verdict = all_z ? Verdict::all_integer : Verdict::all_rational;
    return rep;
}

ClassificationReport classify_parameter(const ParamFamily &fam, const Rational &value, int max_period,
                                        bool is_power, const Options &opts)
{
    MultiplierTable table(fam, max_period, opts);
    return classify_parameter(table, value, max_period, is_power);
}

IntPoly chebyshev_poly(int d)
{
    if (d < 0)
        throw error(errc::bad_param, "Chebyshev degree must be nonnegative");
    IntPoly prev(2), cur = IntPoly::variable();
    if (d == 0)
        return prev;
    const IntPoly z = IntPoly::variable();
    for (int m = 1; m < d; ++m) {
        IntPoly next = z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool chebyshev_identity_holds(int d)
{
    // Substitute z -> (z^2 + 1) / z and clear z^d: sum_k t_k (z^2 + 1)^k z^(d-k).
    const IntPoly t = chebyshev_poly(d);
    const IntPoly w = int_poly({1, 0, 1});
    IntPoly lhs;
    for (int k = 0; k <= t.degree(); ++k)
        lhs += (w.pow(static_cast<unsigned>(k)) * IntPoly::monomial(Integer(1), static_cast<std::size_t>(d - k)))
                   .scaled(t[static_cast<std::size_t>(k)]);
    return lhs == IntPoly::monomial(Integer(1), static_cast<std::size_t>(2 * d)) + IntPoly(1);
}

IntegerMultiplierReport verify_integer_multipliers(const IntPoly &f, int max_period, const Options &opts)
{
    if (max_period < 1)
        throw error(errc::bad_param, "max period must be at least 1");
    if (!f.is_monic() || f.degree() < 2)
        throw error(errc::bad_param, "map must be monic of degree at least 2");
    auto fam = ParamFamily::custom(lift_constant(f));
    IntegerMultiplierReport rep;
    rep.pass = true;
    for (int n = 1; n <= max_period; ++n) {
        auto m = multiplier_poly(fam, n, opts);
        rep.periods.push_back(rational_roots(specialize_param(m.poly, Integer(0))));
        rep.pass = rep.pass && rep.periods.back().splits_over_z;
    }
    return rep;
}

std::string parametrization_name(Parametrization p)
{
    switch (p) {
    case Parametrization::quad_int_period12:
        return "quad-int-period12";
    case Parametrization::quad_rat_period13:
        return "quad-rat-period13";
    case Parametrization::cubic_rat_fixed:
        return "cubic-rat-fixed";
    }
    return "";
}

Parametrization parse_parametrization(const std::string &name)
{
    for (auto p : {Parametrization::quad_int_period12, Parametrization::quad_rat_period13,
                   Parametrization::cubic_rat_fixed})
        if (parametrization_name(p) == name)
            return p;
    throw error(errc::bad_param, "unknown parametrization '" + name + "'");
}

bool ParametrizationReport::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const NamedCheck &c) { return c.pass; });
}

ParametrizationReport verify_parametrization(Parametrization which, const Rational &param, const Options &opts)
{
    ParametrizationReport rep;
    rep.which = which;
    rep.param = param;
    const Rational r2 = param * param;
    switch (which) {
    case Parametrization::quad_int_period12: {
        if (param.get_den() != 1)
            throw error(errc::bad_param, "m must be an integer");
        rep.value = (1 - r2) / 4;
        MultiplierTable table(ParamFamily::unicritical(2), 2, opts);
        for (int n = 1; n <= 2; ++n)
            rep.checks.push_back({"M_" + std::to_string(n) + " splits over Z",
                                  rational_roots(table.m_at(n, rep.value, false)).splits_over_z});
        break;
    }
    case Parametrization::quad_rat_period13: {
        if (sgn(param) == 0)
            throw error(errc::bad_param, "r must be nonzero");
        rep.value = -(r2 * r2 + 3 * r2 + 4) / (4 * r2);
        MultiplierTable table(ParamFamily::unicritical(2), 3, opts);
        for (int n : {1, 3})
            rep.checks.push_back({"Delta_" + std::to_string(n) + " is a rational square",
                                  is_square_value(table.delta_at(n, rep.value, false))});
        break;
    }
    case Parametrization::cubic_rat_fixed: {
        const Rational s = r2 + 3;
        rep.value = 4 * (r2 - 1) * (r2 - 1) / (s * s * s);
        MultiplierTable table(ParamFamily::unicritical(3), 1, opts);
        rep.checks.push_back({"M_1 has a rational root", !rational_roots(table.m_at(1, rep.value, true)).roots.empty()});
        rep.checks.push_back({"Delta_1 is a rational square", is_square_value(table.delta_at(1, rep.value, true))});
        break;
    }
    }
    return rep;
}

static Rational fermat_cubic(const Rational &c) { return -(64 * c * c * c + 144 * c * c + 108 * c + 135); }

std::pair<Rational, Rational> reduction_to_fermat(const Rational &c, const Rational &r)
{
    if (r * r != fermat_cubic(c))
        throw error(errc::bad_param, "r^2 != -(64c^3 + 144c^2 + 108c + 135)");
    const Rational den = 3 * (4 * c + 3);
    if (sgn(den) == 0)
        throw error(errc::bad_param, "c = -3/4");
    Rational a = (r - 18) / den, b = -(r + 18) / den;
    if (a * a * a + b * b * b != 4)
        throw error(errc::internal, "a^3 + b^3 != 4");
    return {a, b};
}

bool fermat_identity_holds()
{
    // r is the main variable, c the parameter.
    const ParamPoly r = ParamPoly::variable();
    const ParamPoly c = lift_param(IntPoly::variable());
    const auto k = [](long v) { return ParamPoly(IntPoly(Integer(v))); };
    const ParamPoly four_c3 = c.scaled(IntPoly(4)) + k(3);
    const ParamPoly lhs = (r - k(18)).pow(3) - (r + k(18)).pow(3) - four_c3.pow(3).scaled(IntPoly(108));
    const ParamPoly rhs = (c.pow(3).scaled(IntPoly(64)) + c.pow(2).scaled(IntPoly(144)) + c.scaled(IntPoly(108)) +
                           k(135) + r * r)
                              .scaled(IntPoly(-108));
    return lhs == rhs;
}

std::vector<FermatSearchHit> fermat_pair_search(long bound)
{
    std::vector<FermatSearchHit> hits;
    for (long q = 1; q <= bound; ++q)
        for (long p = -bound; p <= bound; ++p) {
            Rational c(p, q);
            c.canonicalize();
            if (c.get_den() != q)
                continue; // visited in lowest terms
            if (4 * c + 3 == 0)
                continue;
            auto r = is_rational_square(fermat_cubic(c));
            if (!r)
                continue;
            auto [a, b] = reduction_to_fermat(c, *r);
            hits.push_back({c, *r, a, b});
        }
    return hits;
}

static IntPoly squarefree_product(const IntPoly &p)
{
    IntPoly out(1);
    for (const auto &[f, mult] : squarefree_decomposition(p))
        out *= f;
    return out;
}

std::vector<RationalInterval> nonnegative_set(const IntPoly &p)
{
    if (p.is_zero())
        throw error(errc::bad_param, "nonnegative set of the zero polynomial");
    const auto roots = rational_roots(p).roots;
    if (p.degree() > 0 && SturmSequence(squarefree_product(p)).count_real() != static_cast<int>(roots.size()))
        throw error(errc::bad_param, "polynomial has irrational real roots");

    // Alternate open segments and roots from left to right.
    const std::size_t k = roots.size();
    std::vector<bool> seg(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        Rational x;
        if (k == 0)
            x = 0;
        else if (i == 0)
            x = roots.front().value - 1;
        else if (i == k)
            x = roots.back().value + 1;
        else
            x = (roots[i - 1].value + roots[i].value) / 2;
        seg[i] = sign_at(p, x) > 0;
    }
    std::vector<RationalInterval> out;
    bool open = false;
    RationalInterval cur;
    auto close_at = [&](std::optional<Rational> hi) {
        cur.hi = std::move(hi);
        out.push_back(cur);
        open = false;
    };
    if (seg[0]) {
        cur = {};
        open = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Rational &x = roots[i].value;
        if (!open) {
            cur = {x, std::nullopt};
            open = true;
        }
        if (!seg[i + 1])
            close_at(x);
    }
    if (open)
        close_at(std::nullopt);
    return out;
}

std::vector<RationalInterval> intersect(const std::vector<RationalInterval> &a, const std::vector<RationalInterval> &b)
{
    // lo of nullopt is -infinity, hi of nullopt is +infinity.
    auto lo_max = [](const std::optional<Rational> &x, const std::optional<Rational> &y) -> std::optional<Rational> {
        if (!x)
            return y;
        if (!y)
            return x;
        return std::max(*x, *y);
    };
    auto hi_min = [](const std::optional<Rational> &x, const std::optional<Rational> &y) -> std::optional<Rational> {
        if (!x)
            return y;
        if (!y)
            return x;
        return std::min(*x, *y);
    };
    std::vector<RationalInterval> out;
    for (const auto &x : a)
        for (const auto &y : b) {
            RationalInterval iv{lo_max(x.lo, y.lo), hi_min(x.hi, y.hi)};
            if (iv.lo && iv.hi && *iv.lo > *iv.hi)
                continue;
            out.push_back(iv);
        }
    std::sort(out.begin(), out.end(), [](const RationalInterval &x, const RationalInterval &y) {
        if (!x.lo || !y.lo)
            return !x.lo && y.lo;
        return *x.lo < *y.lo;
    });
    return out;
}

std::string to_string(const RationalInterval &iv)
{
    return "[" + (iv.lo ? to_string(*iv.lo) : std::string("-inf")) + ", " +
           (iv.hi ? to_string(*iv.hi) : std::string("+inf")) + "]";
}

CubicRealReport cubic_real_multiplier_check(const Options &opts)
{
    MultiplierTable table(ParamFamily::unicritical(3), 2, opts);
    CubicRealReport rep;
    auto in_u = [&](int n) {
        auto q = in_power_variable(table.delta(n), 2);
        if (!q)
            throw error(errc::internal, "Delta_n is not a polynomial in c^2");
        return *q;
    };
    rep.delta1_nonneg = nonnegative_set(in_u(1));
    rep.delta2_nonneg = nonnegative_set(in_u(2));
    rep.intersection = intersect(rep.delta1_nonneg, rep.delta2_nonneg);
    rep.pass = rep.intersection.size() == 1 && rep.intersection[0].lo && rep.intersection[0].hi &&
               sgn(*rep.intersection[0].lo) == 0 && sgn(*rep.intersection[0].hi) == 0;
    return rep;
}

bool rolle_identity_holds(int d)
{
    if (d < 2)
        throw error(errc::bad_param, "degree must be at least 2");
    const auto m1 = multiplier_poly(ParamFamily::unicritical(d), 1).poly;
    if (m1.degree() != d)
        return false;
    // lambda^d M_1(1/lambda + d) = sum_k m_k (1 + d lambda)^k lambda^(d-k).
    const ParamPoly lin = lift_constant(int_poly({1, d}));
    ParamPoly lhs;
    for (int k = 0; k <= d; ++k)
        lhs += (lin.pow(static_cast<unsigned>(k)) * ParamPoly::monomial(m1[static_cast<std::size_t>(k)],
                                                                        static_cast<std::size_t>(d - k)));
    const Integer dd(d);
    const IntPoly c_pow = IntPoly::monomial(Integer(1), static_cast<std::size_t>(d - 1));
    const Integer top = ipow(-dd, static_cast<unsigned long>(d));
    const ParamPoly expected = ParamPoly::monomial(c_pow.scaled(top), static_cast<std::size_t>(d)) +
                               ParamPoly::monomial(IntPoly(dd), 1) + ParamPoly(IntPoly(1));
    Integer dtop = ipow(dd, static_cast<unsigned long>(d + 1));
    if (d % 2)
        dtop = -dtop;
    const ParamPoly expected_derivative =
        ParamPoly::monomial(c_pow.scaled(dtop), static_cast<std::size_t>(d - 1)) + ParamPoly(IntPoly(dd));
    return lhs == expected && lhs.derivative() == expected_derivative;
}

IntPoly sandwich_l() { return int_poly({-50, -252, 720, 6144, 8192}); }

D3IntegerReport d3_integer_argument(long b_lo, long b_hi, const Options &opts)
{
    if (b_lo > b_hi)
        throw error(errc::bad_param, "empty range of b");
    D3IntegerReport rep;
    rep.d3 = symcubic_period3(opts).d3;
    rep.b_lo = b_lo;
    rep.b_hi = b_hi;

    std::set<long> squares;
    for (long x = 0; x < 32; ++x)
        squares.insert(x * x % 32);
    for (int a = 0; a < 32; ++a) {
        Integer v = rep.d3.eval(Integer(a)) % 32;
        if (v < 0)
            v += 32;
        if (squares.count(v.get_si()))
            rep.square_residues_mod32.push_back(a);
    }
    rep.residues_force_one_mod8 =
        !rep.square_residues_mod32.empty() &&
        std::all_of(rep.square_residues_mod32.begin(), rep.square_residues_mod32.end(), [](int a) { return a % 8 == 1; });

    auto d3_at_b = [&](long b) { return rep.d3.eval(Integer(1 + 8 * Integer(b))); };
    for (long b = -7; b <= 13; ++b)
        if (exact_sqrt(d3_at_b(b)))
            rep.exceptional_squares.push_back(b);

    const IntPoly l = sandwich_l();
    const std::size_t span = static_cast<std::size_t>(b_hi - b_lo + 1);
    std::vector<char> failed(span, 0);
    parallel_for(span, opts.threads, [&](std::size_t i) {
        const long b = b_lo + static_cast<long>(i);
        if (b >= -7 && b <= 13)
            return;
        const Integer v = d3_at_b(b);
        const Integer lb = l.eval(Integer(b));
        const Integer lb1 = lb + 1;
        failed[i] = !(lb * lb < v && v < lb1 * lb1);
    });
    for (std::size_t i = 0; i < span; ++i)
        if (failed[i])
            rep.sandwich_failures.push_back(b_lo + static_cast<long>(i));
    return rep;
}

std::vector<Rational> d3_rational_search(long max_height, const Options &opts)
{
    if (max_height < 1)
        throw error(errc::bad_param, "max height must be at least 1");
    const IntPoly d3 = symcubic_period3(opts).d3;
    const int deg = d3.degree();
    std::vector<std::vector<Rational>> per_q(static_cast<std::size_t>(max_height));
    parallel_for(per_q.size(), opts.threads, [&](std::size_t i) {
        const long q = static_cast<long>(i) + 1;
        std::vector<Integer> qpow(static_cast<std::size_t>(deg + 1));
        qpow[0] = 1;
        for (int k = 1; k <= deg; ++k)
            qpow[static_cast<std::size_t>(k)] = qpow[static_cast<std::size_t>(k - 1)] * q;
        Integer v, pz;
        for (long p = -max_height; p <= max_height; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            // q^deg D_3(p/q), homogeneous Horner.
            pz = p;
            v = d3.leading();
            for (int k = deg - 1; k >= 0; --k)
                v = v * pz + d3[static_cast<std::size_t>(k)] * qpow[static_cast<std::size_t>(deg - k)];
            if (sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()))
                per_q[i].push_back(Rational(p, q));
        }
    });
    std::vector<Rational> hits;
    for (auto &v : per_q)
        hits.insert(hits.end(), v.begin(), v.end());
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace dynatome
