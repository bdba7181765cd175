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

#include "dynatome/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "dynatome/disc_factor.hpp"
#include "dynatome/eisenstein.hpp"
#include "dynatome/reference.hpp"

namespace dynatome {

namespace {

class Recorder {
public:
    explicit Recorder(std::vector<NamedCheck> &out) : out_(out) {}

    void check(std::string name, bool pass) { out_.push_back({std::move(name), pass}); }

    // Runs fn and records its result; an exception counts as a failure.
    void run(const std::string &name, const std::function<bool()> &fn)
    {
        try {
            check(name, fn());
        } catch (const std::exception &e) {
            check(name + " (" + e.what() + ")", false);
        }
    }

private:
    std::vector<NamedCheck> &out_;
};

std::string tag(const std::string &what, int d, int n)
{
    return what + " d=" + std::to_string(d) + " n=" + std::to_string(n);
}

void exact_reproduction(Recorder &rec, const Options &opts)
{
    const auto quad = ParamFamily::unicritical(2);
    for (int n = 1; n <= 4; ++n) {
        rec.run(tag("M_n", 2, n), [&] {
            auto m = multiplier_poly(quad, n, opts);
            return m.poly == reference::quadratic_m(n) && delta_n(m, opts) == reference::quadratic_delta(n);
        });
    }
    const auto cubic = ParamFamily::unicritical(3);
    for (int n = 1; n <= 2; ++n) {
        rec.run(tag("M_n", 3, n), [&] {
            auto m = multiplier_poly(cubic, n, opts);
            return m.poly == reference::cubic_m(n) && delta_n(m, opts) == reference::cubic_delta(n);
        });
    }
    for (int d = 2; d <= 6; ++d)
        rec.run("closed form M_1 d=" + std::to_string(d), [&] {
            return closed_form_m1(d).poly == multiplier_poly(ParamFamily::unicritical(d), 1, opts).poly;
        });
    const auto sym = ParamFamily::symcubic();
    for (int n = 1; n <= 2; ++n)
        rec.run("symcubic M_" + std::to_string(n),
                [&] { return multiplier_poly(sym, n, opts).poly == reference::symcubic_m(n); });
    rec.run("symcubic M_3 = N_3^2", [&] {
        auto n3 = reference::symcubic_n3();
        return multiplier_poly(sym, 3, opts).poly == n3 * n3;
    });
    rec.run("symcubic disc N_3 = cofactor * D_3", [&] {
        auto s = symcubic_period3(opts);
        return s.n3 == reference::symcubic_n3() && s.d3 == reference::symcubic_d3() && s.disc == s.cofactor * s.d3;
    });
}

void factorization_suite(Recorder &rec, const Options &opts)
{
    auto one = [&](int d, int n) {
        rec.run(tag("Delta_n = a Q R^2", d, n), [&] {
            auto f = factor_delta(ParamFamily::unicritical(d), n, opts);
            return (f.a == 1 || f.a == -1) && IntPoly(f.a) * f.q * f.r * f.r == f.delta;
        });
    };
    for (int n = 1; n <= 4; ++n)
        one(2, n);
    for (int n = 1; n <= 2; ++n)
        one(3, n);
    for (int d = 2; d <= 5; ++d)
        rec.run("a_1, R_1 closed form d=" + std::to_string(d), [&] {
            auto f = factor_delta(ParamFamily::unicritical(d), 1, opts);
            const Integer a1 = (d * (d + 1) / 2) % 2 == 0 ? 1 : -1;
            const IntPoly r1 = IntPoly::monomial(ipow(d, static_cast<unsigned long>(d * (d - 1) / 2)),
                                                 static_cast<std::size_t>((d - 1) * (d - 2) / 2));
            return f.a == a1 && f.r == r1;
        });
}

void structure_suite(Recorder &rec, const Options &opts)
{
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= 3; ++n) {
            const auto fam = ParamFamily::unicritical(d);
            rec.run(tag("coefficient structure", d, n), [&] {
                return verify_coefficient_structure(multiplier_poly(fam, n, opts)).pass();
            });
            rec.run(tag("M_n(c,0) = +-d^nu Phi_n(c,0)^(d-1)", d, n), [&] {
                const IntPoly m0 = evaluate_main(multiplier_poly(fam, n, opts).poly, Integer(0));
                const IntPoly phi0 = evaluate_main(dynatomic_poly(fam, n, opts), Integer(0));
                const IntPoly rhs = phi0.pow(static_cast<unsigned>(d - 1)).scaled(
                    ipow(d, nu(d, n).get_ui()));
                return m0 == rhs || m0 == -rhs;
            });
            rec.run(tag("Phi_n(c,0) and M_n(c,1) separable", d, n), [&] {
                const IntPoly phi0 = evaluate_main(dynatomic_poly(fam, n, opts), Integer(0));
                const IntPoly m1 = evaluate_main(multiplier_poly(fam, n, opts).poly, Integer(1));
                return is_separable(phi0) && is_separable(m1);
            });
        }
}

std::vector<Rational> random_rationals(int count, long height, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        if (c == 0 || c == -2 || !seen.insert(c).second)
            continue;
        out.push_back(c);
    }
    return out;
}

void classification_suite(Recorder &rec, const VerifyOptions &opts)
{
    const MultiplierTable table(ParamFamily::unicritical(2), 4, opts.exact);
    rec.run("c=-2 is chebyshev through period 4",
            [&] { return classify_parameter(table, Rational(-2), 4).verdict == Verdict::chebyshev; });
    rec.run("c=0 is power", [&] { return classify_parameter(table, Rational(0), 4).verdict == Verdict::power; });
    const std::string sample_name = std::to_string(opts.random_samples) + " random c of height <= " +
                                    std::to_string(opts.random_height) + " fail by period 4";
    rec.run(sample_name, [&] {
        for (const auto &c : random_rationals(opts.random_samples, opts.random_height, opts.seed))
            if (classify_parameter(table, c, 4).verdict != Verdict::fails)
                return false;
        return true;
    });
    rec.run("reduction to a^3 + b^3 = 4 (symbolic)", fermat_identity_holds);
    rec.run("Delta_1, Delta_2 sign sets meet in {0}",
            [&] { return cubic_real_multiplier_check(opts.exact).pass; });
    for (int d = 4; d <= 6; ++d)
        rec.run("Rolle identity d=" + std::to_string(d), [d] { return rolle_identity_holds(d); });
}

void d3_suite(Recorder &rec, const VerifyOptions &opts)
{
    D3IntegerReport rep;
    rec.run("D_3 integer data", [&] {
        rep = d3_integer_argument(-opts.sandwich_bound, opts.sandwich_bound, opts.exact);
        return true;
    });
    rec.check("square mod 32 forces a = 1 mod 8", rep.residues_force_one_mod8);
    rec.check("D_3(1+8b) non-square for b in -7..13", !rep.d3.is_zero() && rep.exceptional_squares.empty());
    rec.check("sandwich for |b| <= " + std::to_string(opts.sandwich_bound) + " outside -7..13",
              !rep.d3.is_zero() && rep.sandwich_failures.empty());
    rec.run("no rational square up to height " + std::to_string(opts.d3_height),
            [&] { return d3_rational_search(opts.d3_height, opts.exact).empty(); });
}

void descent_suite(Recorder &rec, const VerifyOptions &opts)
{
    rec.run("exactly 3 cube classes mod lambda^3", [] { return cube_residue_check().pass(); });
    const std::string name = "descent search bound " + std::to_string(opts.descent_bound) + " over Z[j], " +
                             std::to_string(opts.descent_rational_bound) + " over Z";
    rec.run(name, [&] { return descent_search(opts.descent_bound, opts.descent_rational_bound, opts.exact).pass(); });
}

void numeric_suite(Recorder &rec, const VerifyOptions &opts)
{
    std::vector<Rational> cs = {Rational(-2), Rational(-1), Rational(1, 4)};
    for (const auto &c : rationals_of_height(5))
        if (std::find(cs.begin(), cs.end(), c) == cs.end())
            cs.push_back(c);
    int parabolic = 0;
    const auto quad = ParamFamily::unicritical(2);
    rec.run("d=2 crosscheck, " + std::to_string(cs.size()) + " parameters, n <= 4", [&] {
        bool ok = true;
        for (const auto &c : cs)
            for (int n = 1; n <= 4; ++n) {
                auto r = crosscheck_multiplier_poly(quad, {c, false}, n, opts.numeric);
                ok = ok && r.pass;
                parabolic += r.parabolic_adjustments;
            }
        return ok;
    });
    rec.run("d=2 orbit bound", [&] {
        return std::all_of(cs.begin(), cs.end(),
                           [&](const Rational &c) { return orbit_bound_check(quad, {c, false}, 4, opts.numeric); });
    });
    const auto cubic = ParamFamily::unicritical(3);
    const std::vector<Rational> us = {Rational(4, 27), Rational(1)};
    rec.run("d=3 crosscheck, u in {4/27, 1}, n <= 2", [&] {
        bool ok = true;
        for (const auto &u : us)
            for (int n = 1; n <= 2; ++n) {
                auto r = crosscheck_multiplier_poly(cubic, {u, true}, n, opts.numeric);
                ok = ok && r.pass;
                parabolic += r.parabolic_adjustments;
            }
        return ok;
    });
    rec.run("d=3 orbit bound", [&] {
        return std::all_of(us.begin(), us.end(),
                           [&](const Rational &u) { return orbit_bound_check(cubic, {u, true}, 2, opts.numeric); });
    });
    rec.check("parabolic adjustment exercised", parabolic > 0);
}

struct CriterionSpec {
    const char *title;
    double budget;
    void (*run)(Recorder &, const VerifyOptions &);
};

const CriterionSpec specs[criterion_count] = {
    {"exact reproduction of multiplier polynomials and discriminants", 10,
     [](Recorder &r, const VerifyOptions &o) { exact_reproduction(r, o.exact); }},
    {"discriminant factorization Delta_n = a_n Q_n R_n^2", 60,
     [](Recorder &r, const VerifyOptions &o) { factorization_suite(r, o.exact); }},
    {"coefficient structure and separability", 60,
     [](Recorder &r, const VerifyOptions &o) { structure_suite(r, o.exact); }},
    {"classification of quadratic and cubic parameters", 30, classification_suite},
    {"symmetric cubic integer argument", 300, d3_suite},
    {"Eisenstein residues and descent search", 300, descent_suite},
    {"numeric multipliers match the exact polynomials", 60, numeric_suite},
};

} // namespace

bool CriterionResult::checks_pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const NamedCheck &c) { return c.pass; });
}

CriterionResult run_criterion(int id, const VerifyOptions &opts)
{
    if (id < 1 || id > criterion_count)
        throw error(errc::bad_param, "criterion must be in 1.." + std::to_string(criterion_count));
    const auto &spec = specs[id - 1];
    CriterionResult out;
    out.id = id;
    out.title = spec.title;
    out.budget_seconds = spec.budget;
    Recorder rec(out.checks);
    const auto start = std::chrono::steady_clock::now();
    spec.run(rec, opts);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions &opts)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id)
        out.push_back(run_criterion(id, opts));
    return out;
}

std::vector<Rational> rationals_of_height(long h)
{
    std::vector<Rational> out;
    for (long q = 1; q <= h; ++q)
        for (long p = -h; p <= h; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dynatome
