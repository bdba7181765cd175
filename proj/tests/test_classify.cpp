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

#include <random>

#include "doctest.h"
#include "dynatome/classify.hpp"

using namespace dynatome;

namespace {

std::vector<Rational> roots_of(const PeriodRecord &rec)
{
    std::vector<Rational> out;
    for (const auto &r : rec.roots)
        for (int i = 0; i < r.multiplicity; ++i)
            out.push_back(r.value);
    return out;
}

std::vector<Rational> Q(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("classification of special parameters")
{
    auto rep = classify_parameter(ParamFamily::unicritical(2), Rational(-2), 3);
    CHECK(rep.verdict == Verdict::chebyshev);
    CHECK(rep.verdict_text() == "chebyshev");
    CHECK(roots_of(rep.periods[0]) == Q({-2, 4}));
    CHECK(roots_of(rep.periods[1]) == Q({-4}));
    CHECK(roots_of(rep.periods[2]) == Q({-8, 8}));
    for (const auto &p : rep.periods)
        CHECK(p.splits_over_z);

    rep = classify_parameter(ParamFamily::unicritical(2), Rational(0), 2);
    CHECK(rep.verdict == Verdict::power);
    CHECK(roots_of(rep.periods[0]) == Q({0, 2}));
    CHECK(roots_of(rep.periods[1]) == Q({4}));

    rep = classify_parameter(ParamFamily::unicritical(2), Rational(1), 1);
    CHECK(rep.verdict == Verdict::fails);
    CHECK(rep.verdict_text() == "fails-at-period-1");
    CHECK(rep.periods[0].delta == -12);
    CHECK_FALSE(rep.periods[0].delta_is_square);

    // -3/4: fixed-point multipliers {-1, 3}, period-2 multiplier 1
    rep = classify_parameter(ParamFamily::unicritical(2), Rational(-3, 4), 2);
    CHECK(rep.verdict == Verdict::all_integer);
    CHECK(rep.verdict_text() == "all-integer-up-to-2");

    // c = 2/9 has rational fixed-point multipliers that are not integers.
    rep = classify_parameter(ParamFamily::unicritical(2), Rational(2, 9), 1);
    CHECK(rep.verdict == Verdict::all_rational);
    CHECK(roots_of(rep.periods[0]) == std::vector<Rational>{Rational(2, 3), Rational(4, 3)});
    CHECK(rep.periods[0].delta_is_square);

    auto sym = ParamFamily::symcubic();
    CHECK(classify_parameter(sym, Rational(7), 2).verdict == Verdict::all_integer);
    CHECK(classify_parameter(sym, Rational(3), 2).verdict == Verdict::chebyshev);
    CHECK(classify_parameter(sym, Rational(-3), 2).verdict == Verdict::chebyshev);
    CHECK(classify_parameter(sym, Rational(0), 2).verdict == Verdict::power);
}

TEST_CASE("symcubic: integer parameters have integer multipliers through period 2")
{
    MultiplierTable table(ParamFamily::symcubic(), 2);
    for (long a = -20; a <= 20; ++a) {
        auto rep = classify_parameter(table, Rational(a), 2);
        INFO("a=" << a);
        CHECK(rep.periods[0].splits_over_z);
        CHECK(rep.periods[1].splits_over_z);
    }
    // M_1 and M_2 split over Q for every rational a; integrality needs a in Z.
    CHECK(classify_parameter(table, Rational(1, 2), 2).verdict == Verdict::all_rational);
}

TEST_CASE("cubic parameters classified by u = c^2")
{
    MultiplierTable table(ParamFamily::unicritical(3), 2);
    auto rep = classify_parameter(table, Rational(4, 27), 1, true);
    CHECK(rep.value_is_power);
    CHECK(roots_of(rep.periods[0]) == Q({1, 1, 4}));
    CHECK(rep.periods[0].delta == 0);
    CHECK(classify_parameter(table, Rational(0), 2, true).verdict == Verdict::power);

    // c and -c share u, so the report cannot tell them apart; an explicit c
    // gives the same result.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
    for (int i = 0; i < 25; ++i) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        auto by_u = classify_parameter(table, Rational(c * c), 2, true);
        auto by_c = classify_parameter(table, c, 2, false);
        CHECK(by_u.verdict_text() == by_c.verdict_text());
        for (int n = 0; n < 2; ++n) {
            CHECK(by_u.periods[n].m == by_c.periods[n].m);
            CHECK(by_u.periods[n].delta == by_c.periods[n].delta);
        }
    }
}

TEST_CASE("random quadratic parameters fail by period 4")
{
    MultiplierTable table(ParamFamily::unicritical(2), 4);
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
    int tested = 0;
    while (tested < 60) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        if (c == 0 || c == -2)
            continue;
        ++tested;
        auto rep = classify_parameter(table, c, 4);
        INFO("c=" << to_string(c));
        CHECK(rep.verdict == Verdict::fails);
    }
    CHECK(classify_parameter(table, Rational(-2), 4).verdict == Verdict::chebyshev);
}

TEST_CASE("Chebyshev polynomials")
{
    CHECK(chebyshev_poly(2) == int_poly({-2, 0, 1}));
    CHECK(chebyshev_poly(3) == int_poly({0, -3, 0, 1}));
    CHECK(chebyshev_poly(4) == int_poly({2, 0, -4, 0, 1}));
    for (int d = 0; d <= 10; ++d)
        CHECK(chebyshev_identity_holds(d));

    auto rep = verify_integer_multipliers(int_poly({0, -3, 0, 1}), 2);
    CHECK(rep.pass);
    CHECK(rep.periods[0].with_multiplicity() == Q({-3, 9, 9}));
    CHECK(verify_integer_multipliers(chebyshev_poly(2), 3).pass);
    CHECK_FALSE(verify_integer_multipliers(int_poly({1, 0, 1}), 1).pass);
}

TEST_CASE("parametrizations")
{
    auto rep = verify_parametrization(Parametrization::quad_int_period12, Rational(3));
    CHECK(rep.value == -2);
    CHECK(rep.pass());
    for (long m = -10; m <= 10; ++m)
        CHECK(verify_parametrization(Parametrization::quad_int_period12, Rational(m)).pass());
    CHECK_THROWS_AS(verify_parametrization(Parametrization::quad_int_period12, Rational(1, 2)), error);

    rep = verify_parametrization(Parametrization::quad_rat_period13, Rational(1));
    CHECK(rep.value == -2);
    CHECK(rep.pass());
    CHECK_THROWS_AS(verify_parametrization(Parametrization::quad_rat_period13, Rational(0)), error);
    for (long q = 1; q <= 10; ++q)
        for (long p = -10; p <= 10; ++p) {
            Rational r(p, q);
            r.canonicalize();
            if (p == 0 || r.get_den() != q)
                continue;
            INFO("r=" << to_string(r));
            CHECK(verify_parametrization(Parametrization::quad_rat_period13, r).pass());
        }

    rep = verify_parametrization(Parametrization::cubic_rat_fixed, Rational(0));
    CHECK(rep.value == Rational(4, 27));
    CHECK(rep.pass());
    for (long p = -6; p <= 6; ++p)
        CHECK(verify_parametrization(Parametrization::cubic_rat_fixed, Rational(p, 5)).pass());
    CHECK(parse_parametrization("cubic-rat-fixed") == Parametrization::cubic_rat_fixed);
    CHECK_THROWS_AS(parse_parametrization("other"), error);
}

TEST_CASE("reduction to x^3 + y^3 = 4")
{
    CHECK(fermat_identity_holds());
    CHECK_THROWS_AS(reduction_to_fermat(Rational(-3, 4), Rational(0)), error);
    CHECK_THROWS_AS(reduction_to_fermat(Rational(-2), Rational(1)), error);
    CHECK(fermat_pair_search(50).empty());
}

TEST_CASE("real multiplier intervals")
{
    // (x - 1)^2 (x + 2) >= 0 on [-2, +inf)
    auto s = nonnegative_set(int_poly({2, -3, 0, 1}));
    REQUIRE(s.size() == 1);
    CHECK(to_string(s[0]) == "[-2/1, +inf]");
    // -(x - 1)^2 >= 0 only at 1
    s = nonnegative_set(int_poly({-1, 2, -1}));
    REQUIRE(s.size() == 1);
    CHECK(to_string(s[0]) == "[1/1, 1/1]");
    // x^2 - 1 >= 0 outside (-1, 1)
    s = nonnegative_set(int_poly({-1, 0, 1}));
    REQUIRE(s.size() == 2);
    CHECK(to_string(s[0]) == "[-inf, -1/1]");
    CHECK(to_string(s[1]) == "[1/1, +inf]");
    CHECK(nonnegative_set(int_poly({-1, 0, -1})).empty());
    CHECK_THROWS_AS(nonnegative_set(int_poly({-2, 0, 1})), error);

    auto rep = cubic_real_multiplier_check();
    REQUIRE(rep.delta1_nonneg.size() == 1);
    CHECK(to_string(rep.delta1_nonneg[0]) == "[0/1, 4/27]");
    REQUIRE(rep.delta2_nonneg.size() == 1);
    CHECK(to_string(rep.delta2_nonneg[0]) == "[-32/27, 0/1]");
    CHECK(rep.pass);

    for (int d = 2; d <= 6; ++d)
        CHECK(rolle_identity_holds(d));
}

TEST_CASE("D_3 arguments")
{
    auto rep = d3_integer_argument(-120, 120);
    CHECK(rep.d3.eval(Integer(1)) == 4644);
    CHECK(rep.residues_force_one_mod8);
    CHECK(rep.square_residues_mod32 == std::vector<int>{1, 9, 17, 25});
    CHECK(rep.exceptional_squares.empty());
    CHECK(rep.sandwich_failures.empty());
    CHECK(rep.pass());

    // the sandwich does fail inside the exceptional window
    const IntPoly l = sandwich_l();
    const Integer v = rep.d3.eval(Integer(1)), lb = l.eval(Integer(0));
    CHECK_FALSE((lb * lb < v && v < (lb + 1) * (lb + 1)));
    const Integer big = rep.d3.eval(Integer(801)), lbig = l.eval(Integer(100));
    CHECK(lbig * lbig < big);
    CHECK(big < (lbig + 1) * (lbig + 1));

    CHECK(d3_rational_search(10).empty());
    Options two;
    two.threads = 2;
    CHECK(d3_rational_search(30, two).empty());
}
