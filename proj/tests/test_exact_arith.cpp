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
#include "dynatome/exact_ops.hpp"
#include "dynatome/resultant.hpp"

using namespace dynatome;

namespace {

IntPoly random_int_poly(std::mt19937_64 &rng, int degree, long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
    for (auto &x : c)
        x = dist(rng);
    if (sgn(c.back()) == 0)
        c.back() = 1;
    return IntPoly::from_coeffs(std::move(c));
}

ParamPoly random_param_poly(std::mt19937_64 &rng, int degree, int param_degree, long range)
{
    std::vector<IntPoly> c;
    for (int k = 0; k <= degree; ++k)
        c.push_back(random_int_poly(rng, param_degree, range));
    return ParamPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("integer helpers")
{
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(Rational(5)) == "5/1");
    CHECK(to_string(parse_rational("-7/14")) == "-1/2");
    CHECK(height(Rational(-9, 4)) == 9);
    CHECK(height(Rational(3, 11)) == 11);
    CHECK(*is_rational_square(Rational(9, 4)) == Rational(3, 2));
    CHECK(*is_rational_square(Rational(256)) == 16);
    CHECK_FALSE(is_rational_square(Rational(-4)));
    CHECK_FALSE(is_rational_square(Rational(2, 9)));
    CHECK_THROWS_AS(parse_rational("1/0"), error);
}

TEST_CASE("squarefree part")
{
    auto s = squarefree_part(-4);
    CHECK(s.squarefree == -1);
    CHECK(s.root == 2);
    s = squarefree_part(12);
    CHECK(s.squarefree == 3);
    CHECK(s.root == 2);
    s = squarefree_part(ipow(2, 24));
    CHECK(s.squarefree == 1);
    CHECK(s.root == 4096);
    s = squarefree_part(Integer(729) * 49 * 11);
    CHECK(s.squarefree == 11);
    CHECK(s.root == 27 * 7);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Integer n = static_cast<long>(rng() % 2000000) - 1000000;
        if (n == 0)
            continue;
        s = squarefree_part(n);
        CHECK(s.squarefree * s.root * s.root == n);
        CHECK(s.root > 0);
        CHECK(squarefree_part(s.squarefree).root == 1);
    }
}

TEST_CASE("polynomial arithmetic")
{
    IntPoly p = int_poly({1, 2, 1});
    CHECK(p == int_poly({1, 1}).pow(2));
    CHECK(*int_poly_sqrt(p) == int_poly({1, 1}));
    CHECK_FALSE(int_poly_sqrt(int_poly({1, 2, 2})));
    CHECK(gcd(int_poly({-1, 0, 1}), int_poly({2, 2})) == int_poly({1, 1}));
    CHECK(format_poly(int_poly({135, 108, 144, 64}), "c") == "64*c^3 + 144*c^2 + 108*c + 135");
    CHECK(int_poly({0, 1}).compose(int_poly({1, 1})) == int_poly({1, 1}));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        IntPoly a = random_int_poly(rng, 4, 20), b = random_int_poly(rng, 3, 20);
        auto q = exact_div(a * b, b);
        REQUIRE(q);
        CHECK(*q == a);
        auto qr = divide_with_remainder(a * b + int_poly({1}), b);
        if (qr)
            CHECK(qr->first * b + qr->second == a * b + int_poly({1}));
    }
}

TEST_CASE("squarefree decomposition")
{
    IntPoly f = int_poly({-1, 1}).pow(3) * int_poly({2, 0, 1}).pow(2) * int_poly({5, 3}).scaled(-6);
    Integer unit;
    auto parts = squarefree_decomposition(f, &unit);
    IntPoly back(unit);
    for (const auto &[g, m] : parts)
        back *= g.pow(static_cast<unsigned>(m));
    CHECK(back == f);
    CHECK(parts.size() == 3);
}

TEST_CASE("integer resultants and discriminants")
{
    CHECK(resultant(int_poly({1, 0, 1}), int_poly({-1, 1})) == 2);
    CHECK(resultant(int_poly({-5, 1}), int_poly({-5, 1})) == 0);
    CHECK(discriminant(int_poly({1, -2, 1})) == 0);
    CHECK(discriminant(int_poly({-1, 0, 0, 1})) == -27);
    CHECK(discriminant(int_poly({3, 2, 1})) == -8);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_int_poly(rng, 1 + static_cast<int>(rng() % 5), 30);
        IntPoly b = random_int_poly(rng, 1 + static_cast<int>(rng() % 5), 30);
        IntPoly c = random_int_poly(rng, 1 + static_cast<int>(rng() % 3), 30);
        Integer ab = resultant(a, b), ba = resultant(b, a);
        const int sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
        CHECK(ab == sign * ba);
        CHECK(resultant(a, b * c) == ab * resultant(a, c));
        ParamPoly pa = lift_constant(a), pb = lift_constant(b);
        CHECK(bareiss_determinant(sylvester_matrix(pa, pb)) == IntPoly(ab));
    }
}

TEST_CASE("parametric resultant agrees with Bareiss")
{
    // At c = 0 the multiplier of z^2 - z is res_z(z^2 - z, lambda - 2z).
    ParamPoly z2 = param_poly({{0}, {-1}, {1}});
    ParamPoly lin = param_poly({{0, 1}, {-2}});
    CHECK(resultant_x(z2, lin) == int_poly({0, -2, 1}));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        ParamPoly a = random_param_poly(rng, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 9);
        ParamPoly b = random_param_poly(rng, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 9);
        Options opts;
        opts.threads = 2;
        CHECK(resultant_x(a, b, opts) == resultant_x_bareiss(a, b));
    }
}

TEST_CASE("parametric discriminant")
{
    // lambda^2 - 2 lambda + 4c
    ParamPoly m1 = param_poly({{0, 4}, {-2}, {1}});
    CHECK(discriminant_x(m1) == int_poly({4, -16}));
    CHECK(is_separable(m1));
    ParamPoly square = param_poly({{1}, {-2}, {1}});
    CHECK(discriminant_x(square).is_zero());
    CHECK_FALSE(is_separable(square));
}

TEST_CASE("exact division and nth roots")
{
    ParamPoly a = param_poly({{1, 1}, {0, 2}, {1}});
    ParamPoly b = param_poly({{-3}, {1}});
    CHECK(exact_divide(a * b, b) == a);
    CHECK_THROWS_AS(exact_divide(a * b + ParamPoly(IntPoly(1)), b), error);
    try {
        exact_divide(a, b);
    } catch (const error &e) {
        CHECK(e.code() == errc::not_divisible);
    }
    CHECK(nth_root_poly(a.pow(3), 3) == a);
    CHECK(nth_root_poly(a.pow(2), 2) == a);
    try {
        nth_root_poly(a * a + ParamPoly(IntPoly(1)), 2);
        FAIL("expected NotAPower");
    } catch (const error &e) {
        CHECK(e.code() == errc::not_a_power);
    }

    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        ParamPoly q = random_param_poly(rng, 1 + static_cast<int>(rng() % 4), 2, 5);
        std::vector<IntPoly> c = q.coeffs();
        c.back() = IntPoly(1);
        q = ParamPoly::from_coeffs(std::move(c));
        const unsigned n = 2 + static_cast<unsigned>(rng() % 2);
        CHECK(nth_root_poly(q.pow(n), n) == q);
    }
}

TEST_CASE("rational roots")
{
    // (l + 16)^2 (l - 16)
    auto r = rational_roots(int_poly({-4096, -256, 16, 1}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].value == -16);
    CHECK(r.roots[0].multiplicity == 2);
    CHECK(r.roots[1].value == 16);
    CHECK(r.splits_over_z);

    r = rational_roots(int_poly({-64, 0, 1}));
    CHECK(r.with_multiplicity() == std::vector<Rational>{-8, 8});

    r = rational_roots(int_poly({-2, 0, 1}));
    CHECK(r.roots.empty());
    CHECK_FALSE(r.splits_over_q);

    // 6x^3 - 5x^2 - 2x + 1 = (x - 1)(2x + 1)(3x - 1)
    r = rational_roots(int_poly({1, -2, -5, 6}));
    CHECK(r.with_multiplicity() == std::vector<Rational>{Rational(-1, 2), Rational(1, 3), Rational(1)});
    CHECK(r.splits_over_q);
    CHECK_FALSE(r.splits_over_z);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<Rational> roots;
        IntPoly f(1);
        for (int k = 0; k < n; ++k) {
            long num = static_cast<long>(rng() % 41) - 20;
            long den = 1 + static_cast<long>(rng() % 6);
            Rational q(num, den);
            q.canonicalize();
            roots.push_back(q);
            f *= int_poly({-q.get_num().get_si(), q.get_den().get_si()});
        }
        IntPoly g = f;
        if (rng() % 2 == 0)
            g *= int_poly({3, 0, 1}); // irrational extra factor
        std::sort(roots.begin(), roots.end());
        auto rr = rational_roots(g);
        CHECK(rr.with_multiplicity() == roots);
        CHECK(rr.splits_over_q == (g == f));
    }
}

TEST_CASE("Sturm counts")
{
    SturmSequence s(int_poly({-2, 0, 1}));
    CHECK(s.count_real() == 2);
    CHECK(s.count_between(Rational(0), Rational(2)) == 1);
    SturmSequence t(int_poly({1, 0, 1}));
    CHECK(t.count_real() == 0);
    SturmSequence u(int_poly({135, 108, 144, 64}));
    CHECK(u.count_real() == 1);
}
