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

#include "doctest.h"
#include "dynatome/disc_factor.hpp"
#include "dynatome/exact_ops.hpp"

using namespace dynatome;

namespace {

const IntPoly c = int_poly({0, 1});

IntPoly constant(const Integer &x) { return IntPoly(x); }

} // namespace

TEST_CASE("discriminants of quadratic multiplier polynomials")
{
    auto fam = ParamFamily::unicritical(2);
    CHECK(delta_n(fam, 1) == int_poly({4, -16}));
    CHECK(delta_n(fam, 2) == IntPoly(1));
    CHECK(delta_n(fam, 3) == constant(-64) * int_poly({7, 4}) * c.pow(2));
    CHECK(delta_n(fam, 4) ==
          constant(-ipow(2, 24)) * int_poly({135, 108, 144, 64}) * int_poly({2, 1}).pow(2) * c.pow(6));
}

TEST_CASE("discriminants of cubic multiplier polynomials")
{
    auto fam = ParamFamily::unicritical(3);
    CHECK(delta_n(fam, 1) == constant(-729) * int_poly({-4, 0, 27}) * c.pow(2));
    CHECK(delta_n(fam, 2) == constant(-ipow(3, 12)) * int_poly({32, 0, 27}) * c.pow(6));
}

TEST_CASE("parabolic collision polynomials")
{
    auto fam = ParamFamily::unicritical(2);
    CHECK(p_kl(fam, 1, 2) == int_poly({3, 4}));
    CHECK(p_kl(fam, 1, 3) == int_poly({7, 4, 16}));
    CHECK(p_kl(fam, 2, 2) == int_poly({-5, -4}));
    CHECK(p_kl(fam, 1, 4) == int_poly({5, -8, 16}));
    CHECK(p_kl(fam, 2, 3) == int_poly({21, 36, 16}));
    CHECK(p_kl(fam, 3, 2) == int_poly({81, 72, 128, 64}));

    // leading coefficient +-1 in u = 4c, and pairwise coprime
    std::vector<IntPoly> all;
    for (auto [k, l] : std::vector<std::pair<int, long>>{{1, 2}, {1, 3}, {2, 2}, {1, 4}, {2, 3}, {3, 2}}) {
        IntPoly p = p_kl(fam, k, l);
        auto u = in_u_variable(p, 2);
        REQUIRE(u);
        CHECK(abs(u->leading()) == 1);
        all.push_back(p);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK(gcd(all[i], all[j]).degree() == 0);
}

TEST_CASE("Q_n")
{
    auto fam = ParamFamily::unicritical(2);
    CHECK(q_n(fam, 1) == int_poly({-1, 4}));
    CHECK(q_n(fam, 2) == IntPoly(-1));
    CHECK(q_n(fam, 3) == int_poly({7, 4}));
    CHECK(q_n(fam, 4) == int_poly({135, 108, 144, 64}));
    auto cubic = ParamFamily::unicritical(3);
    CHECK(q_n(cubic, 1) == int_poly({4, 0, -27}));
    CHECK(q_n(cubic, 2) == int_poly({32, 0, 27}));
    CHECK(q_n(cubic, 3) == int_poly_from_strings({"1235663104", "0", "2517023808", "0", "4861018656", "0",
                                                  "7042734864", "0", "5693327433", "0", "2324522934", "0",
                                                  "387420489"}));
    for (int n = 1; n <= 4; ++n) {
        IntPoly q = q_n(fam, n);
        CHECK(is_separable(q));
        auto u = in_u_variable(q, 2);
        REQUIRE(u);
        CHECK(abs(u->leading()) == 1);
    }
}

TEST_CASE("factorization of the discriminant")
{
    auto fam = ParamFamily::unicritical(2);
    auto f1 = factor_delta(fam, 1);
    CHECK(f1.a == -1);
    CHECK(f1.q == int_poly({-1, 4}));
    CHECK(f1.r == IntPoly(2));
    CHECK_FALSE(common_root_check(f1));

    auto f3 = factor_delta(fam, 3);
    CHECK(f3.a == -1);
    CHECK(f3.q == int_poly({7, 4}));
    CHECK(f3.r == int_poly({0, 8}));
    CHECK_FALSE(common_root_check(f3));

    auto f4 = factor_delta(fam, 4);
    CHECK(f4.a == -1);
    CHECK(f4.r == IntPoly(4096) * c.pow(3) * int_poly({2, 1}));
    CHECK_FALSE(common_root_check(f4));

    auto g1 = factor_delta(ParamFamily::unicritical(3), 1);
    CHECK(g1.a == 1);
    CHECK(g1.q == int_poly({4, 0, -27}));
    CHECK(g1.r == int_poly({0, 27}));
    CHECK_FALSE(common_root_check(g1));

    auto g2 = factor_delta(ParamFamily::unicritical(3), 2);
    CHECK(g2.a == -1);
    CHECK(g2.r == IntPoly(729) * c.pow(3));
}

TEST_CASE("odd-multiplicity roots of the discriminant are the roots of Q_n")
{
    auto fam = ParamFamily::unicritical(2);
    for (int n = 1; n <= 4; ++n) {
        IntPoly delta = delta_n(fam, n);
        IntPoly odd(1);
        for (const auto &[g, m] : squarefree_decomposition(delta))
            if (m % 2 == 1)
                odd *= g;
        CHECK(odd == primitive_part(q_n(fam, n)));
    }
}

TEST_CASE("fixed-point factorization closed forms")
{
    for (int d = 2; d <= 5; ++d) {
        auto f = factor_delta(ParamFamily::unicritical(d), 1);
        CHECK(f.a == ((d * (d + 1) / 2) % 2 == 0 ? 1 : -1));
        std::vector<Integer> r(static_cast<std::size_t>((d - 1) * (d - 2) / 2 + 1), Integer(0));
        r.back() = ipow(d, static_cast<unsigned long>(d * (d - 1) / 2));
        CHECK(f.r == IntPoly::from_coeffs(std::move(r)));
    }
}

TEST_CASE("period-3 discriminant of the symmetric cubic")
{
    auto s = symcubic_period3();
    CHECK(s.d3 == int_poly({2197, 1690, 715, 376, -113, -206, -35, 16, 4}));
    CHECK(s.disc == s.cofactor * s.d3);
}
