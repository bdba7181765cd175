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
#include "dynatome/dynatomic.hpp"
#include "dynatome/exact_ops.hpp"

using namespace dynatome;

TEST_CASE("arithmetic functions")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
    CHECK(nu(2, 1) == 2);
    CHECK(nu(2, 4) == 12);
    CHECK(nu(3, 2) == 6);
    CHECK(nu(3, 3) == 24);
    for (int d = 2; d <= 5; ++d)
        for (int n = 1; n <= 8; ++n)
            CHECK(nu(d, n) % n == 0);
}

TEST_CASE("iterates")
{
    auto fam = ParamFamily::unicritical(2);
    CHECK(iterate(fam, 1) == fam.poly());
    CHECK(iterate(fam, 2) == param_poly({{0, 1, 1}, {0}, {0, 2}, {0}, {1}}));
    auto g = ParamFamily::symcubic();
    ParamPoly g2 = iterate(g, 2);
    CHECK(g2.degree() == 9);
    CHECK(g2.is_monic());
    CHECK(g2 == g.poly().compose(g.poly()));

    Options small;
    small.degree_cap = 100;
    CHECK_THROWS_AS(iterate(fam, 7, small), error);
    CHECK_NOTHROW(iterate(fam, 6, small));
}

TEST_CASE("dynatomic polynomials")
{
    auto fam = ParamFamily::unicritical(2);
    CHECK(dynatomic_poly(fam, 1) == param_poly({{0, 1}, {-1}, {1}}));
    CHECK(dynatomic_poly(fam, 2) == param_poly({{1, 1}, {1}, {1}}));
    ParamPoly phi3 = dynatomic_poly(fam, 3);
    CHECK(phi3.degree() == 6);
    CHECK(phi3.is_monic());

    // z^4 + 2cz^2 - z + c^2 + c divided by z^2 - z + c
    CHECK(exact_divide(param_poly({{0, 1, 1}, {-1}, {0, 2}, {0}, {1}}), param_poly({{0, 1}, {-1}, {1}})) ==
          param_poly({{1, 1}, {1}, {1}}));

    const ParamPoly z = param_poly({{0}, {1}});
    for (const auto &[f, max_n] : std::vector<std::pair<ParamFamily, int>>{
             {ParamFamily::unicritical(2), 4}, {ParamFamily::unicritical(3), 3}, {ParamFamily::symcubic(), 3}}) {
        for (int n = 1; n <= max_n; ++n) {
            ParamPoly product(IntPoly(1));
            for (long k : divisors(n))
                product *= dynatomic_poly(f, static_cast<int>(k));
            CHECK(product == iterate(f, n) - z);
            ParamPoly phi = dynatomic_poly(f, n);
            CHECK(Integer(phi.degree()) == nu(f.degree(), n));
            CHECK(phi.is_monic());
        }
    }
}

TEST_CASE("dynatomic polynomials at z = 0 are separable in c")
{
    for (int d = 2; d <= 3; ++d) {
        auto fam = ParamFamily::unicritical(d);
        for (int n = 1; n <= 4; ++n) {
            if (d == 3 && n == 4)
                continue;
            IntPoly at_zero = dynatomic_poly(fam, n)[0];
            CHECK(is_separable(at_zero));
        }
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == int_poly({-1, 1}));
    CHECK(cyclotomic(2) == int_poly({1, 1}));
    CHECK(cyclotomic(3) == int_poly({1, 1, 1}));
    CHECK(cyclotomic(6) == int_poly({1, -1, 1}));
    for (long m = 1; m <= 12; ++m) {
        IntPoly product(1);
        for (long l : divisors(m))
            product *= cyclotomic(l);
        std::vector<Integer> c(static_cast<std::size_t>(m + 1), Integer(0));
        c[0] = -1;
        c.back() = 1;
        CHECK(product == IntPoly::from_coeffs(std::move(c)));
        CHECK(cyclotomic(m).degree() == euler_phi(m));
    }
}
