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
#include "dynatome/exact_ops.hpp"
#include "dynatome/multiplier.hpp"

using namespace dynatome;

namespace {

const ParamPoly lambda = param_poly({{0}, {1}});

ParamPoly lin(std::initializer_list<long> t_coeffs) { return lambda + lift_param(int_poly(t_coeffs)); }

} // namespace

TEST_CASE("quadratic multiplier polynomials")
{
    auto fam = ParamFamily::unicritical(2);
    CHECK(multiplier_poly(fam, 1).poly == param_poly({{0, 4}, {-2}, {1}}));
    CHECK(multiplier_poly(fam, 2).poly == param_poly({{-4, -4}, {1}}));
    CHECK(multiplier_poly(fam, 3).poly == param_poly({{64, 64, 128, 64}, {-16, -8}, {1}}));
    CHECK(multiplier_poly(fam, 4).poly == param_poly({{-4096, 0, -8192, -12288, -12288, -12288, -4096},
                                                      {768, 0, 256, -256, -256},
                                                      {-48, 0, 16},
                                                      {1}}));
}

TEST_CASE("cubic multiplier polynomials")
{
    auto fam = ParamFamily::unicritical(3);
    CHECK(multiplier_poly(fam, 1).poly == param_poly({{0, 0, -27}, {9}, {-6}, {1}}));
    CHECK(multiplier_poly(fam, 2).poly == param_poly({{-729, 0, -1458, 0, -729}, {243, 0, 162}, {-27}, {1}}));
}

TEST_CASE("symmetric cubic multiplier polynomials")
{
    auto fam = ParamFamily::symcubic();
    CHECK(multiplier_poly(fam, 1).poly == lin({0, -1}) * lin({-3, 2}).pow(2));
    CHECK(multiplier_poly(fam, 2).poly == lin({-9, -12, -4}) * lin({-9, 0, 2}).pow(2));
}

TEST_CASE("resultant degree bound")
{
    CHECK(multiplier_resultant_degree_bound(ParamFamily::unicritical(2), 4) == 24);
    CHECK(multiplier_resultant_degree_bound(ParamFamily::unicritical(3), 3) == 48);
    CHECK(multiplier_resultant_degree_bound(ParamFamily::symcubic(), 3) == 72);
}

TEST_CASE("interpolation and Bareiss agree")
{
    for (int n = 1; n <= 3; ++n)
        CHECK(multiplier_resultant(ParamFamily::unicritical(2), n) ==
              multiplier_resultant_bareiss(ParamFamily::unicritical(2), n));
    for (int n = 1; n <= 2; ++n)
        CHECK(multiplier_resultant(ParamFamily::unicritical(3), n) ==
              multiplier_resultant_bareiss(ParamFamily::unicritical(3), n));
}

TEST_CASE("results do not depend on the thread count")
{
    Options one, four;
    four.threads = 4;
    CHECK(multiplier_resultant(ParamFamily::unicritical(2), 4, one) ==
          multiplier_resultant(ParamFamily::unicritical(2), 4, four));
}

TEST_CASE("closed form for fixed points")
{
    CHECK(closed_form_m1(2).poly == param_poly({{0, 4}, {-2}, {1}}));
    CHECK(closed_form_m1(3).poly == param_poly({{0, 0, -27}, {9}, {-6}, {1}}));
    CHECK(closed_form_m1(5).poly == lambda * lin({-5}).pow(4) + lift_param(int_poly({0, 0, 0, 0, -3125})));
    for (int d = 2; d <= 6; ++d)
        CHECK(closed_form_m1(d).poly == multiplier_poly(ParamFamily::unicritical(d), 1).poly);
}

TEST_CASE("coefficient structure")
{
    for (int d = 2; d <= 3; ++d)
        for (int n = 1; n <= 3; ++n) {
            auto report = verify_coefficient_structure(multiplier_poly(ParamFamily::unicritical(d), n));
            INFO("d=" << d << " n=" << n << " " << report.leading_coefficient.witness);
            CHECK(report.pass());
        }
    auto m4 = multiplier_poly(ParamFamily::unicritical(2), 4);
    CHECK(max_param_degree(m4.poly) == 6);
    CHECK(verify_coefficient_structure(m4).pass());
    CHECK_THROWS_AS(verify_coefficient_structure(multiplier_poly(ParamFamily::symcubic(), 1)), error);

    CHECK(*in_u_variable(int_poly({-27, 0, 27}), 3) == int_poly({-27, 1}));
    CHECK_FALSE(in_u_variable(int_poly({0, 1}), 3));
    CHECK_FALSE(in_u_variable(int_poly({0, 0, 1}), 3));
}

TEST_CASE("period-3 multipliers of the symmetric cubic are a square")
{
    ParamPoly n3 = nth_root_poly(multiplier_poly(ParamFamily::symcubic(), 3).poly, 2);
    ParamPoly expected = param_poly({
        {531441, 354294, 236196, -196830, -131220, -34992, -23328, 36936, 24624, -6912, -4608, 384, 256},
        {-78732, -39366, -8748, -7290, 5832, 5832, -432, -792, 0, 32},
        {4374, 1458, -324, 486, 396, -72, -48},
        {-108, -18, 12, 2},
        {1},
    });
    CHECK(n3 == expected);
}
