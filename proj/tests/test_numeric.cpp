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
#include "dynatome/numeric.hpp"

using namespace dynatome;

namespace {

ComplexPoly quad(long double c) { return {Complex(c), Complex(0), Complex(1)}; }

bool near(Complex a, Complex b, long double tol = 1e-10L) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("polynomial roots with multiplicity")
{
    // (z - 1)^2 (z + 2)
    auto r = polynomial_roots({Complex(2), Complex(-3), Complex(0), Complex(1)});
    REQUIRE(r.size() == 3);
    CHECK(near(r[0], -2));
    CHECK(near(r[1], 1, 1e-15L));
    CHECK(near(r[2], 1, 1e-15L));
    // (z - 1/2)^3
    r = polynomial_roots({Complex(-0.125L), Complex(0.75L), Complex(-1.5L), Complex(1)});
    REQUIRE(r.size() == 3);
    for (auto z : r)
        CHECK(near(z, 0.5L, 1e-15L));
}

TEST_CASE("cycles of simple maps")
{
    auto cycles = find_cycles(quad(0), 1);
    REQUIRE(cycles.size() == 2);
    CHECK(near(cycles[0].point, 0));
    CHECK(near(cycles[0].multiplier, 0));
    CHECK(near(cycles[1].point, 1));
    CHECK(near(cycles[1].multiplier, 2));

    cycles = find_cycles(quad(-1), 2);
    REQUIRE(cycles.size() == 1);
    CHECK(near(cycles[0].multiplier, 0));
    CHECK(cycles[0].orbit.size() == 2);

    cycles = find_cycles(quad(-2), 3);
    REQUIRE(cycles.size() == 2);
    CHECK(near(cycles[0].multiplier, -8, 1e-9L) != near(cycles[1].multiplier, -8, 1e-9L));
    for (const auto &c : cycles) {
        CHECK(std::abs(std::abs(c.multiplier) - 8) < 1e-9L);
        CHECK(c.residual <= 1e-12L);
    }
}

TEST_CASE("numeric multipliers match the exact polynomial")
{
    auto fam = ParamFamily::unicritical(2);
    for (auto c : {Rational(-2), Rational(-1), Rational(1, 4), Rational(-3, 4), Rational(-5, 4), Rational(3, 2)})
        for (int n = 1; n <= 4; ++n) {
            auto rep = crosscheck_multiplier_poly(fam, {c, false}, n);
            INFO("c=" << to_string(c) << " n=" << n << " dev=" << static_cast<double>(rep.max_deviation));
            CHECK(rep.pass);
        }

    auto rep = crosscheck_multiplier_poly(fam, {Rational(1, 4), false}, 1);
    CHECK(rep.parabolic_adjustments == 1);
    CHECK(rep.cycles == 1);
    rep = crosscheck_multiplier_poly(fam, {Rational(-3, 4), false}, 2);
    CHECK(rep.parabolic_adjustments == 1);
    CHECK(rep.cycles == 0);

    auto cubic = ParamFamily::unicritical(3);
    rep = crosscheck_multiplier_poly(cubic, {Rational(4, 27), true}, 1);
    CHECK(rep.pass);
    CHECK(rep.parabolic_adjustments == 1);
    CHECK(crosscheck_multiplier_poly(cubic, {Rational(4, 27), true}, 2).pass);
    CHECK(crosscheck_multiplier_poly(cubic, {Rational(1), true}, 2).pass);
    CHECK(crosscheck_multiplier_poly(ParamFamily::symcubic(), {Rational(2), false}, 3).pass);
}

TEST_CASE("orbit bound")
{
    auto fam = ParamFamily::unicritical(2);
    CHECK(orbit_bound_check(fam, {Rational(-1), false}, 2));
    CHECK(orbit_bound_check(fam, {Rational(0), false}, 3));
    CHECK(orbit_bound_check(fam, {Rational(-2), false}, 3));
    CHECK(orbit_bound_check(ParamFamily::unicritical(3), {Rational(1), true}, 2));
    CHECK_THROWS_AS(orbit_bound_check(ParamFamily::symcubic(), {Rational(1), false}, 1), error);
}
