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
#include "dynatome/eisenstein.hpp"

using namespace dynatome;

namespace {

EisensteinInt E(long a, long b) { return {Integer(a), Integer(b)}; }

} // namespace

TEST_CASE("ring arithmetic")
{
    const auto j = EisensteinInt::j();
    const auto lam = EisensteinInt::lambda();
    CHECK(j * j * j == E(1, 0));
    CHECK(j * j + j + E(1, 0) == E(0, 0));
    CHECK(lam * lam == E(0, -3));
    CHECK(lam.cube() == E(-3, -6));
    CHECK(lam.cube().norm() == 27);
    CHECK((E(4, 0) - lam.cube() * j).norm() == 7);
    for (const auto &u : units<Integer>())
        CHECK(u.norm() == 1);
    // 3 = -j^2 lambda^2
    CHECK(-(j * j) * lam * lam == E(3, 0));
}

TEST_CASE("Euclidean division")
{
    const auto lam = EisensteinInt::lambda();
    auto [q, r] = euclidean_div(E(3, 0), lam);
    CHECK(r.is_zero());
    CHECK(q * lam == E(3, 0));
    std::tie(q, r) = euclidean_div(lam, lam);
    CHECK(q == E(1, 0));
    CHECK(r.is_zero());
    std::tie(q, r) = euclidean_div(E(1, 0), lam);
    CHECK(r.norm() < 3);
    CHECK_THROWS_AS(euclidean_div(E(1, 0), E(0, 0)), error);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        EisensteinInt x = E(dist(rng), dist(rng)), y = E(dist(rng) / 10, dist(rng) / 10);
        if (y.is_zero())
            continue;
        std::tie(q, r) = euclidean_div(x, y);
        CHECK(q * y + r == x);
        CHECK(r.norm() < y.norm());
        EisensteinInt z = E(dist(rng), dist(rng));
        CHECK((x * z).norm() == x.norm() * z.norm());
    }
}

TEST_CASE("residues mod lambda")
{
    CHECK(residue_mod_lambda(EisensteinInt::j()) == 1);
    CHECK(residue_mod_lambda(EisensteinInt::lambda()) == 0);
    CHECK(residue_mod_lambda(E(5, 0)) == -1);

    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> dist(-500, 500);
    auto wrap = [](int v) { return ((v % 3) + 4) % 3 - 1; };
    for (int i = 0; i < 1000; ++i) {
        EisensteinInt x = E(dist(rng), dist(rng)), y = E(dist(rng), dist(rng));
        const int rx = residue_mod_lambda(x), ry = residue_mod_lambda(y);
        CHECK(residue_mod_lambda(x + y) == wrap(rx + ry));
        CHECK(residue_mod_lambda(x * y) == rx * ry);
        SmallEisenstein s{x.a.get_si(), x.b.get_si()};
        CHECK(residue_mod_lambda(s) == rx);
        CHECK(class_mod_lambda3(s) == class_mod_lambda3(x));
        // x and x + lambda^3 w share their class
        SmallEisenstein w{dist(rng), dist(rng)};
        CHECK(class_mod_lambda3(s + SmallEisenstein::lambda().cube() * w) == class_mod_lambda3(s));
    }
}

TEST_CASE("cubes modulo lambda^3")
{
    auto rep = cube_residue_check();
    CHECK(rep.classes == 27);
    CHECK(rep.cube_image.size() == 3);
    CHECK(rep.image_is_plus_minus_one_zero);
    CHECK(rep.refined_statement);
    CHECK(rep.pass());
    const SmallEisenstein one{1, 0};
    CHECK(class_mod_lambda3(one.cube()) == class_mod_lambda3(one));
    const SmallEisenstein x = one + SmallEisenstein::lambda();
    CHECK(class_mod_lambda3(x.cube()) == class_mod_lambda3(one));
}

TEST_CASE("descent search")
{
    auto rep = descent_search(4, 50);
    CHECK(rep.nonzero_z.empty());
    CHECK(rep.rational_nonzero_z.empty());
    CHECK(rep.eisenstein_solutions > 0);
    CHECK(rep.rational_solutions > 0);
    CHECK(rep.min_distance_norm == 7);
    CHECK(rep.cube_distance_ok);
    CHECK(rep.pass());

    Options four;
    four.threads = 4;
    auto again = descent_search(4, 50, four);
    CHECK(again.eisenstein_solutions == rep.eisenstein_solutions);
    CHECK(again.rational_solutions == rep.rational_solutions);
}
