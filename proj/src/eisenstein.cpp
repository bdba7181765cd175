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

#include "dynatome/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

namespace dynatome {

std::string to_string(const EisensteinInt &x)
{
    std::string s = to_string(x.a);
    if (sgn(x.b) >= 0)
        s += "+";
    return s + to_string(x.b) + "j";
}

namespace {

// Nearest integer to p / n (n > 0), ties toward zero.
Integer round_quotient(const Integer &p, const Integer &n)
{
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), n.get_mpz_t());
    Integer twice = 2 * r;
    if (twice > n || (twice == n && sgn(q) < 0))
        q += 1;
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int signed_residue(std::int64_t r) { return r == 2 ? -1 : static_cast<int>(r); }

} // namespace

std::pair<EisensteinInt, EisensteinInt> euclidean_div(const EisensteinInt &x, const EisensteinInt &y)
{
    if (y.is_zero())
        throw error(errc::div_by_zero, "Eisenstein division by zero");
    const Integer n = y.norm();
    const EisensteinInt num = x * y.conj();
    EisensteinInt q{round_quotient(num.a, n), round_quotient(num.b, n)};
    EisensteinInt r = x - q * y;
    return {q, r};
}

int residue_mod_lambda(const EisensteinInt &x)
{
    // j = 1 mod lambda and Z meets lambda A in 3Z.
    Integer s = x.a + x.b;
    return signed_residue(static_cast<std::int64_t>(mpz_fdiv_ui(s.get_mpz_t(), 3)));
}

int residue_mod_lambda(const SmallEisenstein &x) { return signed_residue(mod_floor(x.a + x.b, 3)); }

int class_mod_lambda3(const SmallEisenstein &x)
{
    const std::int64_t a0 = mod_floor(x.a, 3);
    const std::int64_t k = (x.a - a0) / 3;
    const std::int64_t b0 = mod_floor(x.b - 6 * k, 9);
    return static_cast<int>(a0 * 9 + b0);
}

int class_mod_lambda3(const EisensteinInt &x)
{
    Integer a0 = x.a % 3;
    if (sgn(a0) < 0)
        a0 += 3;
    Integer k = (x.a - a0) / 3;
    Integer b = x.b - 6 * k;
    const long b0 = static_cast<long>(mpz_fdiv_ui(b.get_mpz_t(), 9));
    return static_cast<int>(a0.get_si() * 9 + b0);
}

SmallEisenstein class_representative(int index)
{
    if (index < 0 || index >= 27)
        throw error(errc::bad_param, "class index out of range");
    return {index / 9, index % 9};
}

std::int64_t norm_distance_to_lambda3(const SmallEisenstein &x)
{
    static const std::array<std::int64_t, 27> table = [] {
        std::array<std::int64_t, 27> t;
        t.fill(std::numeric_limits<std::int64_t>::max());
        // Covers a fundamental domain of the lattice many times over.
        for (std::int64_t a = -9; a <= 9; ++a)
            for (std::int64_t b = -9; b <= 9; ++b) {
                SmallEisenstein e{a, b};
                auto &slot = t[static_cast<std::size_t>(class_mod_lambda3(e))];
                slot = std::min(slot, e.norm());
            }
        return t;
    }();
    return table[static_cast<std::size_t>(class_mod_lambda3(x))];
}

CubeResidueReport cube_residue_check()
{
    CubeResidueReport rep;
    std::set<int> image;
    rep.refined_statement = true;
    for (int i = 0; i < 27; ++i) {
        SmallEisenstein x = class_representative(i);
        ++rep.classes;
        const int cube_class = class_mod_lambda3(x.cube());
        image.insert(cube_class);
        const int e = residue_mod_lambda(x);
        if (cube_class != class_mod_lambda3(SmallEisenstein{e, 0}))
            rep.refined_statement = false;
    }
    rep.cube_image.assign(image.begin(), image.end());
    std::set<int> expected = {class_mod_lambda3(SmallEisenstein{-1, 0}), class_mod_lambda3(SmallEisenstein{0, 0}),
                              class_mod_lambda3(SmallEisenstein{1, 0})};
    rep.image_is_plus_minus_one_zero = image == expected;
    return rep;
}

namespace {

std::uint64_t key(const SmallEisenstein &e)
{
    constexpr std::int64_t offset = std::int64_t(1) << 31;
    return (static_cast<std::uint64_t>(e.a + offset) << 32) | static_cast<std::uint64_t>(e.b + offset);
}

struct ZEntry {
    SmallEisenstein z, v;
};

} // namespace

DescentReport descent_search(std::int64_t bound, std::int64_t rational_bound, const Options &opts)
{
    if (bound < 1 || rational_bound < 1)
        throw error(errc::bad_param, "search bounds must be >= 1");
    if (bound > 300 || rational_bound > 1'000'000)
        throw error(errc::bad_param, "search bound too large for 64-bit coordinates");
    DescentReport rep;
    rep.bound = bound;
    rep.rational_bound = rational_bound;
    const auto unit = units<std::int64_t>();

    std::vector<SmallEisenstein> box;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            box.push_back({a, b});
    std::vector<SmallEisenstein> cubes;
    for (const auto &e : box)
        cubes.push_back(e.cube());

    std::unordered_map<std::uint64_t, std::vector<ZEntry>> targets;
    for (std::size_t i = 0; i < box.size(); ++i)
        for (const auto &v : unit) {
            SmallEisenstein w = SmallEisenstein{4, 0} * v * cubes[i];
            targets[key(w)].push_back({box[i], v});
        }

    std::vector<std::uint64_t> counts(box.size(), 0);
    std::vector<std::vector<DescentSolution>> found(box.size());
    parallel_for(box.size(), opts.threads, [&](std::size_t ix) {
        for (std::size_t iy = 0; iy < box.size(); ++iy)
            for (const auto &u : unit) {
                SmallEisenstein w = cubes[ix] + u * cubes[iy];
                auto it = targets.find(key(w));
                if (it == targets.end())
                    continue;
                for (const auto &t : it->second) {
                    ++counts[ix];
                    if (!t.z.is_zero())
                        found[ix].push_back({box[ix], box[iy], t.z, u, t.v});
                }
            }
    });
    for (std::size_t i = 0; i < box.size(); ++i) {
        rep.eisenstein_solutions += counts[i];
        rep.nonzero_z.insert(rep.nonzero_z.end(), found[i].begin(), found[i].end());
    }

    const std::int64_t r = rational_bound;
    const std::size_t span = static_cast<std::size_t>(2 * r + 1);
    std::vector<std::uint64_t> rcounts(span, 0);
    std::vector<std::vector<std::array<std::int64_t, 3>>> rfound(span);
    parallel_for(span, opts.threads, [&](std::size_t i) {
        const std::int64_t x = static_cast<std::int64_t>(i) - r;
        for (std::int64_t y = -r; y <= r; ++y) {
            // Exact in __int128: |x|, |y| <= 10^6.
            __int128 s = static_cast<__int128>(x) * x * x + static_cast<__int128>(y) * y * y;
            if (s % 4 != 0)
                continue;
            __int128 t = s / 4;
            auto guess = static_cast<std::int64_t>(std::llround(std::cbrt(static_cast<long double>(t))));
            for (std::int64_t z = guess - 1; z <= guess + 1; ++z) {
                if (z < -r || z > r)
                    continue;
                if (static_cast<__int128>(z) * z * z == t) {
                    ++rcounts[i];
                    if (z != 0)
                        rfound[i].push_back({x, y, z});
                }
            }
        }
    });
    for (std::size_t i = 0; i < span; ++i) {
        rep.rational_solutions += rcounts[i];
        rep.rational_nonzero_z.insert(rep.rational_nonzero_z.end(), rfound[i].begin(), rfound[i].end());
    }

    rep.min_distance_norm = std::numeric_limits<std::int64_t>::max();
    for (const auto &u : unit)
        rep.min_distance_norm = std::min(rep.min_distance_norm, norm_distance_to_lambda3(SmallEisenstein{4, 0} * u));

    rep.cube_distance_ok = true;
    for (std::int64_t a = -6; a <= 6; ++a)
        for (std::int64_t b = -6; b <= 6; ++b)
            for (std::int64_t c = -6; c <= 6; ++c)
                for (std::int64_t d = -6; d <= 6; ++d)
                    for (const auto &u : unit) {
                        SmallEisenstein w = SmallEisenstein{a, b}.cube() + u * SmallEisenstein{c, d}.cube();
                        if (norm_distance_to_lambda3(w) > 4)
                            rep.cube_distance_ok = false;
                    }
    return rep;
}

} // namespace dynatome
