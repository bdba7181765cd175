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

#ifndef DYNATOME_EISENSTEIN_HPP
#define DYNATOME_EISENSTEIN_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dynatome/error.hpp"
#include "dynatome/integer.hpp"
#include "dynatome/options.hpp"

namespace dynatome {

/// a + b j with j^2 + j + 1 = 0.
template <class T>
struct basic_eisenstein {
    T a{0}, b{0};

    basic_eisenstein() = default;
    basic_eisenstein(T a_, T b_) : a(std::move(a_)), b(std::move(b_)) {}

    static basic_eisenstein j() { return {T(0), T(1)}; }
    /// lambda = 1 - j.
    static basic_eisenstein lambda() { return {T(1), T(-1)}; }

    T norm() const { return a * a - a * b + b * b; }
    /// Complex conjugate: j maps to j^2 = -1 - j.
    basic_eisenstein conj() const { return {a - b, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }

    friend basic_eisenstein operator+(const basic_eisenstein &x, const basic_eisenstein &y)
    {
        return {x.a + y.a, x.b + y.b};
    }
    friend basic_eisenstein operator-(const basic_eisenstein &x, const basic_eisenstein &y)
    {
        return {x.a - y.a, x.b - y.b};
    }
    friend basic_eisenstein operator-(const basic_eisenstein &x) { return {-x.a, -x.b}; }
    friend basic_eisenstein operator*(const basic_eisenstein &x, const basic_eisenstein &y)
    {
        T bd = x.b * y.b;
        return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
    }
    friend bool operator==(const basic_eisenstein &x, const basic_eisenstein &y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const basic_eisenstein &x, const basic_eisenstein &y) { return !(x == y); }
    friend bool operator<(const basic_eisenstein &x, const basic_eisenstein &y)
    {
        return x.a < y.a || (x.a == y.a && x.b < y.b);
    }

    basic_eisenstein cube() const { return *this * *this * *this; }
};

using EisensteinInt = basic_eisenstein<Integer>;
using SmallEisenstein = basic_eisenstein<std::int64_t>;

/// 1, -j^2 = 1 + j, j, -1, j^2 = -1 - j, -j in counterclockwise order.
template <class T>
std::array<basic_eisenstein<T>, 6> units()
{
    return {basic_eisenstein<T>{T(1), T(0)}, {T(1), T(1)},  {T(0), T(1)},
            {T(-1), T(0)},                 {T(-1), T(-1)}, {T(0), T(-1)}};
}

std::string to_string(const EisensteinInt &x);

/// x = q y + r with norm(r) < norm(y); q rounds each coordinate of x / y to
/// the nearest integer, ties toward zero. DivByZero when y = 0.
std::pair<EisensteinInt, EisensteinInt> euclidean_div(const EisensteinInt &x, const EisensteinInt &y);

/// Representative of x mod lambda in {-1, 0, 1}.
int residue_mod_lambda(const EisensteinInt &x);
int residue_mod_lambda(const SmallEisenstein &x);

/// Canonical index in [0, 27) of the class of x modulo lambda^3. The lattice
/// lambda^3 A has basis 3 + 6j, 9j.
int class_mod_lambda3(const SmallEisenstein &x);
int class_mod_lambda3(const EisensteinInt &x);
/// Representative a0 + b0 j with 0 <= a0 < 3, 0 <= b0 < 9.
SmallEisenstein class_representative(int index);
/// Squared distance from x to lambda^3 A (minimal norm in its class).
std::int64_t norm_distance_to_lambda3(const SmallEisenstein &x);

struct CubeResidueReport {
    int classes = 0;               // 27
    std::vector<int> cube_image;   // sorted class indices of cubes
    bool image_is_plus_minus_one_zero = false;
    bool refined_statement = false; // x = e mod lambda implies x^3 = e mod lambda^3
    bool pass() const { return classes == 27 && cube_image.size() == 3 && image_is_plus_minus_one_zero && refined_statement; }
};
CubeResidueReport cube_residue_check();

struct DescentSolution {
    SmallEisenstein x, y, z, u, v;
};

struct DescentReport {
    std::int64_t bound = 0;
    std::uint64_t eisenstein_solutions = 0;      // tuples (x, y, z, u, v), z = 0 included
    std::vector<DescentSolution> nonzero_z;      // expected empty
    std::int64_t rational_bound = 0;
    std::uint64_t rational_solutions = 0;        // x^3 + y^3 = 4 z^3 over Z, z = 0 included
    std::vector<std::array<std::int64_t, 3>> rational_nonzero_z; // expected empty
    std::int64_t min_distance_norm = 0;          // min norm(4u - lambda^3 w); 7 expected
    bool cube_distance_ok = false;               // x^3 + u y^3 within distance 2 of lambda^3 A
    bool pass() const
    {
        return nonzero_z.empty() && rational_nonzero_z.empty() && min_distance_norm == 7 && cube_distance_ok;
    }
};

/// x^3 + u y^3 = 4 v z^3 over coordinates |a|, |b| <= bound with all units
/// u, v; x^3 + y^3 = 4 z^3 over |x|, |y|, |z| <= rational_bound; the sqrt(7)
/// distance and the cube-distance fact over a radius-6 box.
DescentReport descent_search(std::int64_t bound, std::int64_t rational_bound, const Options &opts = {});

} // namespace dynatome

#endif
