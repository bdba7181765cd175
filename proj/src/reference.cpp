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

#include "dynatome/reference.hpp"

#include "dynatome/error.hpp"

namespace dynatome::reference {

namespace {

const IntPoly t = int_poly({0, 1});
const ParamPoly lambda = param_poly({{0}, {1}});

ParamPoly lin(std::initializer_list<long> t_coeffs) { return lambda + lift_param(int_poly(t_coeffs)); }

void check_range(int n, int hi)
{
    if (n < 1 || n > hi)
        throw error(errc::bad_param, "no reference value for period " + std::to_string(n));
}

} // namespace

ParamPoly quadratic_m(int n)
{
    check_range(n, 4);
    switch (n) {
    case 1:
        return param_poly({{0, 4}, {-2}, {1}});
    case 2:
        return param_poly({{-4, -4}, {1}});
    case 3:
        return param_poly({{64, 64, 128, 64}, {-16, -8}, {1}});
    default:
        return param_poly({{-4096, 0, -8192, -12288, -12288, -12288, -4096},
                           {768, 0, 256, -256, -256},
                           {-48, 0, 16},
                           {1}});
    }
}

IntPoly quadratic_delta(int n)
{
    check_range(n, 4);
    switch (n) {
    case 1:
        return int_poly({4, -16});
    case 2:
        return IntPoly(1);
    case 3:
        return IntPoly(-64) * int_poly({7, 4}) * t.pow(2);
    default:
        return IntPoly(-ipow(2, 24)) * int_poly({135, 108, 144, 64}) * int_poly({2, 1}).pow(2) * t.pow(6);
    }
}

ParamPoly cubic_m(int n)
{
    check_range(n, 2);
    if (n == 1)
        return param_poly({{0, 0, -27}, {9}, {-6}, {1}});
    return param_poly({{-729, 0, -1458, 0, -729}, {243, 0, 162}, {-27}, {1}});
}

IntPoly cubic_delta(int n)
{
    check_range(n, 2);
    if (n == 1)
        return IntPoly(-729) * int_poly({-4, 0, 27}) * t.pow(2);
    return IntPoly(-ipow(3, 12)) * int_poly({32, 0, 27}) * t.pow(6);
}

ParamPoly symcubic_m(int n)
{
    check_range(n, 2);
    if (n == 1)
        return lin({0, -1}) * lin({-3, 2}).pow(2);
    return lin({-9, -12, -4}) * lin({-9, 0, 2}).pow(2);
}

ParamPoly symcubic_n3()
{
    return param_poly({
        {531441, 354294, 236196, -196830, -131220, -34992, -23328, 36936, 24624, -6912, -4608, 384, 256},
        {-78732, -39366, -8748, -7290, 5832, 5832, -432, -792, 0, 32},
        {4374, 1458, -324, 486, 396, -72, -48},
        {-108, -18, 12, 2},
        {1},
    });
}

IntPoly symcubic_d3() { return int_poly({2197, 1690, 715, 376, -113, -206, -35, 16, 4}); }

} // namespace dynatome::reference
