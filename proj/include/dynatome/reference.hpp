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

#ifndef DYNATOME_REFERENCE_HPP
#define DYNATOME_REFERENCE_HPP

#include "dynatome/poly.hpp"

/// Closed forms that the computed objects are compared against.
/// Kept apart from the algorithms so that a regression in either shows up as
/// a mismatch.
namespace dynatome::reference {

/// M_n for z^2 + c, n = 1..4.
ParamPoly quadratic_m(int n);
/// Delta_n for z^2 + c, n = 1..4.
IntPoly quadratic_delta(int n);
/// M_n for z^3 + c, n = 1..2.
ParamPoly cubic_m(int n);
/// Delta_n for z^3 + c, n = 1..2.
IntPoly cubic_delta(int n);
/// M_n for z^3 + a z, n = 1..2.
ParamPoly symcubic_m(int n);
/// Square root of M_3 for z^3 + a z.
ParamPoly symcubic_n3();
/// Degree-8 factor of disc N_3.
IntPoly symcubic_d3();

} // namespace dynatome::reference

#endif
