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

#ifndef DYNATOME_POLY_HPP
#define DYNATOME_POLY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynatome/dense_poly.hpp"
#include "dynatome/integer.hpp"

namespace dynatome {

/// Element of Z[t]: a polynomial in the family parameter (c or a).
using IntPoly = DensePoly<Integer>;
/// Element of Z[t][x]: coefficient k is the IntPoly multiplying x^k, where x is
/// the main variable (z or lambda).
using ParamPoly = DensePoly<IntPoly>;
using RatPoly = DensePoly<Rational>;

IntPoly int_poly(std::initializer_list<long> ascending);
IntPoly int_poly_from_strings(const std::vector<std::string> &ascending);
/// Outer index is the main-variable degree.
ParamPoly param_poly(std::initializer_list<std::initializer_list<long>> ascending);

/// gcd of the coefficients, nonnegative; zero for the zero polynomial.
Integer content(const IntPoly &p);
/// p / content(p), with a positive leading coefficient.
IntPoly primitive_part(const IntPoly &p);
/// gcd over Z[t] with positive leading coefficient (primitive PRS).
IntPoly gcd(const IntPoly &a, const IntPoly &b);
/// Yun's algorithm. Returns (factor, multiplicity) pairs with factors
/// primitive, squarefree and pairwise coprime; `unit_content` receives the
/// signed constant so that p = unit_content * prod factor^multiplicity.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly &p, Integer *unit_content = nullptr);

/// Exact square root over Z[t] with positive leading coefficient.
std::optional<IntPoly> int_poly_sqrt(const IntPoly &p);

RatPoly to_rat_poly(const IntPoly &p);
/// Clears denominators: returns the primitive integer polynomial with positive
/// leading coefficient proportional to p.
IntPoly clear_denominators(const RatPoly &p);

int max_param_degree(const ParamPoly &p);
/// Substitutes t = t0, leaving a polynomial in the main variable.
IntPoly specialize_param(const ParamPoly &p, const Integer &t0);
RatPoly specialize_param(const ParamPoly &p, const Rational &t0);
/// Substitutes the main variable x = x0, leaving a polynomial in t.
IntPoly evaluate_main(const ParamPoly &p, const Integer &x0);
/// Exchanges the roles of t and x.
ParamPoly swap_variables(const ParamPoly &p);
/// Embeds a polynomial in x with integer coefficients (constant in t).
ParamPoly lift_constant(const IntPoly &p_in_x);
/// Embeds a polynomial in t as a degree-0 element of Z[t][x].
inline ParamPoly lift_param(const IntPoly &p_in_t) { return ParamPoly(p_in_t); }

/// Descending-degree rendering such as "64*c^3 + 144*c^2 - 1".
std::string format_poly(const IntPoly &p, std::string_view var);
std::string format_poly(const RatPoly &p, std::string_view var);
std::string format_poly(const ParamPoly &p, std::string_view main_var, std::string_view param_var);

} // namespace dynatome

#endif
