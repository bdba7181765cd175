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

#ifndef DYNATOME_MULTIPLIER_HPP
#define DYNATOME_MULTIPLIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "dynatome/dynatomic.hpp"
#include "dynatome/options.hpp"
#include "dynatome/poly.hpp"

namespace dynatome {

/// Monic polynomial in lambda over Z[t] whose roots are the multipliers of the
/// period-n cycles.
struct MultiplierPoly {
    ParamPoly poly;
    std::string family_id;
    FamilyKind kind = FamilyKind::custom;
    int degree = 0; // d of the family
    int period = 0;
};

/// res_z(Phi_n, lambda - (f^n)'(z)) in Z[t][lambda]. Evaluated on a grid of
/// integer (t, lambda) points and interpolated in both directions.
ParamPoly multiplier_resultant(const ParamFamily &fam, int n, const Options &opts = {});
/// Same resultant with t kept symbolic: Bareiss elimination over Z[t] at each
/// lambda node, then interpolation in lambda. Slow; used for cross-checks.
ParamPoly multiplier_resultant_bareiss(const ParamFamily &fam, int n);
/// Upper bound for deg_t of the multiplier resultant, from the growth of the
/// periodic points in t.
int multiplier_resultant_degree_bound(const ParamFamily &fam, int n, const Options &opts = {});

/// The n-th root of multiplier_resultant.
MultiplierPoly multiplier_poly(const ParamFamily &fam, int n, const Options &opts = {});

/// lambda (lambda - d)^(d-1) + (-d)^d c^(d-1).
MultiplierPoly closed_form_m1(int d);

/// q with p(t) = q(t^e), if p only has exponents divisible by e.
std::optional<IntPoly> in_power_variable(const IntPoly &p, int e);
/// q with p(c) = q(d^d c^(d-1)) over Z, if it exists.
std::optional<IntPoly> in_u_variable(const IntPoly &p, int d);

struct StructureCheck {
    bool pass = false;
    std::string witness;
};

struct StructureReport {
    StructureCheck coefficient_subring; // coefficients in Z[d^d c^(d-1)]
    StructureCheck degree_in_c;         // (d-1) nu(n) / d
    StructureCheck leading_coefficient; // +-d^nu(n)
    StructureCheck degree_in_lambda;    // nu(n) / n
    bool pass() const
    {
        return coefficient_subring.pass && degree_in_c.pass && leading_coefficient.pass && degree_in_lambda.pass;
    }
};

/// WrongFamily unless M comes from a unicritical family.
StructureReport verify_coefficient_structure(const MultiplierPoly &m);

} // namespace dynatome

#endif
