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

#ifndef DYNATOME_NUMERIC_HPP
#define DYNATOME_NUMERIC_HPP

#include <complex>
#include <vector>

#include "dynatome/dynatomic.hpp"

namespace dynatome {

using Complex = std::complex<long double>;
/// Ascending coefficients.
using ComplexPoly = std::vector<Complex>;

struct NumericOptions {
    /// Bound on |f^n(z) - z| at every reported periodic point.
    long double residual_tol = 1e-12L;
    /// Points closer than this are treated as the same point of an orbit.
    long double group_tol = 1e-8L;
    /// Bound on the deviation between numeric and exact multipliers.
    long double match_tol = 1e-8L;
    int max_iterations = 500;
};

struct CycleRecord {
    int period = 0;
    Complex point;
    Complex multiplier;
    long double residual = 0;
    std::vector<Complex> orbit;
};

/// Roots of p with multiplicity: simultaneous (Aberth) iteration, clustering
/// of multiple roots and Newton polishing of the appropriate derivative.
/// NonConvergence when the iteration cap is hit.
std::vector<Complex> polynomial_roots(const ComplexPoly &p, const NumericOptions &opts = {});

/// f evaluated at a parameter value.
ComplexPoly specialize(const ParamFamily &fam, Complex t);

/// Cycles of exact period n of the polynomial map f.
std::vector<CycleRecord> find_cycles(const ComplexPoly &f, int n, const NumericOptions &opts = {});

/// A parameter value as accepted by the numeric checks: for z^d + c with
/// d >= 3 the value is u = c^(d-1) and c is its principal root.
struct ParamValue {
    Rational value;
    bool is_power = false; // value is c^(d-1)
};

struct CrosscheckReport {
    bool pass = false;
    long double max_deviation = 0;
    long double max_residual = 0;
    int cycles = 0;
    int parabolic_adjustments = 0;
    std::vector<Complex> numeric; // including adjustments, paired order
    std::vector<Complex> exact;   // roots of M_n at the parameter, paired order
};

/// Multipliers of period-n cycles against the roots of M_n at the parameter.
/// MismatchedCount when the multisets have different sizes.
CrosscheckReport crosscheck_multiplier_poly(const ParamFamily &fam, const ParamValue &value, int n,
                                            const NumericOptions &opts = {});

/// Every periodic point of period <= n satisfies |z| <= 1 + |c|^(1/d) + tol.
/// WrongFamily unless fam is z^d + c.
bool orbit_bound_check(const ParamFamily &fam, const ParamValue &value, int n, const NumericOptions &opts = {});

} // namespace dynatome

#endif
