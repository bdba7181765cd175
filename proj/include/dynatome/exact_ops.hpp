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

#ifndef DYNATOME_EXACT_OPS_HPP
#define DYNATOME_EXACT_OPS_HPP

#include <utility>
#include <vector>

#include "dynatome/options.hpp"
#include "dynatome/poly.hpp"

namespace dynatome {

/// q with q * den = num in Z[t][x]; NotDivisible otherwise.
ParamPoly exact_divide(const ParamPoly &num, const ParamPoly &den);
IntPoly exact_divide(const IntPoly &num, const IntPoly &den);

/// Monic q with q^n = p, matched from the top coefficient down and then
/// verified by re-exponentiation; NotAPower otherwise.
ParamPoly nth_root_poly(const ParamPoly &p, unsigned n);
IntPoly nth_root_poly(const IntPoly &p, unsigned n);

struct RootMultiplicity {
    Rational value;
    int multiplicity;
};

struct RationalRoots {
    std::vector<RootMultiplicity> roots; // ascending by value
    bool splits_over_q = false;
    bool splits_over_z = false;

    /// Roots repeated according to multiplicity, ascending.
    std::vector<Rational> with_multiplicity() const;
};

RationalRoots rational_roots(const IntPoly &p);
RationalRoots rational_roots(const RatPoly &p);

/// gcd(p, p') is constant.
bool is_separable(const IntPoly &p);
/// disc_x(p) != 0, i.e. gcd(p, dp/dx) has degree 0 in x over Q(t).
bool is_separable(const ParamPoly &p, const Options &opts = {});

/// Sturm chain of a squarefree integer polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const IntPoly &squarefree);

    int variations_at(const Rational &x) const;
    int variations_at_infinity(bool positive) const;
    /// Distinct real roots in the open interval (a, b); a and b must not be roots.
    int count_between(const Rational &a, const Rational &b) const;
    int count_real() const;

    const std::vector<IntPoly> &chain() const { return chain_; }

private:
    std::vector<IntPoly> chain_;
};

/// Sign of p(x): -1, 0 or 1.
int sign_at(const IntPoly &p, const Rational &x);

/// Strict Cauchy bound: every real root lies in (-B, B).
Integer cauchy_bound(const IntPoly &p);

} // namespace dynatome

#endif
