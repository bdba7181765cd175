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

#ifndef DYNATOME_DYNATOMIC_HPP
#define DYNATOME_DYNATOMIC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dynatome/options.hpp"
#include "dynatome/poly.hpp"

namespace dynatome {

enum class FamilyKind { unicritical, symcubic, custom };

/// Monic polynomial family f_t(z) in Z[t][z].
class ParamFamily {
public:
    /// z^d + c.
    static ParamFamily unicritical(int d);
    /// z^3 + a z.
    static ParamFamily symcubic();
    /// Any monic polynomial of degree >= 2 in z over Z[t]. A parameter-free
    /// map is a custom family whose coefficients are constants.
    static ParamFamily custom(ParamPoly f, std::string param_symbol = "t");

    int degree() const { return poly_.degree(); }
    FamilyKind kind() const { return kind_; }
    const ParamPoly &poly() const { return poly_; }
    /// "c" for unicritical, "a" for symcubic.
    const std::string &param_symbol() const { return symbol_; }
    /// "unicritical(2)", "symcubic" or "custom".
    std::string id() const;

private:
    ParamFamily(FamilyKind kind, ParamPoly poly, std::string symbol);

    FamilyKind kind_;
    ParamPoly poly_;
    std::string symbol_;
};

int mobius(long n);
long euler_phi(long n);
/// Positive divisors in increasing order.
std::vector<long> divisors(long n);
/// sum over k | n of mu(n/k) d^k: the number of points of exact period n
/// counted with multiplicity.
Integer nu(int d, int n);

/// f^n(z), degree d^n. SizeLimit when d^n exceeds opts.degree_cap.
ParamPoly iterate(const ParamFamily &fam, int n, const Options &opts = {});
/// Product over k | n of (f^k(z) - z)^mu(n/k), by one exact division.
ParamPoly dynatomic_poly(const ParamFamily &fam, int n, const Options &opts = {});
/// Cyclotomic polynomial C_l by exact division of x^l - 1.
IntPoly cyclotomic(long l);

} // namespace dynatome

#endif
