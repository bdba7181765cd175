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

#ifndef DYNATOME_CLASSIFY_HPP
#define DYNATOME_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "dynatome/disc_factor.hpp"
#include "dynatome/exact_ops.hpp"
#include "dynatome/multiplier.hpp"

namespace dynatome {

/// M_1..M_N and their discriminants for one family, computed once and reused
/// across parameter values.
class MultiplierTable {
public:
    MultiplierTable(const ParamFamily &fam, int max_period, const Options &opts = {});

    const ParamFamily &family() const { return fam_; }
    int max_period() const { return static_cast<int>(m_.size()); }
    const MultiplierPoly &m(int n) const { return m_.at(static_cast<std::size_t>(n - 1)); }
    /// disc_lambda M_n (zero when M_n has a repeated factor).
    const IntPoly &delta(int n) const { return delta_.at(static_cast<std::size_t>(n - 1)); }

    /// M_n at a parameter value. For z^d + c with d >= 3 and `is_power`, the
    /// value is u = c^(d-1).
    RatPoly m_at(int n, const Rational &value, bool is_power) const;
    Rational delta_at(int n, const Rational &value, bool is_power) const;

private:
    ParamFamily fam_;
    std::vector<MultiplierPoly> m_;
    std::vector<IntPoly> delta_;
};

enum class Verdict { power, chebyshev, all_integer, all_rational, fails };

std::string verdict_name(Verdict v);

struct PeriodRecord {
    int period = 0;
    RatPoly m;                       // M_n at the parameter
    std::vector<RootMultiplicity> roots;
    bool splits_over_q = false;
    bool splits_over_z = false;
    Rational delta;
    bool delta_is_square = false;
};

struct ClassificationReport {
    std::string family_id;
    Rational value;
    bool value_is_power = false; // value is c^(d-1)
    int max_period = 0;
    std::vector<PeriodRecord> periods;
    Verdict verdict = Verdict::fails;
    int failing_period = 0; // first period that does not split over Q
    /// "power", "chebyshev", "all-integer-up-to-N", "all-rational-up-to-N" or
    /// "fails-at-period-n".
    std::string verdict_text() const;
};

/// Evaluates M_1..M_N at the parameter and classifies it. For z^d + c with
/// d >= 3 pass `is_power` and u = c^(d-1).
ClassificationReport classify_parameter(const MultiplierTable &table, const Rational &value, int max_period,
                                        bool is_power = false);
ClassificationReport classify_parameter(const ParamFamily &fam, const Rational &value, int max_period,
                                        bool is_power = false, const Options &opts = {});

/// T_d with T_d(z + 1/z) = z^d + z^-d.
IntPoly chebyshev_poly(int d);
/// T_d(z + 1/z) z^d = z^(2d) + 1 as a polynomial identity.
bool chebyshev_identity_holds(int d);

struct IntegerMultiplierReport {
    bool pass = false;
    std::vector<RationalRoots> periods; // roots of M_n for n = 1..N
};
/// Builds M_n for a fixed monic integer polynomial and checks that each one
/// splits over Z.
IntegerMultiplierReport verify_integer_multipliers(const IntPoly &f, int max_period, const Options &opts = {});

enum class Parametrization { quad_int_period12, quad_rat_period13, cubic_rat_fixed };
std::string parametrization_name(Parametrization p);
Parametrization parse_parametrization(const std::string &name);

struct NamedCheck {
    std::string name;
    bool pass = false;
};

struct ParametrizationReport {
    Parametrization which{};
    Rational param;
    Rational value; // c, or c^2 for cubic_rat_fixed
    std::vector<NamedCheck> checks;
    bool pass() const;
};
/// BadParam when the parameter is not admissible (m must be an integer;
/// r != 0 for the period-1-3 family).
ParametrizationReport verify_parametrization(Parametrization which, const Rational &param, const Options &opts = {});

/// a = (r - 18) / (3(4c + 3)), b = -(r + 18) / (3(4c + 3)); asserts
/// a^3 + b^3 = 4. BadParam unless r^2 = -(64c^3 + 144c^2 + 108c + 135) and
/// c != -3/4.
std::pair<Rational, Rational> reduction_to_fermat(const Rational &c, const Rational &r);
/// (r - 18)^3 - (r + 18)^3 - 108(4c + 3)^3 = -108(64c^3 + 144c^2 + 108c + 135 + r^2)
/// in Z[c][r], which is the cleared form of the reduction.
bool fermat_identity_holds();
struct FermatSearchHit {
    Rational c, r, a, b;
};
/// Parameters c = p/q with |p|, |q| <= bound where -(64c^3 + ...) is a
/// rational square, each pushed through reduction_to_fermat.
std::vector<FermatSearchHit> fermat_pair_search(long bound);

/// Real set where p >= 0, as closed intervals with rational endpoints.
/// Requires every real root of p to be rational (checked with Sturm).
struct RationalInterval {
    std::optional<Rational> lo; // empty means -infinity
    std::optional<Rational> hi; // empty means +infinity
};
std::vector<RationalInterval> nonnegative_set(const IntPoly &p);
std::vector<RationalInterval> intersect(const std::vector<RationalInterval> &a, const std::vector<RationalInterval> &b);
std::string to_string(const RationalInterval &iv);

struct CubicRealReport {
    std::vector<RationalInterval> delta1_nonneg; // in u = c^2
    std::vector<RationalInterval> delta2_nonneg;
    std::vector<RationalInterval> intersection;
    bool pass = false; // intersection is {0}
};
CubicRealReport cubic_real_multiplier_check(const Options &opts = {});

/// lambda^d M_1(1/lambda + d) = (-d)^d c^(d-1) lambda^d + d lambda + 1 and its
/// derivative, as identities in Z[c][lambda].
bool rolle_identity_holds(int d);

struct D3IntegerReport {
    IntPoly d3;
    std::vector<int> square_residues_mod32;   // a in [0, 32) with D_3(a) a square mod 32
    bool residues_force_one_mod8 = false;
    std::vector<long> exceptional_squares;    // b in -7..13 where D_3(1+8b) is a square (expected none)
    long b_lo = 0, b_hi = 0;
    std::vector<long> sandwich_failures;      // b outside -7..13 where the bound fails
    bool pass() const
    {
        return residues_force_one_mod8 && exceptional_squares.empty() && sandwich_failures.empty();
    }
};
/// L(b) = 8192 b^4 + 6144 b^3 + 720 b^2 - 252 b - 50.
IntPoly sandwich_l();
D3IntegerReport d3_integer_argument(long b_lo, long b_hi, const Options &opts = {});

/// Rationals a = p/q of height <= max_height where D_3(a) is a rational
/// square (expected: none).
std::vector<Rational> d3_rational_search(long max_height, const Options &opts = {});

} // namespace dynatome

#endif
