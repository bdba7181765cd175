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

#ifndef DYNATOME_DISC_FACTOR_HPP
#define DYNATOME_DISC_FACTOR_HPP

#include <string>

#include "dynatome/multiplier.hpp"

namespace dynatome {

/// disc_lambda M_n. A multiplier polynomial of degree 1 has discriminant 1.
IntPoly delta_n(const ParamFamily &fam, int n, const Options &opts = {});
IntPoly delta_n(const MultiplierPoly &m, const Options &opts = {});

/// res_lambda(C_l, M_k): vanishes where a period-k cycle has a primitive l-th
/// root of unity as multiplier.
IntPoly p_kl(const ParamFamily &fam, int k, long l, const Options &opts = {});
IntPoly p_kl(const MultiplierPoly &m_k, long l, const Options &opts = {});

/// M_n(t, 1) divided by the product of P_{k, n/k} over the proper divisors k
/// of n.
IntPoly q_n(const ParamFamily &fam, int n, const Options &opts = {});

struct DeltaFactorization {
    IntPoly delta;
    Integer a;   // squarefree
    IntPoly q;   // Q_n
    IntPoly r;   // positive leading coefficient
    int square_sign = 1; // sign of the primitive part whose square root was taken
    std::string family_id;
    int period = 0;
};

/// Delta_n = a Q_n R^2 with a squarefree and lc(R) > 0, verified by
/// reassembly.
DeltaFactorization factor_delta(const ParamFamily &fam, int n, const Options &opts = {});

/// gcd(Q_n, R_n) has positive degree.
bool common_root_check(const DeltaFactorization &f);

/// Period-3 data of z^3 + a z, where M_3 is a square.
struct SymcubicPeriod3 {
    ParamPoly n3;       // square root of M_3
    IntPoly disc;       // disc_lambda N_3
    IntPoly cofactor;   // 2^12 3^12 (4a^3+12a^2-3a-27)^2 (a-3)^4 (a+3)^4 a^12
    IntPoly d3;         // disc / cofactor
};
SymcubicPeriod3 symcubic_period3(const Options &opts = {});

} // namespace dynatome

#endif
