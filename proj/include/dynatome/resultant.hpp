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

#ifndef DYNATOME_RESULTANT_HPP
#define DYNATOME_RESULTANT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dynatome/options.hpp"
#include "dynatome/poly.hpp"

namespace dynatome {

// Sign convention throughout: res(A, B) = lc(A)^deg(B) * prod B(alpha) over the
// roots alpha of A, which is the determinant of the Sylvester matrix with the
// deg(B) shifted rows of A on top.

/// Subresultant PRS over Z (coefficients of a univariate polynomial).
Integer resultant(const IntPoly &a, const IntPoly &b);
/// disc(p) = (-1)^(m(m-1)/2) res(p, p') / lc(p).
Integer discriminant(const IntPoly &p);

/// Fraction-free Gaussian elimination; C must be an integral domain with
/// exact_div.
template <class C>
C bareiss_determinant(std::vector<std::vector<C>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return C(1);
    C prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m[p][k]))
                ++p;
            if (p == n)
                return C(0);
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                C v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_div(v, prev);
                if (!q)
                    throw error(errc::internal, "Bareiss step was not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = C(0);
        }
        prev = m[k][k];
    }
    C det = m[n - 1][n - 1];
    return negate ? C(-det) : det;
}

template <class C>
std::vector<std::vector<C>> sylvester_matrix(const DensePoly<C> &a, const DensePoly<C> &b)
{
    const int m = a.degree(), n = b.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<C>> s(size, std::vector<C>(size, C(0)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(n - k)];
    return s;
}

/// Integer evaluation nodes 0, 1, -1, 2, -2, ...
Integer node(std::size_t index);

/// Newton interpolation at integer nodes. The values must come from an
/// integer polynomial of degree < nodes.size(); divided differences then stay
/// integral, and an inexact step raises an internal error.
IntPoly interpolate(const std::vector<Integer> &nodes, const std::vector<Integer> &values);

/// Resultant in the main variable, computed by evaluation at integer
/// parameter values and interpolation. `degree_bound` overrides the
/// Sylvester bound on deg_t of the result when the caller knows a tighter one.
IntPoly resultant_x(const ParamPoly &a, const ParamPoly &b, const Options &opts = {},
                    std::optional<int> degree_bound = std::nullopt);
/// Same value via Bareiss elimination on the Sylvester matrix over Z[t].
IntPoly resultant_x_bareiss(const ParamPoly &a, const ParamPoly &b);

/// deg_t of res_x(a, b) is at most this (row-degree bound of the Sylvester
/// matrix).
int sylvester_degree_bound(const ParamPoly &a, const ParamPoly &b);

IntPoly discriminant_x(const ParamPoly &p, const Options &opts = {});

} // namespace dynatome

#endif
