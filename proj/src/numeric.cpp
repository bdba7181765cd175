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

#include "dynatome/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dynatome/multiplier.hpp"

namespace dynatome {

namespace {

constexpr long double pi = 3.141592653589793238462643383279502884L;

long double to_ld(const Integer &x) { return std::stold(x.get_str()); }
long double to_ld(const Rational &x) { return to_ld(x.get_num()) / to_ld(x.get_den()); }

ComplexPoly trimmed(ComplexPoly p)
{
    while (!p.empty() && p.back() == Complex(0))
        p.pop_back();
    return p;
}

Complex horner(const ComplexPoly &p, Complex z)
{
    Complex acc = 0;
    for (std::size_t k = p.size(); k-- > 0;)
        acc = acc * z + p[k];
    return acc;
}

ComplexPoly derivative(const ComplexPoly &p)
{
    ComplexPoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * static_cast<long double>(k));
    return d;
}

ComplexPoly multiply(const ComplexPoly &a, const ComplexPoly &b)
{
    if (a.empty() || b.empty())
        return {};
    ComplexPoly out(a.size() + b.size() - 1, Complex(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// f(g) by Horner in f's coefficients.
ComplexPoly compose(const ComplexPoly &f, const ComplexPoly &g)
{
    ComplexPoly acc;
    for (std::size_t k = f.size(); k-- > 0;) {
        acc = multiply(acc, g);
        if (acc.empty())
            acc.push_back(0);
        acc[0] += f[k];
    }
    return trimmed(acc);
}

// Scale of p(z)'s terms, for relative residuals.
long double magnitude(const ComplexPoly &p, Complex z)
{
    long double acc = 0, az = std::abs(z);
    for (std::size_t k = p.size(); k-- > 0;)
        acc = acc * az + std::abs(p[k]);
    return acc;
}

struct DistinctRoot {
    Complex z;
    int multiplicity;
};

std::vector<DistinctRoot> distinct_roots(const ComplexPoly &input, const NumericOptions &opts)
{
    ComplexPoly p = trimmed(input);
    if (p.empty())
        throw error(errc::bad_param, "roots of the zero polynomial");
    const std::size_t n = p.size() - 1;
    if (n == 0)
        return {};
    const Complex lead = p.back();
    for (auto &c : p)
        c /= lead;

    // Fujiwara bound for the starting circle.
    long double radius = 0;
    for (std::size_t k = 1; k <= n; ++k)
        radius = std::max(radius, std::pow(std::abs(p[n - k]), 1.0L / static_cast<long double>(k)));
    radius = 2 * radius + 1;

    const ComplexPoly dp = derivative(p);
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i)
        z[i] = std::polar(radius, 2 * pi * static_cast<long double>(i) / static_cast<long double>(n) + 0.4L);

    bool converged = false;
    for (int it = 0; it < opts.max_iterations && !converged; ++it) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            Complex pv = horner(p, z[i]);
            if (pv == Complex(0))
                continue;
            Complex w = pv / horner(dp, z[i]);
            Complex s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    s += Complex(1) / (z[i] - z[j]);
            Complex step = w / (Complex(1) - w * s);
            z[i] -= step;
            if (!(std::abs(step) <= 1e-17L * (1 + std::abs(z[i]))))
                converged = false;
        }
    }
    for (const auto &x : z)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw error(errc::non_convergence, "root iteration diverged");

    // Multiple roots come out as tight clusters; single-linkage grouping.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= 1e-5L * (1 + std::abs(z[i])))
                parent[find(i)] = find(j);

    std::vector<DistinctRoot> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) != i)
            continue;
        Complex sum = 0;
        int m = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (find(j) == i) {
                sum += z[j];
                ++m;
            }
        Complex root = sum / static_cast<long double>(m);
        // A root of multiplicity m is a simple root of the (m-1)-th derivative.
        ComplexPoly q = p;
        for (int k = 1; k < m; ++k)
            q = derivative(q);
        const ComplexPoly dq = derivative(q);
        for (int it = 0; it < 60; ++it) {
            Complex d = horner(dq, root);
            if (d == Complex(0))
                break;
            Complex step = horner(q, root) / d;
            root -= step;
            if (std::abs(step) <= 1e-19L * (1 + std::abs(root)))
                break;
        }
        const long double value = std::abs(horner(p, root));
        if (!(value == 0 || value <= 1e-10L * magnitude(p, root)))
            throw error(errc::non_convergence, "root refinement did not reach the residual target");
        out.push_back({root, m});
    }
    std::sort(out.begin(), out.end(), [](const DistinctRoot &a, const DistinctRoot &b) {
        return a.z.real() < b.z.real() || (a.z.real() == b.z.real() && a.z.imag() < b.z.imag());
    });
    return out;
}

ComplexPoly iterate_minus_z(const ComplexPoly &f, int n)
{
    ComplexPoly g = f;
    for (int k = 1; k < n; ++k)
        g = compose(f, g);
    if (g.size() < 2)
        g.resize(2, Complex(0));
    g[1] -= Complex(1);
    return trimmed(g);
}

Complex iterate_point(const ComplexPoly &f, Complex z, int k)
{
    for (int i = 0; i < k; ++i)
        z = horner(f, z);
    return z;
}

Complex parameter_point(const ParamFamily &fam, const ParamValue &value)
{
    const long double v = to_ld(value.value);
    if (!value.is_power)
        return Complex(v);
    if (fam.kind() != FamilyKind::unicritical)
        throw error(errc::wrong_family, "a value of c^(d-1) only makes sense for z^d + c");
    const int e = fam.degree() - 1;
    if (e == 1)
        return Complex(v);
    return std::pow(Complex(v), Complex(1.0L / static_cast<long double>(e)));
}

RatPoly exact_at(const ParamFamily &fam, const ParamPoly &m, const ParamValue &value)
{
    if (!value.is_power || fam.degree() == 2)
        return specialize_param(m, value.value);
    std::vector<IntPoly> coeffs;
    for (const auto &c : m.coeffs()) {
        auto q = in_power_variable(c, fam.degree() - 1);
        if (!q)
            throw error(errc::internal, "multiplier coefficient is not a polynomial in c^(d-1)");
        coeffs.push_back(std::move(*q));
    }
    return specialize_param(ParamPoly::from_coeffs(std::move(coeffs)), value.value);
}

// Pairing that minimizes the largest deviation; exhaustive for small sizes.
long double pair_up(std::vector<Complex> &numeric, std::vector<Complex> &exact)
{
    const std::size_t n = numeric.size();
    std::vector<std::size_t> perm(n), best;
    std::iota(perm.begin(), perm.end(), 0);
    long double best_dev = std::numeric_limits<long double>::infinity();
    if (n <= 8) {
        do {
            long double dev = 0;
            for (std::size_t i = 0; i < n && dev < best_dev; ++i)
                dev = std::max(dev, std::abs(numeric[perm[i]] - exact[i]));
            if (dev < best_dev) {
                best_dev = dev;
                best = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::vector<bool> used(n, false);
        best.assign(n, 0);
        best_dev = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t pick = n;
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j] && (pick == n || std::abs(numeric[j] - exact[i]) < std::abs(numeric[pick] - exact[i])))
                    pick = j;
            used[pick] = true;
            best[i] = pick;
            best_dev = std::max(best_dev, std::abs(numeric[pick] - exact[i]));
        }
    }
    std::vector<Complex> reordered;
    for (std::size_t i = 0; i < n; ++i)
        reordered.push_back(numeric[best[i]]);
    numeric = std::move(reordered);
    return n == 0 ? 0 : best_dev;
}

} // namespace

std::vector<Complex> polynomial_roots(const ComplexPoly &p, const NumericOptions &opts)
{
    std::vector<Complex> out;
    for (const auto &r : distinct_roots(p, opts))
        for (int k = 0; k < r.multiplicity; ++k)
            out.push_back(r.z);
    return out;
}

ComplexPoly specialize(const ParamFamily &fam, Complex t)
{
    ComplexPoly out;
    for (const auto &c : fam.poly().coeffs()) {
        Complex acc = 0;
        for (std::size_t k = c.size(); k-- > 0;)
            acc = acc * t + Complex(to_ld(c[k]));
        out.push_back(acc);
    }
    return out;
}

std::vector<CycleRecord> find_cycles(const ComplexPoly &f_in, int n, const NumericOptions &opts)
{
    const ComplexPoly f = trimmed(f_in);
    if (f.size() < 3)
        throw error(errc::bad_param, "find_cycles needs degree >= 2");
    if (n < 1)
        throw error(errc::bad_param, "period must be >= 1");
    const ComplexPoly df = derivative(f);
    auto roots = distinct_roots(iterate_minus_z(f, n), opts);
    // The expanded f^n(z) - z is badly conditioned; finish simple roots with
    // Newton steps on the iterated map.
    for (auto &r : roots) {
        if (r.multiplicity != 1)
            continue;
        for (int it = 0; it < 8; ++it) {
            Complex w = r.z, dw = 1;
            for (int k = 0; k < n; ++k) {
                dw *= horner(df, w);
                w = horner(f, w);
            }
            if (dw == Complex(1))
                break;
            const Complex step = (w - r.z) / (dw - Complex(1));
            r.z -= step;
            if (std::abs(step) <= 1e-19L * (1 + std::abs(r.z)))
                break;
        }
    }

    auto close = [&](Complex a, Complex b) { return std::abs(a - b) <= opts.group_tol * (1 + std::abs(a)); };
    std::vector<bool> used(roots.size(), false);
    std::vector<CycleRecord> cycles;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i])
            continue;
        const Complex z = roots[i].z;
        int period = 0;
        Complex w = z;
        for (int k = 1; k <= n; ++k) {
            w = horner(f, w);
            if (close(w, z)) {
                period = k;
                break;
            }
        }
        if (period == 0)
            throw error(errc::non_convergence, "a root of f^n(z) - z does not return to itself");
        if (period != n)
            continue;
        CycleRecord rec;
        rec.period = n;
        rec.multiplier = 1;
        Complex point = z;
        for (int k = 0; k < n; ++k) {
            // Snap to the refined root nearest to the orbit point.
            std::size_t best = roots.size();
            for (std::size_t j = 0; j < roots.size(); ++j)
                if (best == roots.size() || std::abs(roots[j].z - point) < std::abs(roots[best].z - point))
                    best = j;
            used[best] = true;
            const Complex p = roots[best].z;
            rec.orbit.push_back(p);
            rec.multiplier *= horner(df, p);
            rec.residual = std::max(rec.residual, std::abs(iterate_point(f, p, n) - p));
            point = horner(f, p);
        }
        if (!(rec.residual <= opts.residual_tol))
            throw error(errc::non_convergence, "cycle residual " + std::to_string(static_cast<double>(rec.residual * 1e12L)) + "e-12" +
                                                   " exceeds the tolerance");
        rec.point = *std::min_element(rec.orbit.begin(), rec.orbit.end(), [](Complex a, Complex b) {
            return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
        });
        cycles.push_back(std::move(rec));
    }
    std::sort(cycles.begin(), cycles.end(), [](const CycleRecord &a, const CycleRecord &b) {
        return a.point.real() < b.point.real() || (a.point.real() == b.point.real() && a.point.imag() < b.point.imag());
    });
    return cycles;
}

CrosscheckReport crosscheck_multiplier_poly(const ParamFamily &fam, const ParamValue &value, int n,
                                            const NumericOptions &opts)
{
    const ComplexPoly f = specialize(fam, parameter_point(fam, value));
    CrosscheckReport rep;
    const auto cycles = find_cycles(f, n, opts);
    rep.cycles = static_cast<int>(cycles.size());
    for (const auto &c : cycles) {
        rep.numeric.push_back(c.multiplier);
        rep.max_residual = std::max(rep.max_residual, c.residual);
        // A parabolic cycle of exact period n with multiplier 1 is a double root.
        if (std::abs(c.multiplier - Complex(1)) <= opts.group_tol) {
            rep.numeric.push_back(1);
            ++rep.parabolic_adjustments;
        }
    }
    for (long k : divisors(n)) {
        if (k == n)
            continue;
        const long l = n / k;
        for (const auto &c : find_cycles(f, static_cast<int>(k), opts)) {
            // Multiplier a primitive l-th root of unity: c^l = 1 and no smaller power.
            bool primitive = std::abs(std::pow(c.multiplier, static_cast<int>(l)) - Complex(1)) <= opts.group_tol;
            for (long m = 1; m < l && primitive; ++m)
                if (l % m == 0 && std::abs(std::pow(c.multiplier, static_cast<int>(m)) - Complex(1)) <= opts.group_tol)
                    primitive = false;
            if (primitive) {
                rep.numeric.push_back(1);
                ++rep.parabolic_adjustments;
            }
        }
    }

    const RatPoly m = exact_at(fam, multiplier_poly(fam, n).poly, value);
    const IntPoly mi = clear_denominators(m);
    for (const auto &[factor, mult] : squarefree_decomposition(mi)) {
        ComplexPoly cp;
        for (const auto &c : factor.coeffs())
            cp.push_back(Complex(to_ld(c)));
        for (const auto &r : polynomial_roots(cp, opts))
            for (int k = 0; k < mult; ++k)
                rep.exact.push_back(r);
    }
    if (rep.exact.size() != rep.numeric.size())
        throw error(errc::mismatched_count, std::to_string(rep.numeric.size()) + " numeric multipliers against " +
                                                std::to_string(rep.exact.size()) + " roots of M_n");
    std::sort(rep.exact.begin(), rep.exact.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    rep.max_deviation = pair_up(rep.numeric, rep.exact);
    rep.pass = rep.max_deviation <= opts.match_tol && rep.max_residual <= opts.residual_tol;
    return rep;
}

bool orbit_bound_check(const ParamFamily &fam, const ParamValue &value, int n, const NumericOptions &opts)
{
    if (fam.kind() != FamilyKind::unicritical)
        throw error(errc::wrong_family, "the orbit bound is stated for z^d + c");
    const Complex c = parameter_point(fam, value);
    const ComplexPoly f = specialize(fam, c);
    const long double bound = 1 + std::pow(std::abs(c), 1.0L / static_cast<long double>(fam.degree()));
    for (int k = 1; k <= n; ++k)
        for (const auto &z : polynomial_roots(iterate_minus_z(f, k), opts))
            if (std::abs(z) > bound + opts.group_tol)
                return false;
    return true;
}

} // namespace dynatome
