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

#include "dynatome/exact_ops.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "dynatome/resultant.hpp"

namespace dynatome {

ParamPoly exact_divide(const ParamPoly &num, const ParamPoly &den)
{
    if (den.is_zero())
        throw error(errc::div_by_zero, "exact_divide by the zero polynomial");
    auto q = exact_div(num, den);
    if (!q)
        throw error(errc::not_divisible, "no exact quotient in Z[t][x]");
    return std::move(*q);
}

IntPoly exact_divide(const IntPoly &num, const IntPoly &den)
{
    if (den.is_zero())
        throw error(errc::div_by_zero, "exact_divide by the zero polynomial");
    auto q = exact_div(num, den);
    if (!q)
        throw error(errc::not_divisible, "no exact quotient in Z[t]");
    return std::move(*q);
}

namespace {

template <class C>
DensePoly<C> nth_root_impl(const DensePoly<C> &p, unsigned n)
{
    if (n == 0)
        throw error(errc::bad_param, "nth_root_poly: n must be positive");
    if (p.is_zero() || !p.is_monic())
        throw error(errc::bad_param, "nth_root_poly expects a monic polynomial");
    const int total = p.degree();
    if (total % static_cast<int>(n) != 0)
        throw error(errc::not_a_power, "degree " + std::to_string(total) + " is not divisible by " + std::to_string(n));
    if (n == 1)
        return p;
    const std::size_t k = static_cast<std::size_t>(total) / n;
    const std::size_t big = static_cast<std::size_t>(total);
    // Work with reversed coefficients: q_rev[j] multiplies x^(k-j).
    std::vector<C> q_rev(k + 1, C(0));
    q_rev[0] = C(1);
    const C n_c(static_cast<int>(n));
    for (std::size_t j = 1; j <= k; ++j) {
        // [y^j] of (sum_{i<j} q_rev[i] y^i)^n, truncated power.
        std::vector<C> acc(j + 1, C(0));
        acc[0] = C(1);
        for (unsigned e = 0; e < n; ++e) {
            std::vector<C> next(j + 1, C(0));
            for (std::size_t a = 0; a <= j; ++a) {
                if (is_zero(acc[a]))
                    continue;
                for (std::size_t b = 0; a + b <= j && b < j; ++b)
                    if (!is_zero(q_rev[b]))
                        next[a + b] += acc[a] * q_rev[b];
            }
            acc = std::move(next);
        }
        C rhs = p[big - j] - acc[j];
        auto q = exact_div(rhs, n_c);
        if (!q)
            throw error(errc::not_a_power, "coefficient matching failed (no exact division by n)");
        q_rev[j] = std::move(*q);
    }
    std::vector<C> q(k + 1, C(0));
    for (std::size_t j = 0; j <= k; ++j)
        q[k - j] = std::move(q_rev[j]);
    auto root = DensePoly<C>::from_coeffs(std::move(q));
    if (root.pow(n) != p)
        throw error(errc::not_a_power, "re-exponentiation check failed");
    return root;
}

} // namespace

ParamPoly nth_root_poly(const ParamPoly &p, unsigned n) { return nth_root_impl(p, n); }
IntPoly nth_root_poly(const IntPoly &p, unsigned n) { return nth_root_impl(p, n); }

std::vector<Rational> RationalRoots::with_multiplicity() const
{
    std::vector<Rational> out;
    for (const auto &r : roots)
        for (int i = 0; i < r.multiplicity; ++i)
            out.push_back(r.value);
    return out;
}

int sign_at(const IntPoly &p, const Rational &x)
{
    // Homogenized evaluation keeps everything in Z: q^deg * p(num/q).
    const Integer &num = x.get_num();
    const Integer &den = x.get_den();
    Integer acc = 0;
    Integer den_pow = 1;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * num + p[k] * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

Integer cauchy_bound(const IntPoly &p)
{
    Integer lead = abs(p.leading());
    Integer m = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Integer c = abs(p[static_cast<std::size_t>(k)]);
        if (c > m)
            m = c;
    }
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
    return q + 2;
}

SturmSequence::SturmSequence(const IntPoly &squarefree)
{
    if (squarefree.degree() < 1) {
        chain_.push_back(squarefree);
        return;
    }
    chain_.push_back(primitive_part(squarefree).scaled(sgn(squarefree.leading()) < 0 ? Integer(-1) : Integer(1)));
    chain_.push_back(chain_[0].derivative());
    while (chain_.back().degree() > 0) {
        const IntPoly &a = chain_[chain_.size() - 2];
        const IntPoly &b = chain_.back();
        IntPoly r = pseudo_remainder(a, b);
        const int e = a.degree() - b.degree() + 1;
        // prem multiplies by lc(b)^e; undo the sign so only a positive factor remains.
        bool flip = sgn(b.leading()) < 0 && (e % 2 == 1);
        if (!flip)
            r = -r;
        if (r.is_zero())
            break;
        Integer c = content(r);
        std::vector<Integer> v = r.coeffs();
        for (auto &x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        chain_.push_back(IntPoly::from_coeffs(std::move(v)));
    }
}

namespace {

int count_variations(const std::vector<int> &signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

} // namespace

int SturmSequence::variations_at(const Rational &x) const
{
    std::vector<int> signs;
    for (const auto &p : chain_)
        signs.push_back(sign_at(p, x));
    return count_variations(signs);
}

int SturmSequence::variations_at_infinity(bool positive) const
{
    std::vector<int> signs;
    for (const auto &p : chain_) {
        int s = sgn(p.leading());
        if (!positive && p.degree() % 2 == 1)
            s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmSequence::count_between(const Rational &a, const Rational &b) const
{
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_real() const { return variations_at_infinity(false) - variations_at_infinity(true); }

namespace {

// Rational roots of a primitive squarefree polynomial of degree >= 2. A
// rational root r satisfies lc * r in Z, so an isolating interval shorter
// than 1/lc holds at most one candidate.
std::vector<Rational> squarefree_rational_roots(const IntPoly &f)
{
    std::vector<Rational> found;
    const SturmSequence sturm(f);
    const Integer lead = abs(f.leading());
    const Rational resolution(1, lead);
    const Integer b = cauchy_bound(f);

    std::function<void(const Rational &, const Rational &, int)> isolate = [&](const Rational &lo, const Rational &hi,
                                                                                int count) {
        if (count == 0)
            return;
        if (hi - lo < resolution) {
            // Only multiples of 1/lead can be roots; at most one lies in (lo, hi).
            Integer k;
            Rational scaled = hi * lead;
            mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            Rational cand(k, lead);
            cand.canonicalize();
            if (cand == hi) {
                cand -= resolution; // hi is not a root
            }
            if (cand > lo && sign_at(f, cand) == 0)
                found.push_back(cand);
            return;
        }
        // Split at a non-root near the middle; a root hit on the way is still
        // found later inside one of the halves.
        Rational mid = (lo + hi) / 2;
        for (int attempt = 2; sign_at(f, mid) == 0; ++attempt)
            mid = lo + (hi - lo) * Rational(attempt, 2 * attempt + 1);
        const int left = sturm.count_between(lo, mid);
        isolate(lo, mid, left);
        isolate(mid, hi, count - left);
    };

    isolate(Rational(-b), Rational(b), sturm.count_between(Rational(-b), Rational(b)));
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace

RationalRoots rational_roots(const IntPoly &p)
{
    if (p.is_zero())
        throw error(errc::bad_param, "rational_roots of the zero polynomial");
    RationalRoots out;
    int total = 0;
    // Zero roots first.
    std::size_t zeros = 0;
    while (zeros < p.size() && sgn(p[zeros]) == 0)
        ++zeros;
    if (zeros > 0) {
        out.roots.push_back({Rational(0), static_cast<int>(zeros)});
        total += static_cast<int>(zeros);
    }
    std::vector<Integer> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end());
    IntPoly q = IntPoly::from_coeffs(std::move(rest));
    for (const auto &[factor, mult] : squarefree_decomposition(q)) {
        std::vector<Rational> rs;
        if (factor.degree() == 1) {
            Rational r(-factor[0], factor[1]);
            r.canonicalize();
            rs.push_back(r);
        } else {
            rs = squarefree_rational_roots(factor);
        }
        for (const auto &r : rs) {
            out.roots.push_back({r, mult});
            total += mult;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootMultiplicity &a, const RootMultiplicity &b) { return a.value < b.value; });
    out.splits_over_q = total == p.degree();
    out.splits_over_z = out.splits_over_q && std::all_of(out.roots.begin(), out.roots.end(), [](const auto &r) {
                            return r.value.get_den() == 1;
                        });
    return out;
}

RationalRoots rational_roots(const RatPoly &p)
{
    if (p.is_zero())
        throw error(errc::bad_param, "rational_roots of the zero polynomial");
    return rational_roots(clear_denominators(p));
}

bool is_separable(const IntPoly &p)
{
    if (p.is_zero())
        throw error(errc::bad_param, "is_separable of the zero polynomial");
    if (p.degree() < 1)
        return true;
    return gcd(p, p.derivative()).degree() == 0;
}

bool is_separable(const ParamPoly &p, const Options &opts)
{
    if (p.is_zero())
        throw error(errc::bad_param, "is_separable of the zero polynomial");
    if (p.degree() < 1)
        return true;
    return !discriminant_x(p, opts).is_zero();
}

} // namespace dynatome
