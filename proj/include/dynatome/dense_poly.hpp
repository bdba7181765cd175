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

#ifndef DYNATOME_DENSE_POLY_HPP
#define DYNATOME_DENSE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dynatome/error.hpp"
#include "dynatome/integer.hpp"

namespace dynatome {

inline bool is_zero(const Integer &x) { return sgn(x) == 0; }

inline std::optional<Integer> exact_div(const Integer &a, const Integer &b)
{
    if (sgn(b) == 0)
        throw error(errc::div_by_zero, "integer division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool is_zero(const Rational &x) { return sgn(x) == 0; }

inline std::optional<Rational> exact_div(const Rational &a, const Rational &b)
{
    if (sgn(b) == 0)
        throw error(errc::div_by_zero, "rational division by zero");
    return Rational(a / b);
}

template <class C>
class DensePoly;

template <class C>
bool is_zero(const DensePoly<C> &p);

/// Dense univariate polynomial over a commutative ring C, coefficients in
/// ascending degree. The zero polynomial has no coefficients and degree -1;
/// otherwise the last coefficient is nonzero.
template <class C>
class DensePoly {
public:
    using coeff_type = C;

    DensePoly() = default;
    DensePoly(C constant)
    {
        if (!dynatome::is_zero(constant))
            coeffs_.push_back(std::move(constant));
    }
    DensePoly(int constant) : DensePoly(C(constant)) {}

    static DensePoly from_coeffs(std::vector<C> coeffs)
    {
        DensePoly p;
        p.coeffs_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    static DensePoly monomial(C coeff, std::size_t k)
    {
        if (dynatome::is_zero(coeff))
            return {};
        std::vector<C> v(k + 1, C(0));
        v[k] = std::move(coeff);
        return from_coeffs(std::move(v));
    }

    static DensePoly variable() { return monomial(C(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<C> &coeffs() const { return coeffs_; }

    const C &operator[](std::size_t k) const
    {
        static const C zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const C &leading() const
    {
        if (coeffs_.empty())
            throw error(errc::bad_param, "leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool is_constant() const { return coeffs_.size() <= 1; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == C(1); }

    DensePoly derivative() const
    {
        std::vector<C> v;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            v.push_back(coeffs_[k] * C(static_cast<long>(k)));
        return from_coeffs(std::move(v));
    }

    /// Horner evaluation in any ring V that accepts products with C.
    template <class V>
    V eval(const V &x) const
    {
        V acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc *= x;
            acc += V(coeffs_[k]);
        }
        return acc;
    }

    /// p(g(x)).
    DensePoly compose(const DensePoly &g) const
    {
        DensePoly acc;
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * g + DensePoly(coeffs_[k]);
        return acc;
    }

    DensePoly pow(unsigned e) const
    {
        DensePoly result(C(1)), base = *this;
        while (e) {
            if (e & 1U)
                result = result * base;
            e >>= 1U;
            if (e)
                base = base * base;
        }
        return result;
    }

    /// Multiplies by x^k.
    DensePoly shift(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<C> v(k, C(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return from_coeffs(std::move(v));
    }

    DensePoly operator-() const
    {
        DensePoly r = *this;
        for (auto &c : r.coeffs_)
            c = -c;
        return r;
    }

    DensePoly &operator+=(const DensePoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }

    DensePoly &operator-=(const DensePoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        normalize();
        return *this;
    }

    DensePoly &operator*=(const DensePoly &o) { return *this = *this * o; }

    friend DensePoly operator+(DensePoly a, const DensePoly &b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly &b) { return a -= b; }

    friend DensePoly operator*(const DensePoly &a, const DensePoly &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (dynatome::is_zero(a.coeffs_[i]))
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return from_coeffs(std::move(v));
    }

    /// Scalar product by a coefficient-ring element.
    DensePoly scaled(const C &s) const
    {
        if (dynatome::is_zero(s))
            return {};
        DensePoly r = *this;
        for (auto &c : r.coeffs_)
            c *= s;
        r.normalize();
        return r;
    }

    friend bool operator==(const DensePoly &a, const DensePoly &b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const DensePoly &a, const DensePoly &b) { return !(a == b); }

private:
    void normalize()
    {
        while (!coeffs_.empty() && dynatome::is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const DensePoly<C> &p)
{
    return p.is_zero();
}

template <class C>
std::optional<DensePoly<C>> exact_div(const DensePoly<C> &a, const DensePoly<C> &b);

/// Quotient and remainder when every step's leading division is exact in C;
/// nullopt as soon as one is not.
template <class C>
std::optional<std::pair<DensePoly<C>, DensePoly<C>>> divide_with_remainder(const DensePoly<C> &num,
                                                                          const DensePoly<C> &den)
{
    if (den.is_zero())
        throw error(errc::div_by_zero, "polynomial division by zero");
    if (num.degree() < den.degree())
        return std::make_pair(DensePoly<C>(), num);
    std::vector<C> rem = num.coeffs();
    std::vector<C> quo(static_cast<std::size_t>(num.degree() - den.degree() + 1), C(0));
    const auto &dc = den.coeffs();
    const std::size_t dd = dc.size() - 1;
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (is_zero(rem[k]))
            continue;
        auto q = exact_div(rem[k], dc[dd]);
        if (!q)
            return std::nullopt;
        std::size_t shift = k - dd;
        for (std::size_t i = 0; i <= dd; ++i)
            rem[shift + i] -= *q * dc[i];
        quo[shift] = std::move(*q);
    }
    return std::make_pair(DensePoly<C>::from_coeffs(std::move(quo)), DensePoly<C>::from_coeffs(std::move(rem)));
}

template <class C>
std::optional<DensePoly<C>> exact_div(const DensePoly<C> &a, const DensePoly<C> &b)
{
    auto qr = divide_with_remainder(a, b);
    if (!qr || !qr->second.is_zero())
        return std::nullopt;
    return std::move(qr->first);
}

/// lc(den)^(deg num - deg den + 1) * num mod den, computed without division.
template <class C>
DensePoly<C> pseudo_remainder(const DensePoly<C> &num, const DensePoly<C> &den)
{
    if (den.is_zero())
        throw error(errc::div_by_zero, "pseudo-remainder by zero");
    if (num.degree() < den.degree())
        return num;
    const C &lc = den.leading();
    const int dd = den.degree();
    int e = num.degree() - dd + 1;
    std::vector<C> r = num.coeffs();
    const auto &dc = den.coeffs();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        C top = r[static_cast<std::size_t>(k)];
        for (int i = 0; i < k; ++i)
            r[static_cast<std::size_t>(i)] *= lc;
        r[static_cast<std::size_t>(k)] = C(0);
        if (!is_zero(top)) {
            int shift = k - dd;
            for (int i = 0; i < dd; ++i)
                r[static_cast<std::size_t>(shift + i)] -= top * dc[static_cast<std::size_t>(i)];
        }
        --e;
    }
    r.resize(static_cast<std::size_t>(dd));
    DensePoly<C> out = DensePoly<C>::from_coeffs(std::move(r));
    for (; e > 0; --e)
        out = out.scaled(lc);
    return out;
}

} // namespace dynatome

#endif
