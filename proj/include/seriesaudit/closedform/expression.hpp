#pragma once

#include "seriesaudit/analytic/constants.hpp"
#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/analytic/polygamma.hpp"
#include "seriesaudit/closedform/atom.hpp"
#include "seriesaudit/closedform/trig_table.hpp"
#include "seriesaudit/exact/surd.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace seriesaudit {

/// Finite linear combination of ConstantAtoms with coefficients in
/// Q(sqrt2, sqrt3). Zero coefficients are never stored, so two fully
/// tabulated expressions are equal exactly when their maps are equal.
class ConstantExpression {
public:
    using Map = std::map<ConstantAtom, SurdRational>;

    ConstantExpression() = default;
    ConstantExpression(const ConstantAtom& atom, const SurdRational& coeff) { add(atom, coeff); }
    ConstantExpression(std::initializer_list<std::pair<const ConstantAtom, SurdRational>> terms)
    {
        for (const auto& [atom, coeff] : terms)
            add(atom, coeff);
    }

    static ConstantExpression scalar(const SurdRational& c) { return {ConstantAtom::one(), c}; }

    void add(const ConstantAtom& atom, const SurdRational& coeff)
    {
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(atom, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    SurdRational coefficient(const ConstantAtom& atom) const
    {
        auto it = terms_.find(atom);
        return it == terms_.end() ? SurdRational(0) : it->second;
    }

    /// True when no atom needs numeric evaluation.
    bool fully_resolved() const
    {
        return std::none_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.numeric_only(); });
    }

    /// Only the One atom (or nothing) is present.
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.kind == AtomKind::One); }

    ConstantExpression& operator+=(const ConstantExpression& o)
    {
        for (const auto& [atom, coeff] : o.terms_)
            add(atom, coeff);
        return *this;
    }
    ConstantExpression& operator-=(const ConstantExpression& o)
    {
        for (const auto& [atom, coeff] : o.terms_)
            add(atom, -coeff);
        return *this;
    }
    friend ConstantExpression operator+(ConstantExpression a, const ConstantExpression& b) { return a += b; }
    friend ConstantExpression operator-(ConstantExpression a, const ConstantExpression& b) { return a -= b; }

    friend ConstantExpression operator*(const SurdRational& c, const ConstantExpression& e)
    {
        ConstantExpression out;
        if (c.is_zero())
            return out;
        for (const auto& [atom, coeff] : e.terms_)
            out.add(atom, c * coeff);
        return out;
    }
    friend ConstantExpression operator*(const ConstantExpression& e, const SurdRational& c) { return c * e; }

    friend bool operator==(const ConstantExpression&, const ConstantExpression&) = default;

    /// Plain-text form accepted back by the expression parser, e.g.
    /// "-1/2 + (1/24 + 1/12*sqrt2)*pi". Atoms appear in map order.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [atom, coeff] : terms_) {
            bool negative = coeff.is_rational() && coeff.c1() < 0;
            SurdRational mag = negative ? -coeff : coeff;
            std::string body;
            if (atom.kind == AtomKind::One) {
                body = mag.is_rational() ? mag.to_string() : "(" + mag.to_string() + ")";
            } else if (mag == SurdRational(1)) {
                body = atom.to_string();
            } else if (mag.is_rational()) {
                body = mag.to_string() + "*" + atom.to_string();
            } else {
                body = "(" + mag.to_string() + ")*" + atom.to_string();
            }
            if (out.empty())
                out = (negative ? "-" : "") + body;
            else
                out += (negative ? " - " : " + ") + body;
        }
        return out;
    }

private:
    Map terms_;
};

namespace detail {

/// ln sin(pi p / q) as an expression, applying the rewrite table:
///   ln sin(pi/2) = 0, ln sin(pi/4) = -ln2/2, ln sin(pi/3) = ln3/2 - ln2,
///   ln sin(pi/6) = -ln2, ln sin(3pi/8) = -(3/2) ln2 - ln sin(pi/8)
/// The last uses sin(pi/8) sin(3pi/8) = sqrt2/4.
inline ConstantExpression ln_sin_expression(long p, long q)
{
    const ConstantAtom atom = ConstantAtom::ln_sin(p, q);
    const auto ln2 = ConstantAtom::ln_prime(2);
    const auto ln3 = ConstantAtom::ln_prime(3);
    if (atom.q == 2)
        return {};
    if (atom.q == 4)
        return {{ln2, Rational(-1, 2)}};
    if (atom.q == 3)
        return {{ln3, Rational(1, 2)}, {ln2, Rational(-1)}};
    if (atom.q == 6)
        return {{ln2, Rational(-1)}};
    if (atom.q == 8 && atom.p == 3)
        return {{ln2, Rational(-3, 2)}, {ConstantAtom::ln_sin(1, 8), Rational(-1)}};
    return {{atom, Rational(1)}};
}

/// ln n for a positive integer as a combination of LnPrime atoms.
inline ConstantExpression ln_integer_expression(long n)
{
    ConstantExpression out;
    for (long d = 2; d * d <= n; ++d) {
        long e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            out.add(ConstantAtom::ln_prime(d), Rational(e));
    }
    if (n > 1)
        out.add(ConstantAtom::ln_prime(n), Rational(1));
    return out;
}

} // namespace detail

/// Applies the log-sine rewrite table and drops zero coefficients. Idempotent.
inline ConstantExpression simplify(const ConstantExpression& e)
{
    ConstantExpression out;
    for (const auto& [atom, coeff] : e.terms()) {
        if (atom.kind == AtomKind::LnSin)
            out += coeff * detail::ln_sin_expression(atom.p, atom.q);
        else
            out.add(atom, coeff);
    }
    return out;
}

namespace detail {

/// Precision handed to atom evaluations when the caller works at `bits`.
inline Precision atom_precision(unsigned long bits, unsigned long cap)
{
    unsigned long digits = bits > 40 ? static_cast<unsigned long>((bits - 32) / 3.3219280948873623) : 2;
    return Precision{bits, std::max<unsigned long>(digits, 2), std::max(cap, bits)};
}

inline Interval surd_to_interval(const SurdRational& c, const Precision& p)
{
    Interval out = Interval::point(c.c1(), p.bits);
    if (c.c2() != 0)
        out = out + const_sqrt(2, p) * c.c2();
    if (c.c3() != 0)
        out = out + const_sqrt(3, p) * c.c3();
    if (c.c6() != 0)
        out = out + const_sqrt(6, p) * c.c6();
    return out;
}

inline Interval atom_to_interval(const ConstantAtom& atom, const Precision& p)
{
    switch (atom.kind) {
    case AtomKind::One: return Interval::point(1L, p.bits);
    case AtomKind::Pi: return const_pi(p);
    case AtomKind::PiSq: {
        Interval pi = const_pi(p.with_digits(p.target_digits + 2));
        return pi * pi;
    }
    case AtomKind::Gamma: return const_gamma(p);
    case AtomKind::Zeta3: return hurwitz_tail(3, Rational(0), p);
    case AtomKind::LnPrime: return const_ln(static_cast<unsigned long>(atom.p), p);
    case AtomKind::LnSin: {
        // ln sin t = ln((1 - cos 2t) / 2) / 2, and cos 2t is exact for q | 24.
        SurdRational half_versine = (SurdRational(1) - trig::cos_two_pi(atom.p, atom.q)) * SurdRational(Rational(1, 2));
        Interval v = surd_to_interval(half_versine, p.with_digits(p.target_digits + 4));
        return ln_interval(v, p.bits).scaled_pow2(-1);
    }
    case AtomKind::Poly: {
        Rational x = make_rational(atom.p, atom.q);
        if (atom.k == 0)
            return polygamma(0, x, p) + const_gamma(p);
        return polygamma(atom.k, x, p);
    }
    }
    throw std::logic_error("unknown atom kind");
}

} // namespace detail

/// Enclosure of the expression at a fixed working precision (no width target).
inline Interval expr_to_interval_at_bits(const ConstantExpression& e, unsigned long bits,
                                         unsigned long cap = Precision::kDefaultCapBits)
{
    const Precision p = detail::atom_precision(bits, cap);
    Interval total = Interval::point(0L, bits);
    for (const auto& [atom, coeff] : e.terms()) {
        Interval c = detail::surd_to_interval(coeff, p);
        total = total + (atom.kind == AtomKind::One ? c : c * detail::atom_to_interval(atom, p));
    }
    return total;
}

/// Enclosure of the real value of `e`, no wider than 10^(-p.target_digits).
inline Interval expr_to_interval(const ConstantExpression& e, const Precision& p)
{
    if (e.is_scalar() && e.coefficient(ConstantAtom::one()).is_rational()) {
        Rational v = e.coefficient(ConstantAtom::one()).c1();
        return Interval::point(v, std::max(p.bits, Precision::bits_for_digits(p.target_digits)));
    }
    return escalate(p, [&](unsigned long bits) { return expr_to_interval_at_bits(e, bits + 16, p.cap_bits); });
}

} // namespace seriesaudit
