#pragma once

#include "seriesaudit/analytic/bernoulli.hpp"
#include "seriesaudit/analytic/constants.hpp"
#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/partial_fractions.hpp"
#include "seriesaudit/exact/summand.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace seriesaudit {

namespace detail {

/// P/Q = sum of 1/d(n) over [lo, hi), by binary splitting (no reduction
/// until the caller canonicalizes).
template <class Denominator>
std::pair<Integer, Integer> split_reciprocal_sum(long lo, long hi, const Denominator& d)
{
    if (hi - lo <= 8) {
        Integer p = 0, q = 1;
        for (long n = lo; n < hi; ++n) {
            Integer dn = d(n);
            p = p * dn + q;
            q *= dn;
        }
        return {std::move(p), std::move(q)};
    }
    long mid = lo + (hi - lo) / 2;
    auto [p1, q1] = split_reciprocal_sum(lo, mid, d);
    auto [p2, q2] = split_reciprocal_sum(mid, hi, d);
    return {p1 * q2 + p2 * q1, q1 * q2};
}

template <class Denominator>
Rational reciprocal_sum(long lo, long hi, const Denominator& d)
{
    if (hi <= lo)
        return Rational(0);
    auto [p, q] = split_reciprocal_sum(lo, hi, d);
    return make_rational(p, q);
}

inline void require_convergent(const PartialFractionForm& pf)
{
    if (pf.terms.empty() || residue_sum(pf) != 0)
        throw DivergentSeries("series does not converge (total degree below 2)");
}

/// Rising factorial k (k+1) ... (k+r-1).
inline Integer rising(long k, unsigned long r)
{
    Integer out = 1;
    for (unsigned long i = 0; i < r; ++i)
        out *= Integer(k + static_cast<long>(i));
    return out;
}

/// r-th derivative of the partial fraction form at x, exactly.
inline Rational derivative_at(const PartialFractionForm& pf, unsigned long r, const Rational& x)
{
    Rational total = 0;
    for (const PoleTerm& t : pf.terms) {
        Rational v = t.coeff * Rational(rising(t.order, r)) / rpow(x + t.pole, static_cast<unsigned long>(t.order) + r);
        total += (r % 2 == 0) ? v : Rational(-v);
    }
    return total;
}

/// sum_t |c_t| (k_t)_r / (x + x_t)^(k_t + r): bounds |f^(r)| and gives the
/// integral of |f^(r+1)| over [x, inf).
inline Rational derivative_magnitude_bound(const PartialFractionForm& pf, unsigned long r, const Rational& x)
{
    Rational total = 0;
    for (const PoleTerm& t : pf.terms)
        total += abs_of(t.coeff) * Rational(rising(t.order, r)) /
                 rpow(x + t.pole, static_cast<unsigned long>(t.order) + r);
    return total;
}

} // namespace detail

/// Exact sum of the first N terms.
inline Rational partial_sum(const Summand& s, long N)
{
    if (N < 1)
        throw std::invalid_argument("partial_sum requires N >= 1");
    const auto& factors = s.factors();
    Rational sum = detail::reciprocal_sum(1, N + 1, [&](long n) {
        Integer d = 1;
        for (const LinearFactor& f : factors)
            d *= ipow(Integer(f.a) * Integer(n) + Integer(f.b), static_cast<unsigned long>(f.m));
        return d;
    });
    return sum * s.numerator();
}

/// H_N = sum_{k=1}^{N} 1/k.
inline Rational harmonic(long N)
{
    if (N < 1)
        throw std::invalid_argument("harmonic requires N >= 1");
    return detail::reciprocal_sum(1, N + 1, [](long k) { return Integer(k); });
}

/// 1/(n+1) + 1/(n+3) + ... + 1/(2n-1) for even n >= 2.
inline Rational odd_window_sum(long n)
{
    if (n < 2 || n % 2 != 0)
        throw OddArgument("odd_window_sum requires an even n >= 2");
    return detail::reciprocal_sum(0, n / 2, [n](long j) { return Integer(n + 1 + 2 * j); });
}

/// Enclosure of the integral of the partial fraction form over [a, b]
/// (b = nullopt for infinity), a >= 1. Order-1 terms integrate to
/// logarithms; over an infinite range they combine into
/// -sum c ln((a + x)/a), finite because the residues sum to zero.
inline Interval integral(const PartialFractionForm& pf, const Rational& a, const std::optional<Rational>& b,
                         unsigned long bits)
{
    if (!b)
        detail::require_convergent(pf);
    Rational exact = 0;
    Interval logs = Interval::point(0L, bits);
    for (const PoleTerm& t : pf.terms) {
        const Rational at_a = a + t.pole;
        if (t.order == 1) {
            Rational ratio = b ? Rational((*b + t.pole) / at_a) : Rational(at_a / a);
            Interval l = ln_rational(ratio, bits) * t.coeff;
            logs = b ? logs + l : logs - l;
        } else {
            const auto k1 = static_cast<unsigned long>(t.order - 1);
            Rational term = t.coeff / (Rational(static_cast<long>(k1)) * rpow(at_a, k1));
            if (b)
                term -= t.coeff / (Rational(static_cast<long>(k1)) * rpow(*b + t.pole, k1));
            exact += term;
        }
    }
    return logs + exact;
}

/// Integral-test enclosure of sum_{n > N} f(n):
///   int_{N+1}^inf f <= tail <= int_N^inf f
/// for a positive term; the roles swap for a negative numerator. Valid
/// because every factor is positive and increasing on [1, inf).
struct TailBracket {
    long N = 0;
    Interval lower;
    Interval upper;

    /// [lower.lo, upper.hi].
    Interval enclosure() const { return Interval::from_endpoints(lower.lo(), upper.hi()); }

    /// Certified bound on |tail|.
    Rational error_bound() const { return enclosure().magnitude(); }
};

inline TailBracket tail_bracket(const Summand& s, long N, const Precision& p)
{
    if (N < 1)
        throw std::invalid_argument("tail_bracket requires N >= 1");
    if (s.degree() < 2)
        throw DivergentSeries("tail bracket needs total degree >= 2");
    const PartialFractionForm pf = partial_fractions(s);
    const unsigned long bits = std::max(p.bits, Precision::bits_for_digits(p.target_digits));
    Interval from_n = integral(pf, Rational(N), std::nullopt, bits);
    Interval from_next = integral(pf, Rational(N + 1), std::nullopt, bits);
    if (s.numerator() > 0)
        return TailBracket{N, std::move(from_next), std::move(from_n)};
    return TailBracket{N, std::move(from_n), std::move(from_next)};
}

/// Euler-Maclaurin enclosure of sum_{n > N} f(n), with M = N + 1:
///
///   int_M^inf f + f(M)/2 - sum_{j=1}^{J} B_2j/(2j)! f^(2j-1)(M) + R_J,
///   |R_J| <= |B_2J|/(2J)! int_M^inf |f^(2J)|.
///
/// Every term but the logarithms of the integral is an exact rational. J
/// grows until |R_J| <= 10^-digits / 16; returns nullopt if the bound stops
/// shrinking first (N too small for this accuracy).
inline std::optional<Interval> tail_euler_maclaurin(const PartialFractionForm& pf, long N, unsigned long digits,
                                                    unsigned long bits)
{
    detail::require_convergent(pf);
    const Rational M(N + 1);
    const Rational target = pow10(-static_cast<long>(digits)) / 16;
    Rational corrections = evaluate_at(pf, M) / 2;
    Rational previous_bound = -1;
    for (unsigned long j = 1;; ++j) {
        const Rational weight = BernoulliTable::even(j) / Rational(factorial(2 * j));
        corrections -= weight * detail::derivative_at(pf, 2 * j - 1, M);
        const Rational bound = abs_of(weight) * detail::derivative_magnitude_bound(pf, 2 * j - 1, M);
        if (bound <= target)
            return (integral(pf, M, std::nullopt, bits) + corrections).widened(bound);
        if (previous_bound >= 0 && bound >= previous_bound)
            return std::nullopt;
        previous_bound = bound;
    }
}

/// Certified enclosure of sum_{n >= 1} of the term, width <= 10^-digits.
///
/// N starts at the smallest power of two >= max(16, digits); the prefix up to
/// N is summed exactly and the remainder enclosed by tail_euler_maclaurin.
/// N doubles if the tail expansion cannot reach the target; the working
/// precision doubles (up to the cap) if the final width is still too large.
inline Interval eval_series(const Summand& s, unsigned long digits, const Precision& p)
{
    const PartialFractionForm pf = partial_fractions(s);
    detail::require_convergent(pf);
    long N = 16;
    while (N < static_cast<long>(digits))
        N *= 2;
    const Precision target = p.with_digits(digits);
    return escalate(target, [&](unsigned long bits) {
        for (;;) {
            if (auto tail = tail_euler_maclaurin(pf, N, digits + 1, bits + 16))
                return *tail + partial_sum(s, N);
            N *= 2;
        }
    });
}

} // namespace seriesaudit
