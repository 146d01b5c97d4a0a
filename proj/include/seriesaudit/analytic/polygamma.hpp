#pragma once

#include "seriesaudit/analytic/bernoulli.hpp"
#include "seriesaudit/analytic/constants.hpp"
#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace seriesaudit {

namespace detail {

/// Smallest argument at which the asymptotic expansion is attempted.
inline unsigned long polygamma_shift_threshold(unsigned long digits)
{
    return std::max<unsigned long>(10, static_cast<unsigned long>(std::ceil(0.4 * static_cast<double>(digits))));
}

/// Magnitude of the j-th asymptotic correction at y (j >= 1):
///   k = 0: |B_2j| / (2j y^2j)
///   k > 0: |B_2j| (2j+k-1)! / ((2j)! y^(2j+k))
inline Rational asymptotic_term(unsigned k, unsigned long j, const Rational& y)
{
    Rational b = abs_of(BernoulliTable::even(j));
    if (k == 0)
        return b / (Rational(static_cast<long>(2 * j)) * rpow(y, 2 * j));
    return b * Rational(factorial(2 * j + k - 1)) / (Rational(factorial(2 * j)) * rpow(y, 2 * j + k));
}

/// psi^(k)(y) at fixed working precision via the Euler-Maclaurin asymptotic
/// series. Returns false when the smallest term is still above the cutoff,
/// meaning y must be larger.
///
///   psi(y)      ~ ln y - 1/(2y) - sum_j B_2j / (2j y^2j)
///   psi^(k)(y)  ~ (-1)^(k+1) [ (k-1)!/y^k + k!/(2 y^(k+1)) + sum_j B_2j (2j+k-1)! / ((2j)! y^(2j+k)) ]
///
/// For real y > 0 the remainder is bounded by the first omitted term.
inline bool polygamma_asymptotic(unsigned k, const Rational& y, unsigned long bits, Interval& out)
{
    const Rational cutoff = rpow(Rational(2), -static_cast<long>(bits + 4));
    Rational series = 0;
    Rational previous_magnitude = -1;
    for (unsigned long j = 1;; ++j) {
        Rational magnitude = asymptotic_term(k, j, y);
        if (magnitude < cutoff) {
            Rational head;
            if (k == 0) {
                head = -Rational(1) / (2 * y) - series;
                out = (ln_rational(y, bits) + head).widened(magnitude);
            } else {
                head = Rational(factorial(k - 1)) / rpow(y, k) + Rational(factorial(k)) / (2 * rpow(y, k + 1)) + series;
                if (k % 2 == 0)
                    head = -head;
                out = Interval::point(head, bits).widened(magnitude);
            }
            return true;
        }
        if (previous_magnitude >= 0 && magnitude >= previous_magnitude)
            return false;
        previous_magnitude = magnitude;
        // B_2j alternate in sign starting positive, so the signed term is (-1)^(j+1) magnitude.
        series += (j % 2 == 1) ? magnitude : Rational(-magnitude);
    }
}

} // namespace detail

/// Enclosure of the polygamma function psi^(k)(x) for rational x > 0.
///
/// The argument is raised with psi^(k)(x) = psi^(k)(x+1) - (-1)^k k!/x^(k+1)
/// until it reaches max(10, ceil(0.4 * digits)); the shift correction is an
/// exact rational. If the asymptotic series cannot reach the working
/// precision at that argument, the argument is doubled.
inline Interval polygamma(unsigned k, const Rational& x, const Precision& p)
{
    if (x <= 0)
        throw NonPositiveArgument("polygamma requires a positive argument, got " + to_string(x));
    return escalate(p, [&](unsigned long bits) {
        Rational threshold(static_cast<long>(detail::polygamma_shift_threshold(p.target_digits)));
        for (;;) {
            Rational shift_sum = 0;
            Rational y = x;
            while (y < threshold) {
                shift_sum += Rational(1) / rpow(y, k + 1);
                y += 1;
            }
            Interval tail;
            if (detail::polygamma_asymptotic(k, y, bits, tail)) {
                Rational correction = Rational(factorial(k)) * shift_sum;
                if (k % 2 == 0)
                    return tail - correction;
                return tail + correction;
            }
            threshold *= 2;
        }
    });
}

/// sum_{n >= 1} 1 / (n + x)^k = (-1)^k psi^(k-1)(1 + x) / (k-1)!, for k >= 2 and x > -1.
inline Interval hurwitz_tail(unsigned k, const Rational& x, const Precision& p)
{
    if (k < 2)
        throw DivergentSeries("hurwitz_tail requires k >= 2");
    Rational scale = Rational(1) / Rational(factorial(k - 1));
    if (k % 2 == 1)
        scale = -scale;
    Precision inner = p.with_digits(p.target_digits + 2);
    return polygamma(k - 1, x + 1, inner) * scale;
}

/// Euler's constant as -psi(1).
inline Interval const_gamma(const Precision& p)
{
    return -polygamma(0, Rational(1), p);
}

} // namespace seriesaudit
