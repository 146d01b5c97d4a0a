#pragma once

#include "seriesaudit/closedform/expression.hpp"
#include "seriesaudit/closedform/trig_table.hpp"
#include "seriesaudit/error.hpp"

#include <numeric>
#include <string>

namespace seriesaudit {

/// Gauss's digamma theorem for 0 < p < q, gcd(p, q) = 1, q | 24:
///
///   psi(p/q) = -gamma - ln(2q) - (pi/2) cot(pi p/q)
///              + 2 sum_{k=1}^{floor((q-1)/2)} cos(2 pi k p/q) ln sin(pi k/q)
///
/// q = 1 (p = 1) gives psi(1) = -gamma. cot and cos values are exact surds;
/// log-sine values go through the rewrite table.
inline ConstantExpression digamma_closed(long p, long q)
{
    if (q < 1 || p < 1 || p > q || (p == q && q != 1))
        throw std::invalid_argument("digamma_closed needs 0 < p < q or p = q = 1");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("digamma_closed needs p/q in lowest terms");
    if (!trig::supported_modulus(q))
        throw UnsupportedModulus("no exact digamma closed form for denominator " + std::to_string(q));

    ConstantExpression out{{ConstantAtom::gamma(), SurdRational(-1)}};
    if (q == 1)
        return out;

    out -= detail::ln_integer_expression(2 * q);
    out.add(ConstantAtom::pi(), SurdRational(Rational(-1, 2)) * trig::cot_pi(p, q));
    for (long k = 1; k <= (q - 1) / 2; ++k) {
        SurdRational weight = SurdRational(2) * trig::cos_two_pi(k * p, q);
        out += weight * detail::ln_sin_expression(k, q);
    }
    return simplify(out);
}

/// Closed form of psi^(k)(x) for rational x > 0. Arguments above 1 are first
/// pulled into (0, 1] with psi^(k)(x) = psi^(k)(x-1) + (-1)^k k!/(x-1)^(k+1).
///
/// Tabulated: psi from digamma_closed when the denominator divides 24,
/// psi'(1) = pi^2/6, psi'(1/2) = pi^2/2, psi''(1) = -2 zeta(3),
/// psi''(1/2) = -14 zeta(3). Anything else becomes a Poly atom.
inline ConstantExpression polygamma_closed(unsigned k, const Rational& x)
{
    if (x <= 0)
        throw NonPositiveArgument("polygamma_closed requires x > 0");

    ConstantExpression out;
    Rational y = x;
    const Rational kfact(factorial(k));
    while (y > 1) {
        y -= 1;
        Rational step = kfact / rpow(y, k + 1);
        out.add(ConstantAtom::one(), (k % 2 == 0) ? step : Rational(-step));
    }

    const long p = y.get_num().get_si();
    const long q = y.get_den().get_si();
    if (k == 0) {
        if (trig::supported_modulus(q))
            return out + digamma_closed(p, q);
        out.add(ConstantAtom::gamma(), Rational(-1));
        out.add(ConstantAtom::poly(0, p, q), Rational(1));
        return out;
    }

    if (k == 1 && q == 1)
        out.add(ConstantAtom::pi_sq(), Rational(1, 6));
    else if (k == 1 && q == 2)
        out.add(ConstantAtom::pi_sq(), Rational(1, 2));
    else if (k == 2 && q == 1)
        out.add(ConstantAtom::zeta3(), Rational(-2));
    else if (k == 2 && q == 2)
        out.add(ConstantAtom::zeta3(), Rational(-14));
    else
        out.add(ConstantAtom::poly(k, p, q), Rational(1));
    return out;
}

} // namespace seriesaudit
