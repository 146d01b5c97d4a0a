#pragma once

#include "seriesaudit/closedform/digamma.hpp"
#include "seriesaudit/closedform/expression.hpp"
#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/partial_fractions.hpp"

#include <stdexcept>

namespace seriesaudit {

/// Exact value of sum_{n >= 1} of a partial fraction form.
///
/// Order-1 terms contribute -c psi(1 + x); they can be summed separately
/// only because their coefficients add up to zero, which also cancels every
/// gamma. A term c/(n + x)^k with k >= 2 contributes
/// c (-1)^k psi^(k-1)(1 + x) / (k-1)!.
inline ConstantExpression sum_closed_form(const PartialFractionForm& pf)
{
    if (pf.terms.empty())
        throw DivergentSeries("empty partial fraction form");
    if (residue_sum(pf) != 0)
        throw DivergentSeries("residues do not sum to zero; the series diverges");

    ConstantExpression out;
    for (const PoleTerm& t : pf.terms) {
        const Rational arg = t.pole + 1;
        if (t.order == 1) {
            out += SurdRational(Rational(-t.coeff)) * polygamma_closed(0, arg);
        } else {
            Rational scale = t.coeff / Rational(factorial(static_cast<unsigned long>(t.order - 1)));
            if (t.order % 2 == 1)
                scale = -scale;
            out += SurdRational(scale) * polygamma_closed(static_cast<unsigned>(t.order - 1), arg);
        }
    }
    ConstantExpression result = simplify(out);
    if (!result.coefficient(ConstantAtom::gamma()).is_zero())
        throw std::logic_error("Euler's constant failed to cancel in a convergent sum");
    return result;
}

} // namespace seriesaudit
