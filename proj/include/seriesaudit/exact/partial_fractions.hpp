#pragma once

#include "seriesaudit/exact/rational.hpp"
#include "seriesaudit/exact/summand.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace seriesaudit {

/// coeff / (n + pole)^order, always in monic form.
struct PoleTerm {
    Rational pole;
    int order = 1;
    Rational coeff;

    friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

/// Sum of PoleTerms sorted by (pole, order), at most one term per pair.
struct PartialFractionForm {
    std::vector<PoleTerm> terms;

    friend bool operator==(const PartialFractionForm&, const PartialFractionForm&) = default;
};

namespace detail {

/// Truncated power series in t, coefficients c[0..size).
using Series = std::vector<Rational>;

inline Series series_product(const Series& l, const Series& r, std::size_t size)
{
    Series out(size, Rational(0));
    for (std::size_t i = 0; i < l.size() && i < size; ++i) {
        if (l[i] == 0)
            continue;
        for (std::size_t j = 0; j < r.size() && i + j < size; ++j)
            out[i + j] += l[i] * r[j];
    }
    return out;
}

/// Taylor coefficients of (t + d)^(-m) about t = 0, d != 0:
/// sum_r (-1)^r C(m+r-1, r) d^(-m-r) t^r.
inline Series inverse_power_series(const Rational& d, int m, std::size_t size)
{
    Series out(size);
    Rational d_inv = Rational(1) / d;
    Rational power = rpow(d_inv, static_cast<unsigned long>(m));
    for (std::size_t r = 0; r < size; ++r) {
        Rational c = Rational(binomial(static_cast<unsigned long>(m) + r - 1, r)) * power;
        out[r] = (r % 2 == 0) ? c : Rational(-c);
        power *= d_inv;
    }
    return out;
}

} // namespace detail

/// Exact decomposition of s into sum_j coeff_j / (n + x_j)^k_j.
///
/// At a pole of multiplicity m the coefficients of orders m, m-1, ..., 1 are
/// the Taylor coefficients of the cofactor (the summand times (n + x)^m) at
/// n = -x, computed by multiplying the exact expansions of the other factors.
inline PartialFractionForm partial_fractions(const Summand& s)
{
    const auto& factors = s.factors();
    Rational scale = s.numerator();
    for (const LinearFactor& f : factors)
        scale /= rpow(Rational(static_cast<long>(f.a)), static_cast<unsigned long>(f.m));

    PartialFractionForm pf;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Rational xi = factors[i].shift();
        const auto order = static_cast<std::size_t>(factors[i].m);

        detail::Series cofactor(order, Rational(0));
        cofactor[0] = scale;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j == i)
                continue;
            Rational d = factors[j].shift() - xi;
            cofactor = detail::series_product(cofactor, detail::inverse_power_series(d, factors[j].m, order), order);
        }

        for (std::size_t r = 0; r < order; ++r) {
            if (cofactor[r] == 0)
                continue;
            pf.terms.push_back(PoleTerm{xi, static_cast<int>(order - r), cofactor[r]});
        }
    }

    std::sort(pf.terms.begin(), pf.terms.end(), [](const PoleTerm& l, const PoleTerm& r) {
        if (l.pole != r.pole)
            return l.pole < r.pole;
        return l.order < r.order;
    });
    return pf;
}

/// Sum of the order-1 coefficients. Zero exactly when the series converges.
inline Rational residue_sum(const PartialFractionForm& pf)
{
    Rational total = 0;
    for (const PoleTerm& t : pf.terms)
        if (t.order == 1)
            total += t.coeff;
    return total;
}

inline int max_order(const PartialFractionForm& pf)
{
    int k = 0;
    for (const PoleTerm& t : pf.terms)
        k = std::max(k, t.order);
    return k;
}

/// Exact value at a rational point that is not a pole.
inline Rational evaluate_at(const PartialFractionForm& pf, const Rational& x)
{
    Rational total = 0;
    for (const PoleTerm& t : pf.terms) {
        Rational base = x + t.pole;
        if (base == 0)
            throw std::domain_error("partial fraction form evaluated at a pole");
        total += t.coeff / rpow(base, static_cast<unsigned long>(t.order));
    }
    return total;
}

} // namespace seriesaudit
