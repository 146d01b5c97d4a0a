#pragma once

// Reference computations for the tests. Nothing here calls the library's
// algorithms; only its value types are shared.

#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/exact/partial_fractions.hpp"
#include "seriesaudit/exact/summand.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string_view>
#include <vector>

namespace oracle {

using seriesaudit::Integer;
using seriesaudit::Interval;
using seriesaudit::LinearFactor;
using seriesaudit::PoleTerm;
using seriesaudit::Rational;
using seriesaudit::Summand;

/// Decimal string as an interval of half-width 10^-digits.
inline Interval decimal(std::string_view text, long digits, unsigned long bits = 512)
{
    Rational v(0);
    Rational scale(1);
    bool negative = false;
    bool point = false;
    Integer mantissa = 0;
    for (char c : text) {
        if (c == '-') {
            negative = true;
        } else if (c == '.') {
            point = true;
        } else {
            mantissa = mantissa * 10 + (c - '0');
            if (point)
                scale *= 10;
        }
    }
    v = Rational(mantissa) / scale;
    if (negative)
        v = -v;
    const Rational eps = seriesaudit::pow10(-digits);
    return Interval::bounds(Rational(v - eps), Rational(v + eps), bits);
}

/// Partial fractions by solving the linear system obtained from sampling
/// the summand at `degree` integer points.
inline std::vector<PoleTerm> linear_system_partial_fractions(const Summand& s)
{
    struct Unknown {
        Rational pole;
        int order;
    };
    std::vector<Unknown> unknowns;
    for (const LinearFactor& f : s.factors())
        for (int k = 1; k <= f.m; ++k)
            unknowns.push_back({f.shift(), k});
    const std::size_t n = unknowns.size();

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    long x = 1;
    for (std::size_t row = 0; row < n; ++x) {
        bool pole = false;
        for (const LinearFactor& f : s.factors())
            pole = pole || f.root() == Rational(x);
        if (pole)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            Rational base = Rational(x) + unknowns[j].pole;
            Rational p(1);
            for (int e = 0; e < unknowns[j].order; ++e)
                p *= base;
            a[row][j] = 1 / p;
        }
        a[row][n] = seriesaudit::evaluate_at(s, Rational(x));
        ++row;
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::runtime_error("singular system");
        std::swap(a[pivot], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= n; ++c)
                a[r][c] -= factor * a[col][c];
        }
    }

    std::vector<PoleTerm> out;
    for (std::size_t j = 0; j < n; ++j) {
        Rational c = a[j][n] / a[j][j];
        if (c != 0)
            out.push_back(PoleTerm{unknowns[j].pole, unknowns[j].order, c});
    }
    return out;
}

/// Sum of the first N terms, one exact addition at a time.
inline Rational naive_partial_sum(const Summand& s, long N)
{
    Rational acc(0);
    for (long k = 1; k <= N; ++k)
        acc += seriesaudit::evaluate_at(s, Rational(k));
    return acc;
}

namespace detail {

/// Integral of sum_j c_j/(x + p_j)^k_j from a to infinity, in MPFR at `bits`
/// with round-to-nearest. Log terms are combined across poles, which is valid
/// because residues of a convergent summand cancel.
inline void integral_to_infinity(mpfr_t out, const std::vector<PoleTerm>& terms, long a, mpfr_prec_t bits)
{
    mpfr_t acc, t, u;
    mpfr_inits2(bits, acc, t, u, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    for (const PoleTerm& term : terms) {
        // base = a + pole
        mpfr_set_q(t, Rational(Rational(a) + term.pole).get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(u, term.coeff.get_mpq_t(), MPFR_RNDN);
        if (term.order == 1) {
            // int_a^inf c/(x+p) over all poles: -sum c ln(a + p) (residues cancel)
            mpfr_log(t, t, MPFR_RNDN);
            mpfr_mul(t, t, u, MPFR_RNDN);
            mpfr_sub(acc, acc, t, MPFR_RNDN);
        } else {
            // c / ((k-1) (a+p)^(k-1))
            mpfr_pow_si(t, t, -(term.order - 1), MPFR_RNDN);
            mpfr_mul(t, t, u, MPFR_RNDN);
            mpfr_div_si(t, t, term.order - 1, MPFR_RNDN);
            mpfr_add(acc, acc, t, MPFR_RNDN);
        }
    }
    mpfr_set(out, acc, MPFR_RNDN);
    mpfr_clears(acc, t, u, static_cast<mpfr_ptr>(nullptr));
}

} // namespace detail

/// Brute-force enclosure of the full sum for a summand of constant sign that
/// decreases in magnitude: the first N terms added one by one in MPFR, plus
/// the integral-test bracket [int_{N+1}^inf f, int_N^inf f] for the tail.
/// Every rounding is covered by an explicit slack of (N + 64) * 2^-(bits - 8)
/// times the running sum of magnitudes.
inline Interval brute_force_sum(const Summand& s, long N, unsigned long bits = 256)
{
    const auto prec = static_cast<mpfr_prec_t>(bits);
    mpfr_t head, term, absum, lower, upper;
    mpfr_inits2(prec, head, term, absum, lower, upper, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(head, 1);
    mpfr_set_zero(absum, 1);
    for (long n = 1; n <= N; ++n) {
        mpfr_set_q(term, s.numerator().get_mpq_t(), MPFR_RNDN);
        for (const LinearFactor& f : s.factors())
            for (int e = 0; e < f.m; ++e)
                mpfr_div_si(term, term, f.a * n + f.b, MPFR_RNDN);
        mpfr_add(head, head, term, MPFR_RNDN);
        mpfr_abs(term, term, MPFR_RNDN);
        mpfr_add(absum, absum, term, MPFR_RNDN);
    }

    const std::vector<PoleTerm> terms = linear_system_partial_fractions(s);
    detail::integral_to_infinity(lower, terms, N + 1, prec);
    detail::integral_to_infinity(upper, terms, N, prec);
    if (mpfr_cmp(lower, upper) > 0)
        mpfr_swap(lower, upper);

    seriesaudit::BigFloat h(prec), lo(prec), hi(prec), mag(prec);
    mpfr_set(h.get(), head, MPFR_RNDN);
    mpfr_set(lo.get(), lower, MPFR_RNDN);
    mpfr_set(hi.get(), upper, MPFR_RNDN);
    mpfr_set(mag.get(), absum, MPFR_RNDN);
    mpfr_clears(head, term, absum, lower, upper, static_cast<mpfr_ptr>(nullptr));

    const Rational slack = Rational(N + 64) * seriesaudit::rpow(Rational(2), -static_cast<long>(bits - 8)) *
                           Rational(mag.to_rational() + 16);
    return Interval::bounds(Rational(h.to_rational() + lo.to_rational() - slack),
                            Rational(h.to_rational() + hi.to_rational() + slack), bits);
}

} // namespace oracle
