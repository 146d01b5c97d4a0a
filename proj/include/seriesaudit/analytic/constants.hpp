#pragma once

#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seriesaudit {

namespace detail {

/// Interval [1/d rounded down, 1/d rounded up] for a positive integer d.
inline Interval reciprocal(const Integer& d, unsigned long bits)
{
    BigFloat lo(static_cast<mpfr_prec_t>(bits)), hi(static_cast<mpfr_prec_t>(bits));
    mpfr_set_ui(lo.get(), 1, MPFR_RNDD);
    mpfr_div_z(lo.get(), lo.get(), d.get_mpz_t(), MPFR_RNDD);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
    mpfr_div_z(hi.get(), hi.get(), d.get_mpz_t(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

/// arctan(1/m) = sum_i (-1)^i / ((2i+1) m^(2i+1)), m >= 2. The series
/// alternates with decreasing terms, so the remainder after the last summed
/// term has the sign of the next term and is no larger than it.
inline Interval arctan_inverse(unsigned long m, unsigned long bits)
{
    const Integer m2 = Integer(m) * Integer(m);
    const Rational cutoff = rpow(Rational(2), -static_cast<long>(bits + 8));
    Integer power = m;
    Interval sum = Interval::point(0L, bits);
    for (unsigned long i = 0;; ++i) {
        Integer denominator = Integer(2 * i + 1) * power;
        if (Rational(1, 1) / Rational(denominator) < cutoff) {
            Rational next = Rational(1) / Rational(denominator);
            return sum.plus_one_sided(i % 2 == 0 ? next : Rational(-next));
        }
        Interval term = reciprocal(denominator, bits);
        sum = (i % 2 == 0) ? sum + term : sum - term;
        power *= m2;
    }
}

/// artanh(1/m) = sum_i 1 / ((2i+1) m^(2i+1)), m >= 2. Positive terms whose
/// ratio is below 1/m^2, so the tail after term t is at most t * m^2 / (m^2 - 1).
inline Interval artanh_inverse(const Integer& m, unsigned long bits)
{
    const Integer m2 = m * m;
    const Rational cutoff = rpow(Rational(2), -static_cast<long>(bits + 8));
    Integer power = m;
    Interval sum = Interval::point(0L, bits);
    for (unsigned long i = 0;; ++i) {
        Integer denominator = Integer(2 * i + 1) * power;
        Rational term_value = Rational(1) / Rational(denominator);
        if (term_value < cutoff)
            return sum.plus_one_sided(term_value * Rational(m2) / Rational(m2 - 1));
        sum = sum + reciprocal(denominator, bits);
        power *= m2;
    }
}

/// artanh(u) for an interval u inside [-1/2, 1/2], via the odd power series.
/// |tail| after the term of degree 2i+1 is at most |u|^(2i+3) / (1 - u^2).
inline Interval artanh_series(const Interval& u, unsigned long bits)
{
    const Rational bound = u.magnitude();
    if (bound > Rational(1, 2))
        throw std::domain_error("artanh series argument out of range");
    const Rational cutoff = rpow(Rational(2), -static_cast<long>(bits + 8));
    const Interval u2 = u * u;
    Interval power = u;
    Interval sum = Interval::point(0L, bits);
    Rational bound_power = bound;
    for (unsigned long i = 0;; ++i) {
        if (bound_power < cutoff || bound == 0) {
            Rational tail = bound_power / (1 - bound * bound);
            return sum.widened(tail);
        }
        sum = sum + power * Interval::point(Rational(1, 2 * i + 1), bits);
        power = power * u2;
        bound_power *= bound * bound;
    }
}

inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long k)
{
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= k; ++p) {
        unsigned e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (k > 1)
        out.emplace_back(k, 1);
    return out;
}

/// ln p for prime p: ln 2 = 2 artanh(1/3); ln p = ln(p - 1) + 2 artanh(1/(2p - 1)).
inline Interval ln_prime(unsigned long p, unsigned long bits, std::map<unsigned long, Interval>& memo);

inline Interval ln_integer(unsigned long k, unsigned long bits, std::map<unsigned long, Interval>& memo)
{
    Interval total = Interval::point(0L, bits);
    for (auto [prime, e] : factorize(k))
        total = total + ln_prime(prime, bits, memo) * Rational(static_cast<long>(e));
    return total;
}

inline Interval ln_prime(unsigned long p, unsigned long bits, std::map<unsigned long, Interval>& memo)
{
    if (auto it = memo.find(p); it != memo.end())
        return it->second;
    Interval value = (p == 2) ? artanh_inverse(Integer(3), bits).scaled_pow2(1)
                              : ln_integer(p - 1, bits, memo) + artanh_inverse(Integer(2 * p - 1), bits).scaled_pow2(1);
    memo.emplace(p, value);
    return value;
}

} // namespace detail

/// pi = 16 arctan(1/5) - 4 arctan(1/239).
inline Interval const_pi(const Precision& p)
{
    return escalate(p, [](unsigned long bits) {
        Interval a = detail::arctan_inverse(5, bits + 8).scaled_pow2(4);
        Interval b = detail::arctan_inverse(239, bits + 8).scaled_pow2(2);
        return a - b;
    });
}

/// ln k for an integer k >= 2, assembled from prime logarithms.
inline Interval const_ln(unsigned long k, const Precision& p)
{
    if (k < 2)
        throw std::invalid_argument("const_ln requires k >= 2");
    return escalate(p, [k](unsigned long bits) {
        std::map<unsigned long, Interval> memo;
        return detail::ln_integer(k, bits + 16, memo);
    });
}

/// ln r for a positive rational r at fixed working precision. r is scaled by
/// a power of two into [2/3, 4/3], then ln = e ln 2 + 2 artanh((y-1)/(y+1)).
inline Interval ln_rational(const Rational& r, unsigned long bits)
{
    if (r <= 0)
        throw NonPositiveArgument("logarithm of a non-positive value");
    if (r == 1)
        return Interval::point(0L, bits);
    long e = static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2));
    Rational y = r * rpow(Rational(2), -e);
    while (y > Rational(4, 3)) {
        y /= 2;
        ++e;
    }
    while (y < Rational(2, 3)) {
        y *= 2;
        --e;
    }
    const unsigned long work = bits + 16;
    Rational u = (y - 1) / (y + 1);
    Interval result = detail::artanh_series(Interval::point(u, work), work).scaled_pow2(1);
    if (e != 0) {
        std::map<unsigned long, Interval> memo;
        result = result + detail::ln_prime(2, work, memo) * Rational(e);
    }
    return result;
}

/// Enclosure of ln x over a positive interval; ln is increasing.
inline Interval ln_interval(const Interval& x, unsigned long bits)
{
    if (!x.is_positive())
        throw NonPositiveArgument("logarithm of an interval reaching zero or below");
    Interval lo = ln_rational(x.lo_rational(), bits);
    Interval hi = ln_rational(x.hi_rational(), bits);
    return Interval::from_endpoints(lo.lo(), hi.hi());
}

/// sqrt k from the integer square root of k * 4^B: r <= sqrt(k) 2^B < r + 1,
/// with equality when k is a perfect square.
inline Interval const_sqrt(unsigned long k, const Precision& p)
{
    if (k < 1)
        throw std::invalid_argument("const_sqrt requires k >= 1");
    return escalate(p, [k](unsigned long bits) {
        Integer scaled = Integer(k);
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
        Integer root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
        Rational lo(root);
        mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), bits);
        if (rem == 0)
            return Interval::bounds(lo, lo, bits + 8);
        Rational hi(Integer(root + 1));
        mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), bits);
        return Interval::bounds(lo, hi, bits + 8);
    });
}

/// Enclosure of sqrt over a non-negative interval (correctly rounded endpoints).
inline Interval sqrt_interval(const Interval& x)
{
    if (mpfr_sgn(x.lo().get()) < 0)
        throw NonPositiveArgument("square root of an interval reaching below zero");
    const auto prec = static_cast<mpfr_prec_t>(x.bits());
    BigFloat lo(prec), hi(prec);
    mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

} // namespace seriesaudit
