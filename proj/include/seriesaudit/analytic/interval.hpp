#pragma once

// Closed intervals with dyadic endpoints. Endpoint arithmetic goes through
// MPFR with directed rounding (down for lower ends, up for upper ends), so
// every operation returns an interval containing the exact real result.

#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace seriesaudit {

/// Working precision of a numeric evaluation. `bits` is the starting binary
/// precision (never reduced during a session); `target_digits` is the decimal
/// width the result must reach; `cap_bits` bounds escalation.
struct Precision {
    unsigned long bits = 64;
    unsigned long target_digits = 15;
    unsigned long cap_bits = 16384;

    static constexpr unsigned long kDefaultCapBits = 16384;

    /// Enough bits for `digits` decimal digits plus 32 guard bits.
    static unsigned long bits_for_digits(unsigned long digits)
    {
        return std::max<unsigned long>(64, static_cast<unsigned long>(std::ceil(digits * 3.3219280948873623)) + 32);
    }

    static Precision for_digits(unsigned long digits, unsigned long cap = kDefaultCapBits)
    {
        return Precision{bits_for_digits(digits), digits, cap};
    }

    Precision with_digits(unsigned long digits) const
    {
        return Precision{std::max(bits, bits_for_digits(digits)), digits, cap_bits};
    }
};

/// Owning wrapper around mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    /// The exact dyadic value as a rational.
    Rational to_rational() const
    {
        if (mpfr_zero_p(v_))
            return Rational(0);
        if (!mpfr_number_p(v_))
            throw std::domain_error("non-finite interval endpoint");
        Integer mantissa;
        mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), v_);
        Rational r(mantissa);
        if (e >= 0)
            mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
        else
            mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

/// Interval [lo, hi] guaranteed to contain some real value.
class Interval {
public:
    explicit Interval(unsigned long bits = 64) : lo_(static_cast<mpfr_prec_t>(bits)), hi_(static_cast<mpfr_prec_t>(bits)) {}

    static Interval point(const Rational& r, unsigned long bits)
    {
        Interval out(bits);
        mpfr_set_q(out.lo_.get(), r.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi_.get(), r.get_mpq_t(), MPFR_RNDU);
        return out;
    }

    static Interval point(long v, unsigned long bits) { return point(Rational(v), bits); }

    /// [lo, hi] from exact rational bounds, rounded outward.
    static Interval bounds(const Rational& lo, const Rational& hi, unsigned long bits)
    {
        if (lo > hi)
            throw std::invalid_argument("interval bounds out of order");
        Interval out(bits);
        mpfr_set_q(out.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
        return out;
    }

    static Interval from_endpoints(BigFloat lo, BigFloat hi)
    {
        if (mpfr_cmp(lo.get(), hi.get()) > 0)
            throw std::invalid_argument("interval endpoints out of order");
        Interval out;
        out.lo_ = std::move(lo);
        out.hi_ = std::move(hi);
        return out;
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    Rational lo_rational() const { return lo_.to_rational(); }
    Rational hi_rational() const { return hi_.to_rational(); }
    unsigned long bits() const { return static_cast<unsigned long>(std::max(lo_.prec(), hi_.prec())); }

    double mid_double() const { return 0.5 * (lo_.to_double() + hi_.to_double()); }

    Rational width() const { return hi_rational() - lo_rational(); }

    /// hi - lo <= 10^(-digits), decided exactly.
    bool width_at_most_pow10(unsigned long digits) const
    {
        return width() <= pow10(-static_cast<long>(digits));
    }

    bool contains(const Rational& r) const
    {
        return mpfr_cmp_q(lo_.get(), r.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), r.get_mpq_t()) >= 0;
    }
    bool contains(const Interval& o) const
    {
        return mpfr_cmp(lo_.get(), o.lo_.get()) <= 0 && mpfr_cmp(hi_.get(), o.hi_.get()) >= 0;
    }
    bool intersects(const Interval& o) const
    {
        return mpfr_cmp(lo_.get(), o.hi_.get()) <= 0 && mpfr_cmp(o.lo_.get(), hi_.get()) <= 0;
    }
    bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
    bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

    /// Upper bound of |x| over the interval.
    Rational magnitude() const
    {
        Rational a = abs_of(lo_rational());
        Rational b = abs_of(hi_rational());
        return a > b ? a : b;
    }

    Interval operator-() const
    {
        Interval out(bits());
        mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
        mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
        return out;
    }

    friend Interval operator+(const Interval& a, const Interval& b)
    {
        Interval out(std::max(a.bits(), b.bits()));
        mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return out;
    }

    friend Interval operator-(const Interval& a, const Interval& b)
    {
        Interval out(std::max(a.bits(), b.bits()));
        mpfr_sub(out.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(out.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return out;
    }

    friend Interval operator*(const Interval& a, const Interval& b)
    {
        const mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max(a.bits(), b.bits()));
        const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
        const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
        BigFloat lo(prec), hi(prec), tmp(prec);
        bool first = true;
        for (mpfr_srcptr x : xs) {
            for (mpfr_srcptr y : ys) {
                mpfr_mul(tmp.get(), x, y, MPFR_RNDD);
                if (first || mpfr_cmp(tmp.get(), lo.get()) < 0)
                    mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
                mpfr_mul(tmp.get(), x, y, MPFR_RNDU);
                if (first || mpfr_cmp(tmp.get(), hi.get()) > 0)
                    mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
                first = false;
            }
        }
        return from_endpoints(std::move(lo), std::move(hi));
    }

    friend Interval operator/(const Interval& a, const Interval& b)
    {
        if (b.contains_zero())
            throw std::domain_error("interval division by an interval containing zero");
        const mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max(a.bits(), b.bits()));
        const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
        const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
        BigFloat lo(prec), hi(prec), tmp(prec);
        bool first = true;
        for (mpfr_srcptr x : xs) {
            for (mpfr_srcptr y : ys) {
                mpfr_div(tmp.get(), x, y, MPFR_RNDD);
                if (first || mpfr_cmp(tmp.get(), lo.get()) < 0)
                    mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
                mpfr_div(tmp.get(), x, y, MPFR_RNDU);
                if (first || mpfr_cmp(tmp.get(), hi.get()) > 0)
                    mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
                first = false;
            }
        }
        return from_endpoints(std::move(lo), std::move(hi));
    }

    friend Interval operator*(const Interval& a, const Rational& r) { return a * point(r, a.bits()); }
    friend Interval operator*(const Rational& r, const Interval& a) { return a * point(r, a.bits()); }
    friend Interval operator+(const Interval& a, const Rational& r) { return a + point(r, a.bits()); }
    friend Interval operator-(const Interval& a, const Rational& r) { return a - point(r, a.bits()); }

    /// Exact scaling by a power of two.
    Interval scaled_pow2(long e) const
    {
        Interval out = *this;
        mpfr_mul_2si(out.lo_.get(), lo_.get(), e, MPFR_RNDD);
        mpfr_mul_2si(out.hi_.get(), hi_.get(), e, MPFR_RNDU);
        return out;
    }

    /// Widens by [-r, r], r >= 0.
    Interval widened(const Rational& r) const { return *this + bounds(Rational(-r), r, bits()); }

    /// Adds the enclosure [0, r] (r >= 0) or [r, 0] (r < 0).
    Interval plus_one_sided(const Rational& r) const
    {
        return r >= 0 ? *this + bounds(Rational(0), r, bits()) : *this + bounds(r, Rational(0), bits());
    }

    friend Interval hull(const Interval& a, const Interval& b)
    {
        BigFloat lo = mpfr_cmp(a.lo_.get(), b.lo_.get()) <= 0 ? a.lo_ : b.lo_;
        BigFloat hi = mpfr_cmp(a.hi_.get(), b.hi_.get()) >= 0 ? a.hi_ : b.hi_;
        return from_endpoints(std::move(lo), std::move(hi));
    }

    /// Intersection; the caller guarantees the two intervals overlap.
    friend Interval intersection(const Interval& a, const Interval& b)
    {
        if (!a.intersects(b))
            throw std::domain_error("intersection of disjoint intervals");
        BigFloat lo = mpfr_cmp(a.lo_.get(), b.lo_.get()) >= 0 ? a.lo_ : b.lo_;
        BigFloat hi = mpfr_cmp(a.hi_.get(), b.hi_.get()) <= 0 ? a.hi_ : b.hi_;
        return from_endpoints(std::move(lo), std::move(hi));
    }

private:
    BigFloat lo_;
    BigFloat hi_;
};

using PrecisionInterval = Interval;

/// Runs `compute(bits)` with increasing precision until the result is no
/// wider than 10^(-p.target_digits). Bits start at the larger of p.bits and
/// the digit requirement and double on each retry.
template <class Compute>
Interval escalate(const Precision& p, Compute&& compute)
{
    unsigned long bits = std::max(p.bits, Precision::bits_for_digits(p.target_digits));
    for (;;) {
        if (bits > p.cap_bits)
            throw PrecisionCapExceeded("precision cap of " + std::to_string(p.cap_bits) +
                                       " bits reached before " + std::to_string(p.target_digits) + " digits");
        Interval r = compute(bits);
        if (r.width_at_most_pow10(p.target_digits))
            return r;
        bits *= 2;
    }
}

} // namespace seriesaudit
