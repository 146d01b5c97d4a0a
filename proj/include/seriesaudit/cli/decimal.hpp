#pragma once

#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/exact/rational.hpp"

#include <mpfr.h>

#include <cstdio>
#include <string>

namespace seriesaudit {

enum class Direction { Down, Up, TowardZero };

/// Fixed-point decimal with `places` digits after the point, rounded in the
/// given direction.
inline std::string to_decimal(const Rational& v, long places, Direction dir)
{
    const Rational scaled = v * pow10(places);
    Integer n;
    switch (dir) {
    case Direction::Down: n = floor_of(scaled); break;
    case Direction::Up: n = ceil_of(scaled); break;
    case Direction::TowardZero: n = scaled < 0 ? ceil_of(scaled) : floor_of(scaled); break;
    }
    const bool negative = n < 0;
    std::string digits = Integer(abs(n)).get_str();
    if (places > 0) {
        if (static_cast<long>(digits.size()) <= places)
            digits.insert(0, static_cast<std::size_t>(places - static_cast<long>(digits.size()) + 1), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (negative)
        digits.insert(0, "-");
    return digits;
}

/// Longest decimal prefix shared by every point of an interval.
struct CertifiedDecimal {
    std::string lo;     ///< lower endpoint, rounded down
    std::string hi;     ///< upper endpoint, rounded up
    std::string prefix; ///< truncation valid for every point of the interval
    long digits = 0;    ///< significant digits in `prefix`
};

/// Truncation toward zero is monotone, so when both endpoints truncate to the
/// same string at some number of places every point between them does too.
inline CertifiedDecimal certify(const Interval& x, long places)
{
    CertifiedDecimal out;
    const Rational lo = x.lo_rational();
    const Rational hi = x.hi_rational();
    out.lo = to_decimal(lo, places, Direction::Down);
    out.hi = to_decimal(hi, places, Direction::Up);

    if ((lo < 0) != (hi < 0) && lo != 0 && hi != 0)
        return out;
    const std::string a = to_decimal(lo, places, Direction::TowardZero);
    const std::string b = to_decimal(hi, places, Direction::TowardZero);
    if (a.find('.') != b.find('.'))
        return out;
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && a[n] == b[n])
        ++n;
    std::string prefix = a.substr(0, n);
    if (prefix.empty() || prefix == "-")
        return out;
    if (prefix.size() < a.find('.'))
        return out; // only part of the integer part agrees
    if (prefix.back() == '.')
        prefix.pop_back();
    out.prefix = prefix;
    bool leading = true;
    for (char c : prefix) {
        if (c < '0' || c > '9')
            continue;
        if (leading && c == '0')
            continue;
        leading = false;
        ++out.digits;
    }
    return out;
}

/// Upper bound on a nonnegative rational in scientific notation ("6.250001e-11").
inline std::string scientific_upper(const Rational& v, int mantissa_digits = 6)
{
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_q(x, v.get_mpq_t(), MPFR_RNDU);
    char buf[64];
    const std::string format = "%." + std::to_string(mantissa_digits) + "RUe";
    mpfr_snprintf(buf, sizeof buf, format.c_str(), x);
    mpfr_clear(x);
    return buf;
}

} // namespace seriesaudit
