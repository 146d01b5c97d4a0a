#pragma once

// Exact cos/sin at multiples of pi/12, and cot at rational multiples of pi
// with denominator dividing 24, all inside Q(sqrt2, sqrt3).

#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/surd.hpp"

#include <array>
#include <string>

namespace seriesaudit::trig {

/// cos(pi j / 12) for any integer j.
inline SurdRational cos_twelfths(long j)
{
    j %= 24;
    if (j < 0)
        j += 24;
    if (j > 12)
        j = 24 - j;
    if (j > 6)
        return -cos_twelfths(12 - j);
    const Rational quarter(1, 4);
    switch (j) {
    case 0: return SurdRational(1);
    case 1: return SurdRational(0, quarter, 0, quarter);             // (sqrt6 + sqrt2)/4
    case 2: return SurdRational(0, 0, Rational(1, 2), 0);            // sqrt3/2
    case 3: return SurdRational(0, Rational(1, 2), 0, 0);            // sqrt2/2
    case 4: return SurdRational(Rational(1, 2));
    case 5: return SurdRational(0, Rational(-1, 4), 0, quarter);     // (sqrt6 - sqrt2)/4
    default: return SurdRational(0);
    }
}

inline SurdRational sin_twelfths(long j)
{
    return cos_twelfths(j - 6);
}

inline bool supported_modulus(long q)
{
    return q > 0 && 24 % q == 0;
}

inline long twentyfourths(long p, long q)
{
    if (!supported_modulus(q))
        throw UnsupportedModulus("modulus " + std::to_string(q) + " does not divide 24");
    return 24 / q * p;
}

/// cos(2 pi p / q) for q | 24.
inline SurdRational cos_two_pi(long p, long q)
{
    return cos_twelfths(twentyfourths(p, q));
}

/// cot(pi p / q) for q | 24 and p/q not an integer: sin(2t) / (1 - cos(2t)).
inline SurdRational cot_pi(long p, long q)
{
    long j = twentyfourths(p, q);
    return sin_twelfths(j) / (SurdRational(1) - cos_twelfths(j));
}

} // namespace seriesaudit::trig
