#pragma once

// Arbitrary-size integers and rationals. GMP keeps mpq_class canonical
// (positive denominator, coprime parts) after every arithmetic operation; the
// helpers below preserve that for values built from raw parts.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seriesaudit {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// Parses "p" or "p/q" with optional leading sign.
inline Rational parse_rational(std::string_view text)
{
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("not a rational: " + std::string(text));
    if (r.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

inline std::string to_string(const Integer& z)
{
    return z.get_str(10);
}

inline Integer ipow(const Integer& base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

/// Integer power of a rational; negative exponents invert.
template <std::integral E>
Rational rpow(const Rational& base, E exponent)
{
    const bool invert = exponent < 0;
    const auto magnitude = static_cast<unsigned long>(invert ? -static_cast<long long>(exponent) : exponent);
    Integer n = ipow(base.get_num(), magnitude);
    Integer d = ipow(base.get_den(), magnitude);
    return invert ? make_rational(d, n) : make_rational(n, d);
}

inline Integer floor_of(const Rational& r)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

inline Integer ceil_of(const Rational& r)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

inline Rational abs_of(const Rational& r)
{
    return r < 0 ? Rational(-r) : r;
}

inline Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Integer gcd_of(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

/// 10^k as an exact rational (k may be negative).
inline Rational pow10(long k)
{
    return rpow(Rational(10), k);
}

} // namespace seriesaudit
