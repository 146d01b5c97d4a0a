#pragma once

#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seriesaudit {

/// (a*n + b)^m with a >= 1, m >= 1 and a + b > 0, so the factor is positive at every n >= 1.
struct LinearFactor {
    std::int64_t a = 1;
    std::int64_t b = 0;
    int m = 1;

    /// The value of n where the factor vanishes, -b/a.
    Rational root() const { return make_rational(-b, a); }

    /// Pole location x in the monic form (n + x).
    Rational shift() const { return make_rational(b, a); }

    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// Term c / prod (a_i n + b_i)^m_i of a series summed from n = 1.
///
/// Canonical form: every factor is primitive (gcd(a, |b|) = 1), no two factors
/// share a root, factors are ordered by increasing root, and any common
/// integer content of the raw factors has been folded into the numerator.
class Summand {
public:
    const Rational& numerator() const { return numerator_; }
    const std::vector<LinearFactor>& factors() const { return factors_; }

    int degree() const
    {
        return std::accumulate(factors_.begin(), factors_.end(), 0,
                               [](int acc, const LinearFactor& f) { return acc + f.m; });
    }

    friend bool operator==(const Summand&, const Summand&) = default;

    friend Summand normalize(const Rational& raw_numerator, std::span<const LinearFactor> raw_factors);

private:
    Summand(Rational numerator, std::vector<LinearFactor> factors)
        : numerator_(std::move(numerator)), factors_(std::move(factors))
    {
    }

    Rational numerator_;
    std::vector<LinearFactor> factors_;
};

/// Builds the canonical Summand. Proportional factors such as (2n-1) and
/// (4n-2) are merged, with the ratio of leading coefficients folded into the
/// numerator; the term's value at every n >= 1 is unchanged.
inline Summand normalize(const Rational& raw_numerator, std::span<const LinearFactor> raw_factors)
{
    if (raw_numerator == 0)
        throw ZeroNumerator("summand numerator is zero");
    if (raw_factors.empty())
        throw Error("summand needs at least one linear factor");

    Rational numerator = raw_numerator;
    std::vector<LinearFactor> merged;
    for (const LinearFactor& f : raw_factors) {
        if (f.a < 1)
            throw NonPositiveFactor("leading coefficient must be >= 1 in (" + std::to_string(f.a) + "n" +
                                    (f.b < 0 ? "" : "+") + std::to_string(f.b) + ")");
        if (f.m < 1)
            throw Error("factor multiplicity must be >= 1");
        if (f.a + f.b <= 0)
            throw NonPositiveFactor("factor (" + std::to_string(f.a) + "n" + (f.b < 0 ? "" : "+") +
                                    std::to_string(f.b) + ") is not positive at n = 1");

        std::int64_t g = std::gcd(f.a, f.b < 0 ? -f.b : f.b);
        LinearFactor primitive{f.a / g, f.b / g, f.m};
        if (g != 1)
            numerator /= rpow(Rational(static_cast<long>(g)), static_cast<unsigned long>(f.m));

        auto same_root = std::find_if(merged.begin(), merged.end(), [&](const LinearFactor& e) {
            return e.a == primitive.a && e.b == primitive.b;
        });
        if (same_root != merged.end())
            same_root->m += primitive.m;
        else
            merged.push_back(primitive);
    }

    std::sort(merged.begin(), merged.end(),
              [](const LinearFactor& l, const LinearFactor& r) { return l.root() < r.root(); });
    return Summand(std::move(numerator), std::move(merged));
}

inline Summand normalize(const Rational& raw_numerator, std::initializer_list<LinearFactor> raw_factors)
{
    return normalize(raw_numerator, std::span<const LinearFactor>(raw_factors.begin(), raw_factors.size()));
}

/// Exact term value at a rational point; throws std::domain_error at a pole.
inline Rational evaluate_at(const Summand& s, const Rational& x)
{
    Rational denominator = 1;
    for (const LinearFactor& f : s.factors()) {
        Rational v = Rational(static_cast<long>(f.a)) * x + Rational(static_cast<long>(f.b));
        if (v == 0)
            throw std::domain_error("summand evaluated at a pole");
        denominator *= rpow(v, static_cast<unsigned long>(f.m));
    }
    return s.numerator() / denominator;
}

/// Exact value of the term at summation index n >= 1.
inline Rational evaluate_term(const Summand& s, const Integer& n)
{
    if (n < 1)
        throw std::invalid_argument("summation index must be >= 1");
    Integer denominator = 1;
    for (const LinearFactor& f : s.factors()) {
        Integer v = Integer(static_cast<long>(f.a)) * n + Integer(static_cast<long>(f.b));
        denominator *= ipow(v, static_cast<unsigned long>(f.m));
    }
    return s.numerator() / Rational(denominator);
}

inline Rational evaluate_term(const Summand& s, long n)
{
    return evaluate_term(s, Integer(n));
}

} // namespace seriesaudit
