#pragma once

#include "seriesaudit/exact/rational.hpp"

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seriesaudit {

enum class AtomKind {
    One,
    Pi,
    PiSq,
    Gamma,
    Zeta3,
    LnPrime,
    LnSin,
    Poly,
};

/// Basis constant of a closed form.
///
///   One, Pi, PiSq, Gamma (Euler's constant), Zeta3
///   LnPrime(p)   ln p for a prime p
///   LnSin(p, q)  ln sin(pi p/q), gcd(p, q) = 1, 1 <= p <= q - p
///   Poly(k, p, q) psi^(k)(p/q) for k >= 1, and psi(p/q) + gamma for k = 0,
///                 with p/q in (0, 1] in lowest terms
///
/// Splitting gamma out of the k = 0 fallback keeps Euler's constant explicit,
/// so it cancels symbolically whenever the residues of a series sum to zero.
struct ConstantAtom {
    AtomKind kind = AtomKind::One;
    unsigned k = 0;
    long p = 0;
    long q = 0;

    static ConstantAtom one() { return {AtomKind::One}; }
    static ConstantAtom pi() { return {AtomKind::Pi}; }
    static ConstantAtom pi_sq() { return {AtomKind::PiSq}; }
    static ConstantAtom gamma() { return {AtomKind::Gamma}; }
    static ConstantAtom zeta3() { return {AtomKind::Zeta3}; }

    static ConstantAtom ln_prime(long prime)
    {
        if (!is_prime(prime))
            throw std::invalid_argument("LnPrime needs a prime, got " + std::to_string(prime));
        return {AtomKind::LnPrime, 0, prime, 0};
    }

    static ConstantAtom ln_sin(long num, long den)
    {
        if (den < 2 || num < 1 || num >= den)
            throw std::invalid_argument("LnSin needs 0 < p < q");
        long g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (den - num < num)
            num = den - num;
        return {AtomKind::LnSin, 0, num, den};
    }

    static ConstantAtom poly(unsigned order, long num, long den)
    {
        if (den < 1 || num < 1 || num > den)
            throw std::invalid_argument("Poly atom argument must lie in (0, 1]");
        long g = std::gcd(num, den);
        return {AtomKind::Poly, order, num / g, den / g};
    }

    /// Atoms whose value is only available numerically.
    bool numeric_only() const { return kind == AtomKind::LnSin || kind == AtomKind::Poly; }

    std::string to_string() const
    {
        switch (kind) {
        case AtomKind::One: return "1";
        case AtomKind::Pi: return "pi";
        case AtomKind::PiSq: return "pi^2";
        case AtomKind::Gamma: return "gamma";
        case AtomKind::Zeta3: return "zeta3";
        case AtomKind::LnPrime: return "ln" + std::to_string(p);
        case AtomKind::LnSin: return "lnsin(" + std::to_string(p) + "/" + std::to_string(q) + ")";
        case AtomKind::Poly:
            return (k == 0 ? std::string("psig") : "psi" + std::to_string(k)) + "(" + std::to_string(p) + "/" +
                   std::to_string(q) + ")";
        }
        return "?";
    }

    friend auto operator<=>(const ConstantAtom&, const ConstantAtom&) = default;

    static bool is_prime(long n)
    {
        if (n < 2)
            return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }
};

} // namespace seriesaudit
