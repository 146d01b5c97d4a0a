#pragma once

#include "seriesaudit/cli/summand_syntax.hpp"
#include "seriesaudit/closedform/summation.hpp"
#include "seriesaudit/exact/partial_fractions.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace seriesaudit {

/// Random raw summand: one to four factors (a n + b)^m with a <= 6, positive
/// at n = 1, total degree between `min_degree` and 6.
inline RawSummand random_raw_summand(std::mt19937_64& rng, int min_degree = 1)
{
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<std::int64_t> lead(1, 6);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);

    for (;;) {
        RawSummand s;
        long p = 0;
        while (p == 0)
            p = num(rng);
        s.numerator = make_rational(p, den(rng));
        const int k = count(rng);
        int degree = 0;
        for (int i = 0; i < k; ++i) {
            const std::int64_t a = lead(rng);
            std::uniform_int_distribution<std::int64_t> offset(1 - a, 6);
            const int m = mult(rng);
            s.factors.push_back(LinearFactor{a, offset(rng), m});
            degree += m;
        }
        if (degree >= min_degree && degree <= 6)
            return s;
    }
}

inline Summand random_summand(std::mt19937_64& rng, int min_degree = 1)
{
    RawSummand raw = random_raw_summand(rng, min_degree);
    return normalize(raw.numerator, std::span<const LinearFactor>(raw.factors));
}

/// Random rational p/q with |p| <= 50, 1 <= q <= 12.
inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    return make_rational(num(rng), den(rng));
}

struct SelftestCheck {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;
};

/// Exact property checks on random summands. Every check is deterministic
/// for a given seed.
inline std::vector<SelftestCheck> run_selftest(std::uint64_t seed, long cases)
{
    std::mt19937_64 rng(seed);
    SelftestCheck round_trip{"parse-print round trip", 0, 0, {}};
    SelftestCheck residues{"residue sum zero for degree >= 2", 0, 0, {}};
    SelftestCheck reconstruct{"partial fractions reproduce the summand at 20 points", 0, 0, {}};
    SelftestCheck gamma{"Euler's constant cancels in closed forms", 0, 0, {}};

    auto fail = [](SelftestCheck& c, const std::string& what) {
        if (c.failures++ == 0)
            c.first_failure = what;
    };

    for (long i = 0; i < cases; ++i) {
        const Summand s = random_summand(rng, 2);
        const std::string text = to_string(s);

        ++round_trip.cases;
        try {
            if (!(parse_summand(text) == s))
                fail(round_trip, text);
        } catch (const Error& e) {
            fail(round_trip, text + ": " + e.what());
        }

        const PartialFractionForm pf = partial_fractions(s);
        ++residues.cases;
        if (residue_sum(pf) != 0)
            fail(residues, text);

        ++reconstruct.cases;
        for (int checked = 0; checked < 20;) {
            Rational x = random_rational(rng);
            bool pole = false;
            for (const LinearFactor& f : s.factors())
                pole = pole || f.root() == x;
            if (pole)
                continue;
            ++checked;
            if (evaluate_at(pf, x) != evaluate_at(s, x)) {
                fail(reconstruct, text + " at " + x.get_str());
                break;
            }
        }

        ++gamma.cases;
        try {
            if (!sum_closed_form(pf).coefficient(ConstantAtom::gamma()).is_zero())
                fail(gamma, text);
        } catch (const std::exception& e) {
            fail(gamma, text + ": " + e.what());
        }
    }
    return {round_trip, residues, reconstruct, gamma};
}

} // namespace seriesaudit
