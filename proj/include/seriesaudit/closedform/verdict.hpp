#pragma once

#include "seriesaudit/analytic/interval.hpp"
#include "seriesaudit/closedform/expression.hpp"
#include "seriesaudit/error.hpp"

#include <optional>
#include <string>

namespace seriesaudit {

enum class VerdictKind { Verified, Refuted, Inconclusive };

inline const char* to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Verified: return "verified";
    case VerdictKind::Refuted: return "refuted";
    case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Outcome of comparing two values.
///  - Verified: exact symbolic equality (`exact`), or agreement of certified
///    intervals to `digits` digits.
///  - Refuted: `separation` encloses the difference and excludes zero;
///    `correction` carries a symbolic replacement when one is known.
///  - Inconclusive: the difference could neither be pinned below 10^-digits
///    nor separated from zero; `overlap_width` is the last enclosure width.
struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    unsigned long digits = 0;
    bool exact = false;
    std::optional<Interval> separation;
    std::optional<ConstantExpression> correction;
    Rational overlap_width = 0;
    std::string diagnostics;

    static Verdict verified(unsigned long digits, bool exact)
    {
        Verdict v;
        v.kind = VerdictKind::Verified;
        v.digits = digits;
        v.exact = exact;
        return v;
    }
    static Verdict refuted(Interval separation)
    {
        Verdict v;
        v.kind = VerdictKind::Refuted;
        v.separation = std::move(separation);
        return v;
    }
    static Verdict inconclusive(Rational width, std::string why)
    {
        Verdict v;
        v.kind = VerdictKind::Inconclusive;
        v.overlap_width = std::move(width);
        v.diagnostics = std::move(why);
        return v;
    }
};

/// Compares e1 and e2. An empty simplified difference is exact equality. A
/// difference involving numeric atoms (log-sine, polygamma) counts as zero
/// once its enclosure lies within +-10^-digits; one made only of classical
/// constants must separate from zero or stay inconclusive. An enclosure excluding zero
/// refutes. Otherwise precision doubles until `cap_bits`.
inline Verdict expr_equal(const ConstantExpression& e1, const ConstantExpression& e2, unsigned long digits,
                          unsigned long cap_bits = Precision::kDefaultCapBits)
{
    const ConstantExpression diff = simplify(e1 - e2);
    if (diff.empty())
        return Verdict::verified(digits, true);

    const bool numeric_only = !diff.fully_resolved();
    const Rational tolerance = pow10(-static_cast<long>(digits));
    Rational last_width = 0;
    try {
        for (unsigned long bits = Precision::bits_for_digits(digits); bits <= cap_bits; bits *= 2) {
            Interval d = expr_to_interval_at_bits(diff, bits, cap_bits);
            if (!d.contains_zero())
                return Verdict::refuted(d);
            last_width = d.width();
            if (numeric_only && d.magnitude() <= tolerance)
                return Verdict::verified(digits, false);
        }
    } catch (const PrecisionCapExceeded& e) {
        return Verdict::inconclusive(last_width, e.what());
    }
    return Verdict::inconclusive(last_width, "difference " + diff.to_string() +
                                                 " not separated from zero within the precision cap");
}

} // namespace seriesaudit
