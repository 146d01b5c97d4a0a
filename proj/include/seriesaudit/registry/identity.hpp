#pragma once

#include "seriesaudit/closedform/expression.hpp"
#include "seriesaudit/exact/summand.hpp"

#include <string>
#include <vector>

namespace seriesaudit {

/// A series identity as stated in its source: sum_{n>=1} summand = claimed.
/// `claimed` is a hypothesis to audit, never assumed true. `raw_factors` keep
/// the source's factor order for display; `summand` is their canonical form.
struct IdentityRecord {
    std::string id;
    Rational raw_numerator;
    std::vector<LinearFactor> raw_factors;
    Summand summand;
    ConstantExpression claimed;
    std::string paper_label;
    std::string source_rhs; ///< right-hand side exactly as typeset (LaTeX)
    std::string note;
};

using Registry = std::vector<IdentityRecord>;

inline IdentityRecord make_identity(std::string id, std::vector<LinearFactor> factors, ConstantExpression claimed,
                                    std::string label, std::string rhs, std::string note = {},
                                    Rational numerator = Rational(1))
{
    Summand s = normalize(numerator, std::span<const LinearFactor>(factors));
    return IdentityRecord{std::move(id), std::move(numerator), std::move(factors), std::move(s),
                          std::move(claimed), std::move(label), std::move(rhs), std::move(note)};
}

inline const IdentityRecord* find_identity(const Registry& registry, const std::string& id)
{
    for (const IdentityRecord& r : registry)
        if (r.id == id)
            return &r;
    return nullptr;
}

} // namespace seriesaudit
