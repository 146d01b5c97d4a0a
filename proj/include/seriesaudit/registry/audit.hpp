#pragma once

#include "seriesaudit/closedform/summation.hpp"
#include "seriesaudit/closedform/verdict.hpp"
#include "seriesaudit/registry/identity.hpp"
#include "seriesaudit/series/benchmark.hpp"
#include "seriesaudit/series/series_eval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seriesaudit {

struct AuditOptions {
    unsigned long digits = 50;
    bool numeric_only = false; ///< skip the symbolic channel entirely
    unsigned long cap_bits = Precision::kDefaultCapBits;

    static constexpr unsigned long kMaxDigits = 200;
};

/// One row of an audit report.
struct AuditEntry {
    std::string id;
    std::string paper_label;
    const IdentityRecord* record = nullptr;
    ConstantExpression claimed;
    std::optional<ConstantExpression> symbolic;
    std::optional<Interval> numeric;
    std::optional<Interval> claimed_value;
    Verdict verdict;
    std::optional<ConstantExpression> correction;
    std::string method; ///< "symbolic+numeric" or "numeric"
};

using AuditReport = std::vector<AuditEntry>;

/// Audits one identity with two independent channels:
///   symbolic  partial fractions -> closed form -> simplify
///   numeric   exact prefix + certified tail enclosure
/// Verified needs the claim to match both channels (only the numeric one
/// under `numeric_only`). Refuted needs the numeric enclosure to exclude the
/// claimed value; the symbolic result becomes the correction when it is
/// fully resolved.
inline AuditEntry audit(const IdentityRecord& record, const AuditOptions& options)
{
    AuditEntry entry;
    entry.id = record.id;
    entry.paper_label = record.paper_label;
    entry.record = &record;
    entry.claimed = record.claimed;
    entry.method = options.numeric_only ? "numeric" : "symbolic+numeric";

    const unsigned long digits = options.digits;
    const Precision p = Precision::for_digits(digits, options.cap_bits);

    try {
        entry.numeric = eval_series(record.summand, digits, p);
        entry.claimed_value = expr_to_interval(record.claimed, p);
    } catch (const PrecisionCapExceeded& e) {
        entry.verdict = Verdict::inconclusive(0, e.what());
        return entry;
    }

    const Interval& numeric = *entry.numeric;
    const Interval& claimed = *entry.claimed_value;
    const bool separated = !numeric.intersects(claimed);
    std::optional<Verdict> refutation;
    if (separated)
        refutation = Verdict::refuted(numeric - claimed);

    if (!options.numeric_only) {
        try {
            entry.symbolic = sum_closed_form(partial_fractions(record.summand));
        } catch (const Error& e) {
            entry.verdict = Verdict::inconclusive(0, std::string("symbolic channel failed: ") + e.what());
            return entry;
        }
        if (entry.symbolic->fully_resolved())
            entry.correction = separated ? entry.symbolic : std::nullopt;
    }

    if (refutation) {
        entry.verdict = *refutation;
        entry.verdict.correction = entry.correction;
        return entry;
    }

    if (options.numeric_only) {
        entry.verdict = Verdict::verified(digits, false);
        return entry;
    }

    try {
        const Interval symbolic_value = expr_to_interval(*entry.symbolic, p);
        if (!symbolic_value.intersects(numeric)) {
            entry.verdict = Verdict::inconclusive(numeric.width(), "symbolic and numeric channels disagree");
            return entry;
        }
    } catch (const PrecisionCapExceeded& e) {
        entry.verdict = Verdict::inconclusive(numeric.width(), e.what());
        return entry;
    }

    Verdict symbolic_verdict = expr_equal(record.claimed, *entry.symbolic, digits, options.cap_bits);
    switch (symbolic_verdict.kind) {
    case VerdictKind::Verified:
        entry.verdict = symbolic_verdict;
        break;
    case VerdictKind::Refuted:
        // The numeric channel could not separate the claim, so it is not refuted here.
        entry.verdict = Verdict::inconclusive(numeric.width(),
                                              "symbolic result differs from the claim below numeric resolution");
        break;
    case VerdictKind::Inconclusive:
        entry.verdict = symbolic_verdict;
        break;
    }
    return entry;
}

inline AuditEntry audit(const Registry& registry, const std::string& id, const AuditOptions& options)
{
    const IdentityRecord* record = find_identity(registry, id);
    if (!record)
        throw UnknownSeriesId("unknown series id '" + id + "'");
    return audit(*record, options);
}

/// Audits every record, in registry order.
inline AuditReport audit_all(const Registry& registry, const AuditOptions& options)
{
    AuditReport report;
    report.reserve(registry.size());
    for (const IdentityRecord& record : registry)
        report.push_back(audit(record, options));
    return report;
}

inline std::vector<BenchmarkSeries> benchmark(const Registry& registry, const std::vector<std::string>& ids,
                                              const std::vector<long>& schedule)
{
    std::vector<BenchmarkSeries> out;
    for (const std::string& id : ids) {
        const IdentityRecord* record = find_identity(registry, id);
        if (!record)
            throw UnknownSeriesId("unknown series id '" + id + "'");
        out.push_back(benchmark_series(id, record->summand, schedule));
    }
    return out;
}

} // namespace seriesaudit
