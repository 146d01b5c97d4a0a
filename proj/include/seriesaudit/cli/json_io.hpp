#pragma once

#include "seriesaudit/cli/decimal.hpp"
#include "seriesaudit/cli/expression_syntax.hpp"
#include "seriesaudit/cli/summand_syntax.hpp"
#include "seriesaudit/registry/audit.hpp"

#include "json.hpp"

#include <string>

namespace seriesaudit {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

inline Json numeric_json(const Interval& x, long places)
{
    const CertifiedDecimal d = certify(x, places);
    return Json{{"lo", d.lo}, {"hi", d.hi}, {"digits", d.digits}, {"value", d.prefix}};
}

inline Json optional_string(const std::optional<ConstantExpression>& e)
{
    return e ? Json(e->to_string()) : Json(nullptr);
}

inline std::string lhs_text(const IdentityRecord& r)
{
    return summand_text(r.raw_numerator, r.raw_factors);
}

inline Json entry_json(const AuditEntry& e, unsigned long digits)
{
    const IdentityRecord& r = *e.record;
    Json j;
    j["id"] = e.id;
    j["paper_label"] = e.paper_label;
    j["lhs"] = lhs_text(r);
    j["claimed"] = e.claimed.to_string();
    j["computed_symbolic"] = optional_string(e.symbolic);
    j["numeric"] = e.numeric ? numeric_json(*e.numeric, static_cast<long>(digits) + 2) : Json(nullptr);
    j["verdict"] = to_string(e.verdict.kind);
    j["exact"] = e.verdict.exact;
    j["method"] = e.method;
    j["correction"] = optional_string(e.verdict.kind == VerdictKind::Refuted ? e.correction : std::nullopt);
    j["note"] = r.note.empty() ? Json(nullptr) : Json(r.note);
    j["diagnostics"] = e.verdict.diagnostics.empty() ? Json(nullptr) : Json(e.verdict.diagnostics);
    return j;
}

inline Json report_json(const AuditReport& report, unsigned long digits)
{
    Json entries = Json::array();
    for (const AuditEntry& e : report)
        entries.push_back(entry_json(e, digits));
    return Json{{"version", kDocumentVersion},
                {"command", "verify"},
                {"precision_digits", digits},
                {"entries", std::move(entries)}};
}

// Registry documents.
//
//   {"version": 1, "identities": [{"id", "paper_label", "numerator",
//     "factors": [{"a", "b", "m"}], "lhs", "claimed", "source_rhs", "note"}]}
//
// On import either "factors" (with optional "numerator") or "lhs" defines
// the summand, and "claimed" is read by the expression parser.

inline Json registry_json(const Registry& registry)
{
    Json ids = Json::array();
    for (const IdentityRecord& r : registry) {
        Json factors = Json::array();
        for (const LinearFactor& f : r.raw_factors)
            factors.push_back(Json{{"a", f.a}, {"b", f.b}, {"m", f.m}});
        ids.push_back(Json{{"id", r.id},
                           {"paper_label", r.paper_label},
                           {"numerator", r.raw_numerator.get_str()},
                           {"factors", std::move(factors)},
                           {"lhs", lhs_text(r)},
                           {"claimed", r.claimed.to_string()},
                           {"source_rhs", r.source_rhs},
                           {"note", r.note}});
    }
    return Json{{"version", kDocumentVersion}, {"identities", std::move(ids)}};
}

inline Registry registry_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("identities") || !doc["identities"].is_array())
        throw Error("registry document needs an \"identities\" array");
    auto text = [](const Json& o, const char* key, bool required) -> std::string {
        if (!o.contains(key)) {
            if (required)
                throw Error(std::string("registry identity is missing \"") + key + "\"");
            return {};
        }
        if (!o[key].is_string())
            throw Error(std::string("registry field \"") + key + "\" must be a string");
        return o[key].get<std::string>();
    };

    Registry out;
    for (const Json& o : doc["identities"]) {
        if (!o.is_object())
            throw Error("registry identities must be objects");
        const std::string id = text(o, "id", true);
        if (find_identity(out, id))
            throw Error("duplicate identity id '" + id + "'");
        ConstantExpression claimed;
        try {
            claimed = parse_expression(text(o, "claimed", true));
        } catch (const ParseError& e) {
            throw Error("identity '" + id + "', claimed value: " + e.what());
        }

        Rational numerator(1);
        std::vector<LinearFactor> factors;
        if (o.contains("factors")) {
            if (o.contains("numerator"))
                numerator = parse_rational(text(o, "numerator", true));
            for (const Json& f : o["factors"]) {
                if (!f.is_object() || !f.contains("a") || !f.contains("b") || !f["a"].is_number_integer() ||
                    !f["b"].is_number_integer())
                    throw Error("identity '" + id + "': factors need integer \"a\" and \"b\"");
                int m = f.contains("m") ? f["m"].get<int>() : 1;
                factors.push_back(LinearFactor{f["a"].get<std::int64_t>(), f["b"].get<std::int64_t>(), m});
            }
        } else {
            RawSummand s = parse_summand_raw(text(o, "lhs", true));
            numerator = s.numerator;
            factors = std::move(s.factors);
        }
        out.push_back(make_identity(id, std::move(factors), std::move(claimed), text(o, "paper_label", false),
                                    text(o, "source_rhs", false), text(o, "note", false), numerator));
    }
    return out;
}

} // namespace seriesaudit
