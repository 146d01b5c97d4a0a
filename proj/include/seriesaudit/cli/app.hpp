#pragma once

#include "seriesaudit/cli/decimal.hpp"
#include "seriesaudit/cli/expression_syntax.hpp"
#include "seriesaudit/cli/json_io.hpp"
#include "seriesaudit/cli/selftest.hpp"
#include "seriesaudit/cli/summand_syntax.hpp"
#include "seriesaudit/registry/audit.hpp"
#include "seriesaudit/registry/builtin.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace seriesaudit {

enum ExitCode : int {
    kExitOk = 0,
    kExitRefuted = 1,
    kExitUsage = 2,
    kExitInconclusive = 3,
};

namespace detail {

inline constexpr const char* kMinus = "−";
inline constexpr const char* kDot = "·";

/// "(2n−1)" style factor for display, with a Unicode minus.
inline std::string pretty_factor(const Rational& pole, int order)
{
    const Integer a = pole.get_den();
    const Integer b = pole.get_num();
    std::string lead = a == 1 ? "" : a.get_str();
    std::string body;
    if (b == 0)
        body = lead + "n";
    else
        body = "(" + lead + "n" + (b < 0 ? kMinus : "+") + Integer(abs(b)).get_str() + ")";
    if (order > 1)
        body += "^" + std::to_string(order);
    return body;
}

/// Partial fractions in the integer-coefficient form c · 1/(a n + b)^k,
/// ordered by root and then by order.
inline std::vector<std::pair<Rational, PoleTerm>> display_terms(const PartialFractionForm& pf)
{
    std::vector<std::pair<Rational, PoleTerm>> out;
    for (const PoleTerm& t : pf.terms) {
        const Rational a(t.pole.get_den());
        out.emplace_back(t.coeff * rpow(a, t.order), t);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        if (l.second.pole != r.second.pole)
            return l.second.pole > r.second.pole;
        return l.second.order < r.second.order;
    });
    return out;
}

inline std::string decomposition_text(const PartialFractionForm& pf)
{
    std::string out;
    for (const auto& [c, t] : display_terms(pf)) {
        const bool negative = c < 0;
        const std::string mag = Rational(abs(c)).get_str();
        const std::string term = mag + " " + kDot + " 1/" + pretty_factor(t.pole, t.order);
        if (out.empty())
            out = (negative ? std::string(kMinus) : std::string()) + term;
        else
            out += std::string(" ") + (negative ? kMinus : "+") + " " + term;
    }
    return out.empty() ? "0" : out;
}

inline Json decomposition_json(const PartialFractionForm& pf)
{
    Json terms = Json::array();
    for (const auto& [c, t] : display_terms(pf)) {
        terms.push_back(Json{{"factor", factor_to_string(LinearFactor{t.pole.get_den().get_si(),
                                                                      t.pole.get_num().get_si(), 1})},
                             {"order", t.order},
                             {"coefficient", c.get_str()},
                             {"root", Rational(-t.pole).get_str()},
                             {"monic_coefficient", t.coeff.get_str()}});
    }
    return terms;
}

inline std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

inline std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

/// Certified decimal for text output. Falls back to the enclosure when
/// truncation cannot certify `wanted` digits, e.g. for a sum that is
/// exactly a short decimal.
inline std::string value_text(const Interval& x, unsigned long wanted)
{
    const CertifiedDecimal d = certify(x, static_cast<long>(wanted) + 2);
    if (d.digits >= static_cast<long>(wanted))
        return d.prefix + "  (" + std::to_string(d.digits) + " digits)";
    return "in [" + d.lo + ", " + d.hi + "]";
}

struct UsageError : Error {
    using Error::Error;
};

} // namespace detail

struct GlobalOptions {
    std::string format = "text";
    unsigned long cap_bits = Precision::kDefaultCapBits;
    std::uint64_t seed = 20240501;
    bool json() const { return format == "json"; }
};

/// Runs one command line (without the program name). Output documents go to
/// `out` only after the command has succeeded, diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Audits infinite series identities with exact and certified numeric arithmetic", "seriesaudit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    unsigned long cap_flag = 0;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--precision-cap", cap_flag, "Largest working precision in bits")->check(CLI::Range(64UL, 1UL << 24));
    app.add_option("--seed", g.seed, "Seed for selftest");

    std::string expr_text;
    unsigned long digits = 30;

    auto* decompose = app.add_subcommand("decompose", "Partial fraction decomposition of a summand");
    decompose->add_option("expr", expr_text, "Summand, e.g. 1/(n(2n-1)(4n-3))")->required();

    auto* closed = app.add_subcommand("closed-form", "Exact value of the series sum from n = 1");
    closed->add_option("expr", expr_text, "Summand")->required();
    closed->add_option("--digits", digits, "Digits for the numeric check")->check(CLI::Range(1UL, AuditOptions::kMaxDigits));

    auto* eval = app.add_subcommand("eval", "Certified numeric value of the series");
    eval->add_option("expr", expr_text, "Summand")->required();
    eval->add_option("--digits", digits, "Target digits")->check(CLI::Range(1UL, AuditOptions::kMaxDigits));

    auto* verify = app.add_subcommand("verify", "Audit registry identities");
    bool all = false;
    std::vector<std::string> ids;
    bool numeric_only = false;
    unsigned long verify_digits = 50;
    std::string registry_file;
    auto* all_flag = verify->add_flag("--all", all, "Audit every identity");
    auto* id_opt = verify->add_option("--id", ids, "Identity id (repeatable)");
    all_flag->excludes(id_opt);
    verify->add_option("--digits", verify_digits, "Target digits")->check(CLI::Range(1UL, AuditOptions::kMaxDigits));
    verify->add_flag("--numeric-only", numeric_only, "Skip the symbolic channel");
    verify->add_option("--registry", registry_file, "Registry JSON document")->check(CLI::ExistingFile);

    auto* bench = app.add_subcommand("bench", "Certified error bound against N");
    std::string bench_ids = "eq13,thm1";
    std::string schedule_text = "100,1000,10000,100000";
    bench->add_option("--ids", bench_ids, "Comma separated ids");
    bench->add_option("--schedule", schedule_text, "Comma separated N values");
    bench->add_option("--registry", registry_file, "Registry JSON document")->check(CLI::ExistingFile);

    auto* selftest = app.add_subcommand("selftest", "Randomized exact property checks");
    long cases = 500;
    selftest->add_option("--cases", cases, "Number of random summands")->check(CLI::Range(1L, 1000000L));

    auto* export_registry = app.add_subcommand("export-registry", "Print the registry as JSON");
    export_registry->add_option("--registry", registry_file, "Registry JSON document")->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ostringstream doc;
    auto emit = [&](const Json& j) { doc << j.dump(2) << "\n"; };

    try {
        if (const char* env = std::getenv("SERIESAUDIT_PRECISION_CAP"); env && *env) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (*end != '\0' || v < 64)
                throw detail::UsageError("SERIESAUDIT_PRECISION_CAP must be an integer >= 64");
            g.cap_bits = v;
        }
        if (app.get_option("--precision-cap")->count())
            g.cap_bits = cap_flag;

        auto load_registry = [&]() -> Registry {
            if (registry_file.empty())
                return builtin_registry();
            std::ifstream in(registry_file);
            Json j;
            try {
                j = Json::parse(in);
            } catch (const Json::parse_error& e) {
                throw detail::UsageError(registry_file + ": " + e.what());
            }
            return registry_from_json(j);
        };

        int code = kExitOk;

        if (*decompose) {
            const Summand s = parse_summand(expr_text);
            const PartialFractionForm pf = partial_fractions(s);
            if (g.json()) {
                emit(Json{{"version", kDocumentVersion},
                          {"command", "decompose"},
                          {"input", expr_text},
                          {"summand", to_string(s)},
                          {"degree", s.degree()},
                          {"residue_sum", residue_sum(pf).get_str()},
                          {"convergent", s.degree() >= 2},
                          {"terms", detail::decomposition_json(pf)},
                          {"text", detail::decomposition_text(pf)}});
            } else {
                doc << detail::decomposition_text(pf) << "\n";
            }
        } else if (*closed) {
            const Summand s = parse_summand(expr_text);
            const ConstantExpression e = sum_closed_form(partial_fractions(s));
            const Interval v = expr_to_interval(e, Precision::for_digits(digits, g.cap_bits));
            if (g.json()) {
                emit(Json{{"version", kDocumentVersion},
                          {"command", "closed-form"},
                          {"input", expr_text},
                          {"summand", to_string(s)},
                          {"precision_digits", digits},
                          {"closed_form", e.to_string()},
                          {"fully_resolved", e.fully_resolved()},
                          {"numeric", numeric_json(v, static_cast<long>(digits) + 2)}});
            } else {
                doc << e.to_string() << "\n" << "  ≈ " << detail::value_text(v, digits) << "\n";
            }
        } else if (*eval) {
            const Summand s = parse_summand(expr_text);
            const Interval v = eval_series(s, digits, Precision::for_digits(digits, g.cap_bits));
            const long places = static_cast<long>(digits) + 2;
            if (g.json()) {
                emit(Json{{"version", kDocumentVersion},
                          {"command", "eval"},
                          {"input", expr_text},
                          {"summand", to_string(s)},
                          {"precision_digits", digits},
                          {"numeric", numeric_json(v, places)}});
            } else {
                doc << detail::value_text(v, digits) << "\n";
            }
        } else if (*verify) {
            if (!all && ids.empty())
                throw detail::UsageError("verify needs --all or --id");
            const Registry registry = load_registry();
            AuditOptions opts;
            opts.digits = verify_digits;
            opts.numeric_only = numeric_only;
            opts.cap_bits = g.cap_bits;
            AuditReport report;
            if (all) {
                report = audit_all(registry, opts);
            } else {
                for (const std::string& id : ids)
                    report.push_back(audit(registry, id, opts));
            }

            long refuted = 0;
            long inconclusive = 0;
            for (const AuditEntry& e : report) {
                refuted += e.verdict.kind == VerdictKind::Refuted;
                inconclusive += e.verdict.kind == VerdictKind::Inconclusive;
            }
            code = inconclusive ? kExitInconclusive : refuted ? kExitRefuted : kExitOk;

            if (g.json()) {
                emit(report_json(report, verify_digits));
            } else {
                for (const AuditEntry& e : report) {
                    std::string tag = to_string(e.verdict.kind);
                    if (e.verdict.kind == VerdictKind::Verified)
                        tag += e.verdict.exact ? " (exact)" : " (numeric)";
                    doc << detail::pad(e.id, 7) << detail::pad(e.paper_label, 20) << detail::pad(tag, 21)
                        << lhs_text(*e.record) << " = " << e.claimed.to_string() << "\n";
                    if (e.numeric)
                        doc << "       sum     " << detail::value_text(*e.numeric, verify_digits) << "\n";
                    if (e.verdict.kind == VerdictKind::Refuted && e.correction)
                        doc << "       correct " << e.correction->to_string() << "\n";
                    if (!e.verdict.diagnostics.empty())
                        doc << "       note    " << e.verdict.diagnostics << "\n";
                }
                doc << report.size() << " identities: " << report.size() - refuted - inconclusive << " verified, "
                    << refuted << " refuted, " << inconclusive << " inconclusive\n";
            }
        } else if (*bench) {
            const Registry registry = load_registry();
            std::vector<long> schedule;
            for (const std::string& item : detail::split_csv(schedule_text)) {
                std::size_t used = 0;
                long n = 0;
                try {
                    n = std::stol(item, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != item.size() || n < 1 || n > 100000000L)
                    throw detail::UsageError("schedule entries must be integers in [1, 1e8], got '" + item + "'");
                schedule.push_back(n);
            }
            const std::vector<std::string> id_list = detail::split_csv(bench_ids);
            if (id_list.empty() || schedule.empty())
                throw detail::UsageError("bench needs at least one id and one N");
            const std::vector<BenchmarkSeries> results = benchmark(registry, id_list, schedule);
            if (g.json()) {
                Json series = Json::array();
                for (const BenchmarkSeries& b : results) {
                    Json rows = Json::array();
                    for (const BenchmarkRow& r : b.rows)
                        rows.push_back(
                            Json{{"N", r.N}, {"error_bound", scientific_upper(r.error_bound)}, {"digits", r.digits}});
                    series.push_back(Json{{"id", b.id}, {"rows", std::move(rows)}, {"slope", b.slope}});
                }
                emit(Json{{"version", kDocumentVersion},
                          {"command", "bench"},
                          {"schedule", schedule},
                          {"series", std::move(series)}});
            } else {
                doc << detail::pad("id", 7) << detail::pad("N", 12) << detail::pad("error bound", 16) << "digits\n";
                for (const BenchmarkSeries& b : results) {
                    for (const BenchmarkRow& r : b.rows)
                        doc << detail::pad(b.id, 7) << detail::pad(std::to_string(r.N), 12)
                            << detail::pad(scientific_upper(r.error_bound, 3), 16) << r.digits << "\n";
                    std::ostringstream slope;
                    slope << std::fixed << std::setprecision(4) << b.slope;
                    doc << detail::pad(b.id, 7) << "slope " << slope.str() << "\n";
                }
            }
        } else if (*selftest) {
            const std::vector<SelftestCheck> checks = run_selftest(g.seed, cases);
            bool ok = true;
            for (const SelftestCheck& c : checks)
                ok = ok && c.failures == 0;
            code = ok ? kExitOk : kExitRefuted;
            if (g.json()) {
                Json list = Json::array();
                for (const SelftestCheck& c : checks)
                    list.push_back(Json{{"name", c.name},
                                        {"cases", c.cases},
                                        {"failures", c.failures},
                                        {"first_failure", c.first_failure.empty() ? Json(nullptr)
                                                                                  : Json(c.first_failure)}});
                emit(Json{{"version", kDocumentVersion},
                          {"command", "selftest"},
                          {"seed", g.seed},
                          {"cases", cases},
                          {"passed", ok},
                          {"checks", std::move(list)}});
            } else {
                for (const SelftestCheck& c : checks) {
                    doc << (c.failures ? "FAIL " : "ok   ") << c.name << " (" << c.cases << " cases";
                    if (c.failures)
                        doc << ", " << c.failures << " failures, first: " << c.first_failure;
                    doc << ")\n";
                }
            }
        } else if (*export_registry) {
            emit(registry_json(load_registry()));
        }

        out << doc.str();
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        if (!expr_text.empty()) {
            err << "  " << expr_text << "\n  " << std::string(std::min(e.offset(), expr_text.size()), ' ')
                << std::string(std::max<std::size_t>(1, e.length()), '^') << "\n";
        }
        return kExitUsage;
    } catch (const PrecisionCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace seriesaudit
