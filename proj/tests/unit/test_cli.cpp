#include "seriesaudit/cli/app.hpp"
#include "seriesaudit/cli/decimal.hpp"
#include "seriesaudit/cli/expression_syntax.hpp"
#include "seriesaudit/cli/json_io.hpp"
#include "seriesaudit/cli/selftest.hpp"
#include "seriesaudit/cli/summand_syntax.hpp"
#include "seriesaudit/registry/builtin.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace seriesaudit;

namespace {

constexpr std::uint64_t kSeed = 20240501;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json cli_json(std::vector<std::string> args, int expected_code = 0)
{
    args.insert(args.begin(), {"--format", "json"});
    const Result r = cli(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return Json::parse(r.out);
}

LinearFactor f(std::int64_t a, std::int64_t b, int m = 1)
{
    return LinearFactor{a, b, m};
}

Summand summand(std::vector<LinearFactor> factors, Rational numerator = Rational(1))
{
    return normalize(numerator, std::span<const LinearFactor>(factors));
}

SurdRational q(long n, long d = 1)
{
    return SurdRational(make_rational(n, d));
}

std::size_t parse_error_offset(std::string_view text)
{
    try {
        parse_summand(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return std::string::npos;
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char* name_;
};

} // namespace

TEST(SummandSyntax, TheoremSummand)
{
    EXPECT_EQ(parse_summand("1/(n(2n-1)(4n-3))"), summand({f(1, 0), f(2, -1), f(4, -3)}));
    EXPECT_EQ(parse_summand("1/(n (2n - 1) (4n - 3))"), summand({f(1, 0), f(2, -1), f(4, -3)}));
    EXPECT_EQ(parse_summand("1/n(2n-1)(4n-3)"), summand({f(1, 0), f(2, -1), f(4, -3)}));
}

TEST(SummandSyntax, PowersAndShifts)
{
    EXPECT_EQ(parse_summand("1/(n^2(n+1)^2)"), summand({f(1, 0, 2), f(1, 1, 2)}));
    EXPECT_EQ(parse_summand("1/(n^2)"), summand({f(1, 0, 2)}));
    EXPECT_EQ(parse_summand("3/((2n+1)^3)"), summand({f(2, 1, 3)}, Rational(3)));
    EXPECT_EQ(parse_summand("1/(2n(2n-1))"), summand({f(2, 0), f(2, -1)}));
}

TEST(SummandSyntax, ProportionalFactorsMerge)
{
    const Summand s = parse_summand("1/((2n-1)(4n-2))");
    ASSERT_EQ(s.factors().size(), 1u);
    EXPECT_EQ(s.factors()[0], f(2, -1, 2));
    EXPECT_EQ(s.numerator(), make_rational(1, 2));
}

TEST(SummandSyntax, RationalNumerator)
{
    const RawSummand raw = parse_summand_raw("1/2/((2n-1)^2)");
    EXPECT_EQ(raw.numerator, make_rational(1, 2));
    ASSERT_EQ(raw.factors.size(), 1u);
    EXPECT_EQ(raw.factors[0], f(2, -1, 2));
    EXPECT_EQ(parse_summand("-3/4/(n(n+1))").numerator(), make_rational(-3, 4));
}

TEST(SummandSyntax, ErrorsCarryOffsets)
{
    EXPECT_EQ(parse_error_offset("1/(n(2n-1)"), 10u);
    EXPECT_EQ(parse_error_offset(""), 0u);
    EXPECT_EQ(parse_error_offset("1/(n*x)"), 4u);
    EXPECT_EQ(parse_error_offset("1/(n^0)"), 5u);
    EXPECT_EQ(parse_error_offset("1/(n^)"), 5u);
    EXPECT_EQ(parse_error_offset("1/(n) junk"), 6u);
    EXPECT_THROW(parse_summand("1/(n-1)"), NonPositiveFactor);
    EXPECT_THROW(parse_summand("1/((0n+3)n)"), NonPositiveFactor);
    EXPECT_THROW(parse_summand("0/(n^2)"), ZeroNumerator);
    EXPECT_THROW(parse_summand("1/(n^65)"), ParseError);
    EXPECT_THROW(parse_summand("1/(99999999999999999999n)"), ParseError);
}

TEST(SummandSyntax, RegistryTextsRoundTrip)
{
    for (const IdentityRecord& r : builtin_registry()) {
        const std::string text = lhs_text(r);
        const RawSummand raw = parse_summand_raw(text);
        EXPECT_EQ(raw.numerator, r.raw_numerator) << r.id << ": " << text;
        EXPECT_EQ(raw.factors, r.raw_factors) << r.id << ": " << text;
        EXPECT_EQ(parse_summand(text), r.summand) << r.id << ": " << text;
        EXPECT_EQ(parse_summand(to_string(r.summand)), r.summand) << r.id;
    }
}

TEST(SummandSyntax, CanonicalTextRoundTripsForRandomSummands)
{
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 500; ++i) {
        const RawSummand raw = random_raw_summand(rng);
        const std::string text = summand_text(raw.numerator, raw.factors);
        const RawSummand back = parse_summand_raw(text);
        ASSERT_EQ(back.numerator, raw.numerator) << text;
        ASSERT_EQ(back.factors, raw.factors) << text;
        const Summand s = parse_summand(text);
        ASSERT_EQ(parse_summand(to_string(s)), s) << text;
    }
}

TEST(ExpressionSyntax, PlainForms)
{
    const auto pi = ConstantAtom::pi();
    const auto ln2 = ConstantAtom::ln_prime(2);
    EXPECT_EQ(parse_expression("pi/3"), (ConstantExpression{{pi, q(1, 3)}}));
    EXPECT_EQ(parse_expression("1/3*pi"), (ConstantExpression{{pi, q(1, 3)}}));
    EXPECT_EQ(parse_expression("pi/8 + ln2/4"), (ConstantExpression{{pi, q(1, 8)}, {ln2, q(1, 4)}}));
    EXPECT_EQ(parse_expression("2 ln 2 - 1"), (ConstantExpression{{ln2, q(2)}, {ConstantAtom::one(), q(-1)}}));
    EXPECT_EQ(parse_expression("pi^2/6"), (ConstantExpression{{ConstantAtom::pi_sq(), q(1, 6)}}));
    EXPECT_EQ(parse_expression("0.25"), ConstantExpression::scalar(q(1, 4)));
    EXPECT_EQ(simplify(parse_expression("ln(4)")), simplify(ConstantExpression{{ln2, q(2)}}));
    EXPECT_EQ(parse_expression("sqrt2*pi"), (ConstantExpression{{pi, SurdRational::sqrt2()}}));
    EXPECT_EQ(parse_expression("psi(1/2)"), parse_expression("psig(1/2) - gamma"));
}

TEST(ExpressionSyntax, LatexForms)
{
    const auto pi = ConstantAtom::pi();
    const auto ln2 = ConstantAtom::ln_prime(2);
    EXPECT_EQ(parse_expression(R"(\frac{\pi}{3})"), (ConstantExpression{{pi, q(1, 3)}}));
    EXPECT_EQ(parse_expression(R"(\frac{\pi+6\operatorname{ln}2}{6})"),
              (ConstantExpression{{pi, q(1, 6)}, {ln2, q(1)}}));
    EXPECT_EQ(parse_expression(R"(2\operatorname{ln} 2)"), (ConstantExpression{{ln2, q(2)}}));
    EXPECT_EQ(parse_expression(R"(\frac{\pi^{2}}{6} \cdot 1)"), (ConstantExpression{{ConstantAtom::pi_sq(), q(1, 6)}}));
    EXPECT_EQ(parse_expression(R"(\left(\frac{1}{2}\right)\,\pi)"), (ConstantExpression{{pi, q(1, 2)}}));
    EXPECT_EQ(parse_expression(R"(\frac{\sqrt{3}\pi}{9})"), (ConstantExpression{{pi, SurdRational(0, 0, make_rational(1, 9), 0)}}));
}

TEST(ExpressionSyntax, RenderingRoundTrips)
{
    for (const IdentityRecord& r : builtin_registry()) {
        EXPECT_EQ(parse_expression(r.claimed.to_string()), r.claimed) << r.id << ": " << r.claimed.to_string();
        const ConstantExpression closed = sum_closed_form(partial_fractions(r.summand));
        EXPECT_EQ(parse_expression(closed.to_string()), closed) << r.id << ": " << closed.to_string();
    }
}

TEST(ExpressionSyntax, Errors)
{
    EXPECT_THROW(parse_expression(""), ParseError);
    EXPECT_THROW(parse_expression("pi*pi*pi"), ParseError);
    EXPECT_THROW(parse_expression("x"), ParseError);
    EXPECT_THROW(parse_expression("pi/0"), ParseError);
    EXPECT_THROW(parse_expression("1/pi"), ParseError);
    EXPECT_THROW(parse_expression("sqrt5"), ParseError);
    EXPECT_THROW(parse_expression("(pi"), ParseError);
    EXPECT_THROW(parse_expression(std::string(500, '(') + "1" + std::string(500, ')')), ParseError);
}

TEST(Decimal, DirectedRounding)
{
    EXPECT_EQ(to_decimal(make_rational(1, 3), 5, Direction::Down), "0.33333");
    EXPECT_EQ(to_decimal(make_rational(1, 3), 5, Direction::Up), "0.33334");
    EXPECT_EQ(to_decimal(make_rational(-1, 3), 3, Direction::Down), "-0.334");
    EXPECT_EQ(to_decimal(make_rational(-1, 3), 3, Direction::TowardZero), "-0.333");
    EXPECT_EQ(to_decimal(make_rational(7, 2), 0, Direction::Up), "4");
    EXPECT_EQ(to_decimal(make_rational(1, 1000), 2, Direction::Down), "0.00");
}

TEST(Decimal, CertifiedPrefix)
{
    // dyadic endpoints, so the enclosure is exact
    const Interval x = Interval::bounds(make_rational(1, 8), make_rational(129, 1024), 128);
    const CertifiedDecimal c = certify(x, 6);
    EXPECT_EQ(c.prefix, "0.125");
    EXPECT_EQ(c.digits, 3);
    EXPECT_EQ(c.lo, "0.125000");
    EXPECT_EQ(c.hi, "0.125977");

    const CertifiedDecimal straddle = certify(Interval::bounds(make_rational(-1, 10), make_rational(1, 10), 128), 4);
    EXPECT_TRUE(straddle.prefix.empty());
    EXPECT_EQ(straddle.digits, 0);

    const CertifiedDecimal across = certify(Interval::bounds(make_rational(999, 1000), make_rational(1001, 1000), 128), 4);
    EXPECT_TRUE(across.prefix.empty());

    const CertifiedDecimal negative = certify(Interval::bounds(make_rational(-2001, 1000), make_rational(-2000, 1000), 128), 4);
    EXPECT_EQ(negative.prefix, "-2.00");
}

TEST(Decimal, ScientificUpperBound)
{
    EXPECT_EQ(scientific_upper(make_rational(1, 8)), "1.250000e-01");
    EXPECT_EQ(scientific_upper(make_rational(1, 3), 2), "3.34e-01");
}

TEST(Selftest, AllChecksPass)
{
    const auto checks = run_selftest(kSeed, 500);
    ASSERT_EQ(checks.size(), 4u);
    for (const SelftestCheck& c : checks) {
        EXPECT_EQ(c.cases, 500) << c.name;
        EXPECT_EQ(c.failures, 0) << c.name << ": " << c.first_failure;
    }
}

TEST(Run, DecomposeText)
{
    const Result r = cli({"decompose", "1/(n(2n-1)(4n-3))"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "1/3 · 1/n − 2 · 1/(2n−1) + 8/3 · 1/(4n−3)\n");
}

TEST(Run, DecomposeJson)
{
    const Json j = cli_json({"decompose", "1/(n(n+1))"});
    EXPECT_EQ(j["command"], "decompose");
    EXPECT_EQ(j["degree"], 2);
    EXPECT_EQ(j["residue_sum"], "0");
    EXPECT_TRUE(j["convergent"].get<bool>());
    ASSERT_EQ(j["terms"].size(), 2u);
    const Json div = cli_json({"decompose", "1/n"});
    EXPECT_FALSE(div["convergent"].get<bool>());
    EXPECT_EQ(div["residue_sum"], "1");
}

TEST(Run, ClosedFormAndEval)
{
    const Result closed = cli({"closed-form", "1/(n(2n-1)(4n-3))"});
    EXPECT_EQ(closed.code, kExitOk);
    EXPECT_EQ(closed.out.substr(0, closed.out.find('\n')), "1/3*pi");
    EXPECT_NE(closed.out.find("1.0471975511965977461542144610"), std::string::npos);

    const Json j = cli_json({"eval", "1/(n^2)", "--digits", "40"});
    EXPECT_EQ(j["precision_digits"], 40);
    EXPECT_EQ(j["numeric"]["value"].get<std::string>().substr(0, 42), "1.6449340668482264364724151666460251892189");
    EXPECT_GE(j["numeric"]["digits"].get<long>(), 40);

    const Json c = cli_json({"closed-form", "1/(n(5n-1))"});
    EXPECT_FALSE(c["fully_resolved"].get<bool>());
}

TEST(Run, VerifyExitCodes)
{
    EXPECT_EQ(cli({"verify", "--id", "thm1"}).code, kExitOk);
    EXPECT_EQ(cli({"verify", "--id", "thm1", "--id", "eq12"}).code, kExitRefuted);
    EXPECT_EQ(cli({"--precision-cap", "64", "verify", "--id", "thm1"}).code, kExitInconclusive);
    EXPECT_EQ(cli({"--precision-cap", "64", "verify", "--id", "thm1", "--id", "eq12"}).code, kExitInconclusive);
    EXPECT_EQ(cli({"verify", "--id", "eq99"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "--all", "--id", "thm1"}).code, kExitUsage);
}

TEST(Run, VerifyText)
{
    const Result r = cli({"verify", "--id", "eq12"});
    EXPECT_NE(r.out.find("eq12"), std::string::npos);
    EXPECT_NE(r.out.find("refuted"), std::string::npos);
    EXPECT_NE(r.out.find("correct -1 + 2*ln2"), std::string::npos);
    EXPECT_NE(r.out.find("1 identities: 0 verified, 1 refuted, 0 inconclusive"), std::string::npos);
}

TEST(Run, VerifyAllJson)
{
    const Json j = cli_json({"verify", "--all"}, kExitRefuted);
    EXPECT_EQ(j["command"], "verify");
    EXPECT_EQ(j["precision_digits"], 50);
    ASSERT_EQ(j["entries"].size(), 31u);
    int refuted = 0;
    for (const Json& e : j["entries"]) {
        if (e["verdict"] == "refuted") {
            ++refuted;
            EXPECT_TRUE(e["correction"].is_string()) << e["id"];
        } else {
            EXPECT_EQ(e["verdict"], "verified") << e["id"];
            EXPECT_TRUE(e["correction"].is_null()) << e["id"];
        }
    }
    EXPECT_EQ(refuted, 4);
    const Json& thm = j["entries"][0];
    EXPECT_EQ(thm["id"], "thm1");
    EXPECT_EQ(thm["lhs"], "1/(n(2n-1)(4n-3))");
    EXPECT_TRUE(thm["exact"].get<bool>());
    EXPECT_EQ(thm["computed_symbolic"], "1/3*pi");
}

TEST(Run, NumericOnly)
{
    const Json j = cli_json({"verify", "--all", "--numeric-only", "--digits", "40"}, kExitRefuted);
    for (const Json& e : j["entries"]) {
        EXPECT_NE(e["verdict"], "inconclusive") << e["id"];
        EXPECT_EQ(e["method"], "numeric");
    }
}

TEST(Run, JsonOutputIsDeterministic)
{
    const std::vector<std::vector<std::string>> commands{
        {"--format", "json", "verify", "--all"},
        {"--format", "json", "decompose", "1/(n^2(n+1)^2)"},
        {"--format", "json", "bench"},
        {"--format", "json", "selftest", "--cases", "50"},
        {"--format", "json", "export-registry"},
    };
    for (const auto& args : commands) {
        const Result a = cli(args), b = cli(args);
        EXPECT_EQ(a.out, b.out) << args[2];
        EXPECT_FALSE(a.out.empty()) << args[2];
    }
}

TEST(Run, RegistryExportImportRoundTrip)
{
    const Result exported = cli({"export-registry"});
    ASSERT_EQ(exported.code, kExitOk);
    const Registry back = registry_from_json(Json::parse(exported.out));
    const Registry builtin = builtin_registry();
    ASSERT_EQ(back.size(), builtin.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].id, builtin[i].id);
        EXPECT_EQ(back[i].summand, builtin[i].summand) << back[i].id;
        EXPECT_EQ(back[i].raw_factors, builtin[i].raw_factors) << back[i].id;
        EXPECT_EQ(back[i].claimed, builtin[i].claimed) << back[i].id;
        EXPECT_EQ(back[i].paper_label, builtin[i].paper_label);
        EXPECT_EQ(back[i].source_rhs, builtin[i].source_rhs);
        EXPECT_EQ(back[i].note, builtin[i].note);
    }

    const auto path = std::filesystem::temp_directory_path() / "seriesaudit_registry_roundtrip.json";
    std::ofstream(path) << exported.out;
    const Result from_file = cli({"--format", "json", "verify", "--all", "--registry", path.string()});
    const Result builtin_run = cli({"--format", "json", "verify", "--all"});
    EXPECT_EQ(from_file.code, builtin_run.code);
    EXPECT_EQ(from_file.out, builtin_run.out);
    std::filesystem::remove(path);
}

TEST(Run, RegistryDocumentErrors)
{
    Json doc = registry_json(builtin_registry());
    Json dup = doc;
    dup["identities"].push_back(dup["identities"][0]);
    EXPECT_THROW(registry_from_json(dup), Error);
    Json bad = doc;
    bad["identities"][0]["claimed"] = "pi*pi*pi";
    EXPECT_THROW(registry_from_json(bad), Error);
    Json lhs_only = Json{{"version", 1},
                         {"identities", Json::array({Json{{"id", "x"}, {"lhs", "1/(n(n+1))"}, {"claimed", "1"}}})}};
    const Registry r = registry_from_json(lhs_only);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].summand, summand({f(1, 0), f(1, 1)}));
}

TEST(Run, PrecisionCapFromEnvironment)
{
    {
        ScopedEnv env("SERIESAUDIT_PRECISION_CAP", "64");
        EXPECT_EQ(cli({"verify", "--id", "thm1"}).code, kExitInconclusive);
        EXPECT_EQ(cli({"--precision-cap", "16384", "verify", "--id", "thm1"}).code, kExitOk);
    }
    {
        ScopedEnv env("SERIESAUDIT_PRECISION_CAP", "lots");
        EXPECT_EQ(cli({"verify", "--id", "thm1"}).code, kExitUsage);
    }
    EXPECT_EQ(cli({"verify", "--id", "thm1"}).code, kExitOk);
}

TEST(Run, ParseErrorsPointAtTheOffset)
{
    const Result r = cli({"decompose", "1/(n(2n-1)"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("parse error"), std::string::npos);
    EXPECT_NE(r.err.find("  1/(n(2n-1)\n            ^"), std::string::npos) << r.err;
}

TEST(Run, UsageErrors)
{
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(cli({"--format", "xml", "decompose", "1/n^2"}).code, kExitUsage);
    EXPECT_EQ(cli({"closed-form", "1/n"}).code, kExitUsage);
    EXPECT_EQ(cli({"eval", "1/(2n+1)"}).code, kExitUsage);
    EXPECT_EQ(cli({"eval", "1/n^2", "--digits", "0"}).code, kExitUsage);
    EXPECT_EQ(cli({"bench", "--schedule", "100,10"}).code, kExitUsage);
    EXPECT_EQ(cli({"bench", "--ids", "nope"}).code, kExitUsage);
    EXPECT_EQ(cli({"--precision-cap", "8", "eval", "1/n^2"}).code, kExitUsage);
}

TEST(Run, BenchSlopes)
{
    const Json j = cli_json({"bench"});
    ASSERT_EQ(j["series"].size(), 2u);
    EXPECT_EQ(j["series"][0]["id"], "eq13");
    EXPECT_NEAR(j["series"][0]["slope"].get<double>(), -1.0, 0.05);
    EXPECT_NEAR(j["series"][1]["slope"].get<double>(), -2.0, 0.05);
    EXPECT_EQ(j["series"][1]["rows"].size(), 4u);
}

TEST(Run, SelftestCommand)
{
    const Json j = cli_json({"--seed", "7", "selftest", "--cases", "100"});
    EXPECT_EQ(j["seed"], 7);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["checks"].size(), 4u);
}

TEST(Fuzz, ParsersNeverCrash)
{
    // Mutations of valid inputs plus random strings over the grammar's alphabet.
    std::mt19937_64 rng(kSeed + 99);
    const std::string alphabet = "n()+-^/0123456789 *{}\\.pi";
    std::vector<std::string> seeds;
    for (const IdentityRecord& r : builtin_registry()) {
        seeds.push_back(lhs_text(r));
        seeds.push_back(r.source_rhs);
    }
    std::uniform_int_distribution<std::size_t> pick_char(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> op(0, 3);
    int accepted = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string s = seeds[i % seeds.size()];
        const int edits = 1 + op(rng);
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = s.empty() ? 0 : rng() % (s.size() + 1);
            switch (op(rng)) {
            case 0: s.insert(pos, 1, alphabet[pick_char(rng)]); break;
            case 1: if (pos < s.size()) s.erase(pos, 1); break;
            case 2: if (pos < s.size()) s[pos] = alphabet[pick_char(rng)]; break;
            default: s = s.substr(0, pos); break;
            }
        }
        if (i % 5 == 0) {
            s.clear();
            for (int k = 0, len = static_cast<int>(rng() % 24); k < len; ++k)
                s += alphabet[pick_char(rng)];
        }
        try {
            const Summand parsed = parse_summand(s);
            ++accepted;
            ASSERT_EQ(parse_summand(to_string(parsed)), parsed) << s;
        } catch (const Error&) {
        }
        try {
            parse_expression(s);
        } catch (const Error&) {
        }
    }
    EXPECT_GT(accepted, 100);
}
