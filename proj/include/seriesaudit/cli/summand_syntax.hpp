#pragma once

// Surface syntax for summands:
//
//   expr     := rational "/" body
//   body     := "(" product ")" | product
//   product  := factor { factor }
//   factor   := ( "(" [int] "n" [ sign int ] ")" | [int] "n" ) [ "^" int ]
//   rational := int [ "/" int ]
//   sign     := "+" | "-"
//
// Whitespace is allowed between tokens. Multiplication is juxtaposition and
// the coefficient of n defaults to 1, so "1/(n(2n-1)(4n-3))" reads as typeset.

#include "seriesaudit/error.hpp"
#include "seriesaudit/exact/summand.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seriesaudit {

/// A summand as written, before normalization.
struct RawSummand {
    Rational numerator;
    std::vector<LinearFactor> factors;
};

namespace detail {

class SummandParser {
public:
    explicit SummandParser(std::string_view text) : text_(text) {}

    RawSummand parse_raw()
    {
        skip_ws();
        Rational numerator = parse_rational_literal();
        skip_ws();
        expect('/', "'/' after the numerator");
        skip_ws();

        std::vector<LinearFactor> factors;
        std::vector<std::size_t> starts;
        if (peek() == '(' && !looks_like_factor()) {
            ++pos_;
            parse_product(factors, starts);
            skip_ws();
            expect(')', "')' closing the product");
        } else {
            parse_product(factors, starts);
        }
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input, expected end of summand", pos_);

        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].a + factors[i].b <= 0)
                throw NonPositiveFactor("factor at offset " + std::to_string(starts[i]) +
                                        " is not positive at n = 1");
        }
        if (numerator == 0)
            throw ZeroNumerator("zero numerator at offset 0");
        return {numerator, std::move(factors)};
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c, const char* what)
    {
        if (peek() != c)
            throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::int64_t parse_int(const char* what)
    {
        if (!at_digit())
            throw ParseError(std::string("expected ") + what, pos_);
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (at_digit()) {
            int d = text_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() / 4 - d) / 10)
                throw ParseError("integer too large", start, pos_ - start + 1);
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    Rational parse_rational_literal()
    {
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        std::int64_t num = parse_int("an integer numerator");
        std::int64_t den = 1;
        // "p/q/(...)" has a rational numerator; "p/(...)" or "p/n..." does not.
        if (peek() == '/' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            std::size_t save = pos_;
            ++pos_;
            std::int64_t candidate = parse_int("a denominator");
            skip_ws();
            if (peek() == '/') {
                den = candidate;
                if (den == 0)
                    throw ParseError("zero denominator", save + 1);
            } else {
                pos_ = save;
            }
        }
        return make_rational(negative ? -num : num, den);
    }

    /// True if the '(' at pos_ opens a single linear factor rather than a product.
    bool looks_like_factor() const
    {
        std::size_t i = pos_ + 1;
        auto ws = [&] {
            while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i])))
                ++i;
        };
        ws();
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i])))
            ++i;
        ws();
        if (i >= text_.size() || text_[i] != 'n')
            return false;
        ++i;
        ws();
        if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) {
            ++i;
            ws();
            if (i >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i])))
                return false;
            while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i])))
                ++i;
            ws();
        }
        return i < text_.size() && text_[i] == ')';
    }

    void parse_product(std::vector<LinearFactor>& factors, std::vector<std::size_t>& starts)
    {
        do {
            starts.push_back(pos_);
            factors.push_back(parse_factor());
            skip_ws();
        } while (peek() == '(' || peek() == 'n' || at_digit());
    }

    LinearFactor parse_factor()
    {
        LinearFactor f{1, 0, 1};
        const std::size_t start = pos_;
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            f.a = at_digit() ? parse_int("a coefficient") : 1;
            skip_ws();
            expect('n', "'n' in a linear factor");
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                bool negative = peek() == '-';
                ++pos_;
                skip_ws();
                std::int64_t b = parse_int("an integer constant term");
                f.b = negative ? -b : b;
                skip_ws();
            }
            expect(')', "')' closing a linear factor");
        } else {
            f.a = at_digit() ? parse_int("a coefficient") : 1;
            skip_ws();
            expect('n', "'n' or '(' starting a factor");
        }
        if (f.a == 0)
            throw NonPositiveFactor("zero coefficient of n at offset " + std::to_string(start));
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            std::int64_t m = parse_int("an exponent");
            if (m < 1 || m > 64)
                throw ParseError("exponent must be between 1 and 64", at);
            f.m = static_cast<int>(m);
        }
        return f;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::string factor_to_string(const LinearFactor& f)
{
    std::string out;
    if (f.b == 0) {
        out = (f.a == 1 ? "" : std::to_string(f.a)) + "n";
    } else {
        out = "(" + (f.a == 1 ? std::string() : std::to_string(f.a)) + "n" + (f.b < 0 ? "-" : "+") +
              std::to_string(f.b < 0 ? -f.b : f.b) + ")";
    }
    if (f.m > 1)
        out += "^" + std::to_string(f.m);
    return out;
}

} // namespace detail

/// Parses the surface syntax into a canonical Summand.
inline Summand parse_summand(std::string_view text)
{
    RawSummand raw = detail::SummandParser(text).parse_raw();
    return normalize(raw.numerator, std::span<const LinearFactor>(raw.factors));
}

inline RawSummand parse_summand_raw(std::string_view text)
{
    return detail::SummandParser(text).parse_raw();
}

/// Renders a numerator and factor list ("1/(n(2n-1)(4n-3))", "3/8/(n(2n-1))").
inline std::string summand_text(const Rational& numerator, const std::vector<LinearFactor>& factors)
{
    std::string out = numerator.get_str() + "/(";
    bool after_exponent = false;
    for (const LinearFactor& f : factors) {
        std::string text = detail::factor_to_string(f);
        // "^2" followed by "4n" would read as "^24"
        if (after_exponent && std::isdigit(static_cast<unsigned char>(text.front()))) {
            const std::size_t caret = text.find('^');
            text = "(" + text.substr(0, caret) + ")" + (caret == std::string::npos ? "" : text.substr(caret));
        }
        out += text;
        after_exponent = f.m > 1;
    }
    return out + ")";
}

inline std::string to_string(const Summand& s)
{
    return summand_text(s.numerator(), s.factors());
}

} // namespace seriesaudit
