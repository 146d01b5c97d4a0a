#pragma once

// Reader for closed-form constants, in plain text or typeset form:
//
//   -1/2 + (1/24 + 1/12*sqrt2)*pi
//   \frac{\pi^2+24\operatorname{ln} 2 - 24}{6}
//   pi^2/6 + 8 ln 2 - 7
//
// Names: pi, gamma, zeta3, ln N, ln(p/q), sqrtN, lnsin(p/q), psig(p/q)
// (digamma plus gamma), psiK(p/q), psi(p/q). LaTeX commands \pi, \gamma,
// \zeta(3), \ln, \log, \operatorname{ln}, \sqrt{N}, \frac{A}{B}, \cdot,
// \left, \right and the spacing commands are accepted. Products are written
// with "*", "\cdot" or by juxtaposition. A product of two non-scalar terms is
// only defined for pi * pi.

#include "seriesaudit/closedform/expression.hpp"
#include "seriesaudit/error.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seriesaudit {

namespace detail {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    ConstantExpression parse()
    {
        ConstantExpression e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "', expected an operator or end of input",
                             pos_);
        return e;
    }

private:
    static constexpr int kMaxDepth = 200;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_alpha() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

    void skip_ws()
    {
        for (;;) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            // LaTeX spacing: "\," "\;" "\!" "\ " "\quad"
            if (peek() == '\\' && pos_ + 1 < text_.size() &&
                (text_[pos_ + 1] == ',' || text_[pos_ + 1] == ';' || text_[pos_ + 1] == '!' ||
                 text_[pos_ + 1] == ' ' || text_[pos_ + 1] == ':')) {
                pos_ += 2;
                continue;
            }
            if (text_.substr(pos_, 5) == "\\quad" &&
                !std::isalpha(static_cast<unsigned char>(pos_ + 5 < text_.size() ? text_[pos_ + 5] : ' '))) {
                pos_ += 5;
                continue;
            }
            if (text_.substr(pos_, 5) == "\\left" || text_.substr(pos_, 6) == "\\right") {
                pos_ += text_[pos_ + 1] == 'l' ? 5 : 6;
                continue;
            }
            return;
        }
    }

    void expect(char c, const char* what)
    {
        skip_ws();
        if (peek() != c)
            throw ParseError(std::string("expected ") + what, pos_);
        ++pos_;
    }

    struct Depth {
        explicit Depth(ExpressionParser& p) : p_(p)
        {
            if (++p_.depth_ > kMaxDepth)
                throw ParseError("expression nested too deeply", p_.pos_);
        }
        ~Depth() { --p_.depth_; }
        ExpressionParser& p_;
    };

    ConstantExpression parse_sum()
    {
        Depth guard(*this);
        skip_ws();
        ConstantExpression acc = parse_product();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc += parse_product();
            } else if (peek() == '-') {
                ++pos_;
                acc -= parse_product();
            } else {
                return acc;
            }
        }
    }

    bool starts_operand() const
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
            c == '{' || c == '.')
            return true;
        if (c == '\\') {
            std::string_view rest = text_.substr(pos_);
            return rest.substr(0, 5) != "\\cdot" && rest.substr(0, 6) != "\\times";
        }
        return false;
    }

    ConstantExpression parse_product()
    {
        Depth guard(*this);
        ConstantExpression acc = parse_unary();
        for (;;) {
            skip_ws();
            std::size_t at = pos_;
            if (peek() == '*') {
                ++pos_;
                acc = multiply(acc, parse_unary(), at);
            } else if (text_.substr(pos_, 5) == "\\cdot" || text_.substr(pos_, 6) == "\\times") {
                pos_ += text_[pos_ + 1] == 'c' ? 5 : 6;
                acc = multiply(acc, parse_unary(), at);
            } else if (peek() == '/') {
                ++pos_;
                acc = divide(acc, parse_unary(), at);
            } else if (starts_operand()) {
                acc = multiply(acc, parse_power(), at);
            } else {
                return acc;
            }
        }
    }

    ConstantExpression parse_unary()
    {
        Depth guard(*this);
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return SurdRational(-1) * parse_unary();
        }
        if (peek() == '+') {
            ++pos_;
            return parse_unary();
        }
        return parse_power();
    }

    ConstantExpression parse_power()
    {
        skip_ws();
        ConstantExpression base = parse_primary();
        skip_ws();
        if (peek() != '^')
            return base;
        const std::size_t at = pos_;
        ++pos_;
        skip_ws();
        long exponent = 0;
        if (peek() == '{') {
            ++pos_;
            skip_ws();
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            exponent = parse_small_int("an integer exponent");
            if (negative)
                exponent = -exponent;
            expect('}', "'}' closing the exponent");
        } else if (peek() == '(') {
            ++pos_;
            skip_ws();
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            exponent = parse_small_int("an integer exponent");
            if (negative)
                exponent = -exponent;
            expect(')', "')' closing the exponent");
        } else {
            exponent = parse_small_int("an integer exponent");
        }
        return power(base, exponent, at);
    }

    long parse_small_int(const char* what)
    {
        skip_ws();
        if (!at_digit())
            throw ParseError(std::string("expected ") + what, pos_);
        const std::size_t start = pos_;
        long v = 0;
        while (at_digit()) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
            if (v > 1000000000L)
                throw ParseError("integer too large", start, pos_ - start);
        }
        return v;
    }

    ConstantExpression parse_number()
    {
        const std::size_t start = pos_;
        std::string digits;
        long places = 0;
        bool seen_point = false;
        while (at_digit() || (peek() == '.' && !seen_point)) {
            if (peek() == '.') {
                seen_point = true;
            } else {
                digits += text_[pos_];
                if (seen_point)
                    ++places;
            }
            ++pos_;
            if (digits.size() > 400)
                throw ParseError("numeric literal too long", start, pos_ - start);
        }
        if (digits.empty())
            throw ParseError("expected a number", start);
        Rational v(Integer(digits, 10), Integer(1));
        if (places)
            v /= pow10(places);
        v.canonicalize();
        return ConstantExpression::scalar(SurdRational(v));
    }

    std::string read_letters()
    {
        std::string s;
        while (at_alpha())
            s += text_[pos_++];
        return s;
    }

    std::string read_digits()
    {
        std::string s;
        while (at_digit() && s.size() < 12)
            s += text_[pos_++];
        if (at_digit())
            throw ParseError("integer too large", pos_);
        return s;
    }

    ConstantExpression parse_primary()
    {
        Depth guard(*this);
        skip_ws();
        const std::size_t start = pos_;
        const char c = peek();
        if (c == '\0')
            throw ParseError("unexpected end of input, expected a value", pos_);
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (c == '(') {
            ++pos_;
            ConstantExpression e = parse_sum();
            expect(')', "')'");
            return e;
        }
        if (c == '{') {
            ++pos_;
            ConstantExpression e = parse_sum();
            expect('}', "'}'");
            return e;
        }
        if (c == '\\') {
            ++pos_;
            std::string command = read_letters();
            if (command.empty())
                throw ParseError("expected a command name after '\\'", start);
            return parse_named(command, start, true);
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_named(read_letters(), start, false);
        throw ParseError("unexpected '" + std::string(1, c) + "', expected a value", pos_);
    }

    ConstantExpression parse_named(const std::string& name, std::size_t start, bool latex)
    {
        if (name == "frac" && latex) {
            skip_ws();
            expect('{', "'{' after \\frac");
            ConstantExpression num = parse_sum();
            expect('}', "'}' closing the numerator");
            expect('{', "'{' opening the denominator");
            ConstantExpression den = parse_sum();
            expect('}', "'}' closing the denominator");
            return divide(num, den, start);
        }
        if (name == "operatorname" && latex) {
            expect('{', "'{' after \\operatorname");
            skip_ws();
            std::string inner = read_letters();
            expect('}', "'}' closing \\operatorname");
            if (inner != "ln" && inner != "log")
                throw ParseError("unknown operator '" + inner + "'", start, pos_ - start);
            return parse_ln(start);
        }
        if (name == "pi")
            return {ConstantAtom::pi(), SurdRational(1)};
        if (name == "gamma")
            return {ConstantAtom::gamma(), SurdRational(1)};
        if (name == "ln" || name == "log") {
            if (at_digit() && !latex)
                return ln_of(parse_integer_literal(), start);
            return parse_ln(start);
        }
        if (name == "zeta") {
            if (!latex && peek() == '3') {
                ++pos_;
                return {ConstantAtom::zeta3(), SurdRational(1)};
            }
            skip_ws();
            const bool brace = peek() == '{';
            expect(brace ? '{' : '(', "'(' after zeta");
            skip_ws();
            if (peek() != '3')
                throw ParseError("only zeta(3) is supported", pos_);
            ++pos_;
            expect(brace ? '}' : ')', "closing bracket after zeta(3");
            return {ConstantAtom::zeta3(), SurdRational(1)};
        }
        if (name == "sqrt") {
            if (!latex && at_digit())
                return sqrt_of(parse_integer_literal(), start);
            skip_ws();
            const bool brace = peek() == '{';
            expect(brace ? '{' : '(', "'{' or '(' after sqrt");
            skip_ws();
            Integer n = parse_integer_literal();
            expect(brace ? '}' : ')', "closing bracket after the radicand");
            return sqrt_of(n, start);
        }
        if (name == "lnsin") {
            auto [p, q] = parse_fraction_argument();
            try {
                return {ConstantAtom::ln_sin(p, q), SurdRational(1)};
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start, pos_ - start);
            }
        }
        if (name == "psig" || name == "psi") {
            const bool plain = name == "psi";
            long order = 0;
            bool has_order = false;
            if (plain && at_digit()) {
                order = parse_small_int("a derivative order");
                has_order = true;
            }
            auto [p, q] = parse_fraction_argument();
            ConstantExpression out;
            try {
                out.add(ConstantAtom::poly(static_cast<unsigned>(order), p, q), SurdRational(1));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start, pos_ - start);
            }
            if (plain && !has_order)
                out.add(ConstantAtom::gamma(), SurdRational(-1));
            if (has_order && order == 0)
                out.add(ConstantAtom::gamma(), SurdRational(-1));
            return out;
        }
        throw ParseError("unknown name '" + name + "'", start, pos_ - start);
    }

    Integer parse_integer_literal()
    {
        skip_ws();
        if (!at_digit())
            throw ParseError("expected a positive integer", pos_);
        return Integer(read_digits(), 10);
    }

    std::pair<long, long> parse_fraction_argument()
    {
        expect('(', "'(' before the argument");
        long p = parse_small_int("an integer numerator");
        long q = 1;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            q = parse_small_int("an integer denominator");
        }
        expect(')', "')' after the argument");
        return {p, q};
    }

    /// Argument of ln: an integer, or a bracketed positive rational.
    ConstantExpression parse_ln(std::size_t start)
    {
        skip_ws();
        if (at_digit())
            return ln_of(parse_integer_literal(), start);
        if (peek() == '(' || peek() == '{') {
            const std::size_t arg_start = pos_;
            ConstantExpression arg = parse_primary();
            if (!arg.is_scalar() || !arg.coefficient(ConstantAtom::one()).is_rational())
                throw ParseError("logarithm argument must be a positive rational", arg_start, pos_ - arg_start);
            Rational r = arg.coefficient(ConstantAtom::one()).c1();
            if (r <= 0)
                throw ParseError("logarithm argument must be a positive rational", arg_start, pos_ - arg_start);
            return ln_of(r.get_num(), start) - ln_of(r.get_den(), start);
        }
        throw ParseError("expected the argument of ln", pos_);
    }

    ConstantExpression ln_of(const Integer& n, std::size_t start) const
    {
        if (n <= 0)
            throw ParseError("logarithm of a non-positive number", start, pos_ - start);
        if (n > Integer(1000000000000L))
            throw ParseError("logarithm argument too large to factor", start, pos_ - start);
        return ln_integer_expression(n.get_si());
    }

    ConstantExpression sqrt_of(const Integer& n, std::size_t start) const
    {
        if (n > Integer(1000000000000L))
            throw ParseError("radicand too large", start, pos_ - start);
        long m = n.get_si();
        long outside = 1;
        for (long d = 2; d * d <= m; ++d)
            while (m % (d * d) == 0) {
                m /= d * d;
                outside *= d;
            }
        SurdRational inner;
        switch (m) {
        case 0: inner = SurdRational(0); break;
        case 1: inner = SurdRational(1); break;
        case 2: inner = SurdRational::sqrt2(); break;
        case 3: inner = SurdRational::sqrt3(); break;
        case 6: inner = SurdRational::sqrt6(); break;
        default: throw ParseError("only square roots of 2, 3 and 6 are representable", start, pos_ - start);
        }
        return ConstantExpression::scalar(SurdRational(outside) * inner);
    }

    static ConstantExpression multiply(const ConstantExpression& l, const ConstantExpression& r, std::size_t at)
    {
        ConstantExpression out;
        for (const auto& [la, lc] : l.terms())
            for (const auto& [ra, rc] : r.terms()) {
                if (la.kind == AtomKind::One)
                    out.add(ra, lc * rc);
                else if (ra.kind == AtomKind::One)
                    out.add(la, lc * rc);
                else if (la.kind == AtomKind::Pi && ra.kind == AtomKind::Pi)
                    out.add(ConstantAtom::pi_sq(), lc * rc);
                else
                    throw ParseError("product " + la.to_string() + " * " + ra.to_string() +
                                         " is not a linear combination of constants",
                                     at);
            }
        return out;
    }

    static ConstantExpression divide(const ConstantExpression& l, const ConstantExpression& r, std::size_t at)
    {
        if (!r.is_scalar())
            throw ParseError("division by a non-scalar constant", at);
        const SurdRational d = r.coefficient(ConstantAtom::one());
        if (d.is_zero())
            throw ParseError("division by zero", at);
        return d.inverse() * l;
    }

    static ConstantExpression power(const ConstantExpression& base, long exponent, std::size_t at)
    {
        if (exponent == 1)
            return base;
        if (base.is_scalar()) {
            SurdRational b = base.coefficient(ConstantAtom::one());
            if (exponent < 0) {
                if (b.is_zero())
                    throw ParseError("zero raised to a negative power", at);
                b = b.inverse();
                exponent = -exponent;
            }
            if (exponent > 64)
                throw ParseError("exponent too large", at);
            SurdRational out(1);
            for (long i = 0; i < exponent; ++i)
                out *= b;
            return ConstantExpression::scalar(out);
        }
        if (exponent == 2 && base.terms().size() == 1 && base.terms().begin()->first.kind == AtomKind::Pi) {
            const SurdRational c = base.terms().begin()->second;
            return {ConstantAtom::pi_sq(), c * c};
        }
        throw ParseError("only scalars and pi can be raised to a power", at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

} // namespace detail

inline ConstantExpression parse_expression(std::string_view text)
{
    return detail::ExpressionParser(text).parse();
}

} // namespace seriesaudit
