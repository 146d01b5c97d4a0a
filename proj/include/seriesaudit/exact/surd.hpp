#pragma once

#include "seriesaudit/exact/rational.hpp"

#include <array>
#include <compare>
#include <stdexcept>
#include <string>

namespace seriesaudit {

/// Element c1 + c2*sqrt2 + c3*sqrt3 + c6*sqrt6 of the field Q(sqrt2, sqrt3).
/// The four basis elements are linearly independent over Q, so the
/// representation is unique and equality is component-wise.
class SurdRational {
public:
    SurdRational() = default;
    SurdRational(const Rational& c1) : c_{c1, 0, 0, 0} {} // NOLINT(google-explicit-constructor)
    SurdRational(long c1) : c_{Rational(c1), 0, 0, 0} {} // NOLINT(google-explicit-constructor)
    SurdRational(const Rational& c1, const Rational& c2, const Rational& c3, const Rational& c6)
        : c_{c1, c2, c3, c6}
    {
    }

    static SurdRational sqrt2() { return {0, 1, 0, 0}; }
    static SurdRational sqrt3() { return {0, 0, 1, 0}; }
    static SurdRational sqrt6() { return {0, 0, 0, 1}; }

    const Rational& c1() const { return c_[0]; }
    const Rational& c2() const { return c_[1]; }
    const Rational& c3() const { return c_[2]; }
    const Rational& c6() const { return c_[3]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    SurdRational operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

    SurdRational& operator+=(const SurdRational& o)
    {
        for (std::size_t i = 0; i < 4; ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    SurdRational& operator-=(const SurdRational& o)
    {
        for (std::size_t i = 0; i < 4; ++i)
            c_[i] -= o.c_[i];
        return *this;
    }

    friend SurdRational operator+(SurdRational a, const SurdRational& b) { return a += b; }
    friend SurdRational operator-(SurdRational a, const SurdRational& b) { return a -= b; }

    friend SurdRational operator*(const SurdRational& a, const SurdRational& b)
    {
        const auto& [a1, a2, a3, a6] = a.c_;
        const auto& [b1, b2, b3, b6] = b.c_;
        return {
            a1 * b1 + 2 * a2 * b2 + 3 * a3 * b3 + 6 * a6 * b6,
            a1 * b2 + a2 * b1 + 3 * (a3 * b6 + a6 * b3),
            a1 * b3 + a3 * b1 + 2 * (a2 * b6 + a6 * b2),
            a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2,
        };
    }
    SurdRational& operator*=(const SurdRational& o) { return *this = *this * o; }

    /// Galois conjugates sqrt2 -> -sqrt2 and sqrt3 -> -sqrt3.
    SurdRational conj2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
    SurdRational conj3() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

    SurdRational inverse() const
    {
        if (is_zero())
            throw std::domain_error("inverse of zero surd");
        // x * conj2(x) lies in Q(sqrt3); multiplying by its conjugate gives the norm.
        SurdRational w = *this * conj2();
        SurdRational numerator = conj2() * w.conj3();
        Rational norm = (w * w.conj3()).c1();
        return numerator * SurdRational(Rational(1) / norm);
    }

    friend SurdRational operator/(const SurdRational& a, const SurdRational& b) { return a * b.inverse(); }

    friend bool operator==(const SurdRational& a, const SurdRational& b) { return a.c_ == b.c_; }

    /// Lexicographic on components; a total order for use as a map key, not the real order.
    friend std::strong_ordering lex_compare(const SurdRational& a, const SurdRational& b)
    {
        for (std::size_t i = 0; i < 4; ++i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0)
                return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    /// Plain-text rendering: "1/24 + 1/12*sqrt2", "-sqrt3", "0".
    std::string to_string() const
    {
        static constexpr std::array<const char*, 4> names{"", "sqrt2", "sqrt3", "sqrt6"};
        std::string out;
        for (std::size_t i = 0; i < 4; ++i) {
            const Rational& c = c_[i];
            if (c == 0)
                continue;
            bool negative = c < 0;
            Rational mag = negative ? Rational(-c) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (i == 0)
                out += mag.get_str();
            else if (mag == 1)
                out += names[i];
            else
                out += mag.get_str() + "*" + names[i];
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<Rational, 4> c_{};
};

} // namespace seriesaudit
