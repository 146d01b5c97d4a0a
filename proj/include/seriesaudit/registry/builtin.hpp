#pragma once

#include "seriesaudit/registry/identity.hpp"

namespace seriesaudit {

/// The 31 catalogued identities: the pi/3 theorem, three intermediate sums
/// of its derivation, and entries eq11 through eq37. Claimed values are the
/// printed right-hand sides, including the four that do not hold.
inline Registry builtin_registry()
{
    const auto one = ConstantAtom::one();
    const auto pi = ConstantAtom::pi();
    const auto pi2 = ConstantAtom::pi_sq();
    const auto ln2 = ConstantAtom::ln_prime(2);
    const auto ln3 = ConstantAtom::ln_prime(3);
    auto q = [](long n, long d = 1) { return SurdRational(make_rational(n, d)); };
    auto f = [](std::int64_t a, std::int64_t b, int m = 1) { return LinearFactor{a, b, m}; };
    const LinearFactor n = f(1, 0);

    Registry r;
    r.push_back(make_identity("thm1", {n, f(2, -1), f(4, -3)}, {{pi, q(1, 3)}}, "Theorem 1", R"(\frac{\pi}{3})"));
    r.push_back(make_identity("eq2r", {f(2, 0), f(2, -1)}, {{ln2, q(1)}}, "Eq. (2), rewritten", R"(\operatorname{ln} 2)",
                              "Pairs 1/(2n-1) - 1/(2n) of the alternating harmonic series 1 - 1/2 + 1/3 - ..."));
    r.push_back(make_identity("eq3", {f(4, 0), f(4, -2)}, {{ln2, q(1, 4)}}, "Eq. (3)",
                              R"(\frac{1}{4}\operatorname{ln} 2)"));
    r.push_back(make_identity("eq10", {f(4, -2), f(4, -3)}, {{pi, q(1, 8)}, {ln2, q(1, 4)}}, "Eq. (10)",
                              R"(\frac{\pi}{8}+\frac{1}{4}\operatorname{ln} 2)",
                              "Pairs 1/(4n-3) - 1/(4n-2)"));
    r.push_back(make_identity("eq11", {f(2, -1), f(2, 1)}, {{one, q(1, 2)}}, "Eq. (11)", R"(\frac{1}{2})",
                              "Telescoping: (1/(2n-1) - 1/(2n+1)) / 2"));
    r.push_back(make_identity("eq12", {f(1, 1), f(2, 1)}, {{ln2, q(2)}}, "Eq. (12)", R"(2\operatorname{ln} 2)",
                              "Summed from n = 1 the series equals 2 ln2 - 1; the printed 2 ln2 is the sum from n = 0"));
    r.push_back(make_identity("eq13", {f(4, -1), f(4, -3)}, {{pi, q(1, 8)}}, "Eq. (13)", R"(\frac{\pi}{8})",
                              "Pairs 1/(4n-3) - 1/(4n-1) of the Gregory-Leibniz series 1 - 1/3 + 1/5 - ... = pi/4"));
    r.push_back(make_identity("eq14", {f(2, -1), f(4, -3)}, {{pi, q(1, 4)}, {ln2, q(1, 2)}}, "Eq. (14)",
                              R"(\frac{\pi+2\operatorname{ln}2}{4})"));
    r.push_back(make_identity("eq15", {n, f(4, -3)}, {{pi, q(1, 6)}, {ln2, q(1)}}, "Eq. (15)",
                              R"(\frac{\pi+6\operatorname{ln}2}{6})"));
    r.push_back(make_identity("eq16", {n, f(4, -1)}, {{ln2, q(3)}, {pi, q(-1, 2)}}, "Eq. (16)",
                              R"(\frac{6\operatorname{ln}2-\pi}{2})"));
    r.push_back(make_identity("eq17", {f(2, -1), f(4, -1), f(4, -3)}, {{ln2, q(1, 2)}}, "Eq. (17)",
                              R"(\frac{\operatorname{ln}2}{2})"));
    r.push_back(make_identity("eq18", {n, f(1, 1), f(2, 1)}, {{ln2, q(1)}, {one, q(-1, 2)}}, "Eq. (18)",
                              R"(\frac{2\operatorname{ln} 2-1}{2})",
                              "Decomposes as 1/n + 1/(n+1) - 4/(2n+1), which sums to 3 - 4 ln2"));
    r.push_back(make_identity("eq19", {f(4, 1), f(4, -1), f(4, -3)}, {{pi, q(1, 16)}, {one, q(-1, 8)}}, "Eq. (19)",
                              R"(\frac{\pi-2}{16})"));
    r.push_back(make_identity("eq20", {f(1, 0, 2), f(2, -1)}, {{ln2, q(4)}, {pi2, q(-1, 6)}}, "Eq. (20)",
                              R"(\frac{24\operatorname{ln}2-\pi^2}{6})"));
    r.push_back(make_identity("eq21", {f(1, 0, 2), f(4, -1)}, {{ln2, q(12)}, {pi, q(-2)}, {pi2, q(-1, 6)}},
                              "Eq. (21)", R"(\frac{72\operatorname{ln}2-12\pi-\pi^2}{6})"));
    r.push_back(make_identity("eq22", {n, f(1, 1, 2)}, {{one, q(2)}, {pi2, q(-1, 6)}}, "Eq. (22)",
                              R"(\frac{12-\pi^2}{6})"));
    r.push_back(make_identity("eq23", {f(1, 0, 2), f(2, 1)}, {{pi2, q(1, 6)}, {ln2, q(4)}, {one, q(-4)}},
                              "Eq. (23)", R"(\frac{\pi^2+24\operatorname{ln} 2 - 24}{6})"));
    r.push_back(make_identity("eq24", {f(1, 0, 2), f(1, 1)}, {{pi2, q(1, 6)}, {one, q(-1)}}, "Eq. (24)",
                              R"(\frac{\pi^2-6}{6})"));
    r.push_back(make_identity("eq25", {f(1, 0, 2), f(1, 1, 2)}, {{pi2, q(1, 3)}, {one, q(-3)}}, "Eq. (25)",
                              R"(\frac{\pi^2-9}{3})"));
    r.push_back(make_identity("eq26", {f(2, 1), f(2, -1), f(4, 1), f(4, -1)}, {{pi, q(1, 6)}, {one, q(-1, 2)}},
                              "Eq. (26)", R"(\frac{\pi-3}{6})"));
    r.push_back(make_identity("eq27", {f(4, 1), f(4, -1), f(8, 1), f(8, -1)},
                              {{pi, SurdRational(Rational(1, 24), Rational(1, 12), 0, 0)}, {one, q(-1, 2)}},
                              "Eq. (27)", R"(\frac{\pi (1+2\sqrt{2})-12}{24})"));
    r.push_back(make_identity("eq28", {n, f(2, -1), f(4, -1), f(4, -3)}, {{ln2, q(2)}, {pi, q(-1, 3)}},
                              "Eq. (28)", R"(\frac{6\operatorname{ln}2-\pi}{3})"));
    r.push_back(make_identity("eq29", {f(1, 0, 2), f(1, 1), f(2, 1)}, {{pi2, q(1, 6)}, {ln2, q(-2)}}, "Eq. (29)",
                              R"(\frac{\pi^2-12\operatorname{ln} 2}{6})",
                              "Decomposes as 1/n^2 - 3/n - 1/(n+1) + 8/(2n+1), which sums to pi^2/6 + 8 ln2 - 7"));
    r.push_back(make_identity("eq30", {f(1, 0, 2), f(2, -1), f(4, -3)},
                              {{pi2, q(1, 18)}, {pi, q(4, 9)}, {ln2, q(-4, 3)}}, "Eq. (30)",
                              R"(\frac{\pi^2+8\pi-24\operatorname{ln}2}{18})"));
    r.push_back(make_identity("eq31", {f(1, 0, 2), f(2, -1), f(4, -1)}, {{pi2, q(1, 6)}, {pi, q(4)}, {ln2, q(-20)}},
                              "Eq. (31)", R"(\frac{\pi^2+24\pi-120\operatorname{ln}2}{6})"));
    r.push_back(make_identity("eq32", {f(1, 0, 2), f(2, -1), f(4, -1), f(4, -3)},
                              {{ln2, q(28, 3)}, {pi, q(-16, 9)}, {pi2, q(-1, 18)}}, "Eq. (32)",
                              R"(\frac{168\operatorname{ln}2-32\pi-\pi^2}{18})"));
    r.push_back(make_identity("eq33", {n, f(2, 1), f(2, -1), f(6, 1), f(6, -1)},
                              {{one, q(13, 4)}, {ln2, q(-2)}, {ln3, q(-27, 16)}}, "Eq. (33)",
                              R"(\frac{52-32\operatorname{ln}2-27\operatorname{ln}3}{16})"));
    r.push_back(make_identity("eq34", {n, f(2, 1), f(2, -1), f(3, 1), f(3, -1)},
                              {{one, q(19, 10)}, {ln2, q(8, 5)}, {ln3, q(-27, 10)}}, "Eq. (34)",
                              R"(\frac{19+16\operatorname{ln}2-27\operatorname{ln}3}{10})"));
    r.push_back(make_identity("eq35", {f(1, 0, 3), f(1, 1, 3)}, {{one, q(10)}, {pi2, q(-1)}}, "Eq. (35)",
                              R"(10-\pi^2)", "The zeta(3) contributions of the two cubed poles cancel"));
    r.push_back(make_identity("eq36", {f(2, 1), f(2, -1), f(4, 1), f(4, -1), f(8, 1), f(8, -1)},
                              {{one, q(15, 2)}, {pi, SurdRational(Rational(-1, 2), Rational(-4, 3), 0, 0)}},
                              "Eq. (36)", R"(\frac{45-\pi (3+8\sqrt{2})}{6})",
                              "The series equals (45 - pi (3 + 8 sqrt2)) / 90, i.e. the printed value with denominator 90"));
    r.push_back(make_identity("eq37", {n, f(2, 1), f(2, -1), f(3, 1), f(3, -1), f(6, 1), f(6, -1)},
                              {{ln2, q(16, 5)}, {ln3, q(27, 20)}, {one, q(-37, 10)}}, "Eq. (37)",
                              R"(\frac{64\operatorname{ln}2+27\operatorname{ln}3-74}{20})"));
    return r;
}

} // namespace seriesaudit
