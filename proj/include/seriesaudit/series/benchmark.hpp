#pragma once

#include "seriesaudit/series/series_eval.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace seriesaudit {

/// Certified error of the N-term partial sum: the integral-test bound on the tail.
struct BenchmarkRow {
    long N = 0;
    Rational error_bound;
    long digits = 0; ///< floor(-log10(error_bound))
};

struct BenchmarkSeries {
    std::string id;
    std::vector<BenchmarkRow> rows;
    double slope = 0; ///< least-squares slope of log10(error) against log10(N)
};

namespace detail {

inline double log10_of(const Rational& r)
{
    // r may be far below double range for large N; split off the binary exponent.
    long exp_num = 0, exp_den = 0;
    double num = mpz_get_d_2exp(&exp_num, r.get_num_mpz_t());
    double den = mpz_get_d_2exp(&exp_den, r.get_den_mpz_t());
    return std::log10(num / den) + static_cast<double>(exp_num - exp_den) * std::log10(2.0);
}

/// floor(-log10 r) for 0 < r, decided exactly.
inline long decimal_digits(const Rational& r)
{
    long d = static_cast<long>(std::floor(-log10_of(r)));
    while (r > pow10(-d))
        --d;
    while (r <= pow10(-(d + 1)))
        ++d;
    return d;
}

inline double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys)
{
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace detail

inline BenchmarkSeries benchmark_series(const std::string& id, const Summand& s, const std::vector<long>& schedule)
{
    BenchmarkSeries out{id, {}, 0};
    std::vector<double> xs, ys;
    long previous = 0;
    for (long N : schedule) {
        if (N <= previous)
            throw std::invalid_argument("benchmark schedule must be strictly ascending");
        previous = N;
        TailBracket bracket = tail_bracket(s, N, Precision::for_digits(30));
        Rational bound = bracket.error_bound();
        out.rows.push_back(BenchmarkRow{N, bound, detail::decimal_digits(bound)});
        xs.push_back(std::log10(static_cast<double>(N)));
        ys.push_back(detail::log10_of(bound));
    }
    if (xs.size() >= 2)
        out.slope = detail::fit_slope(xs, ys);
    return out;
}

} // namespace seriesaudit
