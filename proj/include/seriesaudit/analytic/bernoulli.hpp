#pragma once

#include "seriesaudit/exact/rational.hpp"

#include <mutex>
#include <vector>

namespace seriesaudit {

/// Exact Bernoulli numbers B_0, B_1 = -1/2, B_2, ... from the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0, extended on demand. One process-wide table
/// guarded by a mutex; values are returned by copy.
class BernoulliTable {
public:
    static Rational get(unsigned long n)
    {
        BernoulliTable& t = instance();
        std::lock_guard<std::mutex> lock(t.mutex_);
        t.extend(n);
        return t.values_[n];
    }

    /// B_{2k}, k >= 1.
    static Rational even(unsigned long k) { return get(2 * k); }

private:
    BernoulliTable() : values_{Rational(1), Rational(-1, 2)} {}

    static BernoulliTable& instance()
    {
        static BernoulliTable table;
        return table;
    }

    void extend(unsigned long n)
    {
        while (values_.size() <= n) {
            const unsigned long m = values_.size();
            if (m % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            Rational acc = 0;
            for (unsigned long j = 0; j < m; ++j)
                if (values_[j] != 0)
                    acc += Rational(binomial(m + 1, j)) * values_[j];
            values_.push_back(-acc / Rational(static_cast<long>(m + 1)));
        }
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

} // namespace seriesaudit
