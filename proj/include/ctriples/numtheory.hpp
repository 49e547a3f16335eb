#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"

namespace ctriples::numtheory {

/// Divisors of n in ascending order, by trial division up to sqrt(n).
inline std::vector<std::uint64_t> divisors(std::int64_t n) {
    if (n < 1) throw DomainError("divisors: n must be >= 1, got " + std::to_string(n));
    const auto un = static_cast<std::uint64_t>(n);
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= un; ++d) {
        if (un % d != 0) continue;
        low.push_back(d);
        if (d != un / d) high.push_back(un / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// Sum of divisors.
inline std::uint64_t sigma(std::int64_t n) {
    if (n < 1) throw DomainError("sigma: n must be >= 1, got " + std::to_string(n));
    std::uint64_t s = 0;
    for (auto d : divisors(n)) s += d;
    return s;
}

/// sigma(1..n_max); index 0 is unused and holds 0.
inline std::vector<std::uint64_t> sigma_table(std::size_t n_max) {
    std::vector<std::uint64_t> table(n_max + 1, 0);
    for (std::size_t n = 1; n <= n_max; ++n) table[n] = sigma(static_cast<std::int64_t>(n));
    return table;
}

/// Sum over a | d of a * sigma(a).
inline BigInt weighted_divisor_sum(std::int64_t d) {
    if (d < 1) throw DomainError("weighted_divisor_sum: d must be >= 1, got " + std::to_string(d));
    BigInt s = 0;
    for (auto a : divisors(d)) s += BigInt(a) * sigma(static_cast<std::int64_t>(a));
    return s;
}

/// Coefficient of u^d in the logarithm of prod_j (1-u^j)^(-sigma(j)):
/// (sum_{a|d} a*sigma(a)) / d, in lowest terms.
inline Rational log_coefficient(std::int64_t d) {
    if (d < 1) throw DomainError("log_coefficient: d must be >= 1, got " + std::to_string(d));
    return Rational(weighted_divisor_sum(d), BigInt(d));
}

struct BoundRow {
    std::uint64_t d;
    BigInt lhs;  // sum_{a|d} a*sigma(a)
    BigInt rhs;  // d^4
    bool holds;  // lhs < rhs
};

struct BoundReport {
    std::vector<BoundRow> rows;
    /// Values of d >= 2 where the strict inequality fails.
    std::vector<std::uint64_t> failures;
    /// Whether lhs == rhs at d = 1 (the one place the strict form cannot hold).
    bool equality_at_one = false;

    bool holds_from_two() const noexcept { return failures.empty(); }
};

/// Checks sum_{a|d} a*sigma(a) < d^4 for d = 1..d_max. The d = 1 row is
/// recorded (lhs = rhs = 1) but never counted as a failure.
inline BoundReport bound_check(std::int64_t d_max) {
    if (d_max < 1) throw DomainError("bound_check: d_max must be >= 1, got " + std::to_string(d_max));
    const auto sig = sigma_table(static_cast<std::size_t>(d_max));
    BoundReport report;
    report.rows.reserve(static_cast<std::size_t>(d_max));
    for (std::uint64_t d = 1; d <= static_cast<std::uint64_t>(d_max); ++d) {
        BigInt lhs = 0;
        for (auto a : divisors(static_cast<std::int64_t>(d))) lhs += BigInt(a) * sig[a];
        BigInt rhs = BigInt(d) * d * d * d;
        const bool holds = lhs < rhs;
        if (d == 1) {
            report.equality_at_one = (lhs == rhs);
        } else if (!holds) {
            report.failures.push_back(d);
        }
        report.rows.push_back({d, std::move(lhs), std::move(rhs), holds});
    }
    return report;
}

}  // namespace ctriples::numtheory
