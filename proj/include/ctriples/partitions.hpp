#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <vector>

#include "core.hpp"

namespace ctriples {

/// Integer partition held as a non-increasing list of positive parts.
class Partition {
public:
    Partition() = default;

    /// Parts may be given in any order; zeros are rejected.
    explicit Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
        if (std::find(parts_.begin(), parts_.end(), std::size_t{0}) != parts_.end())
            throw DomainError("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Multiplicity view: part -> number of times it occurs.
    std::map<std::size_t, std::size_t> multiplicities() const {
        std::map<std::size_t, std::size_t> m;
        for (auto p : parts_) ++m[p];
        return m;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        os << '[';
        for (std::size_t i = 0; i < p.parts_.size(); ++i) os << (i ? "," : "") << p.parts_[i];
        return os << ']';
    }

private:
    std::vector<std::size_t> parts_;
};

/// Cycle type of a permutation: cycle length t -> multiplicity m_t (m_t >= 1 only).
class CycleType {
public:
    CycleType() = default;

    explicit CycleType(std::map<std::size_t, std::size_t> multiplicities) {
        for (auto [t, m] : multiplicities) {
            if (t == 0) throw DomainError("CycleType: cycle length must be positive");
            if (m != 0) mult_.emplace(t, m);
        }
    }

    explicit CycleType(const Partition& p) : mult_(p.multiplicities()) {}

    const std::map<std::size_t, std::size_t>& multiplicities() const noexcept { return mult_; }

    std::size_t multiplicity(std::size_t t) const {
        auto it = mult_.find(t);
        return it == mult_.end() ? 0 : it->second;
    }

    std::size_t degree() const noexcept {
        std::size_t n = 0;
        for (auto [t, m] : mult_) n += t * m;
        return n;
    }

    Partition to_partition() const {
        std::vector<std::size_t> parts;
        for (auto [t, m] : mult_) parts.insert(parts.end(), m, t);
        return Partition(std::move(parts));
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    std::map<std::size_t, std::size_t> mult_;
};

namespace detail {

inline void enumerate_partitions_rec(std::size_t remaining, std::size_t max_part,
                                     std::vector<std::size_t>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of n in descending lexicographic order of their part lists.
/// n = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> prefix;
    detail::enumerate_partitions_rec(n, n, prefix, out);
    return out;
}

/// p(0..n) by Euler's pentagonal-number recurrence
///   p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<BigInt> partition_counts(std::size_t n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        BigInt acc = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > i) break;
            const std::size_t g2 = k * (3 * k + 1) / 2;
            BigInt term = p[i - g1];
            if (g2 <= i) term += p[i - g2];
            if (k % 2 == 1) acc += term; else acc -= term;
        }
        p[i] = std::move(acc);
    }
    return p;
}

inline BigInt partition_count(std::size_t n) { return partition_counts(n).back(); }

/// Order of the centralizer in S_n of a permutation of the given cycle type:
/// prod_t t^(m_t) * m_t!.
inline BigInt centralizer_order(const CycleType& ct) {
    BigInt r = 1;
    for (auto [t, m] : ct.multiplicities()) r *= boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(m)) * factorial(m);
    return r;
}

/// Visits every cycle type of degree n without materializing the partition
/// list. The visitor receives the (length, multiplicity) pairs in decreasing
/// length order, plus the value produced by folding `step(acc, t, m_t)` over
/// those pairs starting from `init`.
template <typename Acc, typename Step, typename Visit>
void fold_cycle_types(std::size_t n, const Acc& init, Step&& step, Visit&& visit) {
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_len, const Acc& acc) -> void {
        if (remaining == 0) {
            visit(static_cast<const std::vector<std::pair<std::size_t, std::size_t>>&>(stack), acc);
            return;
        }
        for (std::size_t t = std::min(remaining, max_len); t >= 1; --t) {
            // a length-1 cycle count must absorb everything left
            const std::size_t m_min = (t == 1) ? remaining : 1;
            for (std::size_t m = remaining / t; m >= m_min; --m) {
                stack.emplace_back(t, m);
                self(self, remaining - t * m, t - 1, step(acc, t, m));
                stack.pop_back();
            }
        }
    };
    rec(rec, n, n, init);
}

}  // namespace ctriples
