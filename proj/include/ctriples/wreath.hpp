#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "core.hpp"
#include "partitions.hpp"
#include "permgroup.hpp"
#include "series.hpp"

namespace ctriples {

/// Element (A, e) of the wreath product W(t,m) = Z_t wr S_m, with A in Z_t^m
/// and e in S_m.
///
/// S_m acts on coordinates by (B^e)[e(j)] = B[j], that is (B^e)[i] = B[e^-1(i)],
/// and the group law is (A, e) * (B, f) = (A + B^e, e * f) where e * f applies
/// f first (the Permutation convention). The identity is (0, id).
class WreathElement {
public:
    using residue_type = std::uint32_t;

    WreathElement() = default;

    WreathElement(std::size_t modulus, std::vector<residue_type> coords, Permutation perm)
        : t_(modulus), a_(std::move(coords)), e_(std::move(perm)) {
        if (t_ < 1) throw DomainError("WreathElement: modulus must be >= 1");
        if (a_.size() != e_.degree()) throw DomainError("WreathElement: coordinate count differs from degree");
        for (auto x : a_)
            if (x >= t_) throw DomainError("WreathElement: coordinate out of range [0, t)");
    }

    static WreathElement identity(std::size_t modulus, std::size_t degree) {
        return WreathElement(modulus, std::vector<residue_type>(degree, 0), Permutation::identity(degree));
    }

    std::size_t modulus() const noexcept { return t_; }
    std::size_t degree() const noexcept { return a_.size(); }
    std::span<const residue_type> coords() const noexcept { return a_; }
    const Permutation& perm() const noexcept { return e_; }

    friend WreathElement operator*(const WreathElement& x, const WreathElement& y) {
        check_compatible(x, y, "product");
        WreathElement r;
        r.t_ = x.t_;
        r.a_ = x.a_;
        for (std::size_t j = 0; j < y.a_.size(); ++j) {
            auto& slot = r.a_[x.e_(j)];
            slot = static_cast<residue_type>((slot + y.a_[j]) % x.t_);
        }
        r.e_ = x.e_ * y.e_;
        return r;
    }

    /// (A, e)^-1 = (B, e^-1) with B[j] = -A[e(j)].
    WreathElement inverse() const {
        WreathElement r;
        r.t_ = t_;
        r.a_.resize(a_.size());
        for (std::size_t j = 0; j < a_.size(); ++j)
            r.a_[j] = static_cast<residue_type>((t_ - a_[e_(j)]) % t_);
        r.e_ = e_.inverse();
        return r;
    }

    friend bool operator==(const WreathElement&, const WreathElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const WreathElement& x) {
        os << "((";
        for (std::size_t i = 0; i < x.a_.size(); ++i) os << (i ? "," : "") << x.a_[i];
        return os << ")," << x.e_ << ")";
    }

    static void check_compatible(const WreathElement& x, const WreathElement& y, const char* what) {
        if (x.t_ != y.t_ || x.a_.size() != y.a_.size())
            throw DomainError(std::string("WreathElement: mismatched W(t,m) parameters in ") + what);
    }

private:
    std::size_t t_ = 1;
    std::vector<residue_type> a_;
    Permutation e_;
};

/// xy == yx without allocating. With e, f commuting, the coordinate parts of
/// xy and yx agree iff A[e(f(j))] + B[f(j)] == B[e(f(j))] + A[e(j)] (mod t) for all j.
inline bool commutes(const WreathElement& x, const WreathElement& y) {
    WreathElement::check_compatible(x, y, "commutes");
    if (!commutes(x.perm(), y.perm())) return false;
    const auto a = x.coords();
    const auto b = y.coords();
    const auto& e = x.perm();
    const auto& f = y.perm();
    const std::size_t t = x.modulus();
    for (std::size_t j = 0; j < a.size(); ++j) {
        const auto ef = e(f(j));
        if ((a[ef] + b[f(j)]) % t != (b[ef] + a[e(j)]) % t) return false;
    }
    return true;
}

}  // namespace ctriples

template <>
struct std::hash<ctriples::WreathElement> {
    std::size_t operator()(const ctriples::WreathElement& x) const noexcept {
        std::size_t h = std::hash<ctriples::Permutation>{}(x.perm());
        for (auto a : x.coords()) h = h * 1000003U + a;
        return h ^ x.modulus();
    }
};

namespace ctriples {

/// (A[c] mod t, |c|) for one cycle c of e.
struct CycleSumInvariant {
    std::size_t sum;
    std::size_t length;

    friend bool operator==(const CycleSumInvariant&, const CycleSumInvariant&) = default;
    friend auto operator<=>(const CycleSumInvariant&, const CycleSumInvariant&) = default;
};

/// One invariant per cycle of e (fixed points included), sorted by residue then length.
inline std::vector<CycleSumInvariant> cycle_sum_invariants(const WreathElement& x) {
    std::vector<CycleSumInvariant> out;
    for (const auto& c : x.perm().cycles()) {
        std::size_t s = 0;
        for (auto i : c) s += x.coords()[i];
        out.push_back({s % x.modulus(), c.size()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Conjugacy test in W(t,m) via equality of cycle-sum invariant multisets.
inline bool conjugate_by_invariants(const WreathElement& x, const WreathElement& y) {
    WreathElement::check_compatible(x, y, "conjugate_by_invariants");
    return cycle_sum_invariants(x) == cycle_sum_invariants(y);
}

/// Names a conjugacy class of W(t,m): one partition per residue z in Z_t,
/// with total size m.
struct WreathClassLabel {
    std::vector<Partition> lambdas;

    std::size_t modulus() const noexcept { return lambdas.size(); }
    std::size_t total_size() const noexcept {
        std::size_t m = 0;
        for (const auto& p : lambdas) m += p.size();
        return m;
    }

    friend bool operator==(const WreathClassLabel&, const WreathClassLabel&) = default;
    friend auto operator<=>(const WreathClassLabel&, const WreathClassLabel&) = default;

    friend std::ostream& operator<<(std::ostream& os, const WreathClassLabel& l) {
        os << '(';
        for (std::size_t z = 0; z < l.lambdas.size(); ++z) os << (z ? "," : "") << l.lambdas[z];
        return os << ')';
    }
};

/// lambda_z has a part l for every cycle of length l whose cycle sum is z.
inline WreathClassLabel class_label_of(const WreathElement& x) {
    std::vector<std::vector<std::size_t>> parts(x.modulus());
    for (const auto& inv : cycle_sum_invariants(x)) parts[inv.sum].push_back(inv.length);
    WreathClassLabel label;
    label.lambdas.reserve(parts.size());
    for (auto& p : parts) label.lambdas.emplace_back(std::move(p));
    return label;
}

/// Every t-tuple of partitions with total size m. Ordered by the size of
/// lambda_0 descending, then lambda_1, ..., and within a fixed size vector by
/// each partition's descending lexicographic position.
inline std::vector<WreathClassLabel> enumerate_class_labels(std::size_t t, std::size_t m) {
    if (t < 1) throw DomainError("enumerate_class_labels: t must be >= 1");
    std::vector<std::vector<Partition>> by_size(m + 1);
    for (std::size_t k = 0; k <= m; ++k) by_size[k] = enumerate_partitions(k);

    std::vector<WreathClassLabel> out;
    WreathClassLabel current;
    auto rec = [&](auto&& self, std::size_t z, std::size_t remaining) -> void {
        if (z + 1 == t) {
            for (const auto& p : by_size[remaining]) {
                current.lambdas.push_back(p);
                out.push_back(current);
                current.lambdas.pop_back();
            }
            return;
        }
        for (std::size_t k = remaining + 1; k-- > 0;) {
            for (const auto& p : by_size[k]) {
                current.lambdas.push_back(p);
                self(self, z + 1, remaining - k);
                current.lambdas.pop_back();
            }
        }
    };
    rec(rec, 0, m);
    return out;
}

/// t^m * m!, the order of W(t,m).
inline BigInt wreath_order(std::size_t t, std::size_t m) {
    return boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(m)) * factorial(m);
}

/// All elements of W(t,m): permutations in lexicographic order, and for each,
/// coordinate vectors counted in base t with A[0] most significant.
inline GroupTable<WreathElement> enumerate_wreath(std::size_t t, std::size_t m, const Caps& caps = {}) {
    if (t < 1) throw DomainError("enumerate_wreath: t must be >= 1");
    if (wreath_order(t, m) > caps.wreath)
        throw ResourceLimitError("wreath-cap", caps.wreath,
                                 "enumerate_wreath: |W(" + std::to_string(t) + "," + std::to_string(m) +
                                     ")| = " + wreath_order(t, m).str() + " above cap");
    std::vector<Permutation::point_type> images(m);
    std::iota(images.begin(), images.end(), Permutation::point_type{0});
    std::vector<WreathElement> out;
    do {
        const Permutation e(images);
        std::vector<WreathElement::residue_type> a(m, 0);
        while (true) {
            out.emplace_back(t, a, e);
            std::size_t pos = m;
            while (pos > 0 && a[pos - 1] + 1 == t) a[--pos] = 0;
            if (pos == 0) break;
            ++a[pos - 1];
        }
    } while (std::next_permutation(images.begin(), images.end()));
    return GroupTable<WreathElement>(std::move(out));
}

inline ConjugacyClasses conjugacy_classes_brute(std::size_t t, std::size_t m, const Caps& caps = {}) {
    return conjugacy_classes(enumerate_wreath(t, m, caps));
}

/// k(W(t,m)) as the u^m coefficient of P(u)^t.
inline BigInt k_wreath(std::size_t t, std::size_t m) {
    if (t < 1) throw DomainError("k_wreath: t must be >= 1");
    return power(partition_series(m), t, m)[m];
}

/// k(W(t,m)) as the u^(tm) coefficient of P(u^t)^t.
inline BigInt k_wreath_substituted(std::size_t t, std::size_t m) {
    if (t < 1) throw DomainError("k_wreath_substituted: t must be >= 1");
    const std::size_t order = t * m;
    return power(substitute_power(partition_series(m), t, order), t, order)[order];
}

/// k(W(t,m)) for every t >= 1, m >= 0 with t*m <= N, via P(u)^t.
class WreathClassCounts {
public:
    explicit WreathClassCounts(std::size_t order) : order_(order), table_(order + 1) {
        const auto p = partition_series(order);
        for (std::size_t t = 1; t <= order; ++t) {
            const std::size_t m_max = order / t;
            table_[t] = power(p.truncate(m_max), t, m_max).coeffs();
        }
    }

    std::size_t order() const noexcept { return order_; }

    const BigInt& operator()(std::size_t t, std::size_t m) const {
        if (t < 1 || t * m > order_) throw DomainError("WreathClassCounts: (t, m) outside the table");
        if (m == 0) return one_;
        return table_[t][m];
    }

private:
    std::size_t order_;
    std::vector<std::vector<BigInt>> table_;
    BigInt one_ = 1;
};

}  // namespace ctriples
