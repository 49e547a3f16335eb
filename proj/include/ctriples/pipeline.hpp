#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"
#include "permgroup.hpp"
#include "series.hpp"
#include "wreath.hpp"

namespace ctriples {

// ---------------------------------------------------------------------------
// Pipeline A: prod_j (1 - u^j)^(-sigma(j))
// ---------------------------------------------------------------------------

/// prod_{j=1}^{N} (1 - u^j)^(-exponents[j]) truncated at N. exponents[0] is
/// ignored; factors with j > N are 1 modulo u^(N+1).
inline IntSeries euler_transform(std::span<const std::uint64_t> exponents, std::size_t order) {
    if (order > 0 && exponents.size() <= order)
        throw DomainError("euler_transform: exponent table shorter than the order");
    IntSeries r = IntSeries::one(order);
    for (std::size_t j = 1; j <= order; ++j) r = mul(r, neg_binomial_factor(j, exponents[j], order), order);
    return r;
}

inline IntSeries coeffs_product(std::size_t order) {
    return euler_transform(numtheory::sigma_table(order), order);
}

// ---------------------------------------------------------------------------
// Pipeline B: sum over cycle types of S_n of prod_t k(W(t, m_t))
// ---------------------------------------------------------------------------

/// Coefficient n is the number of pairs (g, class of Cent(g)) up to
/// conjugacy of g: sum over cycle types of n of prod_t k(W(t, m_t)).
/// Never touches sigma.
inline IntSeries coeffs_classes(std::size_t order) {
    const WreathClassCounts k(order);
    IntSeries r(order);
    for (std::size_t n = 0; n <= order; ++n) {
        BigInt sum = 0;
        fold_cycle_types(
            n, BigInt(1),
            [&](const BigInt& acc, std::size_t t, std::size_t m) { return acc * k(t, m); },
            [&](const auto&, const BigInt& product) { sum += product; });
        r[n] = std::move(sum);
    }
    return r;
}

/// The same series as the truncated product prod_{t=1}^{N} P(u^t)^t.
inline IntSeries coeffs_classes_product_form(std::size_t order) {
    const auto p = partition_series(order);
    IntSeries q = IntSeries::one(order);
    for (std::size_t t = 1; t <= order; ++t)
        q = mul(q, power(substitute_power(p, t, order), t, order), order);
    return q;
}

// ---------------------------------------------------------------------------
// Pipeline C: T(n)/n! from brute-force enumeration
// ---------------------------------------------------------------------------

inline std::vector<BigInt> coeffs_brute(std::size_t n_max, const Caps& caps = {}) {
    if (n_max > caps.centralizer)
        throw ResourceLimitError("cent-cap", caps.centralizer,
                                 "coeffs_brute: n_max " + std::to_string(n_max) + " above cap");
    std::vector<BigInt> out;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BigInt triples = triples_centralizer(n, caps);
        const BigInt nf = factorial(n);
        if (triples % nf != 0)
            throw ConsistencyError("coeffs_brute: T(" + std::to_string(n) + ") = " + triples.str() +
                                   " is not divisible by " + std::to_string(n) + "!");
        out.push_back(triples / nf);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cross-verification
// ---------------------------------------------------------------------------

struct CoefficientReport {
    std::size_t order = 0;
    std::vector<BigInt> coeffs_product;
    std::vector<BigInt> coeffs_classes;
    std::vector<BigInt> coeffs_brute;  // length brute_max + 1
    std::vector<bool> agreements;      // per index 0..N
    bool overall = false;

    /// Lowest index where some pair of pipelines disagrees.
    std::optional<std::size_t> first_disagreement() const {
        for (std::size_t i = 0; i < agreements.size(); ++i)
            if (!agreements[i]) return i;
        return std::nullopt;
    }
};

/// Runs all three pipelines. Index n agrees when A[n] == B[n] and, for
/// n <= brute_max, A[n] == C[n]. `sigma_override` replaces the sigma table
/// fed to pipeline A (negative-control fixture); it must cover 0..N.
inline CoefficientReport verify_identity(std::size_t order, std::size_t brute_max, const Caps& caps = {},
                                         std::optional<std::vector<std::uint64_t>> sigma_override = std::nullopt) {
    if (brute_max > order) throw DomainError("verify_identity: brute_max must not exceed the order");
    CoefficientReport report;
    report.order = order;
    report.coeffs_brute = coeffs_brute(brute_max, caps);
    const auto sig = sigma_override ? std::move(*sigma_override) : numtheory::sigma_table(order);
    report.coeffs_product = euler_transform(sig, order).coeffs();
    report.coeffs_classes = coeffs_classes(order).coeffs();
    report.agreements.resize(order + 1);
    report.overall = true;
    for (std::size_t n = 0; n <= order; ++n) {
        bool ok = report.coeffs_product[n] == report.coeffs_classes[n];
        if (n <= brute_max) ok = ok && report.coeffs_product[n] == report.coeffs_brute[n];
        report.agreements[n] = ok;
        report.overall = report.overall && ok;
    }
    return report;
}

struct LogCheck {
    bool ok = true;
    std::optional<std::size_t> first_mismatch;
    RatSeries log_series{0};
};

/// Compares log(prod_j (1-u^j)^(-sigma(j))) with (sum_{a|d} a*sigma(a))/d for d = 1..N.
inline LogCheck verify_log(std::size_t order) {
    if (order < 1) throw DomainError("verify_log: order must be >= 1");
    LogCheck check;
    check.log_series = log(coeffs_product(order), order);
    for (std::size_t d = 1; d <= order; ++d) {
        if (check.log_series[d] != numtheory::log_coefficient(static_cast<std::int64_t>(d))) {
            check.ok = false;
            check.first_mismatch = d;
            break;
        }
    }
    return check;
}

struct GrowthRow {
    std::size_t n;
    BigInt coeff;
    double nth_root;  // coeff^(1/n), presentation only
};

inline std::vector<GrowthRow> growth_report(std::size_t order) {
    if (order < 1) throw DomainError("growth_report: order must be >= 1");
    const auto a = coeffs_product(order);
    std::vector<GrowthRow> rows;
    for (std::size_t n = 1; n <= order; ++n)
        rows.push_back({n, a[n], std::pow(a[n].convert_to<double>(), 1.0 / static_cast<double>(n))});
    return rows;
}

// ---------------------------------------------------------------------------
// Small-group suites: commuting pairs and wreath conjugacy
// ---------------------------------------------------------------------------

struct GroupCheck {
    std::string group;  // "S_4", "W(2,3)", ...
    bool ok;
    std::string detail;
};

struct GroupSuiteReport {
    std::vector<GroupCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }

    const GroupCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.ok) return &c;
        return nullptr;
    }
};

inline std::string wreath_name(std::size_t t, std::size_t m) {
    return "W(" + std::to_string(t) + "," + std::to_string(m) + ")";
}

/// Every (t, m) with 1 <= t <= t_max and t^m * m! <= order_cap.
inline std::vector<std::pair<std::size_t, std::size_t>> wreath_family(std::size_t t_max, std::size_t order_cap) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t t = 1; t <= t_max; ++t)
        for (std::size_t m = 0; wreath_order(t, m) <= order_cap; ++m) out.emplace_back(t, m);
    return out;
}

/// commuting_pairs(G) == |G| k(G) on S_n for n <= max_degree and on the
/// wreath family bounded by (t_max, wreath_order_cap).
inline GroupSuiteReport check_commuting_pairs(std::size_t max_degree, std::size_t t_max,
                                              std::size_t wreath_order_cap, const Caps& caps = {}) {
    GroupSuiteReport report;
    auto record = [&](std::string name, const BigInt& pairs, std::size_t order, std::size_t classes) {
        const BigInt expected = BigInt(order) * classes;
        report.checks.push_back({std::move(name), pairs == expected,
                                 "pairs=" + pairs.str() + " |G|k(G)=" + expected.str()});
    };
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const auto g = enumerate_symmetric(n, caps);
        record("S_" + std::to_string(n), commuting_pairs(g), g.order(), conjugacy_classes(g).count());
    }
    Caps wcaps = caps;
    wcaps.wreath = std::max(caps.wreath, wreath_order_cap);
    for (auto [t, m] : wreath_family(t_max, wreath_order_cap)) {
        const auto g = enumerate_wreath(t, m, wcaps);
        record(wreath_name(t, m), commuting_pairs(g), g.order(), conjugacy_classes(g).count());
    }
    return report;
}

/// On each wreath group of the family: for every pair of elements, orbit
/// conjugacy <=> equal cycle-sum invariants <=> equal class labels; and the
/// orbit class count equals k_wreath(t,m) and the class-label count.
inline GroupSuiteReport check_wreath_conjugacy(std::size_t t_max, std::size_t wreath_order_cap,
                                               const Caps& caps = {}) {
    GroupSuiteReport report;
    Caps wcaps = caps;
    wcaps.wreath = std::max(caps.wreath, wreath_order_cap);
    for (auto [t, m] : wreath_family(t_max, wreath_order_cap)) {
        const auto g = enumerate_wreath(t, m, wcaps);
        const auto cc = conjugacy_classes(g);

        // Intern invariant multisets and labels as small integer ids.
        std::map<std::vector<CycleSumInvariant>, std::size_t> inv_ids;
        std::map<WreathClassLabel, std::size_t> label_ids;
        std::vector<std::size_t> inv_of(g.order()), label_of(g.order());
        for (std::size_t i = 0; i < g.order(); ++i) {
            inv_of[i] = inv_ids.try_emplace(cycle_sum_invariants(g[i]), inv_ids.size()).first->second;
            label_of[i] = label_ids.try_emplace(class_label_of(g[i]), label_ids.size()).first->second;
        }

        std::string detail;
        for (std::size_t i = 0; i < g.order() && detail.empty(); ++i) {
            for (std::size_t j = i + 1; j < g.order(); ++j) {
                const bool orbit = cc.class_of[i] == cc.class_of[j];
                const bool inv = inv_of[i] == inv_of[j];
                const bool lab = label_of[i] == label_of[j];
                if (orbit != inv || orbit != lab) {
                    detail = "elements " + std::to_string(i) + " and " + std::to_string(j) + ": orbit-conjugate=" +
                             (orbit ? "yes" : "no") + " invariants-equal=" + (inv ? "yes" : "no");
                    break;
                }
            }
        }
        const BigInt k = k_wreath(t, m);
        const std::size_t labels = enumerate_class_labels(t, m).size();
        if (detail.empty() && !(k == cc.count() && labels == cc.count()))
            detail = "classes=" + std::to_string(cc.count()) + " k_wreath=" + k.str() +
                     " labels=" + std::to_string(labels);
        const bool ok = detail.empty();
        if (ok) detail = "classes=" + std::to_string(cc.count());
        report.checks.push_back({wreath_name(t, m), ok, std::move(detail)});
    }
    return report;
}

}  // namespace ctriples
