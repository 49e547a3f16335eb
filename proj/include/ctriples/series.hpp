#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace ctriples {

/// Dense power series truncated at an explicit order N: coefficients of
/// u^0..u^N are held, everything of degree > N is discarded. Operations never
/// extend the order implicitly; a request above an input's order is an error.
template <typename Coeff>
class TruncatedSeries {
public:
    using coefficient_type = Coeff;

    /// The zero series at order N.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Coeff(0)) {}

    /// Coefficients from the list, zero-padded (or cut) to order N.
    TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Coeff(0));
    }

    TruncatedSeries(std::size_t order, std::initializer_list<Coeff> coeffs)
        : TruncatedSeries(order, std::vector<Coeff>(coeffs)) {}

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
    const Coeff& operator[](std::size_t k) const { return coeffs_.at(k); }
    Coeff& operator[](std::size_t k) { return coeffs_.at(k); }

    /// Copy truncated to a lower (or equal) order.
    TruncatedSeries truncate(std::size_t order) const {
        require_order(order, "truncate");
        return TruncatedSeries(order, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    void require_order(std::size_t order, const char* op) const {
        if (this->order() < order)
            throw DomainError(std::string(op) + ": input truncated at order " + std::to_string(this->order()) +
                              ", below requested order " + std::to_string(order));
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
        os << '[';
        for (std::size_t k = 0; k < s.coeffs_.size(); ++k) os << (k ? "," : "") << s.coeffs_[k];
        return os << ']';
    }

private:
    std::vector<Coeff> coeffs_;
};

using IntSeries = TruncatedSeries<BigInt>;
using RatSeries = TruncatedSeries<Rational>;

/// Cauchy product of F and G truncated at order N.
template <typename Coeff>
TruncatedSeries<Coeff> mul(const TruncatedSeries<Coeff>& f, const TruncatedSeries<Coeff>& g, std::size_t order) {
    f.require_order(order, "mul");
    g.require_order(order, "mul");
    TruncatedSeries<Coeff> r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (g[j] == 0) continue;
            r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

/// (1 - u^j)^(-s) = sum_k C(s+k-1, k) u^(jk), truncated at N.
/// s = 0 gives the constant series 1.
inline IntSeries neg_binomial_factor(std::size_t j, std::uint64_t s, std::size_t order) {
    if (j < 1) throw DomainError("neg_binomial_factor: j must be >= 1");
    IntSeries r = IntSeries::one(order);
    if (s == 0) return r;
    BigInt binom = 1;  // C(s+k-1, k), updated via C(s+k, k+1) = C(s+k-1, k) * (s+k) / (k+1)
    for (std::size_t k = 1; j * k <= order; ++k) {
        binom *= BigInt(s) + (k - 1);
        binom /= k;
        r[j * k] = binom;
    }
    return r;
}

/// F^t truncated at N, by repeated squaring. t = 0 gives 1.
inline IntSeries power(const IntSeries& f, std::size_t t, std::size_t order) {
    IntSeries result = IntSeries::one(order);
    if (t == 0) return result;
    IntSeries base = f.truncate(order);
    while (true) {
        if (t & 1U) result = mul(result, base, order);
        t >>= 1U;
        if (t == 0) break;
        base = mul(base, base, order);
    }
    return result;
}

/// G(u) = F(u^t) truncated at N. Only F[0..floor(N/t)] is read.
template <typename Coeff>
TruncatedSeries<Coeff> substitute_power(const TruncatedSeries<Coeff>& f, std::size_t t, std::size_t order) {
    if (t < 1) throw DomainError("substitute_power: t must be >= 1");
    f.require_order(order / t, "substitute_power");
    TruncatedSeries<Coeff> g(order);
    for (std::size_t k = 0; k * t <= order; ++k) g[k * t] = f[k];
    return g;
}

template <typename Coeff>
RatSeries to_rational(const TruncatedSeries<Coeff>& f) {
    RatSeries r(f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) r[k] = Rational(f[k]);
    return r;
}

/// Formal logarithm of F (constant term 1) truncated at N, from
///   n*l_n = n*f_n - sum_{k=1}^{n-1} k*l_k*f_{n-k}.
template <typename Coeff>
RatSeries log(const TruncatedSeries<Coeff>& f, std::size_t order) {
    f.require_order(order, "log");
    if (f[0] != 1) throw DomainError("log: constant term must be 1");
    RatSeries l(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = Rational(f[n]) * n;
        for (std::size_t k = 1; k < n; ++k) {
            if (f[n - k] == 0) continue;
            acc -= l[k] * k * Rational(f[n - k]);
        }
        l[n] = acc / n;
    }
    return l;
}

/// Formal exponential of L (constant term 0) truncated at N, from
///   n*e_n = sum_{k=1}^{n} k*l_k*e_{n-k}.
inline RatSeries exp(const RatSeries& l, std::size_t order) {
    l.require_order(order, "exp");
    if (l[0] != 0) throw DomainError("exp: constant term must be 0");
    RatSeries e = RatSeries::one(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (l[k] == 0) continue;
            acc += l[k] * k * e[n - k];
        }
        e[n] = acc / n;
    }
    return e;
}

/// sum_d p(d) u^d truncated at N, built as the Euler product prod_{s=1}^{N} (1-u^s)^(-1).
inline IntSeries partition_series(std::size_t order) {
    IntSeries p = IntSeries::one(order);
    for (std::size_t s = 1; s <= order; ++s) {
        // multiplying by 1/(1-u^s) is the running sum p[k] += p[k-s]
        for (std::size_t k = s; k <= order; ++k) p[k] += p[k - s];
    }
    return p;
}

}  // namespace ctriples
