#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctriples {

/// Arbitrary-precision signed integer used for every count and coefficient.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a brute-force request exceeds a configured size cap.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::string cap_name, std::size_t cap, const std::string& what)
        : std::runtime_error(what + " (cap " + cap_name + " = " + std::to_string(cap) + ")"),
          cap_name_(std::move(cap_name)), cap_(cap) {}

    const std::string& cap_name() const noexcept { return cap_name_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::string cap_name_;
    std::size_t cap_;
};

/// An internal invariant was violated; signals a bug rather than bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Size caps for the brute-force routines.
struct Caps {
    std::size_t naive = 5;        // triples_naive degree
    std::size_t centralizer = 8;  // enumerate_symmetric / triples_centralizer degree
    std::size_t wreath = 5000;    // order of an enumerated W(t,m)
};

inline BigInt factorial(std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace ctriples
