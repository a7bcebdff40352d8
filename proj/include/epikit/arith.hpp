#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace epikit {

// Raised when an input violates a documented precondition.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when two independent computations that must agree do not.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

using Rational = boost::rational<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Prime factorisation as (prime, multiplicity), primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Returns (p, f) with q = p^f, or nothing when q is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power_split(std::uint64_t q);

// Least f >= 1 with q^f = 1 mod n. Requires gcd(q, n) = 1.
int multiplicative_order(std::int64_t q, std::int64_t n);

// Jacobi symbol (a/n) for odd positive n.
int jacobi(std::int64_t a, std::int64_t n);

std::int64_t ipow(std::int64_t b, int e);

// Euler phi.
std::uint64_t totient(std::uint64_t n);

}  // namespace epikit
