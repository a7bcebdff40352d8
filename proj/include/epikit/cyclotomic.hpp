#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "epikit/root_of_unity.hpp"

namespace epikit {

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

// Element of Z[zeta_N] in the power basis 1, zeta, ..., zeta^(phi(N)-1).
// The representation is canonical, so == is exact equality in the ring.
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(std::int64_t n = 1);

    // Builds sum_e acc[e] * zeta^e from a vector indexed by exponents mod N.
    static CyclotomicInteger from_exponent_counts(std::int64_t n, const std::vector<std::int64_t>& acc);
    static CyclotomicInteger integer(std::int64_t n, std::int64_t value);
    static CyclotomicInteger root(std::int64_t n, const RootOfUnity& z);

    std::int64_t conductor() const { return n_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    // Coordinates in the basis zeta, zeta^2, ..., zeta^(p-1); N must be prime.
    std::vector<std::int64_t> prime_basis() const;

    CyclotomicInteger operator+(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-(const CyclotomicInteger& o) const;
    CyclotomicInteger operator*(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-() const;
    bool operator==(const CyclotomicInteger& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const CyclotomicInteger& o) const { return !(*this == o); }

    // zeta -> zeta^k for k a unit mod N.
    CyclotomicInteger galois(std::int64_t k) const;
    CyclotomicInteger conjugate() const { return galois(-1); }
    // Product of all Galois conjugates; an ordinary integer.
    std::int64_t norm() const;

    // Same element viewed in Z[zeta_M] for a multiple M of N.
    CyclotomicInteger lift(std::int64_t m) const;

    bool is_integer() const;
    std::int64_t integer_value() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    std::int64_t n_;
    std::vector<std::int64_t> c_;
    static CyclotomicInteger reduce(std::int64_t n, std::vector<std::int64_t> poly);
};

}  // namespace epikit
