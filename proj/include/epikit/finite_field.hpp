#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace epikit {

struct PrimePower {
    std::int64_t p = 3;
    int f = 1;
    std::int64_t q = 3;

    // Validates that q is a power of an odd prime.
    static PrimePower from_q(std::int64_t q);
    static PrimePower make(std::int64_t p, int f);
    bool operator==(const PrimePower&) const = default;
};

class FiniteFieldElement;

// F_q = F_p[x]/(m(x)). Elements are encoded as integers sum c_i p^i where
// c_i is the coefficient of x^i; that encoding is also the lexicographic
// order used to pick the defining polynomial and the generator.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    using Code = std::uint64_t;

    FiniteField(std::int64_t p, int f);

    std::int64_t p() const { return p_; }
    int degree() const { return f_; }
    std::int64_t size() const { return q_; }
    PrimePower prime_power() const { return PrimePower::make(p_, f_); }
    // Coefficients of the monic defining polynomial, constant term first.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    Code generator_code() const { return generator_; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code pow(Code a, std::uint64_t e) const;
    Code from_int(std::int64_t v) const;
    // Absolute trace to F_p, as an integer in [0, p).
    std::int64_t trace(Code a) const;
    // Norm to F_p, as an integer in [0, p).
    std::int64_t norm(Code a) const;
    // Discrete logarithm to the fixed generator; a must be nonzero.
    std::uint64_t log(Code a) const;
    std::uint64_t order_of(Code a) const;

    std::vector<std::int64_t> digits(Code a) const;
    Code encode(const std::vector<std::int64_t>& digits) const;

    FiniteFieldElement element(Code c) const;
    FiniteFieldElement zero() const;
    FiniteFieldElement one() const;
    FiniteFieldElement generator() const;
    FiniteFieldElement from_integer(std::int64_t v) const;
    std::vector<FiniteFieldElement> elements() const;
    std::vector<FiniteFieldElement> units() const;

    std::string describe() const;

private:
    std::int64_t p_;
    int f_;
    std::int64_t q_;
    std::vector<std::int64_t> modulus_;
    Code generator_ = 1;
    std::vector<std::int64_t> basis_trace_;
    std::vector<std::uint32_t> exp_table_;
    std::vector<std::int64_t> log_table_;
    std::vector<std::pair<std::uint64_t, int>> unit_factors_;

    std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const;
    Code mul_slow(Code a, Code b) const;
    Code pow_slow(Code a, std::uint64_t e) const;
};

class FiniteFieldElement {
public:
    FiniteFieldElement() = default;
    FiniteFieldElement(std::shared_ptr<const FiniteField> f, FiniteField::Code c) : field_(std::move(f)), code_(c) {}

    const FiniteField& field() const { return *field_; }
    const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
    FiniteField::Code code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool valid() const { return static_cast<bool>(field_); }

    FiniteFieldElement operator+(const FiniteFieldElement& o) const;
    FiniteFieldElement operator-(const FiniteFieldElement& o) const;
    FiniteFieldElement operator*(const FiniteFieldElement& o) const;
    FiniteFieldElement operator/(const FiniteFieldElement& o) const;
    FiniteFieldElement operator-() const;
    FiniteFieldElement inverse() const;
    FiniteFieldElement pow(std::uint64_t e) const;
    bool operator==(const FiniteFieldElement& o) const;
    bool operator!=(const FiniteFieldElement& o) const { return !(*this == o); }

    std::int64_t trace() const { return field_->trace(code_); }
    std::int64_t norm() const { return field_->norm(code_); }
    std::uint64_t log() const { return field_->log(code_); }
    std::vector<std::int64_t> coeffs() const { return field_->digits(code_); }
    std::string to_string() const;

private:
    std::shared_ptr<const FiniteField> field_;
    FiniteField::Code code_ = 0;
    void check_same(const FiniteFieldElement& o) const;
};

// Upper bound on q accepted by build_field: EPIKIT_MAX_FIELD if set, else 2^20.
std::int64_t max_field_size();

// Cached, deterministic field construction subject to max_field_size().
std::shared_ptr<const FiniteField> build_field(std::int64_t p, int f);
std::shared_ptr<const FiniteField> build_field(const PrimePower& pp);
// Same, with an explicit bound instead of the configured one.
std::shared_ptr<const FiniteField> build_field_bounded(std::int64_t p, int f, std::int64_t bound);

// Image of x in F_Q under the embedding F_q -> F_Q that sends the defining
// root of the small field to the least root (in code order) of its
// defining polynomial inside the big field.
FiniteFieldElement embed(const FiniteFieldElement& x, const std::shared_ptr<const FiniteField>& big);

}  // namespace epikit
