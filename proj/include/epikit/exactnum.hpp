#pragma once

#include <cstdint>
#include <memory>

#include "epikit/arith.hpp"
#include "epikit/cyclotomic.hpp"
#include "epikit/finite_field.hpp"
#include "epikit/root_of_unity.hpp"

namespace epikit {

// x -> zeta_p^Tr(c x)
class AdditiveCharacter {
public:
    AdditiveCharacter() = default;
    explicit AdditiveCharacter(FiniteFieldElement scale) : scale_(std::move(scale)) {}
    static AdditiveCharacter standard(const std::shared_ptr<const FiniteField>& k) { return AdditiveCharacter(k->one()); }

    const FiniteFieldElement& scale() const { return scale_; }
    const FiniteField& field() const { return scale_.field(); }
    bool is_trivial() const { return scale_.is_zero(); }
    RootOfUnity operator()(const FiniteFieldElement& x) const;
    // The character x -> psi(u x).
    AdditiveCharacter scaled(const FiniteFieldElement& u) const { return AdditiveCharacter(scale_ * u); }

private:
    FiniteFieldElement scale_;
};

// g^t -> zeta_{q-1}^(a t) for the fixed generator g.
class MultiplicativeCharacter {
public:
    MultiplicativeCharacter() = default;
    MultiplicativeCharacter(std::shared_ptr<const FiniteField> k, std::int64_t exponent);
    static MultiplicativeCharacter trivial(const std::shared_ptr<const FiniteField>& k) { return {k, 0}; }
    static MultiplicativeCharacter quadratic(const std::shared_ptr<const FiniteField>& k);

    const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
    std::int64_t exponent() const { return exponent_; }
    std::int64_t order() const;
    bool is_trivial() const { return exponent_ == 0; }
    RootOfUnity operator()(const FiniteFieldElement& x) const;
    MultiplicativeCharacter operator*(const MultiplicativeCharacter& o) const;
    MultiplicativeCharacter inverse() const { return {field_, -exponent_}; }
    bool operator==(const MultiplicativeCharacter& o) const;

private:
    std::shared_ptr<const FiniteField> field_;
    std::int64_t exponent_ = 0;
};

// Jacobi symbol for odd n; even n is rejected.
int quadratic_symbol(std::int64_t a, std::int64_t n);
// Legendre symbol of the image of a in k = F_q.
int quadratic_symbol(std::int64_t a, const PrimePower& q);
// Legendre symbol on k: 0 at 0, otherwise the quadratic character.
int quadratic_symbol(const FiniteFieldElement& x);

// sum over x in k^x of eta(x) psi(x), exactly, in Z[zeta_N] with
// N = p (eta quadratic or trivial) or N = p * ord(eta).
CyclotomicInteger gauss_sum(const MultiplicativeCharacter& eta, const AdditiveCharacter& psi);

enum class ExtensionKind { ramified, unramified };

struct LambdaValue {
    RootOfUnity value;
    double residual = 0.0;  // distance between g/sqrt(q) and the snapped root
};

// Lambda constant of a tame quadratic extension, with the convention
// lambda_ram(psi) = q^(-1/2) sum (x/q) psi(x) and lambda_unram = -1.
LambdaValue lambda_quadratic_detail(ExtensionKind kind, const AdditiveCharacter& psi);
RootOfUnity lambda_quadratic(ExtensionKind kind, const AdditiveCharacter& psi);

// Residual tolerance for the numeric sign snap.
inline constexpr double kLambdaSnapTolerance = 1e-6;

}  // namespace epikit
