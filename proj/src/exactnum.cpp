#include "epikit/exactnum.hpp"

#include <cmath>
#include <numeric>

namespace epikit {

RootOfUnity AdditiveCharacter::operator()(const FiniteFieldElement& x) const {
    return {field().p(), (scale_ * x).trace()};
}

MultiplicativeCharacter::MultiplicativeCharacter(std::shared_ptr<const FiniteField> k, std::int64_t exponent)
    : field_(std::move(k)) {
    if (!field_) throw DomainError("character needs a field");
    exponent_ = mod(exponent, field_->size() - 1);
}

MultiplicativeCharacter MultiplicativeCharacter::quadratic(const std::shared_ptr<const FiniteField>& k) {
    return {k, (k->size() - 1) / 2};
}

std::int64_t MultiplicativeCharacter::order() const {
    std::int64_t n = field_->size() - 1;
    return n / std::gcd(n, exponent_ == 0 ? n : exponent_);
}

RootOfUnity MultiplicativeCharacter::operator()(const FiniteFieldElement& x) const {
    if (x.is_zero()) throw DomainError("multiplicative character evaluated at zero");
    std::int64_t n = field_->size() - 1;
    auto t = static_cast<std::int64_t>(x.log());
    return {n, static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(exponent_),
                                                 static_cast<std::uint64_t>(n)))};
}

MultiplicativeCharacter MultiplicativeCharacter::operator*(const MultiplicativeCharacter& o) const {
    if (field_->size() != o.field_->size()) throw DomainError("characters of different fields");
    return {field_, exponent_ + o.exponent_};
}

bool MultiplicativeCharacter::operator==(const MultiplicativeCharacter& o) const {
    return field_->size() == o.field_->size() && exponent_ == o.exponent_;
}

int quadratic_symbol(std::int64_t a, std::int64_t n) {
    if (n <= 0 || n % 2 == 0) throw DomainError("quadratic symbol needs an odd positive modulus");
    return jacobi(a, n);
}

int quadratic_symbol(std::int64_t a, const PrimePower& q) {
    int s = jacobi(a, q.p);
    return q.f % 2 == 0 ? s * s : s;
}

int quadratic_symbol(const FiniteFieldElement& x) {
    if (x.is_zero()) return 0;
    const FiniteField& k = x.field();
    return x.pow(static_cast<std::uint64_t>((k.size() - 1) / 2)).code() == 1 ? 1 : -1;
}

CyclotomicInteger gauss_sum(const MultiplicativeCharacter& eta, const AdditiveCharacter& psi) {
    const FiniteField& k = psi.field();
    if (eta.field_ptr()->size() != k.size()) throw DomainError("Gauss sum characters live on different fields");
    if (psi.is_trivial()) throw DomainError("Gauss sum needs a nontrivial additive character");
    std::int64_t p = k.p();
    std::int64_t d = eta.order();
    std::int64_t n = d <= 2 ? p : p * d;
    std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
    for (auto& x : k.units()) {
        RootOfUnity a = psi(x);
        RootOfUnity m = eta(x);
        if (d <= 2) {
            acc[static_cast<std::size_t>(a.exponent() * (n / a.order()))] += m.as_sign();
        } else {
            RootOfUnity z = a * m;
            acc[static_cast<std::size_t>(z.exponent() * (n / z.order()))] += 1;
        }
    }
    return CyclotomicInteger::from_exponent_counts(n, acc);
}

LambdaValue lambda_quadratic_detail(ExtensionKind kind, const AdditiveCharacter& psi) {
    if (kind == ExtensionKind::unramified) return {RootOfUnity::sign(-1), 0.0};
    if (!psi.scale().valid() || psi.is_trivial()) throw DomainError("ramified lambda needs a nontrivial character");
    const FiniteField& k = psi.field();
    auto kp = k.shared_from_this();
    CyclotomicInteger g = gauss_sum(MultiplicativeCharacter::quadratic(kp), psi);
    int eps = quadratic_symbol(-1, k.prime_power());
    if (g * g != CyclotomicInteger::integer(g.conductor(), eps * k.size())) {
        throw ConsistencyError("quadratic Gauss sum fails g^2 = (-1/q) q");
    }
    // g / sqrt(q) is +-1 when eps = 1 and +-i when eps = -1.
    std::complex<double> z = g.to_complex() / std::sqrt(static_cast<double>(k.size()));
    RootOfUnity cand = eps == 1 ? RootOfUnity::one() : RootOfUnity::i();
    double r_plus = std::abs(z - cand.to_complex());
    double r_minus = std::abs(z + cand.to_complex());
    LambdaValue out;
    if (r_plus <= r_minus) {
        out = {cand, r_plus};
    } else {
        out = {cand * RootOfUnity::sign(-1), r_minus};
    }
    if (out.residual >= kLambdaSnapTolerance) throw ConsistencyError("lambda snap residual too large");
    return out;
}

RootOfUnity lambda_quadratic(ExtensionKind kind, const AdditiveCharacter& psi) {
    return lambda_quadratic_detail(kind, psi).value;
}

}  // namespace epikit
