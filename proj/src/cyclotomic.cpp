#include "epikit/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "epikit/arith.hpp"

namespace epikit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("cyclotomic coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("cyclotomic coefficient overflow");
    return r;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quo(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        std::int64_t c = num[i];
        quo[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return quo;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
    static std::mutex mu;
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    if (n <= 0) throw DomainError("cyclotomic index must be positive");
    {
        std::lock_guard lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicInteger::CyclotomicInteger(std::int64_t n) : n_(n) {
    c_.assign(cyclotomic_polynomial(n).size() - 1, 0);
}

CyclotomicInteger CyclotomicInteger::reduce(std::int64_t n, std::vector<std::int64_t> poly) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t d = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > d;) {
        std::int64_t c = poly[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) {
            poly[i - d + j] = checked_add(poly[i - d + j], -checked_mul(c, phi[j]));
        }
    }
    CyclotomicInteger out(n);
    for (std::size_t j = 0; j < d && j < poly.size(); ++j) out.c_[j] = poly[j];
    return out;
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(std::int64_t n, const std::vector<std::int64_t>& acc) {
    if (static_cast<std::int64_t>(acc.size()) != n) throw DomainError("exponent vector must have length N");
    return reduce(n, acc);
}

CyclotomicInteger CyclotomicInteger::integer(std::int64_t n, std::int64_t value) {
    CyclotomicInteger out(n);
    out.c_[0] = value;
    return out;
}

CyclotomicInteger CyclotomicInteger::root(std::int64_t n, const RootOfUnity& z) {
    if (n % z.order() != 0) throw DomainError("root of unity does not lie in this cyclotomic ring");
    std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
    acc[static_cast<std::size_t>(z.exponent() * (n / z.order()))] = 1;
    return reduce(n, acc);
}

std::vector<std::int64_t> CyclotomicInteger::prime_basis() const {
    if (!is_prime(static_cast<std::uint64_t>(n_))) throw DomainError("prime basis needs a prime conductor");
    // 1 = -(zeta + ... + zeta^(p-1))
    std::vector<std::int64_t> out(static_cast<std::size_t>(n_ - 1), 0);
    for (std::size_t j = 1; j < c_.size(); ++j) out[j - 1] = c_[j];
    out[static_cast<std::size_t>(n_ - 2)] = 0;
    for (auto& v : out) v -= c_[0];
    return out;
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
    if (n_ != o.n_) throw DomainError("cyclotomic conductors differ");
    CyclotomicInteger out(n_);
    for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = checked_add(c_[j], o.c_[j]);
    return out;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    CyclotomicInteger out(n_);
    for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = -c_[j];
    return out;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const { return *this + (-o); }

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
    if (n_ != o.n_) throw DomainError("cyclotomic conductors differ");
    std::vector<std::int64_t> prod(c_.size() * 2, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] = checked_add(prod[i + j], checked_mul(c_[i], o.c_[j]));
        }
    }
    return reduce(n_, prod);
}

CyclotomicInteger CyclotomicInteger::galois(std::int64_t k) const {
    k = mod(k, n_);
    if (std::gcd(k, n_) != 1) throw DomainError("Galois twist needs a unit");
    std::vector<std::int64_t> acc(static_cast<std::size_t>(n_), 0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        acc[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) * k, n_))] += c_[j];
    }
    return reduce(n_, acc);
}

std::int64_t CyclotomicInteger::norm() const {
    CyclotomicInteger prod = integer(n_, 1);
    for (std::int64_t k = 1; k <= n_; ++k) {
        if (std::gcd(k, n_) == 1) prod = prod * galois(k);
    }
    if (!prod.is_integer()) throw ConsistencyError("norm is not rational");
    return prod.c_[0];
}

CyclotomicInteger CyclotomicInteger::lift(std::int64_t m) const {
    if (m % n_ != 0) throw DomainError("lift target must be a multiple of the conductor");
    std::vector<std::int64_t> acc(static_cast<std::size_t>(m), 0);
    for (std::size_t j = 0; j < c_.size(); ++j) acc[j * static_cast<std::size_t>(m / n_)] += c_[j];
    return reduce(m, acc);
}

bool CyclotomicInteger::is_integer() const {
    for (std::size_t j = 1; j < c_.size(); ++j) {
        if (c_[j] != 0) return false;
    }
    return true;
}

std::int64_t CyclotomicInteger::integer_value() const {
    if (!is_integer()) throw DomainError("cyclotomic integer is not rational");
    return c_.empty() ? 0 : c_[0];
}

std::complex<double> CyclotomicInteger::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
        z += static_cast<double>(c_[j]) * std::complex<double>(std::cos(t), std::sin(t));
    }
    return z;
}

std::string CyclotomicInteger::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << (c_[j] > 0 ? " + " : " - ");
        else if (c_[j] < 0) os << "-";
        std::int64_t a = c_[j] < 0 ? -c_[j] : c_[j];
        if (j == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z" << n_ << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace epikit
