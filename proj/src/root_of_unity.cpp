#include "epikit/root_of_unity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "epikit/arith.hpp"

namespace epikit {

RootOfUnity::RootOfUnity(std::int64_t order, std::int64_t exponent) {
    if (order <= 0) throw DomainError("root of unity order must be positive");
    exponent = mod(exponent, order);
    std::int64_t g = std::gcd(exponent, order);
    if (exponent == 0) g = order;
    order_ = order / g;
    exponent_ = exponent / g;
}

RootOfUnity RootOfUnity::sign(int s) {
    if (s == 1) return {};
    if (s == -1) return {2, 1};
    throw DomainError("sign must be +1 or -1");
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    std::int64_t n = std::lcm(order_, o.order_);
    return {n, exponent_ * (n / order_) + o.exponent_ * (n / o.order_)};
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
    std::int64_t e = static_cast<std::int64_t>(
        mulmod(static_cast<std::uint64_t>(exponent_), static_cast<std::uint64_t>(mod(k, order_)),
               static_cast<std::uint64_t>(order_)));
    return {order_, e};
}

int RootOfUnity::as_sign() const {
    if (order_ == 1) return 1;
    if (order_ == 2) return -1;
    throw ConsistencyError("value " + to_string() + " is not a sign");
}

std::complex<double> RootOfUnity::to_complex() const {
    double t = 2.0 * std::numbers::pi * static_cast<double>(exponent_) / static_cast<double>(order_);
    return {std::cos(t), std::sin(t)};
}

std::string RootOfUnity::to_string() const {
    if (order_ == 1) return "1";
    if (order_ == 2) return "-1";
    if (order_ == 4) return exponent_ == 1 ? "i" : "-i";
    return "z" + std::to_string(order_) + "^" + std::to_string(exponent_);
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z) { return os << z.to_string(); }

}  // namespace epikit
