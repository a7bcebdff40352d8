#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

namespace epikit {

// exp(2 pi i * exponent / order), always kept in lowest terms so that
// equality of values is equality of fields.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::int64_t order, std::int64_t exponent);

    static RootOfUnity one() { return {}; }
    static RootOfUnity sign(int s);
    static RootOfUnity i() { return {4, 1}; }

    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return exponent_; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity operator/(const RootOfUnity& o) const { return *this * o.inverse(); }
    RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }
    RootOfUnity inverse() const { return {order_, -exponent_}; }
    RootOfUnity pow(std::int64_t k) const;

    // The unique root whose n-th power is this one and whose exponent is
    // exponent/n in the order n*order.
    RootOfUnity nth_root(std::int64_t n) const { return {order_ * n, exponent_}; }

    bool operator==(const RootOfUnity& o) const { return order_ == o.order_ && exponent_ == o.exponent_; }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    bool is_sign() const { return order_ <= 2; }
    // +1 or -1; throws if the value is not real.
    int as_sign() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& z);

}  // namespace epikit
