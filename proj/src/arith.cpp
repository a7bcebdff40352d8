#include "epikit/arith.hpp"

#include <numeric>

namespace epikit {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::optional<std::pair<std::uint64_t, int>> prime_power_split(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto fac = factorize(q);
    if (fac.size() != 1) return std::nullopt;
    return fac.front();
}

int multiplicative_order(std::int64_t q, std::int64_t n) {
    if (n <= 0) throw DomainError("modulus must be positive");
    if (std::gcd(mod(q, n), n) != 1) throw DomainError("q must be a unit modulo n");
    std::int64_t x = mod(q, n);
    std::int64_t one = 1 % n;
    int f = 1;
    while (x != one) {
        x = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(mod(q, n)),
                                             static_cast<std::uint64_t>(n)));
        ++f;
    }
    return f;
}

int jacobi(std::int64_t a, std::int64_t n) {
    if (n <= 0 || n % 2 == 0) throw DomainError("Jacobi symbol needs an odd positive modulus");
    a = mod(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) throw DomainError("integer power overflows 64 bits");
    }
    return r;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

}  // namespace epikit
