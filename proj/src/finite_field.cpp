#include "epikit/finite_field.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#include "epikit/arith.hpp"

namespace epikit {

namespace {

constexpr std::int64_t kTableLimit = std::int64_t{1} << 20;

using Poly = std::vector<std::int64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over F_p (b nonzero).
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
    trim(a);
    std::size_t db = b.size() - 1;
    std::int64_t lead_inv = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(b.back()), p - 2, p));
    while (a.size() >= b.size()) {
        std::int64_t c = mod(a.back() * lead_inv, p);
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_rem(r, m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::int64_t p) {
    Poly r{1};
    base = poly_rem(base, m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's irreducibility test for a monic polynomial of degree d.
bool is_irreducible(const Poly& f, std::int64_t p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    Poly x{0, 1};
    // frob[k] = x^(p^k) mod f
    std::vector<Poly> frob{poly_rem(x, f, p)};
    for (int k = 1; k <= d; ++k) frob.push_back(poly_powmod(frob.back(), static_cast<std::uint64_t>(p), f, p));
    Poly diff = frob[static_cast<std::size_t>(d)];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod(diff[1] - 1, p);
    trim(diff);
    if (!diff.empty()) return false;
    for (auto [r, mult] : factorize(static_cast<std::uint64_t>(d))) {
        Poly g = frob[static_cast<std::size_t>(d / static_cast<int>(r))];
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = mod(g[1] - 1, p);
        trim(g);
        Poly h = poly_gcd(f, g, p);
        if (h.size() != 1) return false;
    }
    return true;
}

}  // namespace

PrimePower PrimePower::make(std::int64_t p, int f) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError("p must be prime");
    if (p == 2) throw DomainError("p must be odd");
    if (f < 1) throw DomainError("field degree must be positive");
    return {p, f, ipow(p, f)};
}

PrimePower PrimePower::from_q(std::int64_t q) {
    auto split = prime_power_split(static_cast<std::uint64_t>(q < 0 ? 0 : q));
    if (!split) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
    return make(static_cast<std::int64_t>(split->first), split->second);
}

FiniteField::FiniteField(std::int64_t p, int f) : p_(p), f_(f), q_(ipow(p, f)) {
    PrimePower::make(p, f);
    // least monic irreducible of degree f
    for (std::int64_t tail = 0;; ++tail) {
        Poly cand(static_cast<std::size_t>(f) + 1, 0);
        std::int64_t t = tail;
        for (int i = 0; i < f; ++i) {
            cand[static_cast<std::size_t>(i)] = t % p;
            t /= p;
        }
        cand[static_cast<std::size_t>(f)] = 1;
        if (f == 1 || is_irreducible(cand, p)) {
            modulus_ = cand;
            break;
        }
    }
    for (int j = 0; j < f; ++j) {
        Code xj = static_cast<Code>(ipow(p, j));
        std::int64_t tr = 0;
        Code y = xj;
        for (int i = 0; i < f; ++i) {
            tr = (tr + static_cast<std::int64_t>(y % static_cast<Code>(p))) % p;
            y = pow_slow(y, static_cast<std::uint64_t>(p));
        }
        basis_trace_.push_back(tr);
    }
    unit_factors_ = factorize(static_cast<std::uint64_t>(q_ - 1));
    for (Code c = 1; c < static_cast<Code>(q_); ++c) {
        bool gen = true;
        for (auto [l, k] : unit_factors_) {
            if (pow_slow(c, static_cast<std::uint64_t>(q_ - 1) / l) == 1) {
                gen = false;
                break;
            }
        }
        if (gen) {
            generator_ = c;
            break;
        }
    }
    if (q_ <= kTableLimit) {
        exp_table_.resize(static_cast<std::size_t>(q_ - 1));
        log_table_.assign(static_cast<std::size_t>(q_), -1);
        Code x = 1;
        for (std::int64_t i = 0; i < q_ - 1; ++i) {
            exp_table_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x);
            log_table_[x] = i;
            x = mul_slow(x, generator_);
        }
    }
}

std::vector<std::int64_t> FiniteField::digits(Code a) const {
    std::vector<std::int64_t> d(static_cast<std::size_t>(f_));
    for (int i = 0; i < f_; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(a % static_cast<Code>(p_));
        a /= static_cast<Code>(p_);
    }
    return d;
}

FiniteField::Code FiniteField::encode(const std::vector<std::int64_t>& d) const {
    Code c = 0;
    for (int i = f_ - 1; i >= 0; --i) {
        std::int64_t v = static_cast<std::size_t>(i) < d.size() ? mod(d[static_cast<std::size_t>(i)], p_) : 0;
        c = c * static_cast<Code>(p_) + static_cast<Code>(v);
    }
    return c;
}

FiniteField::Code FiniteField::add(Code a, Code b) const {
    if (f_ == 1) return (a + b) % static_cast<Code>(p_);
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < f_; ++i) da[static_cast<std::size_t>(i)] += db[static_cast<std::size_t>(i)];
    return encode(da);
}

FiniteField::Code FiniteField::neg(Code a) const {
    auto da = digits(a);
    for (auto& v : da) v = -v;
    return encode(da);
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

std::vector<std::int64_t> FiniteField::poly_mul(const std::vector<std::int64_t>& a,
                                                const std::vector<std::int64_t>& b) const {
    return poly_mulmod(a, b, modulus_, p_);
}

FiniteField::Code FiniteField::mul_slow(Code a, Code b) const { return encode(poly_mul(digits(a), digits(b))); }

FiniteField::Code FiniteField::pow_slow(Code a, std::uint64_t e) const {
    Code r = 1;
    while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

FiniteField::Code FiniteField::mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (exp_table_.empty()) return mul_slow(a, b);
    std::int64_t s = log_table_[a] + log_table_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_table_[static_cast<std::size_t>(s)];
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
    if (exp_table_.empty()) return pow_slow(a, e);
    if (a == 0) return e == 0 ? 1 : 0;
    auto s = mulmod(static_cast<std::uint64_t>(log_table_[a]), e % static_cast<std::uint64_t>(q_ - 1),
                    static_cast<std::uint64_t>(q_ - 1));
    return exp_table_[s];
}

FiniteField::Code FiniteField::inv(Code a) const {
    if (a == 0) throw DomainError("division by zero in finite field");
    return pow(a, static_cast<std::uint64_t>(q_ - 2));
}

FiniteField::Code FiniteField::from_int(std::int64_t v) const { return static_cast<Code>(mod(v, p_)); }

std::int64_t FiniteField::trace(Code a) const {
    auto d = digits(a);
    std::int64_t t = 0;
    for (int i = 0; i < f_; ++i) t = (t + d[static_cast<std::size_t>(i)] * basis_trace_[static_cast<std::size_t>(i)]) % p_;
    return t;
}

std::int64_t FiniteField::norm(Code a) const {
    Code n = pow(a, static_cast<std::uint64_t>((q_ - 1) / (p_ - 1)));
    if (n >= static_cast<Code>(p_)) throw ConsistencyError("norm left the prime field");
    return static_cast<std::int64_t>(n);
}

std::uint64_t FiniteField::log(Code a) const {
    if (a == 0) throw DomainError("logarithm of zero");
    if (exp_table_.empty()) throw DomainError("discrete logarithm needs a tabulated field");
    return static_cast<std::uint64_t>(log_table_[a]);
}

std::uint64_t FiniteField::order_of(Code a) const {
    if (a == 0) throw DomainError("zero has no multiplicative order");
    std::uint64_t n = static_cast<std::uint64_t>(q_ - 1);
    for (auto [l, k] : unit_factors_) {
        for (int i = 0; i < k; ++i) {
            if (pow(a, n / l) == 1) n /= l;
            else break;
        }
    }
    return n;
}

FiniteFieldElement FiniteField::element(Code c) const {
    if (c >= static_cast<Code>(q_)) throw DomainError("element code out of range");
    return {shared_from_this(), c};
}
FiniteFieldElement FiniteField::zero() const { return element(0); }
FiniteFieldElement FiniteField::one() const { return element(1); }
FiniteFieldElement FiniteField::generator() const { return element(generator_); }
FiniteFieldElement FiniteField::from_integer(std::int64_t v) const { return element(from_int(v)); }

std::vector<FiniteFieldElement> FiniteField::elements() const {
    std::vector<FiniteFieldElement> out;
    for (Code c = 0; c < static_cast<Code>(q_); ++c) out.push_back(element(c));
    return out;
}

std::vector<FiniteFieldElement> FiniteField::units() const {
    std::vector<FiniteFieldElement> out;
    for (Code c = 1; c < static_cast<Code>(q_); ++c) out.push_back(element(c));
    return out;
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "F_" << q_ << " = F_" << p_ << "[x]/(";
    for (int i = f_; i >= 0; --i) {
        std::int64_t c = modulus_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (i != f_) os << " + ";
        if (i == 0 || c != 1) os << c;
        if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << "), generator code " << generator_;
    return os.str();
}

void FiniteFieldElement::check_same(const FiniteFieldElement& o) const {
    if (!field_ || !o.field_) throw DomainError("uninitialised field element");
    if (field_.get() != o.field_.get() && !(field_->p() == o.field_->p() && field_->degree() == o.field_->degree()))
        throw DomainError("field elements from different fields");
}

FiniteFieldElement FiniteFieldElement::operator+(const FiniteFieldElement& o) const {
    check_same(o);
    return {field_, field_->add(code_, o.code_)};
}
FiniteFieldElement FiniteFieldElement::operator-(const FiniteFieldElement& o) const {
    check_same(o);
    return {field_, field_->sub(code_, o.code_)};
}
FiniteFieldElement FiniteFieldElement::operator*(const FiniteFieldElement& o) const {
    check_same(o);
    return {field_, field_->mul(code_, o.code_)};
}
FiniteFieldElement FiniteFieldElement::operator/(const FiniteFieldElement& o) const {
    check_same(o);
    return {field_, field_->mul(code_, field_->inv(o.code_))};
}
FiniteFieldElement FiniteFieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FiniteFieldElement FiniteFieldElement::inverse() const { return {field_, field_->inv(code_)}; }
FiniteFieldElement FiniteFieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
bool FiniteFieldElement::operator==(const FiniteFieldElement& o) const {
    check_same(o);
    return code_ == o.code_;
}

std::string FiniteFieldElement::to_string() const {
    if (!field_) return "<none>";
    if (field_->degree() == 1) return std::to_string(code_);
    auto d = coeffs();
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

std::int64_t max_field_size() {
    if (const char* env = std::getenv("EPIKIT_MAX_FIELD")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return kTableLimit;
}

std::shared_ptr<const FiniteField> build_field_bounded(std::int64_t p, int f, std::int64_t bound) {
    PrimePower pp = PrimePower::make(p, f);
    if (pp.q > bound) {
        throw DomainError("field of size " + std::to_string(pp.q) + " exceeds the bound " + std::to_string(bound));
    }
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FiniteField>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({p, f});
        if (it != cache.end()) return it->second;
    }
    auto field = std::make_shared<const FiniteField>(p, f);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(p, f), field).first->second;
}

std::shared_ptr<const FiniteField> build_field(std::int64_t p, int f) {
    return build_field_bounded(p, f, max_field_size());
}

std::shared_ptr<const FiniteField> build_field(const PrimePower& pp) { return build_field(pp.p, pp.f); }

FiniteFieldElement embed(const FiniteFieldElement& x, const std::shared_ptr<const FiniteField>& big) {
    const FiniteField& small = x.field();
    if (small.p() != big->p() || big->degree() % small.degree() != 0)
        throw DomainError("no embedding between these fields");
    if (small.degree() == 1) return big->from_integer(static_cast<std::int64_t>(x.code()));
    // Roots of the small modulus lie in the subfield of order q, which is
    // {0} together with the powers of h = G^((Q-1)/(q-1)).
    std::uint64_t Q = static_cast<std::uint64_t>(big->size());
    std::uint64_t q = static_cast<std::uint64_t>(small.size());
    FiniteField::Code h = big->pow(big->generator_code(), (Q - 1) / (q - 1));
    const auto& m = small.modulus();
    FiniteField::Code best = 0;
    bool found = false;
    FiniteField::Code r = 1;
    for (std::uint64_t j = 0; j < q - 1; ++j, r = big->mul(r, h)) {
        FiniteField::Code acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) acc = big->add(big->mul(acc, r), big->from_int(m[i]));
        if (acc == 0 && (!found || r < best)) {
            best = r;
            found = true;
        }
    }
    if (!found) throw ConsistencyError("defining polynomial has no root in the extension");
    auto d = x.coeffs();
    FiniteField::Code acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = big->add(big->mul(acc, best), big->from_int(d[i]));
    return big->element(acc);
}

}  // namespace epikit
