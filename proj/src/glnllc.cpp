#include "epikit/glnllc.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace epikit {

// ---------------------------------------------------------------- Gamma

GLnGamma::GLnGamma(int n, const PrimePower& q) : n_(n), q_(q) {
    if (n < 2) throw DomainError("degree n must be at least 2");
    if (q_.p == 2) throw DomainError("residue characteristic must be odd");
    if (n % q_.p == 0) throw DomainError("residue characteristic must not divide n");
    f_ = multiplicative_order(mod(q_.q, n), n);
    // Q s Q^{-1} = s^q
    GammaElt lhs = multiply(multiply(Q(), s()), inverse(Q()));
    if (lhs != normalize({q_.q, 0})) throw ConsistencyError("Q s Q^-1 != s^q");
}

GammaElt GLnGamma::normalize(GammaElt g) const { return {mod(g.x, n_), g.y}; }

std::int64_t GLnGamma::q_power(std::int64_t y) const {
    return powmod(mod(q_.q, n_), static_cast<std::uint64_t>(mod(y, f_)), n_);
}

GammaElt GLnGamma::multiply(const GammaElt& a, const GammaElt& b) const {
    return {mod(a.x + mulmod(q_power(a.y), mod(b.x, n_), n_), n_), a.y + b.y};
}

GammaElt GLnGamma::inverse(const GammaElt& a) const {
    return {mod(-mulmod(q_power(-a.y), mod(a.x, n_), n_), n_), -a.y};
}

GammaElt GLnGamma::power(const GammaElt& a, std::int64_t k) const {
    GammaElt base = k < 0 ? inverse(a) : a;
    GammaElt out = identity();
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
    return out;
}

std::int64_t GLnGamma::act(const GammaElt& g, std::int64_t i) const {
    return mod(mulmod(q_power(g.y), mod(i, n_), n_) + g.x, n_);
}

std::pair<std::int64_t, std::int64_t> GLnGamma::act_root(const GammaElt& g, std::pair<std::int64_t, std::int64_t> r) const {
    return {act(g, r.first), act(g, r.second)};
}

std::vector<GammaElt> GLnGamma::finite_elements() const {
    std::vector<GammaElt> out;
    for (std::int64_t y = 0; y < f_; ++y)
        for (std::int64_t x = 0; x < n_; ++x) out.push_back({x, y});
    return out;
}

GLnGamma build_gamma(int n, std::int64_t q) { return GLnGamma(n, PrimePower::from_q(q)); }

// ---------------------------------------------------------------- dagger orbits

std::string to_string(DaggerType t) {
    switch (t) {
        case DaggerType::asymmetric: return "asymmetric";
        case DaggerType::symmetric_nonsingleton: return "symmetric_nonsingleton";
        case DaggerType::symmetric_singleton: return "symmetric_singleton";
    }
    return "?";
}

const DaggerOrbit& DaggerData::orbit_of(std::int64_t a) const {
    for (const auto& o : orbits)
        if (std::find(o.members.begin(), o.members.end(), a) != o.members.end()) return o;
    throw DomainError("element is not in Z/nZ minus 0");
}

DaggerData dagger_orbits(int n, std::int64_t q) {
    GLnGamma g = build_gamma(n, q);
    std::int64_t qn = mod(q, n);
    DaggerData d;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int64_t a = 1; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        DaggerOrbit o;
        std::int64_t b = a;
        do {
            o.members.push_back(b);
            seen[static_cast<std::size_t>(b)] = true;
            b = mulmod(b, qn, n);
        } while (b != a);
        o.representative = a;
        bool symmetric = std::find(o.members.begin(), o.members.end(), n - a) != o.members.end();
        if (!symmetric) {
            o.type = DaggerType::asymmetric;
            o.m = static_cast<std::int64_t>(o.members.size());
        } else if (o.members.size() == 1) {
            o.type = DaggerType::symmetric_singleton;
            o.m = 1;
        } else {
            o.type = DaggerType::symmetric_nonsingleton;
            o.m = 1;
            while (o.members[static_cast<std::size_t>(o.m)] != n - a) ++o.m;
            if (2 * o.m != static_cast<std::int64_t>(o.members.size())) throw ConsistencyError("symmetric orbit of odd size");
        }
        d.orbits.push_back(o);
    }
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (const auto& o : d.orbits) {
        if (covered[static_cast<std::size_t>(o.representative)]) continue;
        d.xi.push_back(o.representative);
        for (std::int64_t b : o.members) {
            covered[static_cast<std::size_t>(b)] = true;
            covered[static_cast<std::size_t>(n - b)] = true;
        }
    }
    if (n % 2 == 0) {
        if (d.orbit_of(n / 2).type != DaggerType::symmetric_singleton) throw ConsistencyError("n/2 is not a singleton orbit");
    }
    (void)g;
    return d;
}

std::vector<GammaElt> gamma_dot(const GLnGamma& g, const DaggerData& d, std::int64_t a) {
    const DaggerOrbit& o = d.orbit_of(a);
    std::vector<GammaElt> out;
    if (o.type == DaggerType::symmetric_singleton) {
        for (std::int64_t k = 0; k < g.n() / 2; ++k) out.push_back({k, 0});
    } else {
        for (std::int64_t t = 0; t < o.m; ++t)
            for (std::int64_t k = 0; k < g.n(); ++k) out.push_back({k, t});
    }
    return out;
}

namespace {

std::set<RootPair> gamma_orbit(const GLnGamma& g, const RootPair& r) {
    std::set<RootPair> out;
    for (const auto& h : g.finite_elements()) out.insert(g.act_root(h, r));
    return out;
}

}  // namespace

std::map<RootPair, int> dagger_gauge(const GLnGamma& g, const DaggerData& d, std::int64_t a) {
    std::map<RootPair, int> p;
    for (const auto& h : gamma_dot(g, d, a)) {
        RootPair r = g.act_root(h, eta(a));
        auto [it, fresh] = p.emplace(r, 1);
        if (!fresh || p.count(root_negative(r))) throw ConsistencyError("representatives overlap on the orbit");
        p.emplace(root_negative(r), -1);
    }
    std::set<RootPair> full = gamma_orbit(g, eta(a));
    for (const auto& r : gamma_orbit(g, root_negative(eta(a)))) full.insert(r);
    if (full.size() != p.size()) throw ConsistencyError("gauge does not cover the orbit");
    for (const auto& r : full)
        if (!p.count(r)) throw ConsistencyError("gauge does not cover the orbit");
    return p;
}

// ---------------------------------------------------------------- sgn

int sgn_q_mod_n(int n, std::int64_t q) {
    if (n < 1) throw DomainError("n must be positive");
    if (std::gcd(mod(q, n), static_cast<std::int64_t>(n)) != 1 && n > 1) throw DomainError("q must be prime to n");
    std::int64_t qn = mod(q, n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int even_cycles = 0;
    int even_symmetric = 0;
    for (std::int64_t a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        std::int64_t len = 0;
        bool symmetric = false;
        std::int64_t b = a;
        do {
            seen[static_cast<std::size_t>(b)] = true;
            if (b == mod(-a, n)) symmetric = true;
            b = mulmod(b, qn, n);
            ++len;
        } while (b != a);
        if (len % 2 == 0) {
            ++even_cycles;
            if (symmetric) ++even_symmetric;
        }
    }
    int sgn = even_cycles % 2 == 0 ? 1 : -1;
    if ((even_symmetric % 2 == 0 ? 1 : -1) != sgn) throw ConsistencyError("sgn disagrees with the symmetric orbit count");
    if (n % 2 == 1 && n > 1 && jacobi(qn, n) != sgn) throw ConsistencyError("sgn disagrees with the Jacobi symbol");
    return sgn;
}

// ---------------------------------------------------------------- s_bp

namespace {

SbpValue s_bp_impl(const GLnGamma& g, const DaggerData& d, std::int64_t a, const GammaElt& sigma) {
    auto p = dagger_gauge(g, d, a);
    GammaElt inv = g.inverse(sigma);
    SbpValue out;
    out.diagonal.assign(static_cast<std::size_t>(g.n()), 1);
    for (const auto& [lam, pl] : p) {
        if (!root_positive(lam)) continue;
        RootPair mu = g.act_root(inv, lam);
        int pm = p.at(mu);
        bool c1 = !root_positive(mu) && pl == 1 && pm == 1;
        bool c2 = root_positive(mu) && pl == -1 && pm == 1;
        if (c1 || c2) {
            out.diagonal[static_cast<std::size_t>(lam.first)] *= -1;
            out.diagonal[static_cast<std::size_t>(lam.second)] *= -1;
        }
    }
    out.chi0 = out.diagonal[0];
    return out;
}

void require_xi(const DaggerData& d, std::int64_t a) {
    if (std::find(d.xi.begin(), d.xi.end(), a) == d.xi.end()) throw DomainError("a is not a chosen representative");
}

}  // namespace

SbpValue s_bp_value(int n, std::int64_t q, std::int64_t a, const GammaElt& sigma) {
    GLnGamma g = build_gamma(n, q);
    DaggerData d = dagger_orbits(n, q);
    require_xi(d, a);
    return s_bp_impl(g, d, a, g.normalize(sigma));
}

int s_bp_closed(int n, std::int64_t q, std::int64_t a, const GammaElt& sigma) {
    DaggerData d = dagger_orbits(n, q);
    require_xi(d, a);
    const DaggerOrbit& o = d.orbit_of(a);
    GammaElt sg = {mod(sigma.x, n), sigma.y};
    if (sg == GammaElt{0, 1}) return o.type == DaggerType::symmetric_nonsingleton ? -1 : 1;
    if (sg == GammaElt{1, 0}) {
        if (o.type == DaggerType::symmetric_singleton) return 1;
        return o.m % 2 == 0 ? 1 : -1;
    }
    throw DomainError("closed form is only available at s and Q");
}

// ---------------------------------------------------------------- truncated characters

RootOfUnity TruncatedEChar::operator()(std::int64_t v, const FiniteFieldElement& u, const FiniteFieldElement& y) const {
    RootOfUnity out = at_omega.pow(v) * units(u);
    if (!wild.is_zero()) out *= AdditiveCharacter(wild)(y);
    return out;
}

TruncatedEChar TruncatedEChar::operator*(const TruncatedEChar& o) const {
    return {at_omega * o.at_omega, units * o.units, wild + o.wild};
}

TruncatedEChar TruncatedEChar::inverse() const { return {at_omega.inverse(), units.inverse(), -wild}; }

bool TruncatedEChar::operator==(const TruncatedEChar& o) const {
    return at_omega == o.at_omega && units == o.units && wild == o.wild;
}

std::string TruncatedEChar::to_string() const {
    std::ostringstream os;
    os << "(omega -> " << at_omega.to_string() << ", units exponent " << mod(units.exponent(), units.field_ptr()->size() - 1)
       << ", wild scale " << wild.to_string() << ")";
    return os.str();
}

// ---------------------------------------------------------------- admissible pairs

AdmissiblePairData AdmissiblePairData::make(int n, std::int64_t q, std::int64_t c, RootOfUnity xi_omega,
                                            std::int64_t tame_exponent) {
    AdmissiblePairData pair;
    pair.n = n;
    pair.q = PrimePower::from_q(q);
    if (pair.q.p == 2) throw DomainError("residue characteristic must be odd");
    pair.k = build_field(pair.q);
    pair.xi_omega = xi_omega;
    pair.tame = MultiplicativeCharacter(pair.k, tame_exponent);
    pair.c = pair.k->from_integer(c);
    pair.validate();
    return pair;
}

void AdmissiblePairData::validate() const {
    if (n < 2) throw DomainError("degree n must be at least 2");
    if (q.p == 2) throw DomainError("residue characteristic must be odd");
    if (n % q.p == 0) throw DomainError("residue characteristic must not divide n");
    if (!k || k->size() != q.q) throw DomainError("residue field does not match q");
    if (!c.valid() || c.field_ptr() != k) throw DomainError("wild scale must lie in the residue field");
    if (c.is_zero()) throw DomainError("wild scale must be nonzero (depth exactly 1/n)");
    if (tame.field_ptr() != k) throw DomainError("tame part must be a character of the residue field");
}

TruncatedEChar AdmissiblePairData::xi() const { return {xi_omega, tame, c}; }

AdmissiblePairData AdmissiblePairData::rebase_uniformizer(const FiniteFieldElement& u) const {
    if (!u.valid() || u.is_zero()) throw DomainError("uniformizer scaling must be a unit");
    AdmissiblePairData out = *this;
    FiniteFieldElement uk = u.field_ptr() == k ? u : embed(u, k);
    out.xi_omega = xi_omega * tame(uk);
    out.c = c * uk;
    return out;
}

// ---------------------------------------------------------------- chi-data for GL_n

GaloisRootAction gln_root_action(int n, std::int64_t q) {
    GLnGamma g = build_gamma(n, q);
    std::vector<int> cyc(static_cast<std::size_t>(n)), frob(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cyc[static_cast<std::size_t>(i)] = static_cast<int>(g.act(g.s(), i));
        frob[static_cast<std::size_t>(i)] = static_cast<int>(g.act(g.Q(), i));
    }
    IntMatrix c = permutation_matrix(cyc);
    return GaloisRootAction(RootDatum::type_a(n), {c, permutation_matrix(frob)}, {c}, 1, true);
}

int gln_root_index(int n, const RootPair& r) {
    auto i = static_cast<int>(r.first), j = static_cast<int>(r.second);
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw DomainError("not a root of GL_n");
    return i * (n - 1) + (j < i ? j : j - 1);
}

RootOfUnity GLnChiData::singleton(std::int64_t v, const std::optional<FiniteFieldElement>& u) const {
    if (!has_singleton) throw DomainError("missing chi-data for the singleton orbit");
    RootOfUnity out = singleton_at_omega.pow(v);
    if (u) out *= RootOfUnity::sign(quadratic_symbol(*u));
    return out;
}

GLnChiData gln_chi_data(const AdmissiblePairData& pair) {
    pair.validate();
    GaloisRootAction action = gln_root_action(pair.n, pair.q.q);
    WildRestriction w(pair.k);
    GLnChiData out;
    if (pair.n % 2 == 0) {
        // xi_alpha(1 + omega y) = xi(1 + 2 omega y)
        int root = gln_root_index(pair.n, eta(pair.n / 2));
        w.set(root, pair.c + pair.c);
        out.family = chi_data_build(action, w);
        for (const auto& [k, x] : out.family.data) {
            if (x.kind != OrbitKind::symmetric_ramified) continue;
            if (x.anchor != root) throw ConsistencyError("ramified chi-datum not anchored at eta(n/2)");
            out.singleton_at_omega = x.at_uniformizer;
            out.has_singleton = true;
        }
        if (!out.has_singleton) throw ConsistencyError("no inertially symmetric orbit for even n");
    } else {
        out.family = chi_data_build(action, w);
    }
    if (!out.family.report.ok()) throw ConsistencyError("chi-data axioms fail: " + out.family.report.failures.front());
    return out;
}

// ---------------------------------------------------------------- r_pxa

namespace {

RootOfUnity r_pxa_impl(const GLnGamma& g, const DaggerData& d, std::int64_t a, const WToken& w, const GLnChiData& chi) {
    const DaggerOrbit& o = d.orbit_of(a);
    if (o.type == DaggerType::symmetric_singleton && !chi.has_singleton)
        throw DomainError("missing chi-data for the singleton orbit");
    const RootPair ea = eta(a);
    auto in_pm = [&](const GammaElt& h) {
        RootPair r = g.act_root(h, ea);
        return r == ea || r == root_negative(ea);
    };
    auto in_stab = [&](const GammaElt& h) { return g.act_root(h, ea) == ea; };
    std::vector<GammaElt> reps = gamma_dot(g, d, a);
    GammaElt sigma = g.normalize(w.image);
    GammaElt flip = g.normalize({a, o.m});  // s^a Q^m
    bool symmetric = o.type != DaggerType::asymmetric;

    RootOfUnity out = RootOfUnity::one();
    for (const auto& gi : reps) {
        RootPair lam = g.act_root(gi, ea);
        int e = (lam.first == 0 ? 1 : 0) - (lam.second == 0 ? 1 : 0);
        if (e == 0) continue;
        // u = gi^{-1} sigma gj in Gamma_{+-eta(a)}
        std::optional<GammaElt> u;
        GammaElt left = g.multiply(g.inverse(gi), sigma);
        for (const auto& gj : reps) {
            GammaElt cand = g.multiply(left, gj);
            if (!in_pm(cand)) continue;
            if (u) throw ConsistencyError("u_{k,t} is not unique");
            u = cand;
        }
        if (!u) throw ConsistencyError("u_{k,t} does not exist");
        std::optional<GammaElt> v0;
        if (in_stab(*u)) v0 = *u;
        if (symmetric) {
            GammaElt cand = g.multiply(*u, flip);
            if (in_stab(cand)) {
                if (v0) throw ConsistencyError("v_0 is not unique");
                v0 = cand;
            }
        }
        if (!v0) throw ConsistencyError("v_0 does not exist");
        if (v0->x != 0) throw ConsistencyError("v_0 has an inertial component");
        RootOfUnity val = RootOfUnity::one();
        switch (o.type) {
            case DaggerType::asymmetric: break;
            case DaggerType::symmetric_nonsingleton:
                if (mod(v0->y, 2 * o.m) != 0) throw ConsistencyError("v_0 outside <Q^{2m}>");
                val = RootOfUnity::sign(mod(v0->y / (2 * o.m), 2) == 0 ? 1 : -1);
                break;
            case DaggerType::symmetric_singleton: {
                // the W_E avatar enters only through the k = 0 factor, where v_0 = w
                bool avatar = w.kind != WToken::Kind::gamma && gi == g.identity();
                val = chi.singleton(v0->y, avatar ? w.unit : std::nullopt);
                break;
            }
        }
        out *= val.pow(e);
    }
    return out;
}

}  // namespace

RootOfUnity r_pxa_value(int n, std::int64_t q, std::int64_t a, const WToken& w, const GLnChiData& chi) {
    GLnGamma g = build_gamma(n, q);
    DaggerData d = dagger_orbits(n, q);
    require_xi(d, a);
    return r_pxa_impl(g, d, a, w, chi);
}

// ---------------------------------------------------------------- chi_S / xi

namespace {

std::int64_t unit_exponent(const RootOfUnity& z, std::int64_t qm1) {
    if (qm1 % z.order() != 0) throw ConsistencyError("unit restriction is not a character of k^x");
    return mod(z.exponent() * (qm1 / z.order()), qm1);
}

std::vector<FiniteFieldElement> additive_basis(const FiniteField& k) {
    std::vector<FiniteFieldElement> out;
    for (int i = 0; i < k.degree(); ++i) {
        std::vector<std::int64_t> digits(static_cast<std::size_t>(k.degree()), 0);
        digits[static_cast<std::size_t>(i)] = 1;
        out.push_back(k.element(k.encode(digits)));
    }
    return out;
}

FiniteFieldElement solve_wild_scale(const FiniteField& k, const std::vector<FiniteFieldElement>& basis,
                                    const std::vector<RootOfUnity>& values) {
    bool trivial = std::all_of(values.begin(), values.end(), [](const RootOfUnity& z) { return z == RootOfUnity::one(); });
    if (trivial) return k.zero();
    for (const auto& c : k.elements()) {
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i) ok = AdditiveCharacter(c)(basis[i]) == values[i];
        if (ok) return c;
    }
    throw ConsistencyError("wild restriction is not an additive character");
}

std::vector<std::int64_t> check_reps(const DaggerData& d, int n, const std::vector<std::int64_t>& reps) {
    std::set<std::int64_t> want, got;
    for (std::int64_t a : d.xi) want.insert(a);
    for (std::int64_t a : reps) {
        if (a <= 0 || a >= n) throw DomainError("representative outside Z/nZ minus 0");
        const DaggerOrbit& o = d.orbit_of(a);
        const DaggerOrbit& neg = d.orbit_of(n - a);
        std::int64_t canon = std::min(o.representative, neg.representative);
        if (!got.insert(canon).second) throw DomainError("two representatives for one orbit");
    }
    if (got != want) throw DomainError("representatives do not cover every orbit");
    return reps;
}

}  // namespace

ChiSOverXi chi_s_over_xi(const AdmissiblePairData& pair, const std::optional<std::vector<std::int64_t>>& reps) {
    pair.validate();
    const int n = pair.n;
    const std::int64_t q = pair.q.q;
    GLnGamma g(n, pair.q);
    DaggerData d = dagger_orbits(n, q);
    std::vector<std::int64_t> xi = reps ? check_reps(d, n, *reps) : d.xi;
    GLnChiData chi = gln_chi_data(pair);
    const FiniteField& k = *pair.k;

    auto factor = [&](std::int64_t a, const WToken& w) {
        RootOfUnity s = RootOfUnity::sign(s_bp_impl(g, d, a, g.normalize(w.image)).chi0);
        return (s * r_pxa_impl(g, d, a, w, chi)).inverse();
    };
    auto product = [&](const WToken& w) {
        RootOfUnity out = RootOfUnity::one();
        for (std::int64_t a : xi) out *= factor(a, w);
        return out;
    };

    ChiSOverXi out;
    out.assembled.at_omega = product(WToken::uniformizer());
    out.assembled.units = MultiplicativeCharacter(pair.k, unit_exponent(product(WToken::unit_of(k.generator())), q - 1));
    auto basis = additive_basis(k);
    std::vector<RootOfUnity> wild_values;
    for (const auto& y : basis) wild_values.push_back(product(WToken::wild_of(y)));
    out.assembled.wild = solve_wild_scale(k, basis, wild_values);

    int sgn = sgn_q_mod_n(n, q);
    if (n % 2 == 1) {
        out.closed = {RootOfUnity::sign(sgn), MultiplicativeCharacter::trivial(pair.k), k.zero()};
    } else {
        out.closed = {RootOfUnity::sign(sgn) * chi.singleton_at_omega.inverse(), MultiplicativeCharacter::quadratic(pair.k),
                      k.zero()};
    }
    out.agree = out.closed == out.assembled;
    return out;
}

// ---------------------------------------------------------------- rectifier

LambdaTower lambda_tower_detail(int n, std::int64_t q, std::int64_t psi_scale) {
    if (n % 2 != 0) throw DomainError("lambda tower needs even n");
    PrimePower pp = PrimePower::from_q(q);
    GLnGamma g(n, pp);
    auto k = build_field(pp);
    FiniteFieldElement b = k->from_integer(psi_scale);
    if (b.is_zero()) throw DomainError("psi scale must be nonzero in k");
    LambdaTower t;
    t.sgn = sgn_q_mod_n(n, q);
    int minus_one = quadratic_symbol(-1, pp);
    t.branch = (n / 2 - 1) % 2 == 0 ? 1 : minus_one;
    // [E_2 : F] = n/2 odd: lambda_{E_2/F}^2 = 1, else (-1/q)
    int case_form = (n / 2) % 2 == 1 ? 1 : minus_one;
    if (case_form != t.branch) throw ConsistencyError("lambda tower branches disagree");
    if (t.branch != t.sgn) throw ConsistencyError("(-1/q)^{n/2-1} != sgn(q, Z/nZ)");
    // psi_{E_2}(x) = psi_F((n/2) x) on residues
    t.lambda_e_e2 = lambda_quadratic(ExtensionKind::ramified, AdditiveCharacter(k->from_integer(n / 2) * b));
    t.value = RootOfUnity::sign(t.sgn) * t.lambda_e_e2;
    return t;
}

RootOfUnity lambda_tower(int n, std::int64_t q, std::int64_t psi_scale) { return lambda_tower_detail(n, q, psi_scale).value; }

FiniteFieldElement zeta_omega_xi(const AdmissiblePairData& pair, std::int64_t psi_scale) {
    pair.validate();
    FiniteFieldElement b = pair.k->from_integer(psi_scale);
    if (b.is_zero()) throw DomainError("psi scale must be nonzero in k");
    // psi_E(x) = psi_F(n x) on residues
    return pair.c / (pair.k->from_integer(pair.n) * b);
}

RootOfUnity rectifier_value(const AdmissiblePairData& pair, std::int64_t psi_scale) {
    pair.validate();
    const std::int64_t q = pair.q.q;
    if (pair.n % 2 == 1) {
        int j = jacobi(mod(q, pair.n), pair.n);
        if (j != sgn_q_mod_n(pair.n, q)) throw ConsistencyError("Zolotarev: (q/n) != sgn(q, Z/nZ)");
        return RootOfUnity::sign(j);
    }
    int z = quadratic_symbol(zeta_omega_xi(pair, psi_scale));
    return RootOfUnity::sign(z) * lambda_tower(pair.n, q, psi_scale);
}

TruncatedEChar rectifier_character(const AdmissiblePairData& pair, std::int64_t psi_scale) {
    TruncatedEChar mu;
    mu.at_omega = rectifier_value(pair, psi_scale);
    mu.units = pair.n % 2 == 0 ? MultiplicativeCharacter::quadratic(pair.k) : MultiplicativeCharacter::trivial(pair.k);
    mu.wild = pair.k->zero();
    return mu;
}

RectiReport verify_recti(const AdmissiblePairData& pair, std::int64_t psi_scale) {
    RectiReport r;
    ChiSOverXi cx = chi_s_over_xi(pair);
    r.chi_s = pair.xi() * cx.closed;
    r.xi_mu = pair.xi() * rectifier_character(pair, psi_scale);
    r.equal = r.chi_s == r.xi_mu;
    return r;
}

// ---------------------------------------------------------------- genericity

GenericReport check_generic_detail(const AdmissiblePairData& pair) {
    GenericReport r;
    r.scale_nonzero = pair.c.valid() && !pair.c.is_zero();
    const int n = pair.n;
    GLnGamma g(n, pair.q);
    // Y_k = c zeta^k; a root (i,j) sees c (zeta^i - zeta^j)
    std::int64_t big = 1;
    bool small = true;
    for (int i = 0; i < g.f(); ++i) {
        if (big > max_field_size() / pair.q.q) {
            small = false;
            break;
        }
        big *= pair.q.q;
    }
    if (small && big <= max_field_size()) {
        auto K = build_field(pair.q.p, pair.q.f * g.f());
        FiniteFieldElement zeta = K->generator().pow(static_cast<std::uint64_t>((K->size() - 1) / n));
        std::vector<FiniteFieldElement> mu;
        for (int i = 0; i < n; ++i) mu.push_back(zeta.pow(static_cast<std::uint64_t>(i)));
        FiniteFieldElement c = embed(pair.c, K);
        r.roots_distinct = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && (c * (mu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(j)])).is_zero())
                    r.roots_distinct = false;
        r.enumerated = true;
    } else {
        // x^n - 1 is separable exactly when p does not divide n
        r.roots_distinct = r.scale_nonzero && n % pair.q.p != 0;
    }
    r.roots_distinct = r.roots_distinct && r.scale_nonzero;
    // w Y = Y means zeta^{w^{-1}(k)} = zeta^k for all k
    r.stabilizer_trivial = true;
    for (const auto& h : g.finite_elements()) {
        if (h == g.identity()) continue;
        bool fixes = true;
        for (std::int64_t kk = 0; kk < n && fixes; ++kk) fixes = g.act(g.inverse(h), kk) == kk;
        if (fixes) r.stabilizer_trivial = false;
    }
    return r;
}

bool check_generic(const AdmissiblePairData& pair) {
    if (!pair.c.valid() || pair.c.is_zero()) return false;
    return check_generic_detail(pair).ok();
}

// ---------------------------------------------------------------- parameter model

namespace {

using Mono = TorusMonomialElement;
using MonoPair = std::pair<Mono, Mono>;

Mono make_mono(const std::vector<std::int64_t>& perm, std::vector<RootOfUnity> diag) {
    std::vector<int> p(perm.begin(), perm.end());
    return Mono(std::move(p), std::move(diag));
}

std::int64_t lcm_orders(const std::vector<MonoPair>& gens) {
    std::int64_t N = 1;
    for (const auto& [a, b] : gens) {
        for (const auto& z : a.diag()) N = std::lcm(N, z.order());
        for (const auto& z : b.diag()) N = std::lcm(N, z.order());
    }
    return N;
}

CyclotomicInteger trace(const Mono& m, std::int64_t N) {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(N), 0);
    for (int j = 0; j < m.size(); ++j) {
        if (m.perm()[static_cast<std::size_t>(j)] != j) continue;
        const RootOfUnity& z = m.diag()[static_cast<std::size_t>(j)];
        if (N % z.order() != 0) throw ConsistencyError("trace leaves the cyclotomic ring");
        acc[static_cast<std::size_t>(mod(z.exponent() * (N / z.order()), N))] += 1;
    }
    return CyclotomicInteger::from_exponent_counts(N, acc);
}

}  // namespace

ParameterModelReport parameter_model(const AdmissiblePairData& pair, std::uint64_t seed,
                                     std::optional<std::int64_t> field_bound) {
    pair.validate();
    const int n = pair.n;
    const std::int64_t q = pair.q.q;
    GLnGamma g(n, pair.q);
    auto K = build_field_bounded(pair.q.p, pair.q.f * g.f(), field_bound.value_or(max_field_size()));
    FiniteFieldElement zeta = K->generator().pow(static_cast<std::uint64_t>((K->size() - 1) / n));
    AdditiveCharacter psi(embed(pair.c, K));

    RootOfUnity t = pair.tame(pair.k->generator());  // xi(sigma^n)
    RootOfUnity tau = t.nth_root(n);
    RootOfUnity xw = pair.xi_omega;

    std::vector<std::int64_t> shift(static_cast<std::size_t>(n)), frob(static_cast<std::size_t>(n)), id(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        shift[static_cast<std::size_t>(j)] = (j + 1) % n;
        frob[static_cast<std::size_t>(j)] = mulmod(mod(q, n), j, n);
        id[static_cast<std::size_t>(j)] = j;
    }

    std::vector<MonoPair> gens;
    {
        // tame generator
        std::vector<RootOfUnity> dphi(static_cast<std::size_t>(n), tau);
        std::vector<RootOfUnity> dind(static_cast<std::size_t>(n), RootOfUnity::one());
        dind[0] = t;
        gens.emplace_back(make_mono(shift, dphi), make_mono(shift, dind));
    }
    {
        // Frobenius
        std::vector<RootOfUnity> dphi(static_cast<std::size_t>(n)), dind(static_cast<std::size_t>(n));
        for (std::int64_t j = 0; j < n; ++j) {
            std::size_t row = static_cast<std::size_t>(mulmod(mod(q, n), j, n));
            dphi[row] = tau.pow((q - 1) * j) * xw;
            dind[row] = t.pow((q * j) / n) * xw;
        }
        gens.emplace_back(make_mono(frob, dphi), make_mono(frob, dind));
    }
    for (const auto& y : additive_basis(*K)) {
        // wild p_y acts on coordinate k by psi(c Tr(zeta^{-k} y))
        std::vector<RootOfUnity> d(static_cast<std::size_t>(n));
        FiniteFieldElement zinv = zeta.inverse();
        FiniteFieldElement cur = y;
        for (int j = 0; j < n; ++j) {
            d[static_cast<std::size_t>(j)] = psi(cur);
            cur = cur * zinv;
        }
        gens.emplace_back(make_mono(id, d), make_mono(id, d));
    }
    const std::int64_t N = lcm_orders(gens);

    ParameterModelReport r;
    r.dimension = n;
    auto check = [&](const MonoPair& m) {
        ++r.elements_checked;
        if (trace(m.first, N) != trace(m.second, N)) ++r.mismatches;
    };
    Mono one = Mono::identity(n);
    if (trace(one, N) != CyclotomicInteger::integer(N, n)) throw ConsistencyError("identity trace is not n");

    std::set<MonoPair> seen;
    std::deque<MonoPair> queue;
    seen.insert({one, one});
    queue.push_back({one, one});
    bool capped = false;
    while (!queue.empty() && !capped) {
        MonoPair cur = queue.front();
        queue.pop_front();
        for (const auto& gen : gens) {
            MonoPair nxt{cur.first * gen.first, cur.second * gen.second};
            if (seen.insert(nxt).second) {
                if (static_cast<std::int64_t>(seen.size()) > kParameterModelCap) {
                    capped = true;
                    break;
                }
                queue.push_back(nxt);
            }
        }
    }
    if (!capped) {
        r.exhaustive = true;
        for (const auto& m : seen) check(m);
        return r;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> length(1, 40);
    for (int s = 0; s < kParameterModelSamples; ++s) {
        MonoPair m{one, one};
        int len = length(rng);
        for (int i = 0; i < len; ++i) {
            const auto& gen = gens[pick(rng)];
            m = {m.first * gen.first, m.second * gen.second};
        }
        check(m);
    }
    return r;
}

}  // namespace epikit
