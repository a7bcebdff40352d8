#include "epikit/toralinv.hpp"

namespace epikit {

namespace {

bool inertially_symmetric_root(const GaloisRootAction& a, int root) {
    return a.orbits()[static_cast<std::size_t>(a.orbit_of(root))].inertially_symmetric;
}

const RootOrbit& symmetric_orbit_of(const GaloisRootAction& a, int root) {
    if (root < 0 || root >= a.datum().size()) throw DomainError("root index out of range");
    const RootOrbit& o = a.orbits()[static_cast<std::size_t>(a.orbit_of(root))];
    if (!o.symmetric) throw DomainError("root is not symmetric");
    return o;
}

void require_regular(const GaloisRootAction& a) {
    if (!a.regular_elliptic()) throw DomainError("toral invariant needs tame regular elliptic inertia");
}

}  // namespace

TwistData TwistData::make(std::shared_ptr<const GaloisRootAction> action) {
    if (!action) throw DomainError("twist data needs an action");
    TwistData t;
    t.action_ = std::move(action);
    const auto& orbits = t.action_->orbits();
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        if (!orbits[k].symmetric) continue;
        int rep = orbits[k].representative;
        int neg = t.action_->datum().negative(rep);
        // elements are sorted, so the first hit is the least one
        for (int g = 0; g < t.action_->order(); ++g) {
            if (t.action_->act(g, rep) == neg) {
                t.tau_[static_cast<int>(k)] = g;
                break;
            }
        }
        if (!t.tau_.count(static_cast<int>(k))) throw ConsistencyError("symmetric orbit without a swapping element");
    }
    return t;
}

int TwistData::tau(int orbit) const {
    auto it = tau_.find(orbit);
    if (it == tau_.end()) throw DomainError("orbit is not symmetric");
    return it->second;
}

int TwistData::tau_for_root(int root) const {
    const RootOrbit& o = symmetric_orbit_of(*action_, root);
    int t = tau(action_->orbit_of(root));
    if (root == o.representative) return t;
    for (int g = 0; g < action_->order(); ++g) {
        if (action_->act(g, o.representative) == root) {
            return action_->multiply(action_->multiply(g, t), action_->inverse(g));
        }
    }
    throw ConsistencyError("root not reached from its orbit representative");
}

int TwistData::valuation(int orbit) const {
    const auto& o = action_->orbits().at(static_cast<std::size_t>(orbit));
    return o.inertially_symmetric ? 1 : 0;
}

TwistData TwistData::with_tau(int orbit, int g) const {
    const auto& o = action_->orbits().at(static_cast<std::size_t>(orbit));
    if (!o.symmetric) throw DomainError("orbit is not symmetric");
    if (g < 0 || g >= action_->order()) throw DomainError("group element out of range");
    if (action_->act(g, o.representative) != action_->datum().negative(o.representative)) {
        throw DomainError("tau must lie in Gamma_{+-alpha} minus Gamma_alpha");
    }
    TwistData t = *this;
    t.tau_[orbit] = g;
    return t;
}

std::int64_t toral_invariant_zeta_sum(const TwistData& twist, int alpha, const Gauge& gauge) {
    const GaloisRootAction& a = twist.action();
    symmetric_orbit_of(a, alpha);
    require_regular(a);
    const RootDatum& d = a.datum();
    if (gauge.size() != d.size()) throw DomainError("gauge has the wrong length");
    int tau_inv = a.inverse(twist.tau_for_root(alpha));
    std::int64_t z = 0;
    for (int b = 0; b < d.size(); ++b) {
        if (gauge(b) != 1 || gauge(a.act(tau_inv, b)) != -1) continue;
        if (!inertially_symmetric_root(a, b)) continue;
        z += dot(d.root(alpha), d.coroot(b));
    }
    return z;
}

int toral_invariant_zeta(const TwistData& twist, int alpha, const Gauge& gauge) {
    return toral_invariant_zeta_sum(twist, alpha, gauge) % 2 == 0 ? 1 : -1;
}

int toral_invariant_closed(const TwistData& twist, int alpha) {
    const GaloisRootAction& a = twist.action();
    symmetric_orbit_of(a, alpha);
    require_regular(a);
    const RootDatum& d = a.datum();
    std::int64_t z = 0;
    for (int b = 0; b < d.size(); ++b) {
        if (d.positive(b) && !inertially_symmetric_root(a, b)) z += dot(d.root(alpha), d.coroot(b));
    }
    return z % 2 == 0 ? 1 : -1;
}

ToralInvariantMap toral_invariant_map(const TwistData& twist) {
    ToralInvariantMap f;
    const auto& orbits = twist.action().orbits();
    Gauge p = Gauge::positive(twist.action().datum());
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        if (orbits[k].symmetric) f[static_cast<int>(k)] = toral_invariant_zeta(twist, orbits[k].representative, p);
    }
    return f;
}

int stable_variation(const GaloisRootAction& action, const Coweight& lambda, int alpha) {
    const RootOrbit& o = symmetric_orbit_of(action, alpha);
    const RootDatum& d = action.datum();
    if (!in_coweight_lattice(d, lambda)) throw DomainError("coweight is not in the coweight lattice");
    // one root from each pair {beta, -beta}: these are the sigma(alpha)
    // for sigma in Gamma / Gamma_{+-alpha}, up to sign
    std::int64_t s = 0;
    for (int b : o.members) {
        if (d.positive(b)) s += coweight_pairing(d, b, lambda);
    }
    return s % 2 == 0 ? 1 : -1;
}

int kottwitz_sign_from_coweight(const RootDatum& d, const Coweight& lambda) {
    return two_rho_pairing(d, lambda) % 2 == 0 ? 1 : -1;
}

int elliptic_product(const GaloisRootAction& action, const Coweight& lambda) {
    if (!action.is_elliptic()) throw DomainError("elliptic product needs an elliptic action");
    int sgn = 1;
    for (const auto& o : action.orbits()) {
        if (o.symmetric) sgn *= stable_variation(action, lambda, o.representative);
    }
    return sgn;
}

int epsilon_f_value(const ToralInvariantMap& f, const std::set<int>& active, ElementKind kind) {
    int v = 1;
    for (int o : active) {
        auto it = f.find(o);
        if (it == f.end()) throw DomainError("active orbit is not symmetric");
        v *= it->second;
    }
    return kind == ElementKind::top_unipotent ? 1 : v;
}

}  // namespace epikit
