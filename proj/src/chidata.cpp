#include "epikit/chidata.hpp"

namespace epikit {

std::string to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::asymmetric: return "asymmetric";
        case OrbitKind::symmetric_unramified: return "symmetric_unramified";
        case OrbitKind::symmetric_ramified: return "symmetric_ramified";
    }
    return "?";
}

std::string to_string(UnitRestriction u) {
    switch (u) {
        case UnitRestriction::trivial: return "trivial";
        case UnitRestriction::unramified_parity: return "unramified_parity";
        case UnitRestriction::legendre: return "legendre";
    }
    return "?";
}

WildRestriction WildRestriction::uniform(const GaloisRootAction& action, std::int64_t p, int f, std::int64_t c) {
    if (p == 2) throw DomainError("residue characteristic 2 is not supported");
    WildRestriction w(build_field(p, f));
    for (const auto& o : action.orbits()) {
        if (o.inertially_symmetric) w.set(o.representative, w.field_->from_integer(c));
    }
    return w;
}

void WildRestriction::set(int root, const FiniteFieldElement& c) {
    if (!field_) throw DomainError("wild restriction has no residue field");
    if (!c.valid() || c.is_zero()) throw DomainError("wild scale must be nonzero");
    if (field_->p() == 2) throw DomainError("residue characteristic 2 is not supported");
    scales_[root] = c.field_ptr() == field_ ? c : embed(c, field_);
}

std::optional<FiniteFieldElement> WildRestriction::scale(const RootDatum& d, int root) const {
    auto it = scales_.find(root);
    if (it != scales_.end()) return it->second;
    it = scales_.find(d.negative(root));
    if (it != scales_.end()) return -it->second;
    return std::nullopt;
}

std::optional<int> WildRestriction::anchor(const RootOrbit& orbit) const {
    if (scales_.count(orbit.representative)) return orbit.representative;
    for (int r : orbit.members)
        if (scales_.count(r)) return r;
    return std::nullopt;
}

RootOfUnity ChiDatum::operator()(std::int64_t v, const FiniteFieldElement& u) const {
    if (u.is_zero()) throw DomainError("unit part must be nonzero");
    switch (units) {
        case UnitRestriction::trivial: return RootOfUnity::one();
        case UnitRestriction::unramified_parity: return RootOfUnity::sign(v % 2 == 0 ? 1 : -1);
        case UnitRestriction::legendre: return at_uniformizer.pow(v) * RootOfUnity::sign(quadratic_symbol(u));
    }
    return RootOfUnity::one();
}

AdditiveCharacter xi_alpha_omega(const FiniteFieldElement& c, const FiniteFieldElement& u) {
    if (!c.valid() || c.is_zero()) throw DomainError("wild scale must be nonzero");
    if (u.is_zero()) throw DomainError("uniformizer scaling must be a unit");
    return AdditiveCharacter(c * embed(u, c.field_ptr()));
}

namespace {

RootOfUnity ramified_value(const FiniteFieldElement& c, const FiniteFieldElement& u) {
    return lambda_quadratic(ExtensionKind::ramified, xi_alpha_omega(c, u)).inverse();
}

}  // namespace

RootOfUnity chi_alpha_uniformizer(const GaloisRootAction& action, int root, const WildRestriction& wild,
                                  const std::optional<FiniteFieldElement>& u) {
    if (root < 0 || root >= action.datum().size()) throw DomainError("root index out of range");
    const RootOrbit& orbit = action.orbits()[static_cast<std::size_t>(action.orbit_of(root))];
    if (!orbit.symmetric) return RootOfUnity::one();
    if (!orbit.inertially_symmetric) return RootOfUnity::sign(-1);
    auto c = wild.scale(action.datum(), root);
    if (!c) throw DomainError("missing wild data for an inertially symmetric orbit");
    return ramified_value(*c, u ? *u : c->field().one());
}

RootOfUnity chi_alpha_uniformizer(const GaloisRootAction& action, const RootOrbit& orbit, const WildRestriction& wild,
                                  const std::optional<FiniteFieldElement>& u) {
    if (!orbit.symmetric) return RootOfUnity::one();
    if (!orbit.inertially_symmetric) return RootOfUnity::sign(-1);
    auto a = wild.anchor(orbit);
    if (!a) throw DomainError("missing wild data for an inertially symmetric orbit");
    return chi_alpha_uniformizer(action, *a, wild, u);
}

ChiFamily chi_data_build(const GaloisRootAction& action, const WildRestriction& wild) {
    ChiFamily fam;
    const RootDatum& d = action.datum();
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        fam.report.failures.push_back(msg);
    };
    for (std::size_t k = 0; k < action.orbits().size(); ++k) {
        const RootOrbit& o = action.orbits()[k];
        ChiDatum x;
        if (!o.symmetric) {
            x.kind = OrbitKind::asymmetric;
        } else if (!o.inertially_symmetric) {
            x.kind = OrbitKind::symmetric_unramified;
            x.units = UnitRestriction::unramified_parity;
            x.at_uniformizer = RootOfUnity::sign(-1);
        } else {
            x.kind = OrbitKind::symmetric_ramified;
            x.units = UnitRestriction::legendre;
            auto anchor = wild.anchor(o);
            if (!anchor) throw DomainError("missing wild data for an inertially symmetric orbit");
            x.anchor = *anchor;
            x.at_uniformizer = chi_alpha_uniformizer(action, *anchor, wild);
            x.scale = wild.scale(d, *anchor);

            const FiniteFieldElement& c = *x.scale;
            const FiniteField& kf = c.field();
            const FiniteFieldElement one = kf.one();
            const std::string tag = "orbit " + std::to_string(k) + ": ";
            int minus_one = quadratic_symbol(-one);
            RootOfUnity neg = ramified_value(-c, one);
            if (neg != x.at_uniformizer.inverse()) fail(fam.report.inverse_on_negative, tag + "chi(-a) != chi(a)^-1");
            if (neg != x.at_uniformizer * RootOfUnity::sign(minus_one))
                fail(fam.report.sign_flip, tag + "chi(-a)(w) != (-1/q) chi(a)(w)");
            if (x.at_uniformizer.pow(2) != RootOfUnity::sign(minus_one))
                fail(fam.report.norm_square, tag + "chi(w^2) != (-1/q)");
            for (const auto& u : kf.units()) {
                if (ramified_value(c, u) != x.at_uniformizer * RootOfUnity::sign(quadratic_symbol(u))) {
                    fail(fam.report.teichmuller_scaling, tag + "Teichmuller scaling by " + u.to_string());
                    break;
                }
            }
            if (ramified_value(c.pow(static_cast<std::uint64_t>(kf.p())), one) != x.at_uniformizer)
                fail(fam.report.frobenius_equivariance, tag + "lambda not Frobenius invariant");
        }
        fam.data[static_cast<int>(k)] = x;
    }
    return fam;
}

}  // namespace epikit
