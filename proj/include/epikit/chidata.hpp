#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epikit/exactnum.hpp"
#include "epikit/rootgalois.hpp"

namespace epikit {

enum class OrbitKind { asymmetric, symmetric_unramified, symmetric_ramified };
// trivial | unramified quadratic (trivial on units) | Legendre on Teichmuller units
enum class UnitRestriction { trivial, unramified_parity, legendre };

std::string to_string(OrbitKind k);
std::string to_string(UnitRestriction u);

// Residue scales c_a of the wild restrictions: 1 + omega x -> psi(c_a x).
// Entries are keyed by a root; the negative of a key carries the scale -c.
class WildRestriction {
public:
    WildRestriction() = default;
    explicit WildRestriction(std::shared_ptr<const FiniteField> k) : field_(std::move(k)) {}
    // Scale c at the representative of every inertially symmetric orbit.
    static WildRestriction uniform(const GaloisRootAction& action, std::int64_t p, int f, std::int64_t c);

    void set(int root, const FiniteFieldElement& c);
    bool empty() const { return scales_.empty(); }
    const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
    const std::map<int, FiniteFieldElement>& entries() const { return scales_; }
    // Scale for root, using the negated scale of its negative if needed.
    std::optional<FiniteFieldElement> scale(const RootDatum& d, int root) const;
    // A keyed root of the orbit, preferring the representative.
    std::optional<int> anchor(const RootOrbit& orbit) const;

private:
    std::shared_ptr<const FiniteField> field_;
    std::map<int, FiniteFieldElement> scales_;
};

struct ChiDatum {
    OrbitKind kind = OrbitKind::asymmetric;
    RootOfUnity at_uniformizer = RootOfUnity::one();
    UnitRestriction units = UnitRestriction::trivial;
    // residue scale used and the root it is attached to, ramified orbits only
    std::optional<FiniteFieldElement> scale;
    int anchor = -1;

    // Value at omega^v * teich(u) * (1 + omega y), for the tame truncation.
    RootOfUnity operator()(std::int64_t v, const FiniteFieldElement& u) const;
};

AdditiveCharacter xi_alpha_omega(const FiniteFieldElement& c, const FiniteFieldElement& u);

// u scales the uniformizer by its Teichmuller lift.
RootOfUnity chi_alpha_uniformizer(const GaloisRootAction& action, int root, const WildRestriction& wild,
                                  const std::optional<FiniteFieldElement>& u = std::nullopt);
RootOfUnity chi_alpha_uniformizer(const GaloisRootAction& action, const RootOrbit& orbit, const WildRestriction& wild,
                                  const std::optional<FiniteFieldElement>& u = std::nullopt);

struct ChiAxiomReport {
    bool inverse_on_negative = true;
    bool sign_flip = true;
    bool teichmuller_scaling = true;
    bool norm_square = true;
    bool frobenius_equivariance = true;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct ChiFamily {
    std::map<int, ChiDatum> data;  // orbit index -> datum
    ChiAxiomReport report;
};

ChiFamily chi_data_build(const GaloisRootAction& action, const WildRestriction& wild);

}  // namespace epikit
