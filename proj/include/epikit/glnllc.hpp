#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epikit/chidata.hpp"
#include "epikit/exactnum.hpp"
#include "epikit/rootgalois.hpp"

namespace epikit {

// s^x Q^y with x in Z/n and y an integer. Q is kept of infinite order so
// that the stabilizers <Q^{2m}> stay visible; on Z/n it acts by i -> q^y i.
struct GammaElt {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const GammaElt&) const = default;
    auto operator<=>(const GammaElt&) const = default;
};

class GLnGamma {
public:
    GLnGamma(int n, const PrimePower& q);

    int n() const { return n_; }
    std::int64_t q() const { return q_.q; }
    const PrimePower& prime_power() const { return q_; }
    int f() const { return f_; }
    std::int64_t finite_order() const { return static_cast<std::int64_t>(n_) * f_; }

    GammaElt s() const { return {1, 0}; }
    GammaElt Q() const { return {0, 1}; }
    GammaElt identity() const { return {0, 0}; }
    GammaElt normalize(GammaElt g) const;
    GammaElt multiply(const GammaElt& a, const GammaElt& b) const;
    GammaElt inverse(const GammaElt& a) const;
    GammaElt power(const GammaElt& a, std::int64_t k) const;
    // q^y mod n
    std::int64_t q_power(std::int64_t y) const;
    std::int64_t act(const GammaElt& g, std::int64_t i) const;
    std::pair<std::int64_t, std::int64_t> act_root(const GammaElt& g, std::pair<std::int64_t, std::int64_t> r) const;
    // All elements of the finite quotient <s> x| <Q mod f>.
    std::vector<GammaElt> finite_elements() const;

private:
    int n_;
    PrimePower q_;
    int f_;
};

GLnGamma build_gamma(int n, std::int64_t q);

enum class DaggerType { asymmetric, symmetric_nonsingleton, symmetric_singleton };
std::string to_string(DaggerType t);

struct DaggerOrbit {
    std::vector<std::int64_t> members;  // the <Q>-orbit, in order a, qa, q^2 a, ...
    DaggerType type = DaggerType::asymmetric;
    std::int64_t m = 1;
    std::int64_t representative = 0;  // least member
};

struct DaggerData {
    std::vector<DaggerOrbit> orbits;  // sorted by least member
    std::vector<std::int64_t> xi;      // least representatives of <Q> x +-1 orbits
    const DaggerOrbit& orbit_of(std::int64_t a) const;
};

DaggerData dagger_orbits(int n, std::int64_t q);

// Coset representatives for Gamma / Gamma_{+-eta(a)}.
std::vector<GammaElt> gamma_dot(const GLnGamma& g, const DaggerData& d, std::int64_t a);

using RootPair = std::pair<std::int64_t, std::int64_t>;
inline RootPair eta(std::int64_t a) { return {0, a}; }
inline bool root_positive(const RootPair& r) { return r.first < r.second; }
inline RootPair root_negative(const RootPair& r) { return {r.second, r.first}; }

// Gauge on Gamma * {+-eta(a)}: +1 on gamma_dot * eta(a), -1 on the negatives.
std::map<RootPair, int> dagger_gauge(const GLnGamma& g, const DaggerData& d, std::int64_t a);

int sgn_q_mod_n(int n, std::int64_t q);

struct SbpValue {
    std::vector<int> diagonal;  // product of lambda(-1), as signs
    int chi0 = 1;
};

SbpValue s_bp_value(int n, std::int64_t q, std::int64_t a, const GammaElt& sigma);
// Closed form for sigma in {s, Q}.
int s_bp_closed(int n, std::int64_t q, std::int64_t a, const GammaElt& sigma);

// Truncated character of E^x: omega^v * teich(u) * (1 + omega y) -> value.
struct TruncatedEChar {
    RootOfUnity at_omega;
    MultiplicativeCharacter units;
    FiniteFieldElement wild;  // scale of y -> psi(wild * y); zero means trivial

    RootOfUnity operator()(std::int64_t v, const FiniteFieldElement& u, const FiniteFieldElement& y) const;
    TruncatedEChar operator*(const TruncatedEChar& o) const;
    TruncatedEChar inverse() const;
    bool operator==(const TruncatedEChar& o) const;
    std::string to_string() const;
};

// Admissible pair of degree n with E/F totally tamely ramified and xi of depth 1/n.
struct AdmissiblePairData {
    int n = 0;
    PrimePower q;
    std::shared_ptr<const FiniteField> k;
    RootOfUnity xi_omega;
    MultiplicativeCharacter tame;
    FiniteFieldElement c;

    static AdmissiblePairData make(int n, std::int64_t q, std::int64_t c, RootOfUnity xi_omega = RootOfUnity::one(),
                                   std::int64_t tame_exponent = 0);
    void validate() const;
    TruncatedEChar xi() const;
    // Same character described with the uniformizer teich(u) * omega.
    AdmissiblePairData rebase_uniformizer(const FiniteFieldElement& u) const;
};

// An element of W_F by its image in Gamma and, for W_E elements, its avatar
// in the truncation of E^x.
struct WToken {
    enum class Kind { gamma, uniformizer, unit, wild };
    Kind kind = Kind::gamma;
    GammaElt image;
    std::optional<FiniteFieldElement> unit;
    std::optional<FiniteFieldElement> wild;

    static WToken gamma(const GammaElt& g) { return {Kind::gamma, g, std::nullopt, std::nullopt}; }
    static WToken uniformizer(std::optional<FiniteFieldElement> u = std::nullopt) {
        return {Kind::uniformizer, GammaElt{0, 1}, std::move(u), std::nullopt};
    }
    static WToken unit_of(const FiniteFieldElement& u) { return {Kind::unit, GammaElt{}, u, std::nullopt}; }
    static WToken wild_of(const FiniteFieldElement& y) { return {Kind::wild, GammaElt{}, std::nullopt, y}; }
};

// The chi-data values r_pxa needs: chi at the singleton orbit.
struct GLnChiData {
    RootOfUnity singleton_at_omega = RootOfUnity::one();
    bool has_singleton = false;
    ChiFamily family;
    // chi_{eta(n/2)} on the truncation
    RootOfUnity singleton(std::int64_t v, const std::optional<FiniteFieldElement>& u) const;
};

GaloisRootAction gln_root_action(int n, std::int64_t q);
int gln_root_index(int n, const RootPair& r);
// chi-data built from the pair; the wild restriction at eta(n/2) has scale 2c.
GLnChiData gln_chi_data(const AdmissiblePairData& pair);

RootOfUnity r_pxa_value(int n, std::int64_t q, std::int64_t a, const WToken& w, const GLnChiData& chi);

struct ChiSOverXi {
    TruncatedEChar closed;
    TruncatedEChar assembled;
    bool agree = false;
};

// Optional custom representatives, one per <Q> x +-1 orbit.
ChiSOverXi chi_s_over_xi(const AdmissiblePairData& pair, const std::optional<std::vector<std::int64_t>>& reps = std::nullopt);

struct LambdaTower {
    RootOfUnity value;
    int sgn = 1;
    int branch = 1;  // (-1/q)^{n/2 - 1}
    RootOfUnity lambda_e_e2;
};

LambdaTower lambda_tower_detail(int n, std::int64_t q, std::int64_t psi_scale = 1);
RootOfUnity lambda_tower(int n, std::int64_t q, std::int64_t psi_scale = 1);

// zeta(omega, xi) = c / (n b) for psi_F of residue scale b.
FiniteFieldElement zeta_omega_xi(const AdmissiblePairData& pair, std::int64_t psi_scale = 1);
RootOfUnity rectifier_value(const AdmissiblePairData& pair, std::int64_t psi_scale = 1);
TruncatedEChar rectifier_character(const AdmissiblePairData& pair, std::int64_t psi_scale = 1);

struct RectiReport {
    TruncatedEChar chi_s;
    TruncatedEChar xi_mu;
    bool equal = false;
};

RectiReport verify_recti(const AdmissiblePairData& pair, std::int64_t psi_scale = 1);

struct GenericReport {
    bool scale_nonzero = false;
    bool roots_distinct = false;
    bool stabilizer_trivial = false;
    bool enumerated = false;  // roots of unity listed in F_{q^f}
    bool ok() const { return scale_nonzero && roots_distinct && stabilizer_trivial; }
};

GenericReport check_generic_detail(const AdmissiblePairData& pair);
bool check_generic(const AdmissiblePairData& pair);

struct ParameterModelReport {
    bool exhaustive = false;
    std::int64_t elements_checked = 0;
    std::int64_t mismatches = 0;
    int dimension = 0;
    bool ok() const { return mismatches == 0 && elements_checked > 0; }
};

inline constexpr std::int64_t kParameterModelCap = 10000;
inline constexpr int kParameterModelSamples = 100;

// field_bound caps |F_{q^f}|; defaults to max_field_size().
ParameterModelReport parameter_model(const AdmissiblePairData& pair, std::uint64_t seed = 1,
                                     std::optional<std::int64_t> field_bound = std::nullopt);

}  // namespace epikit
