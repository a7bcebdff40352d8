#pragma once

#include <map>
#include <memory>
#include <set>

#include "epikit/rootgalois.hpp"

namespace epikit {

// Twist data: per symmetric orbit an element tau with tau(alpha) = -alpha for
// the orbit representative, and the a-data valuation rule.
class TwistData {
public:
    static TwistData make(std::shared_ptr<const GaloisRootAction> action);

    const GaloisRootAction& action() const { return *action_; }
    const std::shared_ptr<const GaloisRootAction>& action_ptr() const { return action_; }
    // tau for the representative of a symmetric orbit.
    int tau(int orbit) const;
    // tau transported to an arbitrary symmetric root.
    int tau_for_root(int root) const;
    // 1 exactly on inertially symmetric orbits.
    int valuation(int orbit) const;
    TwistData with_tau(int orbit, int g) const;

private:
    std::shared_ptr<const GaloisRootAction> action_;
    std::map<int, int> tau_;
};

// zeta_p = sum over beta with p(beta) = +1, p(tau^{-1} beta) = -1 and
// I beta = -I beta of <alpha, beta^vee>.
std::int64_t toral_invariant_zeta_sum(const TwistData& twist, int alpha, const Gauge& gauge);
int toral_invariant_zeta(const TwistData& twist, int alpha, const Gauge& gauge);
// prod over beta > 0 with I beta != -I beta of (-1)^<alpha, beta^vee>.
int toral_invariant_closed(const TwistData& twist, int alpha);

// orbit index -> sign, symmetric orbits only
using ToralInvariantMap = std::map<int, int>;
ToralInvariantMap toral_invariant_map(const TwistData& twist);

int stable_variation(const GaloisRootAction& action, const Coweight& lambda, int alpha);
int kottwitz_sign_from_coweight(const RootDatum& d, const Coweight& lambda);
// Product of stable_variation over the symmetric orbits; needs an elliptic action.
int elliptic_product(const GaloisRootAction& action, const Coweight& lambda);

enum class ElementKind { top_semisimple, top_unipotent };
int epsilon_f_value(const ToralInvariantMap& f, const std::set<int>& active, ElementKind kind);

}  // namespace epikit
