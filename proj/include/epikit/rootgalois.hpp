#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epikit/arith.hpp"
#include "epikit/intmat.hpp"
#include "epikit/root_of_unity.hpp"

namespace epikit {

using IntVec = std::vector<std::int64_t>;

std::int64_t dot(const IntVec& a, const IntVec& b);

// Roots in the character lattice, coroots in the cocharacter lattice, both
// in dual coordinates so that the pairing is the dot product.
class RootDatum {
public:
    // GL_n coordinates: roots e_i - e_j (i != j), positive iff i < j.
    static RootDatum type_a(int n);
    static RootDatum from_lists(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                                std::vector<bool> positive);

    int rank() const { return rank_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const IntVec& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
    const IntVec& coroot(int i) const { return coroots_[static_cast<std::size_t>(i)]; }
    bool positive(int i) const { return positive_[static_cast<std::size_t>(i)]; }
    int negative(int i) const { return neg_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(const IntVec& v) const;

    // Type A only: index of e_i - e_j, and the inverse lookup.
    bool is_type_a() const { return type_a_n_ > 0; }
    int type_a_n() const { return type_a_n_; }
    int pair_index(int i, int j) const;
    std::pair<int, int> pair_of(int root) const;

    // Sum of the positive roots.
    IntVec two_rho() const;
    // Index of the lexicographically least root among the given ones.
    int least_root(const std::vector<int>& idx) const;

private:
    int rank_ = 0;
    int type_a_n_ = 0;
    std::vector<IntVec> roots_, coroots_;
    std::vector<bool> positive_;
    std::vector<int> neg_;
    std::map<IntVec, int> index_;
    void validate();
};

// Permutation matrix with M e_j = e_{pi(j)}.
IntMatrix permutation_matrix(const std::vector<int>& pi);

struct RootOrbit {
    std::vector<int> members;  // root indices, ascending
    bool symmetric = false;
    bool inertially_symmetric = false;
    int representative = -1;  // lexicographically least root
    int index = 1;            // [Gamma_{+-alpha} : Gamma_alpha]
};

// A finite group of lattice automorphisms permuting the roots, with a
// distinguished normal subgroup I.
class GaloisRootAction {
public:
    GaloisRootAction(RootDatum datum, std::vector<IntMatrix> gamma_gens, std::vector<IntMatrix> inertia_gens,
                     std::optional<int> frobenius_gen = std::nullopt, bool regular_elliptic = false);

    const RootDatum& datum() const { return datum_; }
    int order() const { return static_cast<int>(elements_.size()); }
    // Elements sorted by flattened matrix entries.
    const IntMatrix& element(int g) const { return elements_[static_cast<std::size_t>(g)]; }
    int act(int g, int root) const { return perms_[static_cast<std::size_t>(g)][static_cast<std::size_t>(root)]; }
    bool in_inertia(int g) const { return inertia_[static_cast<std::size_t>(g)]; }
    int find(const IntMatrix& m) const;
    int multiply(int g, int h) const;
    int inverse(int g) const;
    int identity() const { return identity_; }
    const std::vector<int>& generators() const { return gen_idx_; }
    std::optional<int> frobenius() const { return frob_; }
    bool regular_elliptic() const { return regular_elliptic_; }

    const std::vector<RootOrbit>& orbits() const { return orbits_; }
    int orbit_of(int root) const { return orbit_of_[static_cast<std::size_t>(root)]; }
    // No nonzero fixed vectors on the root span.
    bool is_elliptic() const;
    // Gamma_{alpha} and Gamma_{+-alpha} as element index lists.
    std::vector<int> stabilizer(int root) const;
    std::vector<int> pm_stabilizer(int root) const;

private:
    RootDatum datum_;
    std::vector<IntMatrix> elements_;
    std::vector<std::vector<int>> perms_;
    std::vector<bool> inertia_;
    std::map<IntMatrix, int> lookup_;
    std::vector<int> gen_idx_;
    std::optional<int> frob_;
    int identity_ = 0;
    bool regular_elliptic_ = false;
    std::vector<RootOrbit> orbits_;
    std::vector<int> orbit_of_;

    std::vector<int> root_permutation(const IntMatrix& m) const;
    void check_type_a_regular(const std::vector<IntMatrix>& inertia_gens) const;
    void classify();
};

const std::vector<RootOrbit>& classify_orbits(const GaloisRootAction& action);

// A_{n-1} in GL_n coordinates with inertia generated by the Coxeter n-cycle;
// with sign_extension the group is I x {+-1}.
GaloisRootAction coxeter_action(int n, bool sign_extension);

class Gauge {
public:
    Gauge() = default;
    static Gauge positive(const RootDatum& d);
    static Gauge from_values(const RootDatum& d, std::vector<int> values);

    int operator()(int root) const { return v_[static_cast<std::size_t>(root)]; }
    int size() const { return static_cast<int>(v_.size()); }
    // Flips the pair {root, -root}.
    Gauge flipped(const RootDatum& d, int root) const;
    bool operator==(const Gauge& o) const { return v_ == o.v_; }

private:
    std::vector<int> v_;
};

// Roots (one per pair) whose successive single-pair flips carry p to target.
std::vector<int> gauge_path(const RootDatum& d, const Gauge& p, const Gauge& target);

// diag(d) * P_sigma with P_sigma e_j = e_{sigma(j)}.
class TorusMonomialElement {
public:
    TorusMonomialElement() = default;
    TorusMonomialElement(std::vector<int> perm, std::vector<RootOfUnity> diag);
    static TorusMonomialElement identity(int n);
    static TorusMonomialElement permutation(std::vector<int> perm);
    static TorusMonomialElement diagonal(std::vector<RootOfUnity> diag);

    int size() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<RootOfUnity>& diag() const { return diag_; }

    TorusMonomialElement operator*(const TorusMonomialElement& o) const;
    TorusMonomialElement inverse() const;
    TorusMonomialElement strip() const { return permutation(perm_); }
    bool operator==(const TorusMonomialElement& o) const { return perm_ == o.perm_ && diag_ == o.diag_; }
    bool operator<(const TorusMonomialElement& o) const;
    bool is_diagonal() const;
    // Diagonal entries as +-1; throws if some entry is not real.
    std::vector<int> signs() const;
    std::string to_string() const;

private:
    std::vector<int> perm_;
    std::vector<RootOfUnity> diag_;
};

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b);  // a after b
std::vector<int> invert(const std::vector<int>& a);
int inversion_count(const std::vector<int>& perm);

// Words use simple reflections s_1..s_{n-1}; s_i swaps coordinates i-1 and i.
std::vector<int> permutation_of_word(const std::vector<int>& word, int n);
std::vector<int> canonical_reduced_word(const std::vector<int>& perm);
// All reduced words of perm (small n only).
std::vector<std::vector<int>> all_reduced_words(const std::vector<int>& perm);

TorusMonomialElement springer_lift(const std::vector<int>& word, int n);
TorusMonomialElement springer_lift(const std::vector<int>& perm);

// strip(sigma) * springer(sigma)^{-1}, computed with monomial matrices.
std::vector<int> strip_defect(const std::vector<int>& perm);
// prod over alpha > 0 with sigma^{-1} alpha < 0 of y_alpha(-1).
std::vector<int> strip_defect_closed(const std::vector<int>& perm);

using Coweight = std::vector<Rational>;
// <root, lambda>; throws when not integral.
std::int64_t coweight_pairing(const RootDatum& d, int root, const Coweight& lambda);
bool in_coweight_lattice(const RootDatum& d, const Coweight& lambda);
std::int64_t two_rho_pairing(const RootDatum& d, const Coweight& lambda);

}  // namespace epikit
