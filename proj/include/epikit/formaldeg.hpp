#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "epikit/arith.hpp"
#include "epikit/intmat.hpp"

namespace epikit {

// Free Z-module of rank r with an action of a cyclic-by-cyclic group: A = <a>
// normal, and b generating the quotient B. b^order_b lies in <a>.
struct LatticeModule {
    int rank = 0;
    IntMatrix a;
    IntMatrix b;
    std::int64_t order_a = 1;
    std::int64_t order_b = 1;

    static LatticeModule make(IntMatrix a, std::int64_t order_a, IntMatrix b, std::int64_t order_b);
    static LatticeModule zero();
    void validate() const;
};

struct Coinvariants {
    int free_rank = 0;
    std::int64_t torsion_order = 1;
    bool finite() const { return free_rank == 0; }
};

// Z^r / sum (g - 1) Z^r.
Coinvariants coinvariants(int rank, const std::vector<IntMatrix>& gens);
enum class Subgroup { A, Gamma };
Coinvariants coinvariants(const LatticeModule& m, Subgroup which);

// Saturated basis (as columns) of the sublattice fixed by every generator.
IntMatrix fixed_lattice(int rank, const std::vector<IntMatrix>& gens);
// Matrix of g on the g-stable sublattice spanned by the columns of basis.
IntMatrix restrict_action(const IntMatrix& g, const IntMatrix& basis);
// |(Z^r / L)^g| for L spanned by the columns of rel; nullopt when infinite.
std::optional<std::int64_t> quotient_fixed_points(const IntMatrix& g, const IntMatrix& rel);

struct FixedPointCount {
    std::int64_t value = 1;
    bool finite = true;
};

// |det(q A - 1)|, the number of k_F-points of the torus with cocharacters M and Frobenius A.
FixedPointCount torus_fixed_points(const IntMatrix& frobenius, std::int64_t q);

// |det(A - 1)| and |det(A^T - 1)|, and the coinvariant orders of A and A^T.
struct DualityCheck {
    std::int64_t det_a = 0;
    std::int64_t det_dual = 0;
    Coinvariants coinv_a;
    Coinvariants coinv_dual;
    bool ok() const;
};
DualityCheck duality_check(const IntMatrix& frobenius);

struct GroupCounts {
    int rank = 0;
    int dim_g_hat = 0;
    int dim_z_I = 0;
    int dim_z_Gamma = 0;
    int num_roots = 0;
    int e = 1;
    int rk_M = 0;
    int dim_G_over_A = 0;
    void validate() const;
};

// X_*(S/A) with a = inertia generator, b = Frobenius.
struct TorusData {
    LatticeModule cocharacters;
    std::int64_t q = 0;
};

// q^exponent * factor, exact.
struct QPower {
    Rational exponent;
    Rational factor;
    bool operator==(const QPower&) const = default;
    std::string to_string() const;
};

struct GammaSide {
    Rational epsilon_exponent;  // log_q |eps(0)|
    int l1_exponent = 0;        // dim z^I / z^Gamma
    std::int64_t m_points = 1;  // |(M (x) kbar^x)^Fr|
    std::int64_t m_fr = 1;      // |M_Fr|
    std::int64_t s_natural = 1;  // |X_*(S/A)_Gamma|
    QPower value;
};

struct DegreeSide {
    Rational measure_exponent;  // dim(G/A) / 2
    Rational volume_exponent;   // (rk M + #R/e) / 2
    std::int64_t component_group = 1;  // |X_*(S/A)_I^Fr|
    std::int64_t m_points = 1;
    QPower value;
};

GammaSide gamma_rhs(const GroupCounts& counts, const TorusData& torus);
DegreeSide degree_lhs(const GroupCounts& counts, const TorusData& torus);

GroupCounts gln_counts(int n);
TorusData gln_torus(int n, std::int64_t q);

struct FormalReport {
    GammaSide rhs;
    DegreeSide lhs;
    bool equal = false;
};

FormalReport verify_formal_gln(int n, std::int64_t q);

struct LatticeLemmaResult {
    bool hypothesis_violated = false;
    bool holds = false;
    std::int64_t coinv_gamma = 0;   // |M_Gamma|
    std::int64_t a_coinv_b_inv = 0;  // |M_A^B|
    std::int64_t a_inv_b_coinv = 0;  // |M^A_B|
};

LatticeLemmaResult lattice_lemma_check(const LatticeModule& m);

struct RandomLatticeOptions {
    int max_rank = 5;
    std::int64_t max_order = 6;
};

// Signed-permutation generators conjugated by a random unimodular matrix.
LatticeModule random_lattice_module(std::mt19937_64& rng, const RandomLatticeOptions& opt = {});

}  // namespace epikit
