#include "epikit/formaldeg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "epikit/finite_field.hpp"

namespace epikit {

namespace {

IntMatrix minus_identity(const IntMatrix& g) { return g - IntMatrix::identity(g.rows()); }

IntMatrix relations(int rank, const std::vector<IntMatrix>& gens) {
    IntMatrix rel(rank, 0);
    for (const auto& g : gens) rel = rel.hcat(minus_identity(g));
    return rel;
}

std::int64_t torsion_of(const SmithForm& s) {
    std::int64_t t = 1;
    for (int i = 0; i < s.rank; ++i) t *= std::llabs(s.diag[static_cast<std::size_t>(i)]);
    return t;
}

std::vector<IntMatrix> powers(const IntMatrix& g, std::int64_t k) {
    std::vector<IntMatrix> out{IntMatrix::identity(g.rows())};
    for (std::int64_t i = 1; i < k; ++i) out.push_back(out.back() * g);
    return out;
}

bool contains(const std::vector<IntMatrix>& v, const IntMatrix& m) { return std::find(v.begin(), v.end(), m) != v.end(); }

// Least k >= 1 with g^k = 1, or 0 if none up to limit.
std::int64_t matrix_order(const IntMatrix& g, std::int64_t limit) {
    IntMatrix id = IntMatrix::identity(g.rows());
    IntMatrix p = g;
    for (std::int64_t k = 1; k <= limit; ++k) {
        if (p == id) return k;
        p = p * g;
    }
    return 0;
}

// Matrix of the permutation pi of Z/n on Z^n / Z(1,...,1), basis e_0..e_{n-2}.
IntMatrix quotient_permutation(int n, const std::vector<std::int64_t>& pi) {
    IntMatrix m(n - 1, n - 1);
    for (int j = 0; j < n - 1; ++j) {
        std::int64_t t = pi[static_cast<std::size_t>(j)];
        if (t < n - 1) {
            m(static_cast<int>(t), j) = 1;
        } else {
            for (int i = 0; i < n - 1; ++i) m(i, j) = -1;
        }
    }
    return m;
}

IntMatrix random_signed_permutation(std::mt19937_64& rng, int r) {
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(0.5);
    IntMatrix m(r, r);
    for (int j = 0; j < r; ++j) m(perm[static_cast<std::size_t>(j)], j) = coin(rng) ? 1 : -1;
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int r) {
    IntMatrix w = IntMatrix::identity(r);
    if (r < 2) return w;
    std::uniform_int_distribution<int> idx(0, r - 1);
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int step = 0; step < 3; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        IntMatrix e = IntMatrix::identity(r);
        e(i, j) = coef(rng);
        w = w * e;
    }
    return w;
}

}  // namespace

LatticeModule LatticeModule::make(IntMatrix a, std::int64_t order_a, IntMatrix b, std::int64_t order_b) {
    LatticeModule m{a.rows(), std::move(a), std::move(b), order_a, order_b};
    m.validate();
    return m;
}

LatticeModule LatticeModule::zero() { return LatticeModule{0, IntMatrix(0, 0), IntMatrix(0, 0), 1, 1}; }

void LatticeModule::validate() const {
    if (rank < 0) throw DomainError("negative rank");
    for (const IntMatrix* g : {&a, &b}) {
        if (g->rows() != rank || g->cols() != rank) throw DomainError("generator has the wrong size");
        if (std::llabs(g->det()) != 1) throw DomainError("generator is not invertible over Z");
    }
    if (order_a < 1 || order_b < 1) throw DomainError("orders must be positive");
    if (a.pow(order_a) != IntMatrix::identity(rank)) throw DomainError("a does not have the declared order");
    auto group_a = powers(a, order_a);
    if (!contains(group_a, b.pow(order_b))) throw DomainError("b^order_b is not in <a>");
    if (!contains(group_a, b * a * b.inverse_unimodular())) throw DomainError("<a> is not normalized by b");
}

Coinvariants coinvariants(int rank, const std::vector<IntMatrix>& gens) {
    SmithForm s = smith_form(relations(rank, gens));
    return Coinvariants{rank - s.rank, torsion_of(s)};
}

Coinvariants coinvariants(const LatticeModule& m, Subgroup which) {
    if (which == Subgroup::A) return coinvariants(m.rank, {m.a});
    return coinvariants(m.rank, {m.a, m.b});
}

IntMatrix fixed_lattice(int rank, const std::vector<IntMatrix>& gens) {
    IntMatrix stacked(0, rank);
    for (const auto& g : gens) stacked = stacked.vcat(minus_identity(g));
    return kernel_basis(stacked);
}

IntMatrix restrict_action(const IntMatrix& g, const IntMatrix& basis) {
    int k = basis.cols();
    SmithForm s = smith_form(basis);
    if (s.rank != k) throw DomainError("basis columns are dependent");
    IntMatrix rhs = s.U * (g * basis);
    IntMatrix z(k, k);
    for (int i = 0; i < rhs.rows(); ++i) {
        for (int j = 0; j < k; ++j) {
            if (i >= k) {
                if (rhs(i, j) != 0) throw DomainError("sublattice is not stable");
                continue;
            }
            std::int64_t d = s.diag[static_cast<std::size_t>(i)];
            if (rhs(i, j) % d != 0) throw DomainError("sublattice is not stable");
            z(i, j) = rhs(i, j) / d;
        }
    }
    return s.V * z;
}

std::optional<std::int64_t> quotient_fixed_points(const IntMatrix& g, const IntMatrix& rel) {
    int r = g.rows();
    IntMatrix neg(rel.rows(), rel.cols());
    for (int i = 0; i < rel.rows(); ++i)
        for (int j = 0; j < rel.cols(); ++j) neg(i, j) = -rel(i, j);
    // x with (g - 1) x in L, read off the first r coordinates of the kernel
    IntMatrix k = kernel_basis(minus_identity(g).hcat(neg));
    IntMatrix pre = k.block(0, 0, r, k.cols()).hcat(rel);
    SmithForm sp = smith_form(pre), sl = smith_form(rel);
    if (sp.rank != sl.rank) return std::nullopt;
    return torsion_of(sl) / torsion_of(sp);
}

FixedPointCount torus_fixed_points(const IntMatrix& frobenius, std::int64_t q) {
    int r = frobenius.rows();
    IntMatrix m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = q * frobenius(i, j) - (i == j ? 1 : 0);
    std::int64_t d = std::llabs(m.det());
    return FixedPointCount{d, d != 0};
}

bool DualityCheck::ok() const {
    return det_a == det_dual && coinv_a.free_rank == coinv_dual.free_rank &&
           coinv_a.torsion_order == coinv_dual.torsion_order && (det_a == 0) == !coinv_a.finite() &&
           (det_a == 0 || det_a == coinv_a.torsion_order);
}

DualityCheck duality_check(const IntMatrix& frobenius) {
    DualityCheck c;
    c.det_a = std::llabs(minus_identity(frobenius).det());
    c.det_dual = std::llabs(minus_identity(frobenius.transpose()).det());
    c.coinv_a = coinvariants(frobenius.rows(), {frobenius});
    c.coinv_dual = coinvariants(frobenius.rows(), {frobenius.transpose()});
    return c;
}

void GroupCounts::validate() const {
    if (rank < 0 || num_roots < 0 || dim_z_Gamma < 0 || e < 1) throw DomainError("counts out of range");
    if (dim_g_hat != rank + num_roots) throw DomainError("dim g^ != rank + #R");
    if (rk_M != dim_z_I - dim_z_Gamma) throw DomainError("rk M != dim z^I - dim z^Gamma");
    if (dim_z_Gamma > dim_z_I || dim_z_I > rank) throw DomainError("center dimensions inconsistent");
    if (num_roots % e != 0) throw DomainError("e does not divide #R");
    if (dim_G_over_A != dim_g_hat - dim_z_Gamma) throw DomainError("dim G/A inconsistent");
}

std::string QPower::to_string() const {
    std::ostringstream os;
    os << "q^(" << exponent << ") * " << factor;
    return os.str();
}

namespace {

struct TorusParts {
    IntMatrix m_frobenius;
    std::int64_t m_points = 1;
};

TorusParts torus_parts(const GroupCounts& counts, const TorusData& torus) {
    counts.validate();
    const LatticeModule& x = torus.cocharacters;
    x.validate();
    if (torus.q < 2) throw DomainError("q must be at least 2");
    IntMatrix basis = fixed_lattice(x.rank, {x.a});
    if (basis.cols() != counts.rk_M) throw DomainError("rk M disagrees with the inertia-fixed cocharacters");
    TorusParts t;
    t.m_frobenius = restrict_action(x.b, basis);
    FixedPointCount pts = torus_fixed_points(t.m_frobenius, torus.q);
    if (!pts.finite) throw DomainError("torus has infinitely many fixed points");
    t.m_points = pts.value;
    return t;
}

}  // namespace

GammaSide gamma_rhs(const GroupCounts& counts, const TorusData& torus) {
    TorusParts t = torus_parts(counts, torus);
    GammaSide g;
    int r_over_e = counts.num_roots / counts.e;
    g.epsilon_exponent = Rational(counts.dim_g_hat - counts.dim_z_I + r_over_e, 2);
    g.l1_exponent = counts.dim_z_I - counts.dim_z_Gamma;
    g.m_points = t.m_points;
    Coinvariants mfr = coinvariants(counts.rk_M, {t.m_frobenius});
    if (!mfr.finite()) throw DomainError("M_Fr is infinite");
    g.m_fr = mfr.torsion_order;
    Coinvariants sn = coinvariants(torus.cocharacters, Subgroup::Gamma);
    if (!sn.finite()) throw DomainError("S/A is not anisotropic");
    g.s_natural = sn.torsion_order;
    // |eps(0)| |L(1)| / |L(0)| / |S^natural|
    g.value.exponent = g.epsilon_exponent + g.l1_exponent;
    g.value.factor = Rational(g.m_fr) / Rational(g.s_natural) / Rational(g.m_points);
    Rational closed = Rational(counts.dim_g_hat + counts.dim_z_I + r_over_e, 2) - counts.dim_z_Gamma;
    if (closed != g.value.exponent) throw ConsistencyError("gamma exponent assembly");
    return g;
}

DegreeSide degree_lhs(const GroupCounts& counts, const TorusData& torus) {
    TorusParts t = torus_parts(counts, torus);
    const LatticeModule& x = torus.cocharacters;
    DegreeSide d;
    d.measure_exponent = Rational(counts.dim_G_over_A, 2);
    d.volume_exponent = Rational(counts.rk_M + counts.num_roots / counts.e, 2);
    auto comp = quotient_fixed_points(x.b, minus_identity(x.a));
    if (!comp) throw DomainError("X_*(S/A)_I^Fr is infinite");
    d.component_group = *comp;
    d.m_points = t.m_points;
    d.value.exponent = d.measure_exponent + d.volume_exponent;
    d.value.factor = Rational(1) / Rational(d.component_group) / Rational(d.m_points);
    return d;
}

GroupCounts gln_counts(int n) {
    if (n < 1) throw DomainError("n must be positive");
    GroupCounts c;
    c.rank = n;
    c.num_roots = n * n - n;
    c.dim_g_hat = n * n;
    c.dim_z_I = 1;
    c.dim_z_Gamma = 1;
    c.e = n;
    c.rk_M = 0;
    c.dim_G_over_A = n * n - 1;
    c.validate();
    return c;
}

TorusData gln_torus(int n, std::int64_t q) {
    PrimePower pp = PrimePower::from_q(q);
    if (n < 1) throw DomainError("n must be positive");
    if (n % pp.p == 0) throw DomainError("p divides n");
    if (n == 1) return TorusData{LatticeModule::zero(), q};
    std::vector<std::int64_t> shift(static_cast<std::size_t>(n)), frob(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        shift[static_cast<std::size_t>(i)] = (i + 1) % n;
        frob[static_cast<std::size_t>(i)] = mod(q * i, n);
    }
    LatticeModule x = LatticeModule::make(quotient_permutation(n, shift), n, quotient_permutation(n, frob),
                                          multiplicative_order(mod(q, n), n));
    return TorusData{x, q};
}

FormalReport verify_formal_gln(int n, std::int64_t q) {
    GroupCounts c = gln_counts(n);
    TorusData t = gln_torus(n, q);
    FormalReport r;
    r.rhs = gamma_rhs(c, t);
    r.lhs = degree_lhs(c, t);
    r.equal = r.rhs.value == r.lhs.value;
    return r;
}

LatticeLemmaResult lattice_lemma_check(const LatticeModule& m) {
    m.validate();
    LatticeLemmaResult res;
    if (fixed_lattice(m.rank, {m.a, m.b}).cols() > 0) {
        res.hypothesis_violated = true;
        return res;
    }
    Coinvariants cg = coinvariants(m, Subgroup::Gamma);
    if (!cg.finite()) throw ConsistencyError("M_Gamma infinite although M^Gamma = 0");
    res.coinv_gamma = cg.torsion_order;
    auto ab = quotient_fixed_points(m.b, minus_identity(m.a));
    if (!ab) throw ConsistencyError("M_A^B infinite although M^Gamma = 0");
    res.a_coinv_b_inv = *ab;
    IntMatrix na = fixed_lattice(m.rank, {m.a});
    Coinvariants abc = coinvariants(na.cols(), {restrict_action(m.b, na)});
    if (!abc.finite()) throw ConsistencyError("M^A_B infinite although M^Gamma = 0");
    res.a_inv_b_coinv = abc.torsion_order;
    res.holds = res.coinv_gamma == res.a_coinv_b_inv * res.a_inv_b_coinv;
    return res;
}

LatticeModule random_lattice_module(std::mt19937_64& rng, const RandomLatticeOptions& opt) {
    std::uniform_int_distribution<int> rank_dist(1, opt.max_rank);
    std::bernoulli_distribution coin(0.5);
    const std::int64_t limit = 64;
    while (true) {
        int r = rank_dist(rng);
        IntMatrix a, b;
        if (coin(rng)) {
            // a random, b searched among signed permutations normalizing <a>
            a = random_signed_permutation(rng, r);
            std::int64_t oa = matrix_order(a, limit);
            if (oa == 0 || oa > opt.max_order) continue;
            auto group_a = powers(a, oa);
            std::vector<IntMatrix> cands;
            for (int t = 0; t < 200 && cands.size() < 8; ++t) {
                IntMatrix c = random_signed_permutation(rng, r);
                if (contains(group_a, c * a * c.inverse_unimodular())) cands.push_back(c);
            }
            IntMatrix minus = IntMatrix::identity(r);
            for (int i = 0; i < r; ++i) minus(i, i) = -1;
            cands.push_back(minus);
            b = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
        } else {
            // cyclic group <b> with A = <b^k>
            b = random_signed_permutation(rng, r);
            std::int64_t ob = matrix_order(b, limit);
            if (ob == 0) continue;
            std::vector<std::int64_t> divs;
            for (std::int64_t k = 1; k <= ob; ++k)
                if (ob % k == 0 && k <= opt.max_order && ob / k <= opt.max_order) divs.push_back(k);
            if (divs.empty()) continue;
            a = b.pow(divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)]);
        }
        std::int64_t oa = matrix_order(a, limit);
        if (oa == 0 || oa > opt.max_order) continue;
        auto group_a = powers(a, oa);
        std::int64_t ob = 0;
        IntMatrix p = b;
        for (std::int64_t k = 1; k <= limit; ++k, p = p * b) {
            if (contains(group_a, p)) {
                ob = k;
                break;
            }
        }
        if (ob == 0 || ob > opt.max_order) continue;
        IntMatrix w = random_unimodular(rng, r);
        IntMatrix wi = w.inverse_unimodular();
        return LatticeModule::make(w * a * wi, oa, w * b * wi, ob);
    }
}

}  // namespace epikit
