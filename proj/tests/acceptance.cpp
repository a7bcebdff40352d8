// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "epikit/chidata.hpp"
#include "epikit/formaldeg.hpp"
#include "epikit/glnllc.hpp"
#include "epikit/toralinv.hpp"

using namespace epikit;

namespace {

constexpr double kRectiSeconds = 60.0;
constexpr double kResidualTolerance = 1e-6;
constexpr std::int64_t kModelFieldBound = 1'000'000'000'000;
constexpr int kGaugeFlips = 100;
constexpr int kCoweightsPerAction = 200;
constexpr int kLatticeInstances = 500;

struct Tally {
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    std::string first_failure;
    std::string note;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (failed == 0) first_failure = what;
        ++failed;
    }
};

bool valid_gln_q(int n, std::int64_t q) {
    auto pp = prime_power_split(static_cast<std::uint64_t>(q));
    return pp && pp->first != 2 && n % static_cast<int>(pp->first) != 0;
}

std::vector<std::int64_t> odd_prime_powers(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 3; q <= bound; ++q) {
        auto pp = prime_power_split(static_cast<std::uint64_t>(q));
        if (pp && pp->first != 2) out.push_back(q);
    }
    return out;
}

std::string tag(int n, std::int64_t q) { return "n=" + std::to_string(n) + " q=" + std::to_string(q); }

int minus_one_symbol(std::int64_t q) { return ((q - 1) / 2) % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------- 1

Tally c1_recti() {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 12; ++n) {
        for (std::int64_t q = 3; q <= 49; ++q) {
            if (!valid_gln_q(n, q)) continue;
            auto k = build_field(PrimePower::from_q(q));
            for (int s = 0; s < 3; ++s) {
                std::int64_t tame = std::uniform_int_distribution<std::int64_t>(0, q - 2)(rng);
                std::int64_t om = std::uniform_int_distribution<std::int64_t>(0, 2 * (q - 1) - 1)(rng);
                auto pair = AdmissiblePairData::make(n, q, 1, RootOfUnity(2 * (q - 1), om), tame);
                for (const auto& c : k->units()) {
                    pair.c = c;
                    t.expect(verify_recti(pair).equal, tag(n, q) + " c=" + c.to_string());
                }
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os.precision(3);
    os << secs << " s";
    t.note = os.str();
    t.expect(secs < kRectiSeconds, "runtime " + os.str());
    return t;
}

// ---------------------------------------------------------------- 2

Tally c2_zolotarev() {
    Tally t;
    for (int n = 1; n <= 99; n += 2)
        for (std::int64_t q = 1; q <= 97; ++q) {
            if (std::gcd(q, static_cast<std::int64_t>(n)) != 1) continue;
            int j = n == 1 ? 1 : jacobi(q, n);
            t.expect(sgn_q_mod_n(n, q) == j, tag(n, q));
        }
    return t;
}

// ---------------------------------------------------------------- 3

Tally c3_lambda_tower() {
    Tally t;
    for (int n = 2; n <= 40; n += 2)
        for (std::int64_t q = 3; q <= 49; ++q) {
            if (!valid_gln_q(n, q)) continue;
            LambdaTower lt = lambda_tower_detail(n, q, 1);
            int branch = 1;
            for (int i = 0; i < n / 2 - 1; ++i) branch *= minus_one_symbol(q);
            auto k = build_field(PrimePower::from_q(q));
            RootOfUnity lam = lambda_quadratic(ExtensionKind::ramified, AdditiveCharacter(k->from_integer(n / 2)));
            t.expect(sgn_q_mod_n(n, q) == branch, tag(n, q) + " sgn");
            t.expect(lt.value == RootOfUnity::sign(branch) * lam, tag(n, q) + " value");
        }
    return t;
}

// ---------------------------------------------------------------- 4

Tally c4_sbp_rpa() {
    Tally t;
    for (int n = 2; n <= 12; ++n)
        for (std::int64_t q = 3; q <= 49; ++q) {
            if (!valid_gln_q(n, q)) continue;
            auto pair = AdmissiblePairData::make(n, q, 1);
            GLnChiData chi = gln_chi_data(pair);
            DaggerData d = dagger_orbits(n, q);
            for (std::int64_t a : d.xi) {
                std::string w = tag(n, q) + " a=" + std::to_string(a);
                for (GammaElt sigma : {GammaElt{1, 0}, GammaElt{0, 1}}) {
                    t.expect(s_bp_value(n, q, a, sigma).chi0 == s_bp_closed(n, q, a, sigma), w + " s_bp");
                }
                if (d.orbit_of(a).type != DaggerType::symmetric_singleton) {
                    for (GammaElt sigma : {GammaElt{1, 0}, GammaElt{0, 1}})
                        t.expect(r_pxa_value(n, q, a, WToken::gamma(sigma), chi) == RootOfUnity::one(), w + " r_pxa");
                    continue;
                }
                t.expect(r_pxa_value(n, q, a, WToken::uniformizer(), chi) == chi.singleton(1, std::nullopt), w + " r(omega)");
                for (const auto& u : pair.k->units()) {
                    t.expect(r_pxa_value(n, q, a, WToken::unit_of(u), chi) == chi.singleton(0, u), w + " r(u)");
                    t.expect(r_pxa_value(n, q, a, WToken::uniformizer(u), chi) == chi.singleton(1, u), w + " r(u omega)");
                    t.expect(r_pxa_value(n, q, a, WToken::wild_of(u), chi) == RootOfUnity::one(), w + " r(1 + omega y)");
                }
            }
        }
    return t;
}

// ---------------------------------------------------------------- 5

// Random reduced word by peeling off random right descents.
std::vector<int> random_reduced_word(std::vector<int> perm, std::mt19937_64& rng) {
    std::vector<int> word;
    for (;;) {
        std::vector<int> desc;
        for (std::size_t i = 1; i < perm.size(); ++i)
            if (perm[i - 1] > perm[i]) desc.push_back(static_cast<int>(i));
        if (desc.empty()) break;
        int i = desc[std::uniform_int_distribution<std::size_t>(0, desc.size() - 1)(rng)];
        std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
        word.push_back(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Tally c5_stdspr() {
    Tally t;
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            std::string w = "perm n=" + std::to_string(n);
            auto m = strip_defect(p);
            t.expect(m == strip_defect_closed(p), w + " defect");
            t.expect(m[0] == 1, w + " chi0");
            TorusMonomialElement ref = springer_lift(p);
            t.expect(ref.perm() == p, w + " lift");
            if (n <= 4) {
                for (const auto& word : all_reduced_words(p)) t.expect(springer_lift(word, n) == ref, w + " word");
            } else {
                for (int s = 0; s < 8; ++s) {
                    auto word = random_reduced_word(p, rng);
                    bool reduced = permutation_of_word(word, n) == p && static_cast<int>(word.size()) == inversion_count(p);
                    t.expect(reduced && springer_lift(word, n) == ref, w + " sampled word");
                }
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return t;
}

// ---------------------------------------------------------------- 6

void toral_case(Tally& t, std::shared_ptr<const GaloisRootAction> a, const std::string& name, bool gln, std::mt19937_64& rng) {
    TwistData twist = TwistData::make(a);
    const RootDatum& d = a->datum();
    std::vector<int> pos;
    for (int i = 0; i < d.size(); ++i)
        if (d.positive(i)) pos.push_back(i);
    std::vector<Gauge> gauges{Gauge::positive(d)};
    for (int k = 0; k < kGaugeFlips; ++k)
        gauges.push_back(gauges.back().flipped(d, pos[std::uniform_int_distribution<std::size_t>(0, pos.size() - 1)(rng)]));
    for (const auto& o : a->orbits()) {
        if (!o.symmetric) continue;
        int closed = toral_invariant_closed(twist, o.representative);
        t.expect(toral_invariant_zeta(twist, o.representative, gauges.front()) == closed, name + " zeta");
        for (const auto& g : gauges) t.expect(toral_invariant_zeta(twist, o.representative, g) == closed, name + " gauge");
        if (!o.inertially_symmetric) t.expect(closed == 1, name + " vanishing");
        if (gln) t.expect(closed == 1, name + " GL_n");
    }
}

Tally c6_toral() {
    Tally t;
    std::mt19937_64 rng(6);
    for (int n = 2; n <= 6; ++n)
        for (bool sign : {false, true})
            toral_case(t, std::make_shared<const GaloisRootAction>(coxeter_action(n, sign)),
                       "A" + std::to_string(n - 1) + (sign ? "+-" : ""), false, rng);
    for (int n = 2; n <= 12; ++n)
        for (std::int64_t q = 3; q <= 49; ++q)
            if (valid_gln_q(n, q))
                toral_case(t, std::make_shared<const GaloisRootAction>(gln_root_action(n, q)), tag(n, q), true, rng);
    return t;
}

// ---------------------------------------------------------------- 7

Tally c7_elliptic() {
    Tally t;
    std::mt19937_64 rng(7);
    std::vector<std::pair<std::string, GaloisRootAction>> actions;
    for (int n = 2; n <= 6; ++n)
        for (bool sign : {false, true}) actions.emplace_back("A" + std::to_string(n - 1) + (sign ? "+-" : ""), coxeter_action(n, sign));
    for (int n = 2; n <= 8; ++n)
        for (std::int64_t q : {3, 5, 7, 9, 11, 13})
            if (valid_gln_q(n, q)) actions.emplace_back(tag(n, q), gln_root_action(n, q));
    int elliptic = 0;
    for (const auto& [name, a] : actions) {
        if (!a.is_elliptic()) continue;
        ++elliptic;
        const int n = a.datum().rank();
        std::uniform_int_distribution<int> ints(-5, 5);
        for (int k = 0; k < kCoweightsPerAction; ++k) {
            // adjoint: lambda_i - lambda_j integral
            Rational shift(std::uniform_int_distribution<int>(0, n - 1)(rng), n);
            Coweight lam;
            for (int i = 0; i < n; ++i) lam.push_back(shift + ints(rng));
            // <2 rho, lambda> = sum_i (n - 1 - 2i) lambda_i
            Rational two_rho(0);
            for (int i = 0; i < n; ++i) two_rho += Rational(n - 1 - 2 * i) * lam[static_cast<std::size_t>(i)];
            int expect = (two_rho.numerator() % 2 == 0) ? 1 : -1;
            t.expect(two_rho.denominator() == 1 && elliptic_product(a, lam) == expect, name);
        }
    }
    t.note = std::to_string(elliptic) + " elliptic actions";
    t.expect(elliptic > 0, "no elliptic action");
    return t;
}

// ---------------------------------------------------------------- 8

Tally c8_chidata() {
    Tally t;
    for (int n = 2; n <= 12; ++n)
        for (std::int64_t q = 3; q <= 49; ++q) {
            if (!valid_gln_q(n, q)) continue;
            auto k = build_field(PrimePower::from_q(q));
            for (const auto& c : k->units()) {
                auto pair = AdmissiblePairData::make(n, q, 1);
                pair.c = c;
                GLnChiData chi = gln_chi_data(pair);
                std::string w = tag(n, q) + " c=" + c.to_string();
                t.expect(chi.family.report.ok(), w + " axioms");
                for (const auto& [orbit, x] : chi.family.data) {
                    if (x.kind != OrbitKind::symmetric_ramified) continue;
                    t.expect(x(2, k->one()) == RootOfUnity::sign(minus_one_symbol(q)), w + " chi(omega^2)");
                    for (const auto& u : k->units())
                        t.expect(x(1, u) == x(1, k->one()) * RootOfUnity::sign(quadratic_symbol(u)), w + " teichmuller");
                }
            }
        }
    return t;
}

// ---------------------------------------------------------------- 9

Tally c9_gauss() {
    Tally t;
    double worst = 0;
    for (std::int64_t q : odd_prime_powers(199)) {
        auto k = build_field(PrimePower::from_q(q));
        auto eta = MultiplicativeCharacter::quadratic(k);
        int m1 = minus_one_symbol(q);
        for (const auto& u : k->units()) {
            auto g = gauss_sum(eta, AdditiveCharacter(u));
            std::int64_t N = g.conductor();
            t.expect(g * g.conjugate() == CyclotomicInteger::integer(N, q), "q=" + std::to_string(q) + " norm");
            t.expect(g * g == CyclotomicInteger::integer(N, m1 * q), "q=" + std::to_string(q) + " square");
            LambdaValue lv = lambda_quadratic_detail(ExtensionKind::ramified, AdditiveCharacter(u));
            worst = std::max(worst, lv.residual);
            t.expect(lv.residual < kResidualTolerance, "q=" + std::to_string(q) + " residual");
        }
        auto psi = AdditiveCharacter::standard(k);
        for (std::int64_t d = 3; d <= 6; ++d) {
            if ((q - 1) % d) continue;
            auto g = gauss_sum(MultiplicativeCharacter(k, (q - 1) / d), psi);
            t.expect(g * g.conjugate() == CyclotomicInteger::integer(g.conductor(), q),
                     "q=" + std::to_string(q) + " order " + std::to_string(d));
        }
    }
    std::ostringstream os;
    os << "max residual " << worst;
    t.note = os.str();
    return t;
}

// ---------------------------------------------------------------- 10

Tally c10_formal() {
    Tally t;
    for (int n = 2; n <= 12; ++n)
        for (std::int64_t q = 3; q <= 49; ++q) {
            if (!valid_gln_q(n, q)) continue;
            FormalReport r = verify_formal_gln(n, q);
            t.expect(r.equal && r.rhs.value == r.lhs.value, tag(n, q) + " sides");
            t.expect(r.rhs.value.exponent == Rational(n * n + n - 2, 2) && r.rhs.value.factor == Rational(1, n),
                     tag(n, q) + " value");
        }
    return t;
}

// ---------------------------------------------------------------- 11

Tally c11_lattice() {
    Tally t;
    std::mt19937_64 rng(42);
    int accepted = 0, flagged = 0;
    while (accepted < kLatticeInstances) {
        LatticeModule m = random_lattice_module(rng);
        t.expect(m.rank <= 5 && m.order_a <= 6 && m.order_b <= 6, "bounds");
        LatticeLemmaResult r = lattice_lemma_check(m);
        IntMatrix fixed = fixed_lattice(m.rank, {m.a, m.b});
        if (r.hypothesis_violated) {
            ++flagged;
            bool witness = fixed.cols() > 0;
            if (witness) {
                auto v = fixed.column(0);
                witness = m.a * v == v && m.b * v == v;
            }
            t.expect(witness, "flagged without a fixed vector");
            continue;
        }
        t.expect(fixed.cols() == 0, "unflagged with a fixed vector");
        ++accepted;
        t.expect(r.holds && r.coinv_gamma == r.a_coinv_b_inv * r.a_inv_b_coinv, "instance " + std::to_string(accepted));
    }
    t.note = std::to_string(accepted) + " instances, " + std::to_string(flagged) + " flagged";
    return t;
}

// ---------------------------------------------------------------- 12

Tally c12_paircmp() {
    Tally t;
    int exhaustive = 0, sampled = 0;
    for (int n = 2; n <= 8; ++n)
        for (std::int64_t q = 3; q <= 49; ++q) {
            if (!valid_gln_q(n, q)) continue;
            auto pair = AdmissiblePairData::make(n, q, 1, RootOfUnity(2 * (q - 1), 1), 1);
            ParameterModelReport r = parameter_model(pair, 12, kModelFieldBound);
            (r.exhaustive ? exhaustive : sampled) += 1;
            t.expect(r.ok() && r.dimension == n, tag(n, q));
        }
    t.note = std::to_string(exhaustive) + " exhaustive, " + std::to_string(sampled) + " sampled";
    return t;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
        {"recti: chi_S = xi mu_xi", c1_recti},
        {"Zolotarev: sgn = Jacobi", c2_zolotarev},
        {"lambda tower branches", c3_lambda_tower},
        {"s_bp / r_pxa closed forms", c4_sbp_rpa},
        {"strip defect and springer lift", c5_stdspr},
        {"toral invariant suite", c6_toral},
        {"elliptic product", c7_elliptic},
        {"chi-data axioms", c8_chidata},
        {"Gauss sums and lambda residual", c9_gauss},
        {"formal degree for GL_n", c10_formal},
        {"lattice lemma", c11_lattice},
        {"parameter model traces", c12_paircmp},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        try {
            t = criteria[i].second();
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        bool ok = t.failed == 0;
        failures += !ok;
        std::printf("%s %2zu %-32s %lld checks", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    static_cast<long long>(t.checked));
        if (!t.note.empty()) std::printf(", %s", t.note.c_str());
        if (!ok) std::printf("; %lld failed, first: %s", static_cast<long long>(t.failed), t.first_failure.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
