#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epikit/toralinv.hpp"

using namespace epikit;

namespace {

// GL_n torus split over the tame extension of degree n: inertia is the
// n-cycle, Frobenius acts on indices by i -> q i.
std::shared_ptr<const GaloisRootAction> tame_action(int n, std::int64_t q) {
    std::vector<int> cyc(static_cast<std::size_t>(n)), frob(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
        frob[static_cast<std::size_t>(i)] = static_cast<int>(mod(q * i, n));
    }
    IntMatrix c = permutation_matrix(cyc);
    IntMatrix f = permutation_matrix(frob);
    return std::make_shared<const GaloisRootAction>(RootDatum::type_a(n), std::vector<IntMatrix>{c, f},
                                                    std::vector<IntMatrix>{c}, 1, true);
}

std::vector<Gauge> all_gauges(const RootDatum& d) {
    std::vector<int> pos;
    for (int i = 0; i < d.size(); ++i)
        if (d.positive(i)) pos.push_back(i);
    std::vector<Gauge> out;
    for (std::uint32_t mask = 0; mask < (1u << pos.size()); ++mask) {
        Gauge g = Gauge::positive(d);
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (mask >> k & 1u) g = g.flipped(d, pos[k]);
        out.push_back(g);
    }
    return out;
}

Coweight integral(std::vector<int> v) {
    Coweight c;
    for (int x : v) c.emplace_back(x);
    return c;
}

}  // namespace

TEST_CASE("twist data picks a swapping tau for each symmetric orbit") {
    auto a = tame_action(6, 5);
    TwistData t = TwistData::make(a);
    for (std::size_t k = 0; k < a->orbits().size(); ++k) {
        const auto& o = a->orbits()[k];
        if (!o.symmetric) {
            CHECK_THROWS_AS(t.tau(static_cast<int>(k)), DomainError);
            continue;
        }
        int g = t.tau(static_cast<int>(k));
        CHECK(a->act(g, o.representative) == a->datum().negative(o.representative));
        for (int h = 0; h < g; ++h) CHECK(a->act(h, o.representative) != a->datum().negative(o.representative));
        CHECK(t.valuation(static_cast<int>(k)) == (o.inertially_symmetric ? 1 : 0));
        for (int r : o.members) {
            int tr = t.tau_for_root(r);
            CHECK(a->act(tr, r) == a->datum().negative(r));
        }
    }
}

TEST_CASE("with_tau rejects elements that do not swap") {
    auto a = tame_action(4, 3);
    TwistData t = TwistData::make(a);
    for (std::size_t k = 0; k < a->orbits().size(); ++k) {
        const auto& o = a->orbits()[k];
        if (!o.symmetric) continue;
        CHECK_THROWS_AS(t.with_tau(static_cast<int>(k), a->identity()), DomainError);
        CHECK_THROWS_AS(t.with_tau(static_cast<int>(k), -1), DomainError);
    }
}

TEST_CASE("toral invariant is independent of gauge and tau and matches the closed form") {
    struct Case { int n; std::int64_t q; };
    for (Case c : {Case{2, 3}, Case{3, 2}, Case{3, 4}, Case{4, 3}, Case{4, 5}, Case{4, 7}, Case{5, 2}, Case{5, 4},
                   Case{6, 5}, Case{6, 7}}) {
        CAPTURE(c.n);
        CAPTURE(c.q);
        auto a = tame_action(c.n, c.q);
        TwistData base = TwistData::make(a);
        auto gauges = all_gauges(a->datum());
        for (std::size_t k = 0; k < a->orbits().size(); ++k) {
            const auto& o = a->orbits()[k];
            if (!o.symmetric) continue;
            for (int alpha : o.members) {
                int closed = toral_invariant_closed(base, alpha);
                for (int g = 0; g < a->order(); ++g) {
                    if (a->act(g, o.representative) != a->datum().negative(o.representative)) continue;
                    TwistData t = base.with_tau(static_cast<int>(k), g);
                    for (const Gauge& p : gauges) CHECK(toral_invariant_zeta(t, alpha, p) == closed);
                }
            }
        }
    }
}

TEST_CASE("coxeter action: closed form and map") {
    for (int n = 2; n <= 6; ++n) {
        for (bool ext : {false, true}) {
            auto a = std::make_shared<const GaloisRootAction>(coxeter_action(n, ext));
            TwistData t = TwistData::make(a);
            ToralInvariantMap f = toral_invariant_map(t);
            for (const auto& [k, v] : f) {
                int rep = a->orbits()[static_cast<std::size_t>(k)].representative;
                CHECK(v == toral_invariant_closed(t, rep));
            }
        }
    }
}

TEST_CASE("toral invariant domain errors") {
    auto a = tame_action(4, 3);
    TwistData t = TwistData::make(a);
    Gauge p = Gauge::positive(a->datum());
    CHECK_THROWS_AS(toral_invariant_zeta(t, -1, p), DomainError);
    CHECK_THROWS_AS(toral_invariant_zeta(t, a->datum().size(), p), DomainError);
    // not regular elliptic
    IntMatrix c = permutation_matrix({1, 2, 3, 0});
    auto b = std::make_shared<const GaloisRootAction>(RootDatum::type_a(4), std::vector<IntMatrix>{c},
                                                      std::vector<IntMatrix>{}, std::nullopt, false);
    TwistData tb = TwistData::make(b);
    for (const auto& o : b->orbits()) {
        if (o.symmetric) CHECK_THROWS_AS(toral_invariant_closed(tb, o.representative), DomainError);
    }
    // asymmetric root
    auto u = tame_action(3, 4);
    TwistData tu = TwistData::make(u);
    for (const auto& o : u->orbits()) {
        if (!o.symmetric) CHECK_THROWS_AS(toral_invariant_closed(tu, o.representative), DomainError);
    }
}

TEST_CASE("elliptic product equals the Kottwitz sign") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int n = 2; n <= 6; ++n) {
        for (bool ext : {false, true}) {
            GaloisRootAction a = coxeter_action(n, ext);
            REQUIRE(a.is_elliptic());
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<int> v(static_cast<std::size_t>(n));
                for (int& x : v) x = dist(rng);
                Coweight lam = integral(v);
                CHECK(elliptic_product(a, lam) == kottwitz_sign_from_coweight(a.datum(), lam));
            }
        }
    }
}

TEST_CASE("stable variation is multiplicative in the coweight") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int n = 2; n <= 6; ++n) {
        GaloisRootAction a = coxeter_action(n, true);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> v(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                v[static_cast<std::size_t>(i)] = dist(rng);
                w[static_cast<std::size_t>(i)] = dist(rng);
                s[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(i)];
            }
            for (const auto& o : a.orbits()) {
                if (!o.symmetric) continue;
                int r = o.representative;
                CHECK(stable_variation(a, integral(s), r) ==
                      stable_variation(a, integral(v), r) * stable_variation(a, integral(w), r));
            }
        }
    }
}

TEST_CASE("stable variation rejects non-lattice coweights") {
    GaloisRootAction a = coxeter_action(4, true);
    Coweight half{Rational(1, 2), Rational(0), Rational(0), Rational(0)};
    for (const auto& o : a.orbits())
        if (o.symmetric) CHECK_THROWS_AS(stable_variation(a, half, o.representative), DomainError);
    GaloisRootAction split = GaloisRootAction(RootDatum::type_a(3), {IntMatrix::identity(3)}, {}, std::nullopt, false);
    CHECK_THROWS_AS(elliptic_product(split, integral({1, 0, 0})), DomainError);
}

TEST_CASE("epsilon_f on active sets") {
    ToralInvariantMap f{{0, -1}, {2, 1}, {3, -1}};
    CHECK(epsilon_f_value(f, {}, ElementKind::top_semisimple) == 1);
    CHECK(epsilon_f_value(f, {0}, ElementKind::top_semisimple) == -1);
    CHECK(epsilon_f_value(f, {0, 3}, ElementKind::top_semisimple) == 1);
    CHECK(epsilon_f_value(f, {0, 2}, ElementKind::top_unipotent) == 1);
    CHECK_THROWS_AS(epsilon_f_value(f, {1}, ElementKind::top_semisimple), DomainError);
}
