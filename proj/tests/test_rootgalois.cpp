#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "epikit/intmat.hpp"
#include "epikit/rootgalois.hpp"

using namespace epikit;

namespace {

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

IntMatrix neg_identity(int n) {
    IntMatrix m = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) m(i, i) = -1;
    return m;
}

}  // namespace

TEST_CASE("smith form basics") {
    CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
    CHECK(smith_invariants(IntMatrix::identity(4)) == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(smith_invariants(IntMatrix{{2, 0, 1}, {0, 2, -1}}) == std::vector<std::int64_t>{1, 2});
    IntMatrix m{{4, 6, 2}, {2, 8, 10}, {6, 2, 4}};
    SmithForm s = smith_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.V * s.Vinv == IntMatrix::identity(3));
    CHECK(std::llabs(s.U.det()) == 1);
    CHECK(std::llabs(m.det()) == s.diag[0] * s.diag[1] * s.diag[2]);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
}

TEST_CASE("smith form random") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> v(-5, 5), dim(1, 5);
    for (int t = 0; t < 300; ++t) {
        int r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = v(rng);
        SmithForm s = smith_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(s.V * s.Vinv == IntMatrix::identity(c));
        CHECK(std::llabs(s.U.det()) == 1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        for (int i = 0; i + 1 < s.rank; ++i) CHECK(s.diag[static_cast<std::size_t>(i + 1)] % s.diag[static_cast<std::size_t>(i)] == 0);
        IntMatrix k = kernel_basis(m);
        CHECK(k.cols() == c - s.rank);
        if (k.cols() > 0) CHECK(m * k == IntMatrix(r, k.cols()));
    }
}

TEST_CASE("type A datum") {
    RootDatum d = RootDatum::type_a(3);
    CHECK(d.size() == 6);
    for (int r = 0; r < d.size(); ++r) {
        auto [i, j] = d.pair_of(r);
        CHECK(d.pair_index(i, j) == r);
        CHECK(d.positive(r) == (i < j));
    }
    CHECK(d.two_rho() == IntVec{2, 0, -2});
}

TEST_CASE("B2 datum from lists") {
    std::vector<IntVec> roots{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    std::vector<IntVec> coroots{{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    std::vector<bool> pos{true, false, true, false, true, false, true, false};
    RootDatum d = RootDatum::from_lists(2, roots, coroots, pos);
    GaloisRootAction a(d, {neg_identity(2)}, {neg_identity(2)});
    CHECK(a.orbits().size() == 4);
    for (auto& o : a.orbits()) CHECK(o.inertially_symmetric);
    CHECK(a.is_elliptic());
    std::vector<IntVec> bad = coroots;
    bad[0] = {1, 0};
    CHECK_THROWS_AS(RootDatum::from_lists(2, roots, bad, pos), DomainError);
}

TEST_CASE("orbit classification examples") {
    SUBCASE("A1 with +-1") {
        GaloisRootAction a(RootDatum::type_a(2), {neg_identity(2)}, {neg_identity(2)}, std::nullopt, true);
        REQUIRE(a.orbits().size() == 1);
        CHECK(a.orbits()[0].symmetric);
        CHECK(a.orbits()[0].inertially_symmetric);
        CHECK(a.orbits()[0].index == 2);
    }
    SUBCASE("A2 Coxeter with sign") {
        GaloisRootAction a = coxeter_action(3, true);
        REQUIRE(a.orbits().size() == 1);
        CHECK(a.orbits()[0].members.size() == 6);
        CHECK(a.orbits()[0].symmetric);
        CHECK_FALSE(a.orbits()[0].inertially_symmetric);
        CHECK(a.order() == 6);
    }
    SUBCASE("GL4 with s and Q = 3") {
        RootDatum d = RootDatum::type_a(4);
        IntMatrix s = permutation_matrix({1, 2, 3, 0});
        IntMatrix q = permutation_matrix({0, 3, 2, 1});
        GaloisRootAction a(d, {s, q}, {s}, 1, true);
        int r02 = d.pair_index(0, 2);
        const RootOrbit& o = a.orbits()[static_cast<std::size_t>(a.orbit_of(r02))];
        CHECK(o.symmetric);
        CHECK(o.inertially_symmetric);
        int inert_sym = 0;
        for (auto& x : a.orbits()) inert_sym += x.inertially_symmetric;
        CHECK(inert_sym == 1);
    }
}

TEST_CASE("orbit flags invariants") {
    for (int n = 2; n <= 6; ++n) {
        for (bool sgn : {false, true}) {
            GaloisRootAction a = coxeter_action(n, sgn);
            std::vector<int> seen(static_cast<std::size_t>(a.datum().size()), 0);
            for (auto& o : a.orbits()) {
                if (o.inertially_symmetric) CHECK(o.symmetric);
                bool has_neg = std::count(o.members.begin(), o.members.end(), a.datum().negative(o.representative)) > 0;
                CHECK(o.symmetric == has_neg);
                CHECK(o.index == (o.symmetric ? 2 : 1));
                int rep = o.representative;
                CHECK(static_cast<int>(a.pm_stabilizer(rep).size()) == o.index * static_cast<int>(a.stabilizer(rep).size()));
                for (int m : o.members) {
                    ++seen[static_cast<std::size_t>(m)];
                    CHECK(!(a.datum().root(m) < a.datum().root(rep)));
                }
            }
            for (int c : seen) CHECK(c == 1);
            CHECK(a.is_elliptic());
        }
    }
}

TEST_CASE("action validation errors") {
    RootDatum d = RootDatum::type_a(3);
    IntMatrix bad{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(GaloisRootAction(d, {bad}, {}), DomainError);
    IntMatrix shear{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(GaloisRootAction(d, {shear}, {}), DomainError);
    // swap is not regular elliptic in A2
    IntMatrix sw = permutation_matrix({1, 0, 2});
    CHECK_THROWS_AS(GaloisRootAction(d, {sw}, {sw}, std::nullopt, true), DomainError);
    // non-normal inertia: <transposition> inside S3
    IntMatrix c = permutation_matrix({1, 2, 0});
    CHECK_THROWS_AS(GaloisRootAction(d, {c, sw}, {sw}), DomainError);
}

TEST_CASE("gauges") {
    RootDatum d = RootDatum::type_a(4);
    Gauge p = Gauge::positive(d);
    for (int r = 0; r < d.size(); ++r) CHECK(p(d.negative(r)) == -p(r));
    std::vector<int> bad(static_cast<std::size_t>(d.size()), 1);
    CHECK_THROWS_AS(Gauge::from_values(d, bad), DomainError);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Gauge q = p;
        for (int r = 0; r < d.size(); ++r)
            if (d.positive(r) && (rng() & 1)) q = q.flipped(d, r);
        auto path = gauge_path(d, p, q);
        Gauge cur = p;
        for (int r : path) cur = cur.flipped(d, r);
        CHECK(cur == q);
    }
}

TEST_CASE("springer lift examples") {
    CHECK(springer_lift(std::vector<int>{}, 3) == TorusMonomialElement::identity(3));
    TorusMonomialElement s1 = springer_lift(std::vector<int>{1}, 2);
    CHECK(s1.perm() == std::vector<int>{1, 0});
    CHECK(s1.signs() == std::vector<int>{1, -1});
    CHECK(springer_lift(std::vector<int>{1, 2, 1}, 3) == springer_lift(std::vector<int>{2, 1, 2}, 3));
    CHECK_THROWS_AS(springer_lift(std::vector<int>{1, 1}, 3), DomainError);
    CHECK_THROWS_AS(springer_lift(std::vector<int>{3}, 3), DomainError);
}

TEST_CASE("springer lift word independence and cocycle defect") {
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_perms(n);
        for (auto& p : perms) {
            TorusMonomialElement ref = springer_lift(p);
            CHECK(ref.perm() == p);
            CHECK(permutation_of_word(canonical_reduced_word(p), n) == p);
            auto words = all_reduced_words(p);
            if (n <= 4) {
                for (auto& w : words) CHECK(springer_lift(w, n) == ref);
            } else {
                CHECK(springer_lift(words.front(), n) == ref);
                CHECK(springer_lift(words.back(), n) == ref);
            }
        }
        for (auto& a : perms) {
            for (auto& b : perms) {
                TorusMonomialElement d = springer_lift(compose(a, b)).inverse() * springer_lift(a) * springer_lift(b);
                CHECK(d.is_diagonal());
                CHECK_NOTHROW(d.signs());
            }
        }
    }
}

TEST_CASE("strip defect") {
    CHECK(strip_defect({1, 0}) == std::vector<int>{1, -1});
    CHECK(strip_defect({0, 1, 2}) == std::vector<int>{1, 1, 1});
    for (int n = 1; n <= 6; ++n) {
        for (auto& p : all_perms(n)) {
            auto m = strip_defect(p);
            CHECK(m == strip_defect_closed(p));
            CHECK(m[0] == 1);
        }
    }
}

TEST_CASE("monomial group law") {
    std::mt19937_64 rng(11);
    auto rnd = [&](int n) {
        auto ps = all_perms(n);
        std::vector<RootOfUnity> d;
        for (int i = 0; i < n; ++i) d.emplace_back(12, static_cast<std::int64_t>(rng() % 12));
        return TorusMonomialElement(ps[rng() % ps.size()], d);
    };
    for (int t = 0; t < 100; ++t) {
        auto a = rnd(4), b = rnd(4), c = rnd(4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == TorusMonomialElement::identity(4));
        CHECK((a * b).strip() == a.strip() * b.strip());
    }
}

TEST_CASE("two rho pairing") {
    RootDatum d = RootDatum::type_a(2);
    CHECK(two_rho_pairing(d, {Rational(1, 2), Rational(-1, 2)}) == 1);
    CHECK(two_rho_pairing(d, {Rational(0), Rational(0)}) == 0);
    CHECK(two_rho_pairing(d, {Rational(1), Rational(-1)}) == 2);
    CHECK_THROWS_AS(two_rho_pairing(d, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(two_rho_pairing(d, {Rational(1, 3), Rational(0)}), DomainError);
    CHECK_FALSE(in_coweight_lattice(d, {Rational(1, 3), Rational(0)}));
}
