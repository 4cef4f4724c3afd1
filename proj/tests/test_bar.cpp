#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/bar.hpp"
#include "brauer/verify.hpp"

#include <cstdlib>

using namespace brauer;

TEST_CASE("bar complexes satisfy d^2 = 0 across algebras and coefficients") {
    // construction runs check_d2 internally; exercise the matrix of cases
    for (int n = 1; n <= 3; ++n) {
        for (auto alg : {AlgebraKind::brauer, AlgebraKind::symmetric}) {
            BarSpec spec{alg, n, Ring::parse("Z", "2"), CoeffModule::trivial()};
            BarComplex bc(spec, n <= 2 ? 4 : 3);
            CHECK(bc.cx().rank(0) == 1);
        }
    }
    BarSpec ind{AlgebraKind::brauer, 3, Ring::parse("Z", "0"), CoeffModule::induced(2)};
    BarComplex(ind, 2);
    BarSpec quot{AlgebraKind::brauer, 3, Ring::parse("Q", "1"), CoeffModule::quotient(full_subset(3))};
    BarComplex(quot, 2);
    BarSpec alg{AlgebraKind::brauer, 2, Ring::parse("Z", "0"), CoeffModule::algebra(3)};
    BarComplex(alg, 3);
    BarSpec sind{AlgebraKind::symmetric, 3, Ring::parse("Z", "0"), CoeffModule::induced(2)};
    BarComplex(sind, 3);
}

TEST_CASE("Tor_0 is the coinvariants R for trivial coefficients") {
    for (int n = 0; n <= 3; ++n) {
        BarSpec spec{AlgebraKind::brauer, n, Ring::parse("Z", "2"), CoeffModule::trivial()};
        TorResult t = bar_tor(spec, 2);
        CHECK(t.groups[0].free_rank == 1);
        CHECK(t.groups[0].torsion.empty());
    }
}

TEST_CASE("Tor_1 of Br_2 is Z/2 + Z/delta") {
    for (auto& [delta, expect] : std::vector<std::pair<std::string, HomologyGroup>>{
             {"0", group_from_cyclics(1, {Int(2)})},
             {"2", group_from_cyclics(0, {Int(2), Int(2)})},
             {"3", group_from_cyclics(0, {Int(2), Int(3)})},
             {"5", group_from_cyclics(0, {Int(2), Int(5)})}}) {
        BarSpec spec{AlgebraKind::brauer, 2, Ring::parse("Z", delta), CoeffModule::trivial()};
        TorResult t = bar_tor(spec, 2);
        CAPTURE(delta);
        CHECK(group_iso(t.groups[1], expect));
    }
}

TEST_CASE("group homology of small symmetric groups from scratch") {
    // H_1(S_n; Z) = Z/2 for n = 2, 3, 4
    for (int n = 2; n <= 4; ++n) {
        auto h = symmetric_homology(n, 2, Ring::parse("Z", "0"));
        CAPTURE(n);
        CHECK(h[0].free_rank == 1);
        CHECK(group_iso(h[1], group_from_cyclics(0, {Int(2)})));
    }
    // H_*(S_2; Z) = Z, Z/2, 0
    auto h2 = symmetric_homology(2, 3, Ring::parse("Z", "0"));
    CHECK(h2[0].free_rank == 1);
    CHECK(group_iso(h2[1], group_from_cyclics(0, {Int(2)})));
    CHECK(h2[2].is_zero());
    // and H_3(S_2) = Z/2 for good measure of the 4-periodic pattern
    auto h4 = symmetric_homology(2, 4, Ring::parse("Z", "0"));
    CHECK(group_iso(h4[3], group_from_cyclics(0, {Int(2)})));
}

TEST_CASE("flatness failure witness: Tor_1 over Br_2 with Br_3 coefficients") {
    for (auto& [delta, expect] : std::vector<std::pair<std::string, HomologyGroup>>{
             {"0", group_from_cyclics(3, {})},
             {"2", group_from_cyclics(0, {Int(2), Int(2), Int(2)})},
             {"3", group_from_cyclics(0, {Int(3), Int(3), Int(3)})}}) {
        BarSpec spec{AlgebraKind::brauer, 2, Ring::parse("Z", delta), CoeffModule::algebra(3)};
        TorResult t = bar_tor(spec, 2);
        CAPTURE(delta);
        CHECK(group_iso(t.groups[1], expect));
    }
}

TEST_CASE("over Q with invertible delta the higher Tor vanish (Br_2)") {
    BarSpec spec{AlgebraKind::brauer, 2, Ring::parse("Q", "1"), CoeffModule::trivial()};
    TorResult t = bar_tor(spec, 3);
    CHECK(t.groups[0].free_rank == 1);
    CHECK(t.groups[1].is_zero());
    CHECK(t.groups[2].is_zero());

    BarSpec half{AlgebraKind::brauer, 2, Ring::parse("Q", "1/2"), CoeffModule::trivial()};
    TorResult th = bar_tor(half, 3);
    CHECK(th.groups[1].is_zero());
    CHECK(th.groups[2].is_zero());
}

TEST_CASE("Tor over Z/m via the integral lift") {
    // Tor_1^{Br_2(Z/6, 3)}: integral answer Z/2 + Z/3 = Z/6, full order
    BarSpec spec{AlgebraKind::brauer, 2, Ring::parse("Zmod:6", "3"), CoeffModule::trivial()};
    TorResult t = bar_tor(spec, 2);
    // H_1(C (x) Z/6) = (Z/2 + Z/3) (x) Z/6 + Tor(H_0, Z/6) = Z/6
    CHECK(t.groups[1].free_rank == 1);
    CHECK(t.groups[1].torsion.empty());

    BarSpec f2{AlgebraKind::brauer, 2, Ring::parse("Fp:2", "1"), CoeffModule::trivial()};
    TorResult t2 = bar_tor(f2, 2);
    // delta = 1 invertible in F_2: Tor_1 = H_1(S_2; F_2) = F_2
    CHECK(t2.groups[1].free_rank == 1);
}

TEST_CASE("budget guard refuses oversized requests") {
    BarSpec spec{AlgebraKind::brauer, 3, Ring::parse("Z", "0"), CoeffModule::trivial()};
    CHECK_THROWS_AS(BarComplex(spec, 3, 100.0), budget_error);
    CHECK_THROWS_AS(bar_tor(spec, 3, 100.0), budget_error);
    // environment override is honored
    setenv("BRAUER_BUDGET", "250", 1);
    CHECK(bar_budget() == 250.0);
    unsetenv("BRAUER_BUDGET");
    CHECK(bar_budget() == kDefaultBarBudget);
}

TEST_CASE("chain dimensions and tuple indexing round-trip") {
    BarSpec spec{AlgebraKind::brauer, 2, Ring::parse("Z", "0"), CoeffModule::induced(1)};
    BarComplex bc(spec, 3);
    CHECK(bc.module_dim() == 3);
    CHECK(bc.chain_dim(0) == 3);
    CHECK(bc.chain_dim(2) == 2 * 2 * 3);
    for (int k = 0; k <= 3; ++k)
        for (long i = 0; i < bc.chain_dim(k); ++i) {
            auto [tup, m] = bc.tuple_of(k, i);
            CHECK(bc.tuple_index(tup, m) == i);
        }
}
