#include "oracles.hpp"
#include "mplt/twisted.hpp"

#include <doctest.h>

using namespace mplt;

TEST_SUITE("twisted") {

TEST_CASE("automorphism types") {
    auto a1 = build_root_system("A1");
    CHECK(make_aut(*a1, {1, 1}).m == 2);
    CHECK(identity_aut(*a1).is_identity());
    CHECK_THROWS_AS(make_aut(*a1, {2, 2}), Error);
    CHECK_THROWS_AS(make_aut(*a1, {0, 0}), Error);
    CHECK_THROWS_AS(make_aut(*a1, {1, -1}), Error);
    CHECK_THROWS_AS(make_aut(*a1, {1}), Error);
    auto g2 = build_root_system("G2");
    CHECK(make_aut(*g2, {0, 0, 1}).m == 2);
    for (const auto& a : inner_auts(*g2, 6)) CHECK(a.m <= 6);
}

TEST_CASE("eigenspace dimensions") {
    auto a1 = build_root_system("A1");
    CHECK(eigenspace_dims(*a1, identity_aut(*a1)).dims == std::vector<int>{3});
    CHECK(eigenspace_dims(*a1, make_aut(*a1, {1, 1})).dims == std::vector<int>{1, 2});
    auto a2 = build_root_system("A2");
    CHECK(eigenspace_dims(*a2, make_aut(*a2, {1, 1, 1})).dims == std::vector<int>{2, 3, 3});
}

TEST_CASE("rho_sigma") {
    for (auto l : {"A3", "B2", "G2"}) {
        auto rs = build_root_system(l);
        CHECK(rho_sigma(*rs, identity_aut(*rs)) == rs->rho);
    }
    auto a1 = build_root_system("A1");
    CHECK(rho_sigma(*a1, make_aut(*a1, {1, 1})).is_zero());
    auto a2 = build_root_system("A2");
    CHECK(rho_sigma(*a2, make_aut(*a2, {1, 1, 1})).is_zero());
}

TEST_CASE("z constant") {
    auto a1 = build_root_system("A1");
    CHECK(z_const(eigenspace_dims(*a1, identity_aut(*a1))) == 0);
    CHECK(z_const(eigenspace_dims(*a1, make_aut(*a1, {1, 1}))) == frac(1, 8));
    auto a2 = build_root_system("A2");
    CHECK(z_const(eigenspace_dims(*a2, make_aut(*a2, {1, 1, 1}))) == frac(1, 3));
}

TEST_CASE("lambda_s") {
    auto a1 = build_root_system("A1", Normalization::Killing);
    CHECK(lambda_s(*a1, identity_aut(*a1)).is_zero());
    CHECK(lambda_s(*a1, make_aut(*a1, {1, 1})) == a1->rho);
    auto a2 = build_root_system("A2", Normalization::Killing);
    CHECK(lambda_s(*a2, make_aut(*a2, {1, 1, 1})) == a2->rho);
    auto plain = build_root_system("A1");
    CHECK_THROWS_AS(lambda_s(*plain, identity_aut(*plain)), Error);
}

TEST_CASE("very strange formula") {
    auto a1 = build_root_system("A1", Normalization::Killing);
    CHECK(a1->norm2(a1->rho) == frac(3, 24));
    CHECK(verify_vsf(*a1, identity_aut(*a1)) == 0);
    CHECK(verify_vsf(*a1, make_aut(*a1, {1, 1})) == 0);
    auto a2 = build_root_system("A2", Normalization::Killing);
    CHECK(verify_vsf(*a2, make_aut(*a2, {1, 1, 1})) == 0);
    for (auto l : {"B3", "C3", "G2", "D4"}) {
        auto rs = build_root_system(l, Normalization::Killing);
        for (const auto& a : inner_auts(*rs, 5)) CHECK(verify_vsf(*rs, a) == 0);
    }
}

TEST_CASE("generalized strange identity") {
    auto a1 = build_root_system("A1");
    auto t = pair_from_roots(a1, {});
    CHECK(a1->norm2(a1->rho) == frac(1, 2));
    CHECK(verify_masterrho(t, identity_aut(*a1)) == 0);
    CHECK(verify_masterrho(full_pair(a1), identity_aut(*a1)) == 0);

    // so7 > so6 with the involution fixing it
    auto b3 = build_root_system("B3");
    auto so6 = borel_de_siebenthal(b3, {3});
    auto inv = make_aut(*b3, {0, 0, 0, 1});
    CHECK(inv.m == 2);
    CHECK(eigenspace_dims(*b3, inv).dims[0] == 15);
    CHECK(verify_masterrho(so6, inv) == 0);
    CHECK(central_charge(so6, 0) == 0);

    for (auto l : {"G2", "B2", "A3"}) {
        auto rs = build_root_system(l);
        for (const auto& p : equal_rank_pairs(rs))
            for (const auto& a : inner_auts(*rs, 3)) CHECK(verify_masterrho(p, a) == 0);
    }
}

TEST_CASE("identity with a weight") {
    auto g2 = build_root_system("G2");
    auto a2 = borel_de_siebenthal(g2, {1});
    for (const auto& lam : dominant_weights_up_to_height(*g2, 2)) CHECK(verify_masternok(a2, identity_aut(*g2), lam, 1) == 0);
    CHECK(verify_masternok(full_pair(g2), identity_aut(*g2), Weight{1, 1}, 1) == 0);
    auto a1 = build_root_system("A1");
    auto t = pair_from_roots(a1, {});
    CHECK(verify_masternok(t, identity_aut(*a1), Weight{-1}, 1) == 0);
    try {
        verify_masternok(t, identity_aut(*a1), Weight{0}, 1);
        FAIL("precondition not enforced");
    } catch (const Error& e) {
        CHECK(e.kind == "precondition");
    }
}

TEST_CASE("central charge") {
    auto g2 = build_root_system("G2");
    CHECK(central_charge(full_pair(g2), 0) == 0);
    CHECK(central_charge(borel_de_siebenthal(g2, {1}), 0) == 1);
    CHECK(central_charge(borel_de_siebenthal(g2, {2}), 0) == 0);
    CHECK_THROWS_AS(central_charge(full_pair(g2), -4), Error);
}

TEST_CASE("affine Weyl vector relation") {
    for (auto l : {"A2", "C3", "G2", "F4"}) {
        auto rs = build_root_system(l);
        for (const auto& a : inner_auts(*rs, 4))
            for (const auto& r : rhoalfai_residuals(*rs, a)) CHECK(r == 0);
    }
}

}
