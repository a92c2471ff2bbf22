#include "oracles.hpp"

#include <doctest.h>

using namespace mplt;

TEST_SUITE("pairs") {

TEST_CASE("borel-de siebenthal steps") {
    auto f4 = build_root_system("F4");
    auto b4 = borel_de_siebenthal(f4, {4});
    CHECK(b4.label() == "F4>B4");
    CHECK(b4.sub_roots.size() == 32);
    CHECK(oracle::closed_and_symmetric(*f4, b4.sub_roots));
    CHECK(borel_de_siebenthal(f4, {1}).label() == "F4>A1+C3");

    auto g2 = build_root_system("G2");
    auto a2 = borel_de_siebenthal(g2, {1});
    CHECK(a2.label() == "G2>A2");
    CHECK(a2.sub_roots.size() == 6);
    for (const auto& a : a2.sub_roots) CHECK(g2->norm2(a) == 2);
    CHECK(borel_de_siebenthal(g2, {2}).label() == "G2>A1+A1");

    // two steps: the second removes a node of the new extended diagram
    CHECK(borel_de_siebenthal(f4, {4, 0}).sub_roots == b4.sub_roots);
    bool d4 = false;
    for (int j = 1; j <= 4; ++j) {
        auto p = borel_de_siebenthal(f4, {4, j});
        CHECK(oracle::closed_and_symmetric(*f4, p.sub_roots));
        d4 = d4 || p.label() == "F4>D4";
    }
    CHECK(d4);

    CHECK_THROWS_AS(borel_de_siebenthal(f4, {7}), Error);
}

TEST_CASE("every BdS one-step result is closed") {
    for (auto l : {"A3", "B4", "C4", "D4", "G2", "F4"}) {
        auto rs = build_root_system(l);
        for (int i = 0; i <= rs->rank; ++i) {
            auto p = borel_de_siebenthal(rs, {i});
            CAPTURE(p.label());
            CHECK(oracle::closed_and_symmetric(*rs, p.sub_roots));
            CHECK(p.sub_simple.size() + p.center_dim == static_cast<std::size_t>(rs->rank));
        }
    }
}

TEST_CASE("torus pair") {
    auto a1 = build_root_system("A1");
    auto t = pair_from_roots(a1, {});
    CHECK(t.sub_roots.empty());
    CHECK(t.p_roots.size() == 2);
    CHECK(t.center_dim == 1);
    REQUIRE(t.r_vee);
    CHECK(t.r_vee->is_zero());
    CHECK(center_basis(t).size() == 1);
}

TEST_CASE("non-closed root lists are rejected") {
    auto a2 = build_root_system("A2");
    try {
        pair_from_simple_coords(a2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
        FAIL("accepted a non-closed list");
    } catch (const Error& e) {
        CHECK(e.kind == "not-closed");
    }
    CHECK_THROWS_AS(pair_from_simple_coords(a2, {{1, 0}}), Error);
}

TEST_CASE("r_vee is rho_vee_a with an integral value on p") {
    auto g2 = build_root_system("G2");
    auto f4 = build_root_system("F4");
    for (const auto& p : {borel_de_siebenthal(g2, {1}), borel_de_siebenthal(f4, {4})}) {
        REQUIRE(p.r_vee);
        CHECK(*p.r_vee == p.rho_vee_a);
        bool hit = false;
        for (const auto& b : p.p_roots) hit = hit || is_integer(p.g().form(b, *p.r_vee));
        CHECK(hit);
        for (const auto& a : p.sub_simple) CHECK(p.g().form(a, *p.r_vee) == 1);
    }
}

TEST_CASE("finite spin characters") {
    auto a1 = build_root_system("A1");
    auto t = spin_characters_fin(pair_from_roots(a1, {}));
    CHECK(t.plus == Character{{Weight{1}, 1}});
    CHECK(t.minus == Character{{Weight{-1}, 1}});

    auto full = spin_characters_fin(full_pair(a1));
    CHECK(full.plus == Character{{Weight{0}, 1}});
    CHECK(full.minus.empty());

    // subset expansion of prod (e^{b/2} - e^{-b/2}) over the 3 positive p-roots
    auto g2 = build_root_system("G2");
    auto p = borel_de_siebenthal(g2, {1});
    auto s = spin_characters_fin(p);
    Character expect;
    for (int mask = 0; mask < 8; ++mask) {
        Weight w(2);
        int sign = 1;
        for (int i = 0; i < 3; ++i) {
            bool minus = mask >> i & 1;
            w += p.p_positive[i] * (minus ? frac(-1, 2) : frac(1, 2));
            if (minus) sign = -sign;
        }
        expect[w] += sign;
    }
    Character got = s.plus;
    accumulate(got, s.minus, -1);
    std::erase_if(expect, [](const auto& kv) { return kv.second == 0; });
    CHECK(got == expect);
    CHECK(total_multiplicity(s.plus) + total_multiplicity(s.minus) == 8);
}

TEST_CASE("symmetric pairs") {
    auto b3 = build_root_system("B3");
    CHECK(is_symmetric_pair(borel_de_siebenthal(b3, {3})));    // so7 > so6
    CHECK(is_symmetric_pair(borel_de_siebenthal(b3, {2})));    // so7 > so4 + so3
    auto g2 = build_root_system("G2");
    CHECK(!is_symmetric_pair(borel_de_siebenthal(g2, {1})));
    CHECK(is_symmetric_pair(borel_de_siebenthal(g2, {2})));
    CHECK(is_symmetric_pair(pair_from_roots(build_root_system("A1"), {})));
}

TEST_CASE("equal-rank pairs up to conjugacy") {
    CHECK(equal_rank_pairs(build_root_system("A2")).size() == 2);
    CHECK(equal_rank_pairs(build_root_system("B2")).size() == 4);
    CHECK(equal_rank_pairs(build_root_system("G2")).size() == 5);
    for (const auto& p : equal_rank_pairs(build_root_system("C3"))) {
        CHECK(p.proper());
        CHECK(oracle::closed_and_symmetric(p.g(), p.sub_roots));
    }
}

}
