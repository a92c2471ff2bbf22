#include "oracles.hpp"

#include <doctest.h>

using namespace mplt;

namespace {

// sum of multiplicities over the dominant weights times their orbit sizes
BigInt full_dim(const RootSystem& rs, const Weight& lambda) {
    BigInt n = 0;
    for (const auto& [w, m] : dominant_character(rs, lambda))
        if (rs.is_dominant_integral(w)) n += m * static_cast<long>(oracle::orbit(rs, rs.roots, w).size());
    return n;
}

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("root counts and group orders against brute force") {
    struct Row {
        const char* label;
        std::size_t roots;
        long order;
        int dual_coxeter;
    };
    for (auto r : {Row{"A1", 2, 2, 2}, Row{"A2", 6, 6, 3}, Row{"A4", 20, 120, 5}, Row{"B3", 18, 48, 5},
                   Row{"C3", 18, 48, 4}, Row{"B4", 32, 384, 7}, Row{"C4", 32, 384, 5}, Row{"D4", 24, 192, 6},
                   Row{"G2", 12, 12, 4}, Row{"F4", 48, 1152, 9}}) {
        CAPTURE(r.label);
        auto rs = build_root_system(r.label);
        CHECK(rs->roots.size() == r.roots);
        CHECK(weyl_group_order(*rs) == r.order);
        CHECK(oracle::weyl_group(*rs).size() == static_cast<std::size_t>(r.order));
        CHECK(rs->g == r.dual_coxeter);
        CHECK(rs->dim == static_cast<int>(r.roots) + rs->rank);
        CHECK(rs->norm2(rs->theta) == 2);
    }
}

TEST_CASE("killing normalization gives g = 1/2") {
    for (auto l : {"A3", "B2", "G2", "F4"}) {
        auto rs = build_root_system(l, Normalization::Killing);
        CHECK(rs->g == frac(1, 2));
    }
}

TEST_CASE("reflections are involutions and rho pairs to 1 on simple coroots") {
    auto rs = build_root_system("F4");
    for (int i = 0; i < 4; ++i) {
        CHECK(rs->coroot_pairing(rs->rho, rs->simple[i]) == 1);
        Weight x{3, -1, frac(1, 2), 2};
        CHECK(rs->reflect(rs->reflect(x, rs->simple[i]), rs->simple[i]) == x);
        CHECK(rs->reflect_simple(x, i) == rs->reflect(x, rs->simple[i]));
    }
}

TEST_CASE("G2 conventions") {
    auto rs = build_root_system("G2");
    CHECK(rs->norm2(rs->simple[0]) == frac(2, 3));
    CHECK(rs->norm2(rs->simple[1]) == 2);
    CHECK(rs->marks == std::vector<int>{1, 3, 2});
}

TEST_CASE("weyl dimension formula") {
    auto a1 = build_root_system("A1");
    CHECK(weyl_dim(*a1, Weight{0}) == 1);
    CHECK(weyl_dim(*a1, Weight{1}) == 2);
    auto f4 = build_root_system("F4");
    CHECK(weyl_dim(*f4, f4->theta) == 52);
    CHECK(weyl_dim(*f4, Weight{0, 0, 0, 1}) == 26);
}

TEST_CASE("dominant characters") {
    auto a1 = build_root_system("A1");
    auto ch = dominant_character(*a1, Weight{2});
    CHECK(ch == Character{{Weight{-2}, 1}, {Weight{0}, 1}, {Weight{2}, 1}});

    auto a2 = build_root_system("A2");
    CHECK(dominant_character(*a2, a2->theta).at(Weight(2)) == 2);
    for (auto l : {"B3", "G2", "D4"}) {
        auto rs = build_root_system(l);
        CHECK(dominant_character(*rs, Weight(rs->rank)) == Character{{Weight(rs->rank), 1}});
    }
    auto f4 = build_root_system("F4");
    CHECK(full_dim(*f4, f4->theta) == 52);
    CHECK(total_multiplicity(dominant_character(*f4, f4->theta)) == 52);
    for (const auto& l : dominant_weights_up_to_height(*a2, 3)) CHECK(full_dim(*a2, l) == weyl_dim(*a2, l));
    auto b3 = build_root_system("B3");
    for (const auto& l : dominant_weights_up_to_height(*b3, 2)) CHECK(full_dim(*b3, l) == weyl_dim(*b3, l));
}

TEST_CASE("inversion count is word length for reduced words") {
    auto rs = build_root_system("B3");
    for (const auto& e : oracle::weyl_group(*rs)) {
        WeylWord w{e.word};
        CHECK(w.apply(*rs, rs->rho) == e.image);
        CHECK(inversion_count(*rs, w) == static_cast<int>(e.word.size()));
    }
}

TEST_CASE("bad labels") {
    CHECK_THROWS_AS(build_root_system("H3"), Error);
    CHECK_THROWS_AS(build_root_system("D3"), Error);
    CHECK_THROWS_AS(build_root_system("G3"), Error);
    CHECK_THROWS_AS(build_root_system("B1"), Error);
}

}
