#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lrc/lie.hpp"

#include <set>

using namespace lrc;

TEST_CASE("G2 root data") {
    RootSystem g2 = build_root_system({{'G', 2}});
    CHECK(g2.num_pos_roots() == 6);
    CHECK(g2.cartan == IMat{{2, -1}, {-3, 2}});
    // every positive root has non-negative sr coords (by construction) and
    // the highest root is 3a1+2a2
    CHECK(g2.pos_roots_sr.back() == IVec{3, 2});
}

TEST_CASE("A1 root data") {
    RootSystem a1 = build_root_system({{'A', 1}});
    CHECK(a1.num_pos_roots() == 1);
    CHECK(a1.pos_roots_fw[0] == IVec{2});  // alpha = 2*varpi
}

TEST_CASE("classical counts and products") {
    CHECK(build_root_system({{'B', 4}}).num_pos_roots() == 16);
    CHECK(build_root_system({{'C', 5}}).num_pos_roots() == 25);
    CHECK(build_root_system({{'D', 6}}).num_pos_roots() == 30);
    CHECK(build_root_system({{'F', 4}}).num_pos_roots() == 24);
    CHECK(build_root_system({{'D', 2}}).num_pos_roots() == 2);  // A1 x A1
    RootSystem prod = build_root_system({{'A', 1}, {'A', 1}});
    CHECK(prod.rank == 2);
    CHECK(prod.num_pos_roots() == 2);
    CHECK(prod.cartan == IMat{{2, 0}, {0, 2}});
    CHECK_THROWS_AS(build_root_system({{'E', 7}}), InvalidType);
    CHECK_THROWS_AS(build_root_system({{'Z', 3}}), InvalidType);
}

TEST_CASE("E6 roots and Weyl order") {
    RootSystem e6 = build_root_system({{'E', 6}});
    CHECK(e6.num_pos_roots() == 36);
    CHECK(weyl_order(e6) == 51840);
}

TEST_CASE("pairing is dual bases") {
    RootSystem c3 = build_root_system({{'C', 3}});
    for (int i = 0; i < 3; ++i) {
        IVec crt = c3.coroot(c3.simple_root_index(i));
        for (int j = 0; j < 3; ++j) {
            IVec w(3, 0);
            w[j] = 1;
            CHECK(pair_cw(c3, crt, w) == (i == j ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(pair_cw(c3, IVec{1, 0}, IVec{0, 0, 1}), DimensionError);
}

TEST_CASE("Sp6 lambda_n pairing equals eps sum") {
    RootSystem c3 = build_root_system({{'C', 3}});
    // lambda_n = (1,1,1) in the dual eps basis
    IVec lam{1, 2, 3};
    QVec dual = coweight_to_eps_dual(c3, lam);
    CHECK(dual == QVec{QQ(1), QQ(1), QQ(1)});
    // paired with nu = sum nu_i eps_i gives sum nu_i
    IVec nu_fw{1, 0, 2};  // nu = varpi1 + 2*varpi3: eps (3,2,2), sum 7
    CHECK(pair_cw(c3, lam, nu_fw) == 7);
    QVec eps = weight_to_eps(c3, nu_fw);
    CHECK(eps == QVec{QQ(3), QQ(2), QQ(2)});
}

TEST_CASE("weyl orbits") {
    RootSystem a1 = build_root_system({{'A', 1}});
    auto orb = weyl_orbit(a1, IVec{1});
    CHECK(orb.size() == 2);
    RootSystem g2 = build_root_system({{'G', 2}});
    // short root orbit has 6 elements; alpha_1 is short
    CHECK(weyl_orbit(g2, g2.pos_roots_fw[0]).size() == 6);
    RootSystem f4 = build_root_system({{'F', 4}});
    // orbit of eps_1 = varpi_4 = the 24 short roots
    IVec w4{0, 0, 0, 1};
    CHECK(weyl_orbit(f4, w4).size() == 24);
    // each orbit contains exactly one dominant element
    int ndom = 0;
    for (auto& v : weyl_orbit(g2, g2.pos_roots_fw[0]))
        if (weight_dominant(v)) ++ndom;
    CHECK(ndom == 1);
}

TEST_CASE("coset representatives") {
    RootSystem a2 = build_root_system({{'A', 2}});
    auto all = coset_reps_min_length(a2, IVec{1, 1});  // strictly dominant: all of W
    CHECK(all.size() == 6);
    // B3 with lambda = (1,1,0) in the dual eps basis: 12 elements
    RootSystem b3 = build_root_system({{'B', 3}});
    IVec lam{1, 2, 1};
    CHECK(coweight_to_eps_dual(b3, lam) == QVec{QQ(1), QQ(1), QQ(0)});
    auto reps = coset_reps_min_length(b3, lam);
    CHECK(reps.size() == 12);
    CHECK_THROWS_AS(coset_reps_min_length(b3, IVec{0, 0, 1}), NotDominant);

    // |W^P| * |W_P| = |W|
    long long wp = (long long)reps.size();
    // stabilizer of lambda is generated by reflections orthogonal to it:
    long long w = weyl_order(b3);
    CHECK(w % wp == 0);
    CHECK(w / wp == 4);  // Levi A1 x A1
}

TEST_CASE("graded inversion sets") {
    RootSystem a2 = build_root_system({{'A', 2}});
    IVec lam{1, 1};
    auto reps = coset_reps_min_length(a2, lam);
    // identity: empty map
    CHECK(graded_inversion_set(a2, reps[0].w, lam).empty());
    // lengths add up: l(w) = sum of fiber sizes
    for (auto& r : reps) {
        size_t tot = 0;
        for (auto& [k, v] : graded_inversion_set(a2, r.w, lam)) {
            CHECK(k < 0);
            tot += v.size();
        }
        CHECK((int)tot == r.w.length());
    }
    // distribution of graded dims for A2 full flag: (0,0),(1,0),(1,0),(1,1),(1,1),(2,1)
    std::multiset<std::pair<int, int>> dist;
    for (auto& r : reps) {
        auto g = graded_inversion_set(a2, r.w, lam);
        dist.insert({(int)g[-1].size(), (int)g[-2].size()});
    }
    std::multiset<std::pair<int, int>> expect{{0, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 1}, {2, 1}};
    CHECK(dist == expect);
}

TEST_CASE("dual weight") {
    RootSystem c3 = build_root_system({{'C', 3}});
    CHECK(dual_weight(c3, IVec{2, 0, 1}) == IVec{2, 0, 1});  // -w0 = id for C
    RootSystem a2 = build_root_system({{'A', 2}});
    CHECK(dual_weight(a2, IVec{1, 0}) == IVec{0, 1});  // diagram flip
    RootSystem e6 = build_root_system({{'E', 6}});
    IVec w1(6, 0), w6(6, 0);
    w1[0] = 1;
    w6[5] = 1;
    CHECK(dual_weight(e6, w1) == w6);
    // involutive
    CHECK(dual_weight(e6, dual_weight(e6, IVec{1, 0, 2, 0, 0, 1})) == IVec{1, 0, 2, 0, 0, 1});
    CHECK_THROWS_AS(dual_weight(a2, IVec{-1, 0}), NotDominant);
}

TEST_CASE("longest element involution and action determinant") {
    for (auto t : std::vector<TypeSpec>{{{'A', 2}}, {{'B', 2}}, {{'G', 2}}, {{'C', 3}}}) {
        RootSystem rs = build_root_system(t);
        WeylElement w0 = longest_element(rs);
        CHECK(w0.length() == rs.num_pos_roots());
        IMat sq = imat_mul(w0.action, w0.action);
        CHECK(sq == imat_identity(rs.rank));
    }
}

TEST_CASE("weyl group table") {
    RootSystem g2 = build_root_system({{'G', 2}});
    auto t = enumerate_weyl_group(g2);
    CHECK(t.action.size() == 12);
    int sum = 0;
    for (int p : t.parity) sum += p;
    CHECK(sum == 0);  // equal numbers of even and odd elements
}

TEST_CASE("eps round trip") {
    for (auto t : std::vector<TypeSpec>{
             {{'A', 3}}, {{'B', 3}}, {{'C', 4}}, {{'D', 4}}, {{'F', 4}}, {{'G', 2}}, {{'E', 6}}}) {
        RootSystem rs = build_root_system(t);
        uint64_t st = 99;
        for (int trial = 0; trial < 10; ++trial) {
            IVec fw(rs.rank);
            for (int i = 0; i < rs.rank; ++i) fw[i] = (Int)(splitmix64(st) % 5) - 2;
            CHECK(weight_from_eps(rs, weight_to_eps(rs, fw)) == fw);
        }
    }
}

TEST_CASE("spin weights render as half integers") {
    RootSystem b3 = build_root_system({{'B', 3}});
    IVec spin{0, 0, 1};
    QVec eps = weight_to_eps(b3, spin);
    CHECK(eps == QVec{QQ(1, 2), QQ(1, 2), QQ(1, 2)});
    RootSystem d4 = build_root_system({{'D', 4}});
    IVec s4{0, 0, 0, 1};
    CHECK(weight_to_eps(d4, s4) == QVec{QQ(1, 2), QQ(1, 2), QQ(1, 2), QQ(1, 2)});
    IVec s3{0, 0, 1, 0};
    CHECK(weight_to_eps(d4, s3) == QVec{QQ(1, 2), QQ(1, 2), QQ(1, 2), QQ(-1, 2)});
}

TEST_CASE("A type partition rendering") {
    RootSystem a3 = build_root_system({{'A', 3}});
    // varpi_2 -> (1,1,0,0)
    CHECK(weight_to_eps(a3, IVec{0, 1, 0}) == QVec{QQ(1), QQ(1), QQ(0), QQ(0)});
    CHECK(weight_from_eps(a3, QVec{QQ(2), QQ(1), QQ(1), QQ(0)}) == IVec{1, 0, 1});
}
