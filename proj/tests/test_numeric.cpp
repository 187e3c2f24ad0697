#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lrc/numeric.hpp"

using namespace lrc;

TEST_CASE("splitmix determinism") {
    uint64_t s1 = 42, s2 = 42;
    CHECK(splitmix64(s1) == splitmix64(s2));
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
}

TEST_CASE("ivec basics") {
    IVec a{2, -4, 6};
    CHECK(ivec_content(a) == 2);
    CHECK(ivec_primitive(a) == IVec{1, -2, 3});
    CHECK(ivec_dot(a, IVec{1, 1, 1}) == 4);
    CHECK(ivec_primitive(IVec{0, 0}) == IVec{0, 0});
}

TEST_CASE("qmat rank and inverse") {
    QMat m = qmat_from(IMat{{1, 2}, {2, 4}});
    CHECK(qmat_rank(m) == 1);
    QMat a = qmat_from(IMat{{2, 1}, {1, 1}});
    QMat inv = qmat_inverse(a);
    QMat prod = qmat_mul(a, inv);
    CHECK(prod[0][0] == QQ(1));
    CHECK(prod[0][1] == QQ(0));
    CHECK(prod[1][0] == QQ(0));
    CHECK(prod[1][1] == QQ(1));
}

TEST_CASE("qmat kernel") {
    QMat m = qmat_from(IMat{{1, 1, 1}});
    auto k = qmat_kernel(m);
    CHECK(k.size() == 2);
    for (auto& v : k) {
        QQ s(0);
        for (auto& x : v) s += x;
        CHECK(s == QQ(0));
    }
}

TEST_CASE("smith normal form identity") {
    SmithResult s = smith_normal_form(zmat_from(imat_identity(3)));
    for (int i = 0; i < 3; ++i) CHECK(s.D[i][i] == 1);
}

TEST_CASE("smith normal form divisibility") {
    // diag(2,3) ~ diag(1,6)
    SmithResult s = smith_normal_form(zmat_from(IMat{{2, 0}, {0, 3}}));
    CHECK(s.D[0][0] == 1);
    CHECK(s.D[1][1] == 6);
    // U*M*V = D
    ZMat m = zmat_from(IMat{{2, 0}, {0, 3}});
    ZMat um(2, ZVec(2, ZZ(0))), umv(2, ZVec(2, ZZ(0)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) um[i][j] += s.U[i][k] * m[k][j];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) umv[i][j] += um[i][k] * s.V[k][j];
    CHECK(umv == s.D);
    CHECK(zmat_abs_det(s.U) == 1);
    CHECK(zmat_abs_det(s.V) == 1);
}

TEST_CASE("smith random consistency") {
    uint64_t st = 7;
    for (int trial = 0; trial < 40; ++trial) {
        int r = 2 + (int)(splitmix64(st) % 4);
        int c = 2 + (int)(splitmix64(st) % 4);
        ZMat m(r, ZVec(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m[i][j] = (long)(splitmix64(st) % 11) - 5;
        SmithResult s = smith_normal_form(m);
        // U*M*V == D
        ZMat um(r, ZVec(c, ZZ(0))), umv(r, ZVec(c, ZZ(0)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                for (int k = 0; k < r; ++k) um[i][j] += s.U[i][k] * m[k][j];
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                for (int k = 0; k < c; ++k) umv[i][j] += um[i][k] * s.V[k][j];
        CHECK(umv == s.D);
        CHECK(zmat_abs_det(s.U) == 1);
        CHECK(zmat_abs_det(s.V) == 1);
        for (int t = 0; t + 1 < std::min(r, c); ++t) {
            if (s.D[t][t] != 0 && s.D[t + 1][t + 1] != 0) CHECK(s.D[t + 1][t + 1] % s.D[t][t] == 0);
            if (s.D[t][t] == 0) CHECK(s.D[t + 1][t + 1] == 0);
        }
        // off-diagonal zero
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(s.D[i][j] == 0);
    }
}

TEST_CASE("integer kernel") {
    ZMat m = zmat_from(IMat{{1, 2, 3}, {2, 4, 6}});
    ZMat k = zmat_kernel(m);
    CHECK(k.size() == 2);
    for (auto& v : k) {
        for (auto& row : m) CHECK(zvec_dot(row, v) == 0);
    }
}

TEST_CASE("lattice row basis and det") {
    ZMat gens = zmat_from(IMat{{2, 0}, {0, 2}, {1, 1}});
    ZMat b = lattice_row_basis(gens, 2);
    CHECK(b.size() == 2);
    ZMat sq(2, ZVec(2));
    for (int i = 0; i < 2; ++i) sq[i] = b[i];
    CHECK(zmat_abs_det(sq) == 2);  // index-2 sublattice of Z^2
}

TEST_CASE("matrix text round trip") {
    ZMat m = zmat_from(IMat{{1, -2, 3}, {0, 5, -7}});
    std::string t = matrix_to_text(m);
    CHECK(matrix_from_text(t) == m);
    CHECK(t.substr(0, 3) == "2 3");
}

TEST_CASE("qvec primitive int") {
    QVec v{QQ(1, 2), QQ(3, 4), QQ(0)};
    CHECK(qvec_primitive_int(v) == IVec{2, 3, 0});
}
