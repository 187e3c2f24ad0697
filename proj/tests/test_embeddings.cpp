#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lrc/embeddings.hpp"

#include <map>
#include <set>

using namespace lrc;

TEST_CASE("sl3_g2 tangent weights are the short roots") {
    EmbeddedPair p = builtin_pair("sl3_g2");
    CHECK(p.g.rank == 2);
    CHECK(p.ghat().rank == 2);
    // dim check: 14 - 8 = 6 nonzero tangent weights, multiplicity 1
    int total = 0;
    for (auto& [w, m] : p.tangent_weights) {
        CHECK(m == 1);
        total += m;
        (void)w;
    }
    CHECK(total == 6);
    CHECK(p.zero_tangent_mult == 0);
    // two opposite triangles: each W(SL3)-orbit has 3 elements and the set
    // is stable under negation
    auto orb = weyl_orbit(p.g, dominant_rep_weight(p.g, p.tangent_weights[0].first));
    CHECK(orb.size() == 3);
    std::set<IVec> all;
    for (auto& [w, m] : p.tangent_weights) all.insert(w);
    for (auto& w : all) CHECK(all.count(ivec_neg(w)));
}

TEST_CASE("sp_sl tangent weights") {
    for (int n : {2, 3, 4}) {
        EmbeddedPair p = builtin_pair("sp_sl(" + std::to_string(n) + ")");
        int total = 0;
        for (auto& [w, m] : p.tangent_weights) {
            CHECK(m == 1);
            ++total;
            // weights are +-eps_i +- eps_j
            QVec eps = weight_to_eps(p.g, w);
            int nz = 0;
            for (auto& q : eps)
                if (sgn(q)) ++nz;
            CHECK(nz == 2);
        }
        CHECK(total == 2 * n * (n - 1));
        CHECK(p.zero_tangent_mult == (2 * n - 1) - n);
    }
}

TEST_CASE("f4_e6 tangent weights") {
    EmbeddedPair p = builtin_pair("f4_e6");
    int total = 0;
    for (auto& [w, m] : p.tangent_weights) {
        CHECK(m == 1);
        ++total;
        (void)w;
    }
    CHECK(total == 24);               // short roots of F4
    CHECK(p.zero_tangent_mult == 2);  // 78 - 52 = 26 = 24 + 2
}

TEST_CASE("spin9_f4 tangent weights") {
    EmbeddedPair p = builtin_pair("spin9_f4");
    int total = 0;
    for (auto& [w, m] : p.tangent_weights) {
        total += m;
        // all are the half-sum weights of B4
        QVec eps = weight_to_eps(p.g, w);
        for (auto& q : eps) CHECK(abs(q) == QQ(1, 2));
    }
    CHECK(total == 16);
    CHECK(p.zero_tangent_mult == 0);
}

TEST_CASE("spin_odd_even tangent weights") {
    EmbeddedPair p = builtin_pair("spin_odd_even(4)");
    // ghat/g is the standard 7-dim rep of B3: weights +-eps_i and one zero
    int total = 0;
    for (auto& [w, m] : p.tangent_weights) {
        total += m;
        (void)w;
    }
    CHECK(total == 6);
    CHECK(p.zero_tangent_mult == 1);
}

TEST_CASE("validation passes for catalog pairs") {
    for (const char* name : {"sl3_g2", "g2_spin7", "spin9_f4", "spin_odd_even(3)", "sp_sl(2)",
                             "sp_sl(3)", "diagonal(A,1)", "diagonal(A,2)"}) {
        EmbeddedPair p = builtin_pair(name);
        Diagnostics d = validate_embedding(p.spec);
        INFO(name << ": " << (d.failures.empty() ? "" : d.failures[0]));
        CHECK(d.ok);
    }
}

TEST_CASE("f4_e6 validates") {
    EmbeddedPair p = builtin_pair("f4_e6");
    Diagnostics d = validate_embedding(p.spec);
    INFO((d.failures.empty() ? "" : d.failures[0]));
    CHECK(d.ok);
}

TEST_CASE("corrupted sign fails validation") {
    EmbeddedPair p = builtin_pair("g2_spin7");
    EmbeddingSpec bad = p.spec;
    bad.e_img[0][1].second = QQ(-1);  // flip one image coefficient
    Diagnostics d = validate_embedding(bad);
    CHECK_FALSE(d.ok);
}

TEST_CASE("unknown pair") {
    CHECK_THROWS_AS(builtin_pair("so5_sl9"), UnknownPair);
    CHECK_THROWS_AS(builtin_pair("sp_sl(1)"), UnknownPair);
}

TEST_CASE("hypothesis violation detected") {
    // SL2 embedded as the first factor of SL2 x SL2
    RootSystem gh = build_root_system({{'A', 1}, {'A', 1}});
    EmbeddingSpec s;
    s.name = "bad_factor";
    s.g_type = {{'A', 1}};
    s.ghat_type = {{'A', 1}, {'A', 1}};
    s.e_img = {{{gh.simple_root_index(0), QQ(1)}}};
    s.f_img = {{{gh.opposite_index(gh.simple_root_index(0)), QQ(1)}}};
    CHECK_THROWS_AS(pair_from_spec(s), HypothesisViolated);
}

TEST_CASE("lr lattice indices") {
    CHECK(lr_lattice(builtin_pair("sl3_g2")).index == 1);
    CHECK(lr_lattice(builtin_pair("g2_spin7")).index == 1);
    CHECK(lr_lattice(builtin_pair("g2_so7")).index == 2);
    CHECK(lr_lattice(builtin_pair("spin9_f4")).index == 1);
    CHECK(lr_lattice(builtin_pair("sp_sl(2)")).index == 2);
    CHECK(lr_lattice(builtin_pair("sp_sl(3)")).index == 2);
    CHECK(lr_lattice(builtin_pair("spin_odd_even(3)")).index == 2);
    CHECK(lr_lattice(builtin_pair("spin_odd_even(4)")).index == 2);
}

TEST_CASE("f4_e6 lattice is everything") {
    CHECK(lr_lattice(builtin_pair("f4_e6")).index == 1);
}

TEST_CASE("sp_sl lattice is the parity condition") {
    EmbeddedPair p = builtin_pair("sp_sl(2)");
    LatticeDescription lat = lr_lattice(p);
    uint64_t st = 11;
    for (int trial = 0; trial < 60; ++trial) {
        IVec nu(p.g.rank), nuhat(p.ghat().rank);
        for (auto& v : nu) v = (Int)(splitmix64(st) % 5) - 2;
        for (auto& v : nuhat) v = (Int)(splitmix64(st) % 5) - 2;
        QVec e1 = weight_to_eps(p.g, nu), e2 = weight_to_eps(p.ghat(), nuhat);
        QQ sum(0);
        for (auto& q : e1) sum += q;
        for (auto& q : e2) sum += q;
        bool even = (sum.get_den() == 1) && (sum.get_num() % 2 == 0);
        IVec point = nu;
        point.insert(point.end(), nuhat.begin(), nuhat.end());
        CHECK(lattice_contains(lat, point) == even);
    }
}

TEST_CASE("spin lattice is the common parity condition") {
    EmbeddedPair p = builtin_pair("spin_odd_even(3)");
    LatticeDescription lat = lr_lattice(p);
    uint64_t st = 23;
    for (int trial = 0; trial < 60; ++trial) {
        IVec nu(p.g.rank), nuhat(p.ghat().rank);
        for (auto& v : nu) v = (Int)(splitmix64(st) % 5) - 2;
        for (auto& v : nuhat) v = (Int)(splitmix64(st) % 5) - 2;
        // all 2nu_i and 2nuhat_j of the same parity
        QVec e1 = weight_to_eps(p.g, nu), e2 = weight_to_eps(p.ghat(), nuhat);
        std::set<long> pars;
        for (auto& q : e1) pars.insert(mpz_get_si(QQ(2 * q).get_num().get_mpz_t()) & 1);
        for (auto& q : e2) pars.insert(mpz_get_si(QQ(2 * q).get_num().get_mpz_t()) & 1);
        bool same = pars.size() == 1;
        IVec point = nu;
        point.insert(point.end(), nuhat.begin(), nuhat.end());
        CHECK(lattice_contains(lat, point) == same);
    }
}

TEST_CASE("embed coweight") {
    EmbeddedPair p = builtin_pair("g2_spin7");
    // lambda with <lambda,a1>=0, <lambda,a2>=1 is (1,2) in coroot coords
    IVec lam{1, 2};
    CHECK(coweight_simple_pairings(p.g, lam) == IVec{0, 1});
    IVec lhat = embed_coweight(p, lam);
    CHECK(coweight_to_eps_dual(p.ghat(), lhat) == QVec{QQ(1), QQ(1), QQ(0)});

    EmbeddedPair d = builtin_pair("diagonal(A,2)");
    IVec mu{2, 1};
    CHECK(embed_coweight(d, mu) == IVec{2, 1, 2, 1});

    EmbeddedPair sp = builtin_pair("sp_sl(3)");
    IVec l1{1, 1, 1};  // eps*-dual (1,0,0)
    CHECK(coweight_to_eps_dual(sp.g, l1) == QVec{QQ(1), QQ(0), QQ(0)});
    IVec l1h = embed_coweight(sp, l1);
    CHECK(coweight_to_eps_dual(sp.ghat(), l1h) == QVec{QQ(1), QQ(0), QQ(0), QQ(0), QQ(0), QQ(-1)});
    // adjoint pairing identity <rho*(lam), chi_hat> = <lam, rho(chi_hat)>
    uint64_t st = 3;
    for (int trial = 0; trial < 20; ++trial) {
        IVec chihat(sp.ghat().rank);
        for (auto& v : chihat) v = (Int)(splitmix64(st) % 7) - 3;
        CHECK(pair_cw(sp.ghat(), l1h, chihat) == pair_cw(sp.g, l1, sp.restrict_weight(chihat)));
    }
}

TEST_CASE("weight multiset identity") {
    // T-weights of ghat = T-weights of g + tangent weights + zero weights
    for (const char* name : {"sl3_g2", "g2_spin7", "sp_sl(2)"}) {
        EmbeddedPair p = builtin_pair(name);
        std::map<IVec, int> lhs, rhs;
        for (int idx = 0; idx < p.ghat().num_roots(); ++idx)
            lhs[p.restrict_weight(p.ghat().root_fw(idx))] += 1;
        lhs[IVec(p.g.rank, 0)] += p.ghat().rank;
        for (int idx = 0; idx < p.g.num_roots(); ++idx) rhs[p.g.root_fw(idx)] += 1;
        rhs[IVec(p.g.rank, 0)] += p.g.rank + p.zero_tangent_mult;
        for (auto& [w, m] : p.tangent_weights) rhs[w] += m;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("serialization round trip") {
    for (const char* name : {"g2_spin7", "sp_sl(2)", "g2_so7"}) {
        EmbeddedPair p = builtin_pair(name);
        std::string text = pair_to_text(p.spec);
        EmbeddingSpec back = pair_from_text(text);
        CHECK(back.name == p.spec.name);
        CHECK(back.g_type == p.spec.g_type);
        CHECK(back.ghat_type == p.spec.ghat_type);
        EmbeddedPair q = pair_from_spec(back);
        CHECK(q.rho == p.rho);
        CHECK(q.tangent_weights == p.tangent_weights);
        CHECK(validate_embedding(back).ok);
    }
}
