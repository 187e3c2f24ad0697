#include "lrc/chevalley.hpp"

#include <algorithm>
#include <cassert>

namespace lrc {

namespace {

// N for arbitrary signed roots, reduced to the positive-positive table via
// antisymmetry, N_{-a,-b} = -N_{a,b}, and the length-ratio identities that
// follow from the Jacobi identity on (e_a, e_b, e_{-a-b}).
Int n_signed(const RootSystem& rs, const std::vector<std::vector<Int>>& npp, int a, int b) {
    int n = rs.num_pos_roots();
    bool apos = a < n, bpos = b < n;
    if (apos && bpos) return npp[a][b];
    if (!apos && !bpos) return -n_signed(rs, npp, a - n, b - n);
    if (!apos) return -n_signed(rs, npp, b, a);
    int u = a, v = b - n;  // N_{u,-v}
    IVec s_fw = ivec_sub(rs.pos_roots_fw[u], rs.pos_roots_fw[v]);
    int s = rs.root_index(s_fw);
    assert(s >= 0);
    if (s < n) {
        Int num = npp[s][v] * rs.root_len2(s);
        assert(num % rs.root_len2(u) == 0);
        return num / rs.root_len2(u);
    }
    int s2 = s - n;  // v = s2 + u
    Int num = npp[s2][u] * rs.root_len2(s2);
    assert(num % rs.root_len2(v) == 0);
    return num / rs.root_len2(v);
}

// p of the root string: max k with (b - k*a) a root
Int chain_down(const RootSystem& rs, int a_pos, int b_pos) {
    Int p = 0;
    IVec f = rs.pos_roots_fw[b_pos];
    while (true) {
        f = ivec_sub(f, rs.pos_roots_fw[a_pos]);
        if (ivec_is_zero(f) || rs.root_index(f) < 0) break;
        ++p;
    }
    return p;
}

}  // namespace

LieAlgebraData build_lie_algebra(const RootSystem& rs) {
    LieAlgebraData L;
    L.rs = rs;
    int n = rs.num_pos_roots();
    L.npos = n;
    L.dim = 2 * n + rs.rank;

    std::vector<std::vector<Int>> npp(n, std::vector<Int>(n, 0));
    // positive roots are stored sorted by height, so index order is a valid
    // total order for the extraspecial-pair convention
    for (int g = 0; g < n; ++g) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a) {
            IVec diff = ivec_sub(rs.pos_roots_fw[g], rs.pos_roots_fw[a]);
            if (ivec_is_zero(diff)) continue;
            int b = rs.root_index(diff);
            if (b < 0 || b >= n) continue;
            if (a <= b) pairs.push_back({a, b});
        }
        if (pairs.empty()) continue;  // simple root
        std::sort(pairs.begin(), pairs.end());
        for (size_t t = 0; t < pairs.size(); ++t) {
            auto [x, e] = pairs[t];
            Int p = chain_down(rs, x, e);
            Int val;
            if (t == 0) {
                val = p + 1;  // extraspecial pair
            } else {
                int alpha = pairs[0].first;
                // Jacobi on (e_{-alpha}, e_xi, e_eta) with xi+eta = gamma:
                // N_{-a,xi} N_{xi-a,eta} + N_{xi,eta} N_{gamma,-a} + N_{eta,-a} N_{eta-a,xi} = 0
                int xi = x, eta = e;
                Int t1 = 0, t3 = 0;
                IVec xa = ivec_sub(rs.pos_roots_fw[xi], rs.pos_roots_fw[alpha]);
                int xa_idx = ivec_is_zero(xa) ? -1 : rs.root_index(xa);
                if (xa_idx >= 0)
                    t1 = n_signed(rs, npp, alpha + n, xi) * n_signed(rs, npp, xa_idx, eta);
                IVec ea = ivec_sub(rs.pos_roots_fw[eta], rs.pos_roots_fw[alpha]);
                int ea_idx = ivec_is_zero(ea) ? -1 : rs.root_index(ea);
                if (ea_idx >= 0)
                    t3 = n_signed(rs, npp, eta, alpha + n) * n_signed(rs, npp, ea_idx, xi);
                Int denom = n_signed(rs, npp, g, alpha + n);
                assert(denom != 0);
                Int num = -(t1 + t3);
                assert(num % denom == 0);
                val = num / denom;
            }
            assert(val == p + 1 || val == -(p + 1));
            npp[x][e] = val;
            npp[e][x] = -val;
        }
    }

    // full signed table
    L.N.assign(2 * n, std::vector<Int>(2 * n, 0));
    L.sum_idx.assign(2 * n, std::vector<int>(2 * n, -1));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
            if (b == rs.opposite_index(a)) continue;
            IVec sum = ivec_add(rs.root_fw(a), rs.root_fw(b));
            int s = rs.root_index(sum);
            if (s < 0) continue;
            L.sum_idx[a][b] = s;
            L.N[a][b] = n_signed(rs, npp, a, b);
        }
    return L;
}

QVec elem_zero(const LieAlgebraData& L) { return QVec(L.dim, QQ(0)); }

QVec elem_e(const LieAlgebraData& L, int signed_root) {
    QVec x = elem_zero(L);
    x[signed_root] = 1;
    return x;
}

QVec elem_h(const LieAlgebraData& L, int i) {
    QVec x = elem_zero(L);
    x[2 * L.npos + i] = 1;
    return x;
}

bool elem_is_zero(const QVec& x) {
    for (const QQ& q : x)
        if (sgn(q)) return false;
    return true;
}

IVec basis_weight(const LieAlgebraData& L, int idx) {
    if (idx < 2 * L.npos) return L.rs.root_fw(idx);
    return IVec(L.rs.rank, 0);
}

// bracket of basis elements idx a, b into accumulator with coefficient c
static void bracket_basis_into(const LieAlgebraData& L, int a, int b, const QQ& c, QVec& acc) {
    int n2 = 2 * L.npos;
    const RootSystem& rs = L.rs;
    bool ae = a < n2, be = b < n2;
    if (!ae && !be) return;  // [h,h] = 0
    if (!ae) {
        int i = a - n2;
        Int w = rs.root_fw(b)[i];
        if (w) acc[b] += c * QQ((long)w);
        return;
    }
    if (!be) {
        int i = b - n2;
        Int w = rs.root_fw(a)[i];
        if (w) acc[a] -= c * QQ((long)w);
        return;
    }
    if (b == rs.opposite_index(a)) {
        IVec crt = rs.coroot(a);
        for (int i = 0; i < rs.rank; ++i)
            if (crt[i]) acc[n2 + i] += c * QQ((long)crt[i]);
        return;
    }
    int s = L.sum_idx[a][b];
    if (s >= 0) acc[s] += c * QQ((long)L.N[a][b]);
}

QVec bracket(const LieAlgebraData& L, const QVec& x, const QVec& y) {
    QVec acc = elem_zero(L);
    for (int a = 0; a < L.dim; ++a) {
        if (sgn(x[a]) == 0) continue;
        for (int b = 0; b < L.dim; ++b) {
            if (sgn(y[b]) == 0) continue;
            bracket_basis_into(L, a, b, x[a] * y[b], acc);
        }
    }
    return acc;
}

AdjointOperator adjoint_identity(const LieAlgebraData& L) {
    AdjointOperator op;
    op.unipotent = true;
    op.mat.assign(L.dim, QVec(L.dim, QQ(0)));
    for (int i = 0; i < L.dim; ++i) op.mat[i][i] = 1;
    return op;
}

AdjointOperator adjoint_exp(const LieAlgebraData& L, int gamma_signed, const QQ& t) {
    AdjointOperator op = adjoint_identity(L);
    if (sgn(t) == 0) return op;
    QVec eg = elem_e(L, gamma_signed);
    for (int j = 0; j < L.dim; ++j) {
        QVec term = elem_zero(L);
        term[j] = 1;
        int k = 0;
        while (true) {
            QVec next = bracket(L, eg, term);
            if (elem_is_zero(next)) break;
            ++k;
            assert(k <= 8);
            for (int i = 0; i < L.dim; ++i) next[i] *= t / k;
            for (int i = 0; i < L.dim; ++i) op.mat[i][j] += next[i];
            term = std::move(next);
        }
    }
    return op;
}

AdjointOperator adjoint_compose(const AdjointOperator& a, const AdjointOperator& b) {
    AdjointOperator op;
    op.unipotent = a.unipotent && b.unipotent;
    op.mat = qmat_mul(a.mat, b.mat);
    return op;
}

QVec adjoint_apply(const AdjointOperator& op, const QVec& x) { return qmat_apply(op.mat, x); }

AdjointOperator random_levi_element(const LieAlgebraData& L, const IVec& lambda_cr,
                                    uint64_t seed) {
    AdjointOperator op = adjoint_identity(L);
    uint64_t state = seed;
    for (int idx = 0; idx < 2 * L.npos; ++idx) {
        if (ivec_dot(lambda_cr, L.rs.root_fw(idx)) != 0) continue;
        Int c = (Int)(splitmix64(state) % 9) + 1;
        op = adjoint_compose(op, adjoint_exp(L, idx, QQ((long)c)));
    }
    return op;
}

QMat levi_element_block(const LieAlgebraData& L, const IVec& lambda_cr, uint64_t seed,
                        const std::vector<int>& block) {
    int m = (int)block.size();
    std::vector<int> pos(2 * L.npos, -1);
    for (int i = 0; i < m; ++i) pos[block[i]] = i;
    QMat result(m, QVec(m, QQ(0)));
    for (int i = 0; i < m; ++i) result[i][i] = 1;
    uint64_t state = seed;
    for (int idx = 0; idx < 2 * L.npos; ++idx) {
        if (ivec_dot(lambda_cr, L.rs.root_fw(idx)) != 0) continue;
        Int c = (Int)(splitmix64(state) % 9) + 1;
        QMat f(m, QVec(m, QQ(0)));
        for (int j = 0; j < m; ++j) {
            f[j][j] = 1;
            // expand exp(ad(c e_idx)) e_{block[j]} within the block
            std::vector<std::pair<int, QQ>> term{{block[j], QQ(1)}};
            int k = 0;
            while (!term.empty()) {
                ++k;
                assert(k <= 8);
                std::vector<std::pair<int, QQ>> next;
                for (auto& [b, coef] : term) {
                    int s = L.sum_idx[idx][b];
                    if (s < 0) continue;
                    assert(pos[s] >= 0);  // grading-zero factor keeps the block invariant
                    next.push_back({s, coef * QQ((long)(L.N[idx][b] * c)) / k});
                }
                for (auto& [b, coef] : next) f[pos[b]][j] += coef;
                term = std::move(next);
            }
        }
        result = qmat_mul(result, f);
    }
    return result;
}

bool is_lie_automorphism(const LieAlgebraData& L, const AdjointOperator& op, int samples) {
    std::vector<QVec> cols(L.dim, QVec(L.dim));
    for (int j = 0; j < L.dim; ++j)
        for (int i = 0; i < L.dim; ++i) cols[j][i] = op.mat[i][j];
    auto check_pair = [&](int a, int b) {
        QVec ab = elem_zero(L);
        bracket_basis_into(L, a, b, QQ(1), ab);
        QVec lhs = bracket(L, cols[a], cols[b]);
        QVec rhs = adjoint_apply(op, ab);
        for (int i = 0; i < L.dim; ++i)
            if (lhs[i] != rhs[i]) return false;
        return true;
    };
    if (samples <= 0) {
        for (int a = 0; a < L.dim; ++a)
            for (int b = a + 1; b < L.dim; ++b)
                if (!check_pair(a, b)) return false;
        return true;
    }
    uint64_t st = 12345;
    for (int s = 0; s < samples; ++s) {
        int a = (int)(splitmix64(st) % L.dim);
        int b = (int)(splitmix64(st) % L.dim);
        if (a == b) continue;
        if (!check_pair(a, b)) return false;
    }
    return true;
}

}  // namespace lrc
