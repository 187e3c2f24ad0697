#include "lrc/lie.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace lrc {

std::string type_str(const TypeSpec& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += "x";
        s += t[i].first + std::to_string(t[i].second);
    }
    return s;
}

TypeSpec parse_type(const std::string& s) {
    TypeSpec out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == 'x' || s[i] == '*' || s[i] == ' ') {
            ++i;
            continue;
        }
        char series = (char)toupper(s[i]);
        ++i;
        size_t j = i;
        while (j < s.size() && isdigit(s[j])) ++j;
        if (j == i) throw InvalidType("parse_type: missing rank in '" + s + "'");
        out.push_back({series, std::stoi(s.substr(i, j - i))});
        i = j;
    }
    if (out.empty()) throw InvalidType("parse_type: empty type '" + s + "'");
    return out;
}

namespace {

// Bourbaki simple roots in eps coordinates for one simple factor.
std::vector<QVec> simple_roots_eps(char series, int rank, int& eps_dim) {
    auto q = [](long num, long den = 1) { return QQ(num, den); };
    std::vector<QVec> al;
    switch (series) {
        case 'A': {
            if (rank < 1) throw InvalidType("A rank >= 1 required");
            eps_dim = rank + 1;
            for (int i = 0; i < rank; ++i) {
                QVec v(eps_dim, q(0));
                v[i] = 1;
                v[i + 1] = -1;
                al.push_back(v);
            }
            break;
        }
        case 'B': {
            if (rank < 1) throw InvalidType("B rank >= 1 required");
            eps_dim = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                QVec v(eps_dim, q(0));
                v[i] = 1;
                v[i + 1] = -1;
                al.push_back(v);
            }
            QVec v(eps_dim, q(0));
            v[rank - 1] = 1;
            al.push_back(v);
            break;
        }
        case 'C': {
            if (rank < 1) throw InvalidType("C rank >= 1 required");
            eps_dim = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                QVec v(eps_dim, q(0));
                v[i] = 1;
                v[i + 1] = -1;
                al.push_back(v);
            }
            QVec v(eps_dim, q(0));
            v[rank - 1] = 2;
            al.push_back(v);
            break;
        }
        case 'D': {
            if (rank < 2) throw InvalidType("D rank >= 2 required");
            eps_dim = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                QVec v(eps_dim, q(0));
                v[i] = 1;
                v[i + 1] = -1;
                al.push_back(v);
            }
            QVec v(eps_dim, q(0));
            v[rank - 2] = 1;
            v[rank - 1] = 1;
            al.push_back(v);
            break;
        }
        case 'E': {
            if (rank != 6) throw InvalidType("only E6 is supported");
            eps_dim = 8;
            QVec a1(8, q(0));
            a1[0] = q(1, 2);
            a1[7] = q(1, 2);
            for (int k = 1; k <= 6; ++k) a1[k] = q(-1, 2);
            al.push_back(a1);
            QVec a2(8, q(0));
            a2[0] = 1;
            a2[1] = 1;
            al.push_back(a2);
            QVec a3(8, q(0));
            a3[0] = -1;
            a3[1] = 1;
            al.push_back(a3);
            for (int i = 0; i < 3; ++i) {
                QVec v(8, q(0));
                v[i + 1] = -1;
                v[i + 2] = 1;
                al.push_back(v);
            }
            break;
        }
        case 'F': {
            if (rank != 4) throw InvalidType("F rank must be 4");
            eps_dim = 4;
            QVec a1(4, q(0)), a2(4, q(0)), a3(4, q(0)), a4(4, q(0));
            a1[1] = 1;
            a1[2] = -1;
            a2[2] = 1;
            a2[3] = -1;
            a3[3] = 1;
            a4[0] = q(1, 2);
            a4[1] = q(-1, 2);
            a4[2] = q(-1, 2);
            a4[3] = q(-1, 2);
            al = {a1, a2, a3, a4};
            break;
        }
        case 'G': {
            if (rank != 2) throw InvalidType("G rank must be 2");
            eps_dim = 3;
            QVec a1(3, q(0)), a2(3, q(0));
            a1[0] = 1;
            a1[1] = -1;
            a2[0] = -2;
            a2[1] = 1;
            a2[2] = 1;
            al = {a1, a2};
            break;
        }
        default:
            throw InvalidType(std::string("unknown series '") + series + "'");
    }
    return al;
}

QQ qdot(const QVec& a, const QVec& b) {
    QQ s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long long expected_pos_roots(char series, int n) {
    switch (series) {
        case 'A': return (long long)n * (n + 1) / 2;
        case 'B':
        case 'C': return (long long)n * n;
        case 'D': return (long long)n * (n - 1);
        case 'E': return 36;
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

}  // namespace

int RootSystem::simple_root_index(int i) const {
    int idx = root_index(cartan[i]);
    assert(idx >= 0);
    return idx;
}

Int RootSystem::form(const IVec& a, const IVec& b) const {
    Int s = 0;
    for (int i = 0; i < rank; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < rank; ++j) s += a[i] * form_fw[i][j] * b[j];
    }
    return s;
}

RootSystem build_root_system(const TypeSpec& spec) {
    RootSystem rs;
    rs.factors = spec;
    // assemble block eps data
    std::vector<QVec> alpha_eps;
    for (auto [series, n] : spec) {
        int ed = 0;
        auto block = simple_roots_eps(series, n, ed);
        for (auto& v : block) {
            QVec full(rs.eps_dim, QQ(0));
            full.insert(full.end(), v.begin(), v.end());
            alpha_eps.push_back(full);
        }
        rs.eps_dim += ed;
        rs.rank += n;
    }
    for (auto& v : alpha_eps) v.resize(rs.eps_dim, QQ(0));
    const int r = rs.rank;

    // Cartan matrix and invariant form from eps data
    QMat gram(r, QVec(r, QQ(0)));
    rs.cartan.assign(r, IVec(r, 0));
    rs.simple_len2.assign(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gram[i][j] = qdot(alpha_eps[i], alpha_eps[j]);
    for (int i = 0; i < r; ++i) {
        QQ l2 = gram[i][i];
        assert(l2.get_den() == 1);
        rs.simple_len2[i] = (Int)l2.get_num().get_si();
        for (int j = 0; j < r; ++j) {
            QQ a = 2 * gram[i][j] / gram[j][j];
            if (a.get_den() != 1) throw InvalidType("non-integral Cartan entry");
            rs.cartan[i][j] = (Int)a.get_num().get_si();
        }
    }
    if (rs.cartan[0][0] != 2) throw InvalidType("bad Cartan data");

    // positive roots by closure, processed by height then lex on sr coords
    std::map<IVec, int> by_sr;
    std::vector<IVec> roots_sr;
    for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        roots_sr.push_back(e);
    }
    auto height = [](const IVec& m) {
        Int h = 0;
        for (Int x : m) h += x;
        return h;
    };
    std::sort(roots_sr.begin(), roots_sr.end());
    for (auto& m : roots_sr) by_sr[m] = 1;
    // fw coords of sr vector: f = C^T m
    IMat cartan_T = imat_transpose(rs.cartan);
    auto fw_of_sr = [&](const IVec& m) { return imat_apply(cartan_T, m); };

    std::vector<IVec> frontier = roots_sr;
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<IVec> next;
        for (const auto& m : frontier) {
            IVec f = fw_of_sr(m);
            for (int i = 0; i < r; ++i) {
                // p = how far the alpha_i-string extends below m
                Int p = 0;
                IVec mm = m;
                while (true) {
                    mm[i] -= 1;
                    if (ivec_is_zero(mm)) break;  // the string through alpha_i itself
                    if (by_sr.count(mm))
                        ++p;
                    else
                        break;
                }
                Int q = p - f[i];
                if (q > 0) {
                    IVec up = m;
                    up[i] += 1;
                    if (!by_sr.count(up)) {
                        by_sr[up] = 1;
                        next.push_back(up);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    roots_sr.clear();
    for (auto& [m, _] : by_sr) roots_sr.push_back(m);
    std::sort(roots_sr.begin(), roots_sr.end(), [&](const IVec& a, const IVec& b) {
        Int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    long long expect = 0;
    for (auto [series, n] : spec) {
        long long e = expected_pos_roots(series, n);
        if (e < 0) throw InvalidType("unknown series");
        expect += e;
    }
    if ((long long)roots_sr.size() != expect) throw InvalidType("positive root count mismatch");

    rs.pos_roots_sr = roots_sr;
    for (auto& m : roots_sr) rs.pos_roots_fw.push_back(fw_of_sr(m));

    // lengths, coroots
    for (const auto& m : roots_sr) {
        QQ l2(0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (m[i] && m[j]) l2 += QQ((long)(m[i] * m[j])) * gram[i][j];
        assert(l2.get_den() == 1);
        rs.pos_root_len2.push_back((Int)l2.get_num().get_si());
    }
    for (size_t k = 0; k < roots_sr.size(); ++k) {
        IVec cr(r, 0);
        for (int i = 0; i < r; ++i) {
            if (!roots_sr[k][i]) continue;
            Int num = roots_sr[k][i] * rs.simple_len2[i];
            assert(num % rs.pos_root_len2[k] == 0);
            cr[i] = num / rs.pos_root_len2[k];
        }
        rs.pos_coroots.push_back(cr);
    }

    // fw -> eps matrix: column j is eps(varpi_j)
    QMat ct(r, QVec(r, QQ(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ct[i][j] = QQ((long)rs.cartan[j][i]);
    rs.sr_of_fw = qmat_inverse(ct);  // m = sr_of_fw * f
    rs.fw_to_eps.assign(rs.eps_dim, QVec(r, QQ(0)));
    for (int j = 0; j < r; ++j) {
        // varpi_j in sr coords: solve C^T m = e_j
        QVec ej(r, QQ(0));
        ej[j] = 1;
        QVec m = qmat_apply(rs.sr_of_fw, ej);
        for (int d = 0; d < rs.eps_dim; ++d) {
            QQ s(0);
            for (int k = 0; k < r; ++k) s += m[k] * alpha_eps[k][d];
            rs.fw_to_eps[d][j] = s;
        }
    }

    // scaled invariant form on fw coords: C^{-1} Gram C^{-T}
    {
        QMat cinv = qmat_inverse(qmat_from(rs.cartan));
        QMat tmp = qmat_mul(cinv, gram);
        QMat ff = qmat_mul(tmp, qmat_transpose(cinv));
        ZZ scale(1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                ZZ d = ff[i][j].get_den();
                scale = scale / gcd(scale, d) * d;
            }
        rs.form_scale = (Int)scale.get_si();
        rs.form_fw.assign(r, IVec(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                QQ v = ff[i][j] * QQ(scale);
                assert(v.get_den() == 1);
                rs.form_fw[i][j] = (Int)v.get_num().get_si();
            }
    }

    // signed root lookup
    int n = rs.num_pos_roots();
    for (int k = 0; k < n; ++k) {
        rs.root_by_fw[rs.pos_roots_fw[k]] = k;
        rs.root_by_fw[ivec_neg(rs.pos_roots_fw[k])] = k + n;
    }
    return rs;
}

bool weight_dominant(const IVec& fw) {
    for (Int x : fw)
        if (x < 0) return false;
    return true;
}

IVec coweight_simple_pairings(const RootSystem& rs, const IVec& cr) {
    return imat_apply(rs.cartan, cr);
}

bool coweight_dominant(const RootSystem& rs, const IVec& cr) {
    return weight_dominant(coweight_simple_pairings(rs, cr));
}

Int pair_cw(const RootSystem& rs, const IVec& cw_cr, const IVec& wt_fw) {
    if ((int)cw_cr.size() != rs.rank || (int)wt_fw.size() != rs.rank)
        throw DimensionError("pair_cw: rank mismatch");
    return ivec_dot(cw_cr, wt_fw);
}

void reflect_weight(const RootSystem& rs, int i, IVec& fw) {
    Int c = fw[i];
    if (!c) return;
    for (int k = 0; k < rs.rank; ++k) fw[k] -= c * rs.cartan[i][k];
}

void reflect_coweight(const RootSystem& rs, int i, IVec& cr) {
    Int c = 0;
    for (int j = 0; j < rs.rank; ++j) c += rs.cartan[i][j] * cr[j];
    cr[i] -= c;
}

IVec dominant_rep_weight(const RootSystem& rs, IVec fw) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rs.rank; ++i)
            if (fw[i] < 0) {
                reflect_weight(rs, i, fw);
                changed = true;
            }
    }
    return fw;
}

IVec dominant_rep_coweight(const RootSystem& rs, IVec cr) {
    bool changed = true;
    while (changed) {
        changed = false;
        IVec p = coweight_simple_pairings(rs, cr);
        for (int i = 0; i < rs.rank; ++i)
            if (p[i] < 0) {
                reflect_coweight(rs, i, cr);
                changed = true;
                break;
            }
    }
    return cr;
}

std::vector<IVec> weyl_orbit(const RootSystem& rs, const IVec& fw) {
    std::set<IVec> seen;
    std::vector<IVec> frontier{fw};
    seen.insert(fw);
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& v : frontier)
            for (int i = 0; i < rs.rank; ++i) {
                IVec w = v;
                reflect_weight(rs, i, w);
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return std::vector<IVec>(seen.begin(), seen.end());
}

long long weyl_order(const RootSystem& rs) {
    return (long long)weyl_orbit(rs, IVec(rs.rank, 1)).size();
}

static IMat reflection_matrix(const RootSystem& rs, int i) {
    IMat m = imat_identity(rs.rank);
    for (int k = 0; k < rs.rank; ++k) m[k][i] -= rs.cartan[i][k];
    return m;
}

WeylElement weyl_identity(const RootSystem& rs) { return {{}, imat_identity(rs.rank)}; }

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
    IMat m = imat_identity(rs.rank);
    for (int j : word) m = imat_mul(m, reflection_matrix(rs, j));
    return {word, m};
}

IVec weyl_apply(const WeylElement& w, const IVec& fw) { return imat_apply(w.action, fw); }

IVec weyl_apply_inverse(const RootSystem& rs, const WeylElement& w, const IVec& fw) {
    IVec v = fw;
    for (int j : w.word) reflect_weight(rs, j, v);
    return v;
}

IVec weyl_apply_coweight(const RootSystem& rs, const WeylElement& w, const IVec& cr) {
    IVec v = cr;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) reflect_coweight(rs, *it, v);
    return v;
}

WeylElement longest_element(const RootSystem& rs) {
    IVec mu(rs.rank, 1);
    std::vector<int> applied;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rs.rank; ++i)
            if (mu[i] > 0) {
                reflect_weight(rs, i, mu);
                applied.push_back(i);
                changed = true;
                break;
            }
    }
    std::reverse(applied.begin(), applied.end());
    return weyl_from_word(rs, applied);
}

IVec dual_weight(const RootSystem& rs, const IVec& fw) {
    if (!weight_dominant(fw)) throw NotDominant("dual_weight: input not dominant");
    WeylElement w0 = longest_element(rs);
    return ivec_neg(weyl_apply(w0, fw));
}

static std::vector<CosetRep> orbit_reps_impl(const RootSystem& rs, const IVec& lambda,
                                             bool downward_only) {
    std::map<IVec, std::pair<std::vector<int>, IMat>> info;  // orbit elt -> (word, action)
    std::vector<IVec> order;
    info[lambda] = {{}, imat_identity(rs.rank)};
    std::vector<IVec> frontier{lambda};
    order.push_back(lambda);
    std::vector<IMat> refl;
    for (int i = 0; i < rs.rank; ++i) refl.push_back(reflection_matrix(rs, i));
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<IVec> next;
        for (const auto& mu : frontier) {
            IVec pair = coweight_simple_pairings(rs, mu);
            auto& [word, act] = info[mu];
            for (int i = 0; i < rs.rank; ++i) {
                if (downward_only ? pair[i] <= 0 : pair[i] == 0) continue;
                IVec child = mu;
                reflect_coweight(rs, i, child);
                if (info.count(child)) continue;
                std::vector<int> cw;
                cw.reserve(word.size() + 1);
                cw.push_back(i);
                cw.insert(cw.end(), word.begin(), word.end());
                info[child] = {std::move(cw), imat_mul(refl[i], act)};
                next.push_back(child);
                order.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    std::vector<CosetRep> out;
    out.reserve(order.size());
    for (const auto& mu : order) {
        auto& [word, act] = info[mu];
        out.push_back({{word, act}, mu});
    }
    return out;
}

std::vector<CosetRep> coset_reps_min_length(const RootSystem& rs, const IVec& lambda_cr) {
    if (!coweight_dominant(rs, lambda_cr))
        throw NotDominant("coset_reps_min_length: lambda not dominant");
    return orbit_reps_impl(rs, lambda_cr, true);
}

std::vector<CosetRep> coweight_orbit_reps(const RootSystem& rs, const IVec& lambda_cr) {
    return orbit_reps_impl(rs, lambda_cr, false);
}

WeylGroupTable enumerate_weyl_group(const RootSystem& rs) {
    WeylGroupTable t;
    std::map<IMat, int> seen;
    std::vector<IMat> refl;
    for (int i = 0; i < rs.rank; ++i) refl.push_back(reflection_matrix(rs, i));
    IMat id = imat_identity(rs.rank);
    seen[id] = 1;
    t.action.push_back(id);
    t.parity.push_back(1);
    std::vector<IMat> frontier{id};
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::sort(frontier.begin(), frontier.end());
        std::vector<IMat> next;
        for (const auto& m : frontier)
            for (int i = 0; i < rs.rank; ++i) {
                IMat c = imat_mul(refl[i], m);
                if (seen.emplace(c, 1).second) {
                    next.push_back(c);
                    t.action.push_back(c);
                    t.parity.push_back(level % 2 ? -1 : 1);
                }
            }
        frontier = std::move(next);
    }
    return t;
}

std::map<Int, std::vector<int>> graded_inversion_set_signed(const RootSystem& rs,
                                                            const WeylElement& w,
                                                            const IVec& lambda_cr) {
    std::map<Int, std::vector<int>> out;
    int n = rs.num_pos_roots();
    for (int idx = 0; idx < 2 * n; ++idx) {
        IVec beta = rs.root_fw(idx);
        Int p = ivec_dot(lambda_cr, beta);
        if (p <= 0) continue;
        IVec img = weyl_apply(w, beta);
        int iidx = rs.root_index(img);
        assert(iidx >= 0);
        if (!rs.is_positive_index(iidx)) out[-p].push_back(idx);
    }
    return out;
}

std::map<Int, std::vector<int>> graded_inversion_set(const RootSystem& rs, const WeylElement& w,
                                                     const IVec& lambda_cr) {
    return graded_inversion_set_signed(rs, w, lambda_cr);
}

IVec rho_weight(const RootSystem& rs) { return IVec(rs.rank, 1); }

QVec weight_to_eps(const RootSystem& rs, const IVec& fw) {
    QVec eps(rs.eps_dim, QQ(0));
    for (int d = 0; d < rs.eps_dim; ++d)
        for (int j = 0; j < rs.rank; ++j)
            if (fw[j]) eps[d] += rs.fw_to_eps[d][j] * QQ((long)fw[j]);
    // for A factors, shift to the partition normalization (last coordinate 0)
    int off_d = 0, off_r = 0;
    for (auto [series, n] : rs.factors) {
        int ed = (series == 'A') ? n + 1 : (series == 'E' ? 8 : (series == 'G' ? 3 : n));
        if (series == 'A') {
            QQ last = eps[off_d + ed - 1];
            if (sgn(last)) {
                for (int d = 0; d < ed; ++d) eps[off_d + d] -= last;
            }
        }
        off_d += ed;
        off_r += n;
    }
    return eps;
}

IVec weight_from_eps(const RootSystem& rs, const QVec& eps_in) {
    if ((int)eps_in.size() != rs.eps_dim) throw DimensionError("weight_from_eps: wrong size");
    QVec eps = eps_in;
    // normalize A blocks to trace zero (they are only defined up to (1,..,1))
    int off_d = 0;
    for (auto [series, n] : rs.factors) {
        int ed = (series == 'A') ? n + 1 : (series == 'E' ? 8 : (series == 'G' ? 3 : n));
        if (series == 'A') {
            QQ mean(0);
            for (int d = 0; d < ed; ++d) mean += eps[off_d + d];
            mean /= ed;
            for (int d = 0; d < ed; ++d) eps[off_d + d] -= mean;
        }
        off_d += ed;
    }
    // solve fw_to_eps * f = eps
    QMat a = rs.fw_to_eps;
    QVec b = eps;
    int rows = rs.eps_dim, cols = rs.rank;
    QVec f(cols, QQ(0));
    int rank = 0;
    std::vector<int> pivcol;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(a[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        QQ p = a[rank][c];
        for (int cc = 0; cc < cols; ++cc) a[rank][cc] /= p;
        b[rank] /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || sgn(a[r][c]) == 0) continue;
            QQ fac = a[r][c];
            for (int cc = 0; cc < cols; ++cc) a[r][cc] -= fac * a[rank][cc];
            b[r] -= fac * b[rank];
        }
        pivcol.push_back(c);
        ++rank;
    }
    if (rank < cols) throw DimensionError("weight_from_eps: underdetermined");
    for (int r = rank; r < rows; ++r)
        if (sgn(b[r])) throw DimensionError("weight_from_eps: inconsistent eps vector");
    IVec out(cols, 0);
    for (int r = 0; r < rank; ++r) {
        if (b[r].get_den() != 1)
            throw DimensionError("weight_from_eps: not in the character lattice");
        out[pivcol[r]] = (Int)b[r].get_num().get_si();
    }
    return out;
}

std::string eps_str(const QVec& eps) {
    std::string s = "(";
    for (size_t i = 0; i < eps.size(); ++i) {
        if (i) s += ",";
        s += eps[i].get_str();
    }
    return s + ")";
}

QVec coweight_to_eps_dual(const RootSystem& rs, const IVec& cr) {
    QVec out;
    int off_r = 0;
    for (auto [series, n] : rs.factors) {
        if (series == 'A') {
            // diag(t^{a_1},...,t^{a_{n+1}}) with sum zero; a_i = l_i - l_{i-1}
            QVec a(n + 1, QQ(0));
            for (int i = 0; i <= n; ++i) {
                QQ prev = (i > 0) ? QQ((long)cr[off_r + i - 1]) : QQ(0);
                QQ cur = (i < n) ? QQ((long)cr[off_r + i]) : QQ(0);
                a[i] = cur - prev;
            }
            out.insert(out.end(), a.begin(), a.end());
        } else if (series == 'B' || series == 'C' || series == 'D' || series == 'F') {
            // l_d = <lambda, eps_d>, computed through the weight with eps coords e_d
            RootSystem sub = build_root_system({{series, n}});
            QMat inv = qmat_inverse(sub.fw_to_eps);
            for (int d = 0; d < n; ++d) {
                QQ s(0);
                for (int j = 0; j < n; ++j) s += QQ((long)cr[off_r + j]) * inv[j][d];
                out.push_back(s);
            }
        } else {
            for (int j = 0; j < n; ++j) out.push_back(QQ((long)cr[off_r + j]));
        }
        off_r += n;
    }
    return out;
}

}  // namespace lrc
