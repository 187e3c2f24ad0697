#include "lrc/embeddings.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace lrc {

namespace {

struct ParsedName {
    std::string base;
    std::vector<std::string> args;
};

ParsedName parse_name(const std::string& name) {
    auto lp = name.find('(');
    if (lp == std::string::npos) return {name, {}};
    if (name.back() != ')') throw UnknownPair("malformed pair name: " + name);
    ParsedName p;
    p.base = name.substr(0, lp);
    std::string inner = name.substr(lp + 1, name.size() - lp - 2);
    std::string cur;
    for (char c : inner) {
        if (c == ',') {
            p.args.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)c))
            cur += c;
    }
    if (!cur.empty()) p.args.push_back(cur);
    return p;
}

// orbit-style spec: each simple generator of G maps to a coefficient-1 sum of
// root vectors of ghat over the given signed root indices
EmbeddingSpec orbit_spec(const std::string& name, TypeSpec g_type, TypeSpec ghat_type,
                         const RootSystem& ghat, const std::vector<std::vector<int>>& orbits) {
    EmbeddingSpec s;
    s.name = name;
    s.g_type = std::move(g_type);
    s.ghat_type = std::move(ghat_type);
    for (const auto& orbit : orbits) {
        std::vector<std::pair<int, QQ>> e, f;
        for (int idx : orbit) {
            e.push_back({idx, QQ(1)});
            f.push_back({ghat.opposite_index(idx), QQ(1)});
        }
        s.e_img.push_back(e);
        s.f_img.push_back(f);
    }
    return s;
}

QVec image_elem(const LieAlgebraData& L, const std::vector<std::pair<int, QQ>>& terms) {
    QVec x = elem_zero(L);
    for (auto& [idx, c] : terms) x[idx] += c;
    return x;
}

// h-image of generator i: [e_i, f_i]; must be in the Cartan
IVec h_image_coords(const LieAlgebraData& L, const EmbeddingSpec& spec, int i,
                    Diagnostics* diag) {
    QVec h = bracket(L, image_elem(L, spec.e_img[i]), image_elem(L, spec.f_img[i]));
    IVec u(L.rs.rank, 0);
    for (int k = 0; k < 2 * L.npos; ++k)
        if (sgn(h[k])) {
            if (diag)
                diag->fail("[e_i, f_i] has a non-Cartan component for i=" + std::to_string(i));
            break;
        }
    for (int k = 0; k < L.rs.rank; ++k) {
        QQ v = h[2 * L.npos + k];
        if (v.get_den() != 1) {
            if (diag) diag->fail("h-image not integral for i=" + std::to_string(i));
            return u;
        }
        u[k] = (Int)v.get_num().get_si();
    }
    return u;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"spin_odd_even(n)", "sl3_g2", "g2_spin7", "g2_so7",
            "spin9_f4",         "f4_e6",  "sp_sl(n)", "diagonal(S,r)"};
}

bool is_catalog_name(const std::string& name) {
    ParsedName p = parse_name(name);
    static const std::vector<std::string> bases{"spin_odd_even", "sl3_g2", "g2_spin7", "g2_so7",
                                                "spin9_f4",      "f4_e6",  "sp_sl",    "diagonal"};
    return std::find(bases.begin(), bases.end(), p.base) != bases.end();
}

static EmbeddingSpec make_builtin_spec(const std::string& name) {
    ParsedName p = parse_name(name);
    auto need_args = [&](size_t n) {
        if (p.args.size() != n) throw UnknownPair("pair " + p.base + ": wrong argument count");
    };
    if (p.base == "spin_odd_even") {
        need_args(1);
        int n = std::stoi(p.args[0]);
        if (n < 2) throw UnknownPair("spin_odd_even(n) needs n >= 2");
        TypeSpec ghat_t{{'D', n}};
        RootSystem ghat = build_root_system(ghat_t);
        std::vector<std::vector<int>> orbits;
        for (int i = 0; i + 2 < n; ++i) orbits.push_back({ghat.simple_root_index(i)});
        orbits.push_back({ghat.simple_root_index(n - 2), ghat.simple_root_index(n - 1)});
        return orbit_spec(name, {{'B', n - 1}}, ghat_t, ghat, orbits);
    }
    if (p.base == "sp_sl") {
        need_args(1);
        int n = std::stoi(p.args[0]);
        if (n < 2) throw UnknownPair("sp_sl(n) needs n >= 2");
        TypeSpec ghat_t{{'A', 2 * n - 1}};
        RootSystem ghat = build_root_system(ghat_t);
        std::vector<std::vector<int>> orbits;
        for (int i = 0; i + 1 < n; ++i)
            orbits.push_back({ghat.simple_root_index(i), ghat.simple_root_index(2 * n - 2 - i)});
        orbits.push_back({ghat.simple_root_index(n - 1)});
        return orbit_spec(name, {{'C', n}}, ghat_t, ghat, orbits);
    }
    if (p.base == "sl3_g2") {
        need_args(0);
        TypeSpec ghat_t{{'G', 2}};
        RootSystem ghat = build_root_system(ghat_t);
        // long-root A2 subsystem: simple roots a2 and 3a1+a2
        IMat ct = imat_transpose(ghat.cartan);
        int b1 = ghat.root_index(imat_apply(ct, IVec{0, 1}));
        int b2 = ghat.root_index(imat_apply(ct, IVec{3, 1}));
        assert(b1 >= 0 && b2 >= 0);
        return orbit_spec(name, {{'A', 2}}, ghat_t, ghat, {{b1}, {b2}});
    }
    if (p.base == "g2_spin7" || p.base == "g2_so7") {
        need_args(0);
        TypeSpec ghat_t{{'B', 3}};
        RootSystem ghat = build_root_system(ghat_t);
        EmbeddingSpec s = orbit_spec(name, {{'G', 2}}, ghat_t, ghat,
                                     {{ghat.simple_root_index(0), ghat.simple_root_index(2)},
                                      {ghat.simple_root_index(1)}});
        if (p.base == "g2_so7") {
            // X(T_SO7): integral eps weights, i.e. even spin coordinate
            s.xhat_sublattice = IMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
        }
        return s;
    }
    if (p.base == "spin9_f4") {
        need_args(0);
        TypeSpec ghat_t{{'F', 4}};
        RootSystem ghat = build_root_system(ghat_t);
        int b1 = ghat.root_index(weight_from_eps(ghat, {QQ(1), QQ(-1), QQ(0), QQ(0)}));
        assert(b1 >= 0);
        return orbit_spec(name, {{'B', 4}}, ghat_t, ghat,
                          {{b1},
                           {ghat.simple_root_index(0)},
                           {ghat.simple_root_index(1)},
                           {ghat.simple_root_index(2)}});
    }
    if (p.base == "f4_e6") {
        need_args(0);
        TypeSpec ghat_t{{'E', 6}};
        RootSystem ghat = build_root_system(ghat_t);
        return orbit_spec(name, {{'F', 4}}, ghat_t, ghat,
                          {{ghat.simple_root_index(1)},
                           {ghat.simple_root_index(3)},
                           {ghat.simple_root_index(2), ghat.simple_root_index(4)},
                           {ghat.simple_root_index(0), ghat.simple_root_index(5)}});
    }
    if (p.base == "diagonal") {
        need_args(2);
        char series = (char)toupper(p.args[0][0]);
        int r = std::stoi(p.args[1]);
        TypeSpec g_t{{series, r}};
        build_root_system(g_t);  // validates the type
        TypeSpec ghat_t{{series, r}, {series, r}};
        RootSystem ghat = build_root_system(ghat_t);
        std::vector<std::vector<int>> orbits;
        for (int i = 0; i < r; ++i)
            orbits.push_back({ghat.simple_root_index(i), ghat.simple_root_index(r + i)});
        return orbit_spec(name, g_t, ghat_t, ghat, orbits);
    }
    throw UnknownPair("unknown pair: " + name);
}

EmbeddedPair pair_from_spec(const EmbeddingSpec& spec) {
    EmbeddedPair pair;
    pair.spec = spec;
    pair.g = build_root_system(spec.g_type);
    pair.ghat_alg = build_lie_algebra(build_root_system(spec.ghat_type));
    const RootSystem& g = pair.g;
    const LieAlgebraData& L = pair.ghat_alg;
    const RootSystem& gh = L.rs;

    if ((int)spec.e_img.size() != g.rank || (int)spec.f_img.size() != g.rank)
        throw DimensionError("pair_from_spec: generator image count != rank");

    // rho from the h-images
    pair.rho.assign(g.rank, IVec(gh.rank, 0));
    for (int i = 0; i < g.rank; ++i) {
        Diagnostics d;
        pair.rho[i] = h_image_coords(L, spec, i, &d);
        if (!d.ok) throw DimensionError("pair_from_spec: " + d.failures[0]);
    }
    pair.rho_star = imat_transpose(pair.rho);

    // generator weight consistency
    for (int i = 0; i < g.rank; ++i) {
        for (auto& [idx, c] : spec.e_img[i]) {
            (void)c;
            if (pair.restrict_weight(gh.root_fw(idx)) != g.cartan[i])
                throw DimensionError("pair_from_spec: e-image weight mismatch");
        }
        for (auto& [idx, c] : spec.f_img[i]) {
            (void)c;
            if (pair.restrict_weight(gh.root_fw(idx)) != ivec_neg(g.cartan[i]))
                throw DimensionError("pair_from_spec: f-image weight mismatch");
        }
    }

    // root images by bracketing along height order
    int ng = g.num_pos_roots();
    pair.g_root_images.assign(2 * ng, QVec());
    for (int i = 0; i < g.rank; ++i) {
        int si = g.simple_root_index(i);
        pair.g_root_images[si] = image_elem(L, spec.e_img[i]);
        pair.g_root_images[si + ng] = image_elem(L, spec.f_img[i]);
    }
    for (int k = 0; k < ng; ++k) {
        if (!pair.g_root_images[k].empty()) continue;  // simple roots already set
        int ai = -1, rest = -1;
        for (int i = 0; i < g.rank; ++i) {
            IVec diff = ivec_sub(g.pos_roots_fw[k], g.cartan[i]);
            int d = g.root_index(diff);
            if (d >= 0 && d < ng) {
                ai = g.simple_root_index(i);
                rest = d;
                break;
            }
        }
        assert(ai >= 0);
        QVec img = bracket(L, pair.g_root_images[ai], pair.g_root_images[rest]);
        QVec imgn = bracket(L, pair.g_root_images[ai + ng], pair.g_root_images[rest + ng]);
        if (elem_is_zero(img) || elem_is_zero(imgn))
            throw DimensionError("pair_from_spec: vanishing root image (not an embedding)");
        pair.g_root_images[k] = qvec_from(qvec_primitive_int(img));
        pair.g_root_images[k + ng] = qvec_from(qvec_primitive_int(imgn));
    }
    for (int i = 0; i < g.rank; ++i) {
        int si = g.simple_root_index(i);
        pair.g_root_images[si] = qvec_from(qvec_primitive_int(pair.g_root_images[si]));
        pair.g_root_images[si + ng] = qvec_from(qvec_primitive_int(pair.g_root_images[si + ng]));
    }

    // hypothesis of the lattice theorem: no simple factor of ghat inside g.
    // A factor lies in g iff each of its simple root vectors is itself a g
    // root image line.
    {
        int off = 0;
        for (auto [series, n] : spec.ghat_type) {
            bool inside = true;
            for (int j = 0; j < n && inside; ++j) {
                int idx = gh.simple_root_index(off + j);
                IVec w = pair.restrict_weight(gh.root_fw(idx));
                int gidx = g.root_index(w);
                if (gidx < 0) {
                    inside = false;
                    break;
                }
                const QVec& line = pair.g_root_images[gidx];
                for (int t = 0; t < L.dim && inside; ++t)
                    if (sgn(line[t]) != 0 && t != idx) inside = false;
            }
            if (inside)
                throw HypothesisViolated("pair " + spec.name +
                                         ": a simple factor of ghat lies inside g");
            off += n;
        }
    }

    // tangent weights: T-weights of ghat minus those of g
    std::map<IVec, int> mult;
    for (int idx = 0; idx < 2 * gh.num_pos_roots(); ++idx)
        mult[pair.restrict_weight(gh.root_fw(idx))] += 1;
    mult[IVec(g.rank, 0)] += gh.rank;
    for (int idx = 0; idx < 2 * ng; ++idx) mult[g.root_fw(idx)] -= 1;
    mult[IVec(g.rank, 0)] -= g.rank;
    for (auto& [w, m] : mult) {
        if (m < 0) throw DimensionError("pair_from_spec: weight multiset of g not inside ghat");
        if (m == 0) continue;
        if (ivec_is_zero(w))
            pair.zero_tangent_mult = m;
        else
            pair.tangent_weights.push_back({w, m});
    }
    if (pair.zero_tangent_mult != gh.rank - g.rank)
        throw DimensionError("pair_from_spec: unexpected zero-weight multiplicity");

    return pair;
}

EmbeddedPair builtin_pair(const std::string& name) {
    return pair_from_spec(make_builtin_spec(name));
}

Diagnostics validate_embedding(const EmbeddingSpec& spec) {
    Diagnostics diag;
    RootSystem g;
    LieAlgebraData L;
    try {
        g = build_root_system(spec.g_type);
        L = build_lie_algebra(build_root_system(spec.ghat_type));
    } catch (const std::exception& e) {
        diag.fail(std::string("type data: ") + e.what());
        return diag;
    }
    if ((int)spec.e_img.size() != g.rank || (int)spec.f_img.size() != g.rank) {
        diag.fail("generator image count != rank of g");
        return diag;
    }
    std::vector<QVec> e(g.rank), f(g.rank), h(g.rank);
    std::vector<IVec> u(g.rank);
    for (int i = 0; i < g.rank; ++i) {
        e[i] = image_elem(L, spec.e_img[i]);
        f[i] = image_elem(L, spec.f_img[i]);
        u[i] = h_image_coords(L, spec, i, &diag);
        h[i] = elem_zero(L);
        for (int k = 0; k < L.rs.rank; ++k) h[i][2 * L.npos + k] = QQ((long)u[i][k]);
    }
    if (!diag.ok) return diag;

    // weight compatibility of the images under the derived restriction map
    IMat rho(g.rank, IVec(L.rs.rank, 0));
    for (int i = 0; i < g.rank; ++i) rho[i] = u[i];
    for (int i = 0; i < g.rank; ++i)
        for (auto& [idx, c] : spec.e_img[i]) {
            (void)c;
            if (imat_apply(rho, L.rs.root_fw(idx)) != g.cartan[i])
                diag.fail("e-image " + std::to_string(i) + " not of weight alpha_i");
        }

    auto elems_equal = [&](const QVec& a, const QVec& b) {
        for (int k = 0; k < L.dim; ++k)
            if (a[k] != b[k]) return false;
        return true;
    };
    auto scaled = [&](const QVec& a, Int c) {
        QVec r = a;
        for (auto& x : r) x *= QQ((long)c);
        return r;
    };

    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j) {
            if (i != j && !elem_is_zero(bracket(L, e[i], f[j])))
                diag.fail("[e_" + std::to_string(i) + ", f_" + std::to_string(j) + "] != 0");
            if (!elems_equal(bracket(L, h[i], e[j]), scaled(e[j], g.cartan[j][i])))
                diag.fail("[h_" + std::to_string(i) + ", e_" + std::to_string(j) + "] != a_ji e_j");
            if (!elems_equal(bracket(L, h[i], f[j]), scaled(f[j], -g.cartan[j][i])))
                diag.fail("[h_" + std::to_string(i) + ", f_" + std::to_string(j) +
                          "] != -a_ji f_j");
        }
    if (!diag.ok) return diag;

    // closure: span of all root images plus the h's is a subalgebra of dim g
    EmbeddedPair pair;
    try {
        pair = pair_from_spec(spec);
    } catch (const std::exception& ex) {
        diag.fail(std::string("root image generation: ") + ex.what());
        return diag;
    }
    int ng = g.num_pos_roots();
    std::vector<QVec> basis = pair.g_root_images;
    for (int i = 0; i < g.rank; ++i) basis.push_back(h[i]);
    {
        QMat bm(basis.size(), QVec(L.dim));
        for (size_t r = 0; r < basis.size(); ++r) bm[r] = basis[r];
        if (qmat_rank(bm) != (int)basis.size())
            diag.fail("root images are not linearly independent");
    }
    // subalgebra property, weight by weight
    auto weight_of = [&](int bidx) {
        if (bidx < 2 * ng) return g.root_fw(bidx);
        return IVec(g.rank, 0);
    };
    auto in_span_of = [&](const QVec& v, const std::vector<int>& idxs) {
        if (elem_is_zero(v)) return true;
        QMat m;
        for (int bi : idxs) m.push_back(basis[bi]);
        int r0 = qmat_rank(m);
        m.push_back(v);
        return qmat_rank(m) == r0;
    };
    std::map<IVec, std::vector<int>> by_weight;
    for (size_t bi = 0; bi < basis.size(); ++bi) by_weight[weight_of((int)bi)].push_back((int)bi);
    for (size_t a = 0; a < basis.size() && diag.ok; ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) {
            QVec br = bracket(L, basis[a], basis[b]);
            if (elem_is_zero(br)) continue;
            IVec w = ivec_add(weight_of((int)a), weight_of((int)b));
            auto it = by_weight.find(w);
            if (it == by_weight.end() || !in_span_of(br, it->second)) {
                diag.fail("bracket of basis elements leaves the subalgebra (weights " +
                          ivec_str(weight_of((int)a)) + " + " + ivec_str(weight_of((int)b)) + ")");
                break;
            }
        }

    // tangent weights are W(G)-stable as a multiset
    std::map<IVec, int> tw(pair.tangent_weights.begin(), pair.tangent_weights.end());
    for (auto& [w, m] : tw)
        for (int i = 0; i < g.rank; ++i) {
            IVec r = w;
            reflect_weight(g, i, r);
            auto it = tw.find(r);
            if (it == tw.end() || it->second != m) {
                diag.fail("tangent weights not Weyl stable at " + ivec_str(w));
                break;
            }
        }
    return diag;
}

IVec embed_coweight(const EmbeddedPair& pair, const IVec& lambda_cr) {
    return imat_apply(pair.rho_star, lambda_cr);
}

LatticeDescription lr_lattice(const EmbeddedPair& pair) {
    const RootSystem& g = pair.g;
    const RootSystem& gh = pair.ghat();
    int r = g.rank, rh = gh.rank;
    // L = span{rho(alpha_hat_j)} in X(T); the hypothesis needs full rank
    IMat lgen;
    for (int j = 0; j < rh; ++j) lgen.push_back(pair.restrict_weight(gh.cartan[j]));
    if (qmat_rank(qmat_from(lgen)) != r)
        throw HypothesisViolated("lr_lattice: restricted root lattice not of full rank");

    // X(That) or the configured sublattice, as rows
    IMat xhat = pair.spec.xhat_sublattice ? *pair.spec.xhat_sublattice : imat_identity(rh);

    // (nu, z, c) with nu + rho(xhat^T z) - sum_j c_j L_j = 0
    int cols = r + rh + rh;
    ZMat M(r, ZVec(cols, ZZ(0)));
    for (int i = 0; i < r; ++i) {
        M[i][i] = 1;
        for (int j = 0; j < rh; ++j) {
            IVec img = pair.restrict_weight(xhat[j]);
            M[i][r + j] = (long)img[i];
            M[i][r + rh + j] = -(long)lgen[j][i];
        }
    }
    ZMat kernel = zmat_kernel(M);
    // project kernel generators to (nu, nuhat = xhat^T z)
    ZMat gens;
    for (auto& k : kernel) {
        ZVec row(r + rh, ZZ(0));
        for (int i = 0; i < r; ++i) row[i] = k[i];
        for (int j = 0; j < rh; ++j)
            for (int t = 0; t < rh; ++t) row[r + t] += k[r + j] * ZZ((long)xhat[j][t]);
        gens.push_back(row);
    }
    LatticeDescription lat;
    lat.ambient = r + rh;
    lat.basis = lattice_row_basis(gens, lat.ambient);
    if ((int)lat.basis.size() != lat.ambient)
        throw DimensionError("lr_lattice: basis not of full rank");
    lat.index = zmat_abs_det(lat.basis);

    QMat bt(lat.ambient, QVec(lat.ambient));
    for (int i = 0; i < lat.ambient; ++i)
        for (int j = 0; j < lat.ambient; ++j) bt[i][j] = QQ(lat.basis[j][i]);
    lat.basis_inv_t = qmat_inverse(bt);
    return lat;
}

bool lattice_contains(const LatticeDescription& lat, const IVec& point) {
    QVec x = qmat_apply(lat.basis_inv_t, qvec_from(point));
    for (auto& q : x)
        if (q.get_den() != 1) return false;
    return true;
}

IVec lattice_coords(const LatticeDescription& lat, const IVec& point) {
    QVec x = qmat_apply(lat.basis_inv_t, qvec_from(point));
    IVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].get_den() != 1) throw DimensionError("lattice_coords: point not in lattice");
        out[i] = (Int)x[i].get_num().get_si();
    }
    return out;
}

Int lattice_saturation_factor(const LatticeDescription& lat, const IVec& point) {
    QVec x = qmat_apply(lat.basis_inv_t, qvec_from(point));
    ZZ l(1);
    for (auto& q : x) {
        ZZ d = q.get_den();
        l = l / gcd(l, d) * d;
    }
    return (Int)l.get_si();
}

std::string pair_to_text(const EmbeddingSpec& spec) {
    std::ostringstream os;
    os << "lrpair 1\n";
    os << "name " << spec.name << "\n";
    os << "g " << type_str(spec.g_type) << "\n";
    os << "ghat " << type_str(spec.ghat_type) << "\n";
    RootSystem gh = build_root_system(spec.ghat_type);
    auto write_gens = [&](const char* tag,
                          const std::vector<std::vector<std::pair<int, QQ>>>& imgs) {
        for (size_t i = 0; i < imgs.size(); ++i) {
            os << "gen " << tag << " " << i;
            for (auto& [idx, c] : imgs[i]) {
                IVec sr = gh.pos_roots_sr[idx % gh.num_pos_roots()];
                if (!gh.is_positive_index(idx)) sr = ivec_neg(sr);
                os << " " << c.get_str() << " @";
                for (size_t k = 0; k < sr.size(); ++k)
                    os << (k ? "," : "") << sr[k];
            }
            os << "\n";
        }
    };
    write_gens("e", spec.e_img);
    write_gens("f", spec.f_img);
    if (spec.xhat_sublattice) {
        os << "xhat_sublattice " << spec.xhat_sublattice->size() << "\n";
        for (auto& row : *spec.xhat_sublattice) {
            for (size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
            os << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

EmbeddingSpec pair_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    if (!(is >> word) || word != "lrpair") throw UnknownPair("pair file: bad magic");
    int version;
    is >> version;
    if (version != 1) throw UnknownPair("pair file: unsupported version");
    EmbeddingSpec spec;
    RootSystem gh;
    bool have_ghat = false;
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key.empty() || key[0] == '#') continue;
        if (key == "end") break;
        if (key == "name") {
            ls >> spec.name;
        } else if (key == "g") {
            std::string t;
            ls >> t;
            spec.g_type = parse_type(t);
        } else if (key == "ghat") {
            std::string t;
            ls >> t;
            spec.ghat_type = parse_type(t);
            gh = build_root_system(spec.ghat_type);
            have_ghat = true;
        } else if (key == "gen") {
            if (!have_ghat) throw UnknownPair("pair file: gen before ghat");
            std::string tag;
            size_t i;
            ls >> tag >> i;
            auto& target = (tag == "e") ? spec.e_img : spec.f_img;
            if (target.size() <= i) target.resize(i + 1);
            std::string coeff, at;
            while (ls >> coeff >> at) {
                if (at.empty() || at[0] != '@') throw UnknownPair("pair file: bad term");
                IVec sr;
                std::istringstream ts(at.substr(1));
                std::string tok;
                while (std::getline(ts, tok, ',')) sr.push_back(std::stoll(tok));
                bool negative = false;
                for (Int v : sr)
                    if (v < 0) negative = true;
                IVec key_sr = negative ? ivec_neg(sr) : sr;
                int idx = gh.root_index(imat_apply(imat_transpose(gh.cartan), key_sr));
                if (idx < 0) throw UnknownPair("pair file: not a root: " + at);
                if (negative) idx = gh.opposite_index(idx);
                QQ c(coeff);
                c.canonicalize();
                target[i].push_back({idx, c});
            }
        } else if (key == "xhat_sublattice") {
            size_t rows;
            ls >> rows;
            IMat sub;
            for (size_t rr = 0; rr < rows; ++rr) {
                std::getline(is, line);
                std::istringstream rls(line);
                IVec row;
                Int v;
                while (rls >> v) row.push_back(v);
                sub.push_back(row);
            }
            spec.xhat_sublattice = sub;
        } else {
            throw UnknownPair("pair file: unknown key " + key);
        }
    }
    return spec;
}

}  // namespace lrc
