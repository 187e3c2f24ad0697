#ifndef LRC_EMBEDDINGS_HPP
#define LRC_EMBEDDINGS_HPP

/*
  The catalog of embedded pairs (G in Ghat): restriction map on characters,
  Chevalley generator images of g inside ghat, tangent weights of ghat/g, and
  the lattice generated by the branching semigroup.

  Catalog names:
    spin_odd_even(n)   Spin_{2n-1} in Spin_{2n}, n >= 2
    sl3_g2             SL_3 in G_2 (long-root subsystem)
    g2_spin7           G_2 in Spin_7
    g2_so7             same embedding with the SO_7 character sublattice
    spin9_f4           Spin_9 in F_4 (long roots plus the +-eps_i)
    f4_e6              F_4 in E_6 (diagram folding)
    sp_sl(n)           Sp_{2n} in SL_{2n}, n >= 2
    diagonal(S,r)      G in G x G for a simple type S of rank r
*/

#include "lrc/chevalley.hpp"

#include <optional>

namespace lrc {

struct EmbeddingSpec {
    std::string name;
    TypeSpec g_type, ghat_type;
    // generator images: per simple root of G a list of (signed root index in
    // ghat, rational coefficient)
    std::vector<std::vector<std::pair<int, QQ>>> e_img, f_img;
    // optional finite-index sublattice of X(That) (basis rows, fw coords)
    std::optional<IMat> xhat_sublattice;
};

struct EmbeddedPair {
    EmbeddingSpec spec;
    RootSystem g;
    LieAlgebraData ghat_alg;
    IMat rho;          // rank_g x rank_ghat, fw bases; row i = coroot coords of img(h_i)
    IMat rho_star;     // transpose
    std::vector<std::pair<IVec, int>> tangent_weights;  // nonzero T-weights of ghat/g, sorted
    int zero_tangent_mult = 0;
    std::vector<QVec> g_root_images;  // per signed root of g, primitive vectors in ghat

    const RootSystem& ghat() const { return ghat_alg.rs; }
    const std::string& name() const { return spec.name; }
    // restriction of a ghat weight to T
    IVec restrict_weight(const IVec& fw_hat) const { return imat_apply(rho, fw_hat); }
};

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
};

std::vector<std::string> catalog_names();
bool is_catalog_name(const std::string& name);
EmbeddedPair builtin_pair(const std::string& name);
EmbeddedPair pair_from_spec(const EmbeddingSpec& spec);  // build + light validation

// full consistency check by exact bracketing in ghat
Diagnostics validate_embedding(const EmbeddingSpec& spec);

// coweight transport Y(T) -> Y(That)
IVec embed_coweight(const EmbeddedPair& pair, const IVec& lambda_cr);

struct LatticeDescription {
    int ambient = 0;
    ZMat basis;   // ambient x ambient rows generating the lattice
    ZZ index;     // index in Z^ambient
    QMat basis_inv_t;  // inverse of basis transpose, for membership tests
};

LatticeDescription lr_lattice(const EmbeddedPair& pair);
bool lattice_contains(const LatticeDescription& lat, const IVec& point);
// coordinates of a lattice point in the basis (throws if not in the lattice)
IVec lattice_coords(const LatticeDescription& lat, const IVec& point);
// smallest positive multiple of an ambient-integer point lying in the lattice
Int lattice_saturation_factor(const LatticeDescription& lat, const IVec& point);

// serialization of catalog entries
std::string pair_to_text(const EmbeddingSpec& spec);
EmbeddingSpec pair_from_text(const std::string& text);

}  // namespace lrc

#endif
