#ifndef LRC_LIE_HPP
#define LRC_LIE_HPP

/*
  Root systems, weight and coweight lattices, Weyl groups, minimal coset
  representatives and graded inversion sets.  Everything is exact integer
  combinatorics.

  Conventions (Bourbaki labels throughout):
  - weights live in the fundamental-weight basis, coords are integers;
  - coweights live in the simple-coroot basis (all catalog groups are simply
    connected, so that basis spans the cocharacter lattice);
  - with these bases the natural pairing <coweight, weight> is the plain dot
    product and <alpha_i^vee, varpi_j> = delta_ij;
  - cartan[i][j] = <alpha_j^vee, alpha_i>, so row i of the Cartan matrix is
    alpha_i written in fundamental-weight coordinates.
*/

#include "lrc/numeric.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lrc {

using TypeSpec = std::vector<std::pair<char, int>>;  // e.g. {{'C',3}}, {{'A',1},{'A',1}}

std::string type_str(const TypeSpec& t);
TypeSpec parse_type(const std::string& s);

struct RootSystem {
    TypeSpec factors;
    int rank = 0;
    int eps_dim = 0;
    IMat cartan;                       // cartan[i][j] = <alpha_j^vee, alpha_i>
    std::vector<IVec> pos_roots_sr;    // simple-root coordinates
    std::vector<IVec> pos_roots_fw;    // fundamental-weight coordinates
    IVec pos_root_len2;                // scaled squared lengths, integral
    IVec simple_len2;                  // scaled (alpha_i, alpha_i)
    std::vector<IVec> pos_coroots;     // coroot of each positive root, coroot basis
    QMat fw_to_eps;                    // eps coords of weight = fw_to_eps * fw coords
    QMat sr_of_fw;                     // simple-root coords of a root-lattice elt from fw coords
    IMat form_fw;                      // scaled W-invariant form on fw coords
    Int form_scale = 1;                // form_fw = form_scale * true form
    std::unordered_map<IVec, int, IVecHash> root_by_fw;  // signed: pos roots i, neg roots i+n

    int num_pos_roots() const { return (int)pos_roots_sr.size(); }
    int num_roots() const { return 2 * num_pos_roots(); }

    // signed root index: 0..n-1 positive, n..2n-1 the corresponding negatives
    bool is_positive_index(int idx) const { return idx < num_pos_roots(); }
    int opposite_index(int idx) const {
        int n = num_pos_roots();
        return idx < n ? idx + n : idx - n;
    }
    IVec root_fw(int idx) const {
        int n = num_pos_roots();
        return idx < n ? pos_roots_fw[idx] : ivec_neg(pos_roots_fw[idx - n]);
    }
    Int root_len2(int idx) const { return pos_root_len2[idx % num_pos_roots()]; }
    // coroot of a signed root in coroot coordinates
    IVec coroot(int idx) const {
        int n = num_pos_roots();
        return idx < n ? pos_coroots[idx] : ivec_neg(pos_coroots[idx - n]);
    }
    // -1 if fw coords are not a root
    int root_index(const IVec& fw) const {
        auto it = root_by_fw.find(fw);
        return it == root_by_fw.end() ? -1 : it->second;
    }
    int simple_root_index(int i) const;  // signed index of alpha_i

    Int form(const IVec& fw_a, const IVec& fw_b) const;  // scaled invariant form
};

RootSystem build_root_system(const TypeSpec& spec);

// ---- weights and coweights ----
struct Weight {
    IVec fw;
};
struct Coweight {
    IVec cr;
};

bool weight_dominant(const IVec& fw);
bool coweight_dominant(const RootSystem& rs, const IVec& cr);
Int pair_cw(const RootSystem& rs, const IVec& cw_cr, const IVec& wt_fw);

// <lambda, alpha_i> for all simple roots, i.e. cartan * lambda
IVec coweight_simple_pairings(const RootSystem& rs, const IVec& cr);

// in-place simple reflections
void reflect_weight(const RootSystem& rs, int i, IVec& fw);
void reflect_coweight(const RootSystem& rs, int i, IVec& cr);

IVec dominant_rep_weight(const RootSystem& rs, IVec fw);
IVec dominant_rep_coweight(const RootSystem& rs, IVec cr);

// full Weyl orbit of a weight, sorted
std::vector<IVec> weyl_orbit(const RootSystem& rs, const IVec& fw);

// number of Weyl group elements (orbit of a strictly dominant weight)
long long weyl_order(const RootSystem& rs);

struct WeylElement {
    std::vector<int> word;  // product s_{word[0]} s_{word[1]} ... applied right to left
    IMat action;            // action on weight coords (column vectors)
    int length() const { return (int)word.size(); }
    bool operator==(const WeylElement& o) const { return action == o.action; }
};

WeylElement weyl_identity(const RootSystem& rs);
WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);
IVec weyl_apply(const WeylElement& w, const IVec& fw);
IVec weyl_apply_inverse(const RootSystem& rs, const WeylElement& w, const IVec& fw);
// coweight action: <w lambda, chi> = <lambda, w^{-1} chi>
IVec weyl_apply_coweight(const RootSystem& rs, const WeylElement& w, const IVec& cr);
WeylElement longest_element(const RootSystem& rs);

// dual weight: -w0(nu)
IVec dual_weight(const RootSystem& rs, const IVec& fw);

// Minimal length coset representatives for the parabolic stabilizing a
// dominant coweight lambda; enumerated by BFS over the orbit of lambda.
// Deterministic order: breadth first, levels sorted by orbit coweight.
struct CosetRep {
    WeylElement w;
    IVec orbit_cw;  // w(lambda)
};
std::vector<CosetRep> coset_reps_min_length(const RootSystem& rs, const IVec& lambda_cr);

// Orbit of an arbitrary coweight with one representative per element
// (representatives are shortest words found by BFS; only the coset of the
// stabilizer is well defined).
std::vector<CosetRep> coweight_orbit_reps(const RootSystem& rs, const IVec& lambda_cr);

// Full Weyl group as matrices with length parity, BFS order.
struct WeylGroupTable {
    std::vector<IMat> action;
    std::vector<int> parity;  // (-1)^{length}
};
WeylGroupTable enumerate_weyl_group(const RootSystem& rs);

// Graded inversion set {alpha in Phi : <lambda,alpha> > 0, w(alpha) < 0},
// keyed by k = -<lambda,alpha> (so keys are negative).  For lambda dominant
// and w a minimal coset representative this is the inversion set of w.
std::map<Int, std::vector<int>> graded_inversion_set(const RootSystem& rs, const WeylElement& w,
                                                     const IVec& lambda_cr);

// same but on the lambda-grading of an arbitrary coweight pairing: set of
// signed root indices beta with <lambda,beta> > 0 and w(beta) negative
std::map<Int, std::vector<int>> graded_inversion_set_signed(const RootSystem& rs,
                                                            const WeylElement& w,
                                                            const IVec& lambda_cr);

// half sum of positive roots, fw coords (all ones)
IVec rho_weight(const RootSystem& rs);

// eps-coordinate rendering of a weight (exact rationals)
QVec weight_to_eps(const RootSystem& rs, const IVec& fw);
// inverse: weight from eps coords; throws if not in the character lattice
IVec weight_from_eps(const RootSystem& rs, const QVec& eps);
std::string eps_str(const QVec& eps);

// coweight rendering in the dual eps basis
QVec coweight_to_eps_dual(const RootSystem& rs, const IVec& cr);

}  // namespace lrc

#endif
