#ifndef LRC_CHEVALLEY_HPP
#define LRC_CHEVALLEY_HPP

/*
  Exact Lie algebra arithmetic over a Chevalley basis: integer structure
  constants N_{a,b}, adjoint action, exact exponentials of nilpotent adjoint
  operators, and seeded random Levi group elements.

  Basis order: e_beta for the positive roots (root system order), then
  e_{-beta}, then the Cartan generators h_1..h_rank.  Signs are fixed by the
  extraspecial-pair convention: for each non-simple positive root the
  decomposition with smallest first summand gets N = +(p+1); every other
  constant is derived from the Jacobi identity.
*/

#include "lrc/lie.hpp"

namespace lrc {

struct LieAlgebraData {
    RootSystem rs;  // own copy, self contained
    int npos = 0;
    int dim = 0;
    std::vector<std::vector<Int>> N;  // signed-root-index table, 0 when sum not a root
    std::vector<std::vector<int>> sum_idx;  // signed index of the sum, -1 if not a root

    int e_index(int signed_root) const { return signed_root; }
    int h_index(int i) const { return 2 * npos + i; }
};

LieAlgebraData build_lie_algebra(const RootSystem& rs);

// Elements are dense rational coordinate vectors over the basis.
QVec elem_zero(const LieAlgebraData& L);
QVec elem_e(const LieAlgebraData& L, int signed_root);
QVec elem_h(const LieAlgebraData& L, int i);
bool elem_is_zero(const QVec& x);

QVec bracket(const LieAlgebraData& L, const QVec& x, const QVec& y);

// T-weight (fw coords) of a basis index: root weight for e's, zero for h's.
IVec basis_weight(const LieAlgebraData& L, int idx);

struct AdjointOperator {
    QMat mat;  // dim x dim, column action
    bool unipotent = false;
};

AdjointOperator adjoint_identity(const LieAlgebraData& L);
// exp(t ad(e_gamma)) as an exact operator (nilpotent, finite sum)
AdjointOperator adjoint_exp(const LieAlgebraData& L, int gamma_signed, const QQ& t);
AdjointOperator adjoint_compose(const AdjointOperator& a, const AdjointOperator& b);
QVec adjoint_apply(const AdjointOperator& op, const QVec& x);

// Product of exp(ad(c e_gamma)) over all roots gamma with <lambda,gamma> = 0,
// coefficients c drawn from {1..9} by a seeded deterministic generator.
AdjointOperator random_levi_element(const LieAlgebraData& L, const IVec& lambda_cr,
                                    uint64_t seed);

// Same element restricted to the invariant block spanned by e_{idx} for the
// given signed root indices (all of one lambda-grading).  Returns the block
// matrix with columns in block order.
QMat levi_element_block(const LieAlgebraData& L, const IVec& lambda_cr, uint64_t seed,
                        const std::vector<int>& block);

// automorphism check on basis pairs ([g x, g y] == g [x,y]); exhaustive when
// dim is small, sampled otherwise
bool is_lie_automorphism(const LieAlgebraData& L, const AdjointOperator& op, int samples = 0);

}  // namespace lrc

#endif
