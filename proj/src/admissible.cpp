#include "lrc/admissible.hpp"

#include <algorithm>
#include <set>

namespace lrc {

namespace {

// DFS over subsets of the distinct tangent weights, keeping an echelon form
// of the chosen rows so only rank-increasing choices are explored.
void enumerate_hyperplanes(const std::vector<IVec>& weights, size_t start, int need, QMat& echelon,
                           std::vector<const IVec*>& chosen, std::set<IVec>& normals) {
    if (need == 0) {
        QMat m;
        for (auto* w : chosen) m.push_back(qvec_from(*w));
        auto ker = qmat_kernel(m);
        if (ker.size() != 1) return;
        IVec n = qvec_primitive_int(ker[0]);
        normals.insert(n);
        normals.insert(ivec_neg(n));
        return;
    }
    for (size_t i = start; i + need <= weights.size(); ++i) {
        QVec v = qvec_from(weights[i]);
        for (auto& row : echelon) {
            int piv = -1;
            for (size_t c = 0; c < row.size(); ++c)
                if (sgn(row[c])) {
                    piv = (int)c;
                    break;
                }
            if (piv >= 0 && sgn(v[piv])) {
                QQ f = v[piv] / row[piv];
                for (size_t c = 0; c < row.size(); ++c) v[c] -= f * row[c];
            }
        }
        bool indep = false;
        for (auto& q : v)
            if (sgn(q)) {
                indep = true;
                break;
            }
        if (!indep) continue;
        echelon.push_back(v);
        chosen.push_back(&weights[i]);
        enumerate_hyperplanes(weights, i + 1, need - 1, echelon, chosen, normals);
        echelon.pop_back();
        chosen.pop_back();
    }
}

}  // namespace

AdmissibleResult admissible_one_param_subgroups(const EmbeddedPair& pair) {
    const RootSystem& g = pair.g;
    AdmissibleResult res;
    if (g.rank < 2) {
        // the hyperplane degenerates to {0}; use the primitive dominant
        // coweight, flagged for the report
        res.degenerate_rank1 = true;
        res.lambdas.push_back(IVec{1});
        return res;
    }
    std::vector<IVec> weights;
    for (auto& [w, m] : pair.tangent_weights) {
        (void)m;
        weights.push_back(w);
    }
    std::set<IVec> normals;
    QMat echelon;
    echelon.reserve(g.rank);
    std::vector<const IVec*> chosen;
    enumerate_hyperplanes(weights, 0, g.rank - 1, echelon, chosen, normals);

    std::set<IVec> dominant;
    for (const auto& n : normals) dominant.insert(dominant_rep_coweight(g, n));
    res.lambdas.assign(dominant.begin(), dominant.end());
    return res;
}

}  // namespace lrc
