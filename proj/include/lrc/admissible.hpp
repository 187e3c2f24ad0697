#ifndef LRC_ADMISSIBLE_HPP
#define LRC_ADMISSIBLE_HPP

/*
  Enumeration of the dominant, indivisible, admissible one-parameter
  subgroups: normals of hyperplanes of X(T) x Q spanned by tangent weights of
  ghat/g, saturated to primitive coweights and reduced to dominant orbit
  representatives.
*/

#include "lrc/embeddings.hpp"

namespace lrc {

struct AdmissibleResult {
    std::vector<IVec> lambdas;  // coroot coords, dominant, primitive, sorted
    bool degenerate_rank1 = false;
};

AdmissibleResult admissible_one_param_subgroups(const EmbeddedPair& pair);

}  // namespace lrc

#endif
