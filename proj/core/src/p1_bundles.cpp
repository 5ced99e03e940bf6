#include "rootcircles/p1_bundles.hpp"

#include <stdexcept>

namespace rootcircles {

BStringRep make_bstring_rep(Int top_weight, Int node_count) {
  if (node_count < 1)
    throw std::invalid_argument("string representation needs >= 1 node");
  return BStringRep{top_weight, node_count};
}

std::vector<Int> weights(const BStringRep& r) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(r.node_count));
  for (Int i = 0; i < r.node_count; ++i) out.push_back(r.top_weight - 2 * i);
  return out;
}

CanonicalMatrices canonical_matrices(const BStringRep& r) {
  const auto m = static_cast<size_t>(r.node_count);
  CanonicalMatrices cm;
  cm.h.assign(m, Vec(m, 0));
  cm.x.assign(m, Vec(m, 0));
  const auto w = weights(r);
  for (size_t i = 0; i < m; ++i) cm.h[i][i] = w[i];
  for (size_t i = 0; i + 1 < m; ++i)
    cm.x[i][i + 1] = r.top_weight - static_cast<Int>(i);
  // [H, X] = 2X, i.e. X raises weight by exactly 2 wherever it is nonzero
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      const Int bracket = w[i] * cm.x[i][j] - cm.x[i][j] * w[j];
      if (bracket != 2 * cm.x[i][j])
        throw std::logic_error("canonical matrices violate [H, X] = 2X");
    }
  return cm;
}

bool is_equivariantly_trivial(const BStringRep& r) {
  return r.top_weight == r.node_count - 1;
}

SplittingType to_splitting(const BStringRep& r) {
  SplittingType out;
  out.summands[r.node_count - 1 - r.top_weight] = r.node_count;
  return out;
}

BStringRep invariant_subspace(const BStringRep& r, Int keep) {
  if (keep < 1 || keep > r.node_count)
    throw std::invalid_argument("invariant subspace size out of range");
  return BStringRep{r.top_weight, keep};
}

BStringRep quotient_rep(const BStringRep& r, Int remove) {
  if (remove < 0 || remove > r.node_count - 1)
    throw std::invalid_argument("quotient removal count out of range");
  return BStringRep{r.top_weight - 2 * remove, r.node_count - remove};
}

SplittingType tensor_reps(const BStringRep& a, const BStringRep& b) {
  return tensor(to_splitting(a), to_splitting(b));
}

}  // namespace rootcircles
