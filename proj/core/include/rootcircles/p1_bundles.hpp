#pragma once

#include <vector>

#include "rootcircles/splitting.hpp"

namespace rootcircles {

// A representation of the Borel subgroup B of SL(2,C) whose weights form a
// single string: top_weight, top_weight - 2, ..., top_weight - 2(m - 1)
// with m = node_count >= 1.  The homogeneous bundle it induces on
// P^1 = SL(2,C)/B is O(m - 1 - top_weight)^m; in particular O(d) itself is
// the single-node string of weight -d.
struct BStringRep {
  Int top_weight;
  Int node_count;
};

// node_count >= 1 checked with std::invalid_argument.
BStringRep make_bstring_rep(Int top_weight, Int node_count);

// top_weight, top_weight - 2, ..., descending.
std::vector<Int> weights(const BStringRep& r);

struct CanonicalMatrices {
  std::vector<Vec> h;  // diagonal matrix of the weights
  std::vector<Vec> x;  // superdiagonal k, k-1, ..., k-m+2 (k = top_weight)
};

// The canonical Borel action on the string: H diagonal in the weights, X on
// the superdiagonal.  Checked to satisfy [H, X] = 2X and to raise weight by
// exactly 2 wherever X is nonzero (std::logic_error otherwise).
CanonicalMatrices canonical_matrices(const BStringRep& r);

// True exactly when the B-action extends to all of SL(2,C), i.e. the
// induced bundle is trivial: top_weight == node_count - 1 (the weights are
// then symmetric about zero).
bool is_equivariantly_trivial(const BStringRep& r);

// O(node_count - 1 - top_weight)^node_count.
SplittingType to_splitting(const BStringRep& r);

// Every B-invariant subspace keeps a prefix of the highest weights: the
// subspace of the first `keep` nodes (1 <= keep <= node_count).
BStringRep invariant_subspace(const BStringRep& r, Int keep);

// The quotient by the invariant subspace of the first `remove` nodes
// (0 <= remove <= node_count - 1): top weight drops by 2*remove.  Together
// invariant_subspace(r, a) and quotient_rep(r, a) partition the weights.
BStringRep quotient_rep(const BStringRep& r, Int remove);

// Splitting of the tensor product bundle.
SplittingType tensor_reps(const BStringRep& a, const BStringRep& b);

}  // namespace rootcircles
