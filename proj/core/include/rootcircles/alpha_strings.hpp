#pragma once

#include <vector>

#include "rootcircles/parabolic.hpp"

namespace rootcircles {

enum class NodeTag { omitted, parabolic, zero };

// One node of an alpha-string: a root -- or the zero vector, which occurs
// exactly once overall, in the string through alpha itself -- together with
// its weight 2(v, alpha)/(alpha, alpha) and its position relative to p.
struct StringNode {
  Vec v;
  Int weight;
  NodeTag tag;
};

// The maximal chain beta - k*alpha (k over an integer interval, allowing the
// zero vector as an interior element) listed by strictly descending weight,
// which steps by exactly 2.  The omitted nodes form a contiguous prefix:
// n_s counts them (the g/p-piece of the string) and d_s counts the
// parabolic/zero suffix (the p-piece).  Construction re-checks the weight
// steps, the prefix contiguity, the zero-node rule and the symmetry identity
// d_s = top_weight - n_s + 1, throwing std::logic_error on any violation.
struct AlphaString {
  Root alpha;
  std::vector<StringNode> nodes;
  Int n_s;
  Int d_s;
  Int top_weight;  // weight of nodes.front()
};

// The alpha-string through beta.  Both alpha and beta must be omitted roots
// of p (std::invalid_argument otherwise).  For beta == alpha the chain is
// (alpha, 0, -alpha) with weights (2, 0, -2).
AlphaString alpha_string_through(const Parabolic& p, const Root& alpha, const Root& beta);

// Partition of the omitted roots of p into alpha-strings.  Every omitted
// root appears in exactly one returned string; strings are ordered by the
// position of their highest-weight node in p.omitted.  The total of n_s
// over the inventory is dim g/p.
std::vector<AlphaString> string_inventory(const Parabolic& p, const Root& alpha);

// Second route to the p-piece length, via the weight symmetry of a full
// string about zero: top_weight - n_s + 1.  Always equals d_s; computed
// independently of the node tags so the two derivations can check each
// other.
Int oracle_degree(const AlphaString& s);

}  // namespace rootcircles
