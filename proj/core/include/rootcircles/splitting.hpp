#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "rootcircles/alpha_strings.hpp"

namespace rootcircles {

// A finite direct sum of line bundles O(d) on the projective line, stored as
// degree -> multiplicity.  Multiplicities are always >= 1 (degree entries
// with multiplicity zero are never stored) and iteration runs in descending
// degree, which fixes the rendering and serialization order.
struct SplittingType {
  std::map<Int, Int, std::greater<Int>> summands;
};

bool operator==(const SplittingType& a, const SplittingType& b);
bool operator!=(const SplittingType& a, const SplittingType& b);

// Convenience constructor from {degree, multiplicity} pairs; drops zero
// multiplicities, rejects negative ones.
SplittingType make_splitting(std::initializer_list<std::pair<Int, Int>> parts);

Int rank(const SplittingType& s);  // total multiplicity

SplittingType dual(const SplittingType& s);  // negates every degree
SplittingType direct_sum(const SplittingType& a, const SplittingType& b);

// Pairwise degree sums with multiplicity products.
SplittingType tensor(const SplittingType& a, const SplittingType& b);

// Unordered pairs of distinct line summands: within a block O(d)^m this
// contributes O(2d)^(m(m-1)/2); across blocks d1 != d2 it contributes
// O(d1+d2)^(m1*m2).
SplittingType wedge2(const SplittingType& s);

// Dimension of the space of global sections: sum of max(d+1, 0) * mult.
Int h0(const SplittingType& s);

// "O(2) + O(1)^3 + O(0)^2" in descending degree; "0" for the zero bundle.
std::string to_string(const SplittingType& s);

// Splitting of the tangent bundle of G/P restricted to the rational curve
// swept out by the alpha root pair: one O(d_s)^{n_s} summand per
// alpha-string in the inventory.  Rank equals dim g/p.
SplittingType tangent_splitting(const Parabolic& p, const Root& alpha);

// Splitting of the adjoint bundle along the same curve: O(0)^{dim g}.  The
// value is forced because the bundle extends to a representation of all of
// G, but the function re-derives it from the full alpha-string partition of
// every root of g plus the Cartan directions, checking that each full
// string is weight-symmetric and that the node count books balance; a
// std::logic_error reports any failure.
SplittingType adjoint_splitting(const Parabolic& p, const Root& alpha);

}  // namespace rootcircles
