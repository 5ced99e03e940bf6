#pragma once

#include <set>

#include "rootcircles/root_system.hpp"

namespace rootcircles {

// A parabolic subalgebra p of g, fixed by the set of crossed simple roots
// (1-based Bourbaki indices).  The grading degree of a root is the sum of
// its crossed coefficients; p is spanned by the Cartan subalgebra and every
// root space of grading degree >= 0.  The omitted roots -- the negative
// roots of grading degree < 0 -- enumerate a basis of g/p.
struct Parabolic {
  RootSystem rs;
  std::set<int> crossed;
  // Negatives of the positively-graded positive roots, listed in the root
  // system's canonical order of their positive counterparts.
  std::vector<Root> omitted;
};

// Throws std::invalid_argument naming any crossed index outside [1, rank].
Parabolic make_parabolic(RootSystem rs, std::set<int> crossed);

// Sum of the crossed coefficients of v.  Linear: additive on sums of roots.
Int grading_degree(const Parabolic& p, const Vec& v);

bool is_omitted(const Parabolic& p, const Root& r);  // grading_degree < 0
bool is_p_root(const Parabolic& p, const Root& r);   // grading_degree >= 0

Int dim_gp(const Parabolic& p);  // = omitted.size()

// Block sizes k_1..k_p of a flag of nested subspaces in C^(k_1+...+k_p);
// the stabilizer parabolic in SL crosses the partial sums k_1, k_1+k_2, ...
struct FlagShape {
  std::vector<int> blocks;
};

// Named homogeneous models.  Each returns the (type, crossed set) parabolic
// realizing the space; parameter bounds are checked with
// std::invalid_argument.
Parabolic projective_space(int n);   // P^n:  A_n, cross {1}; n >= 1
Parabolic quadric(int n);            // Q^n:  n odd B_{(n+1)/2}, n even D_{(n+2)/2}, cross {1}; n >= 3
Parabolic grassmannian(int k, int n);            // Gr(k,n): A_{n-1}, cross {k}; k = 1 or n-1 normalizes to P^{n-1}
Parabolic flag_variety(const FlagShape& shape);  // A_{n-1}, cross the partial sums
Parabolic spinor_variety(int n);                 // D_n, cross {n}; n >= 3
Parabolic lagrangian_grassmannian(int n);        // C_n, cross {n}; n >= 2

}  // namespace rootcircles
