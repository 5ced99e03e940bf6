#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rootcircles {

// Every quantity in this library is an exact integer; there is no floating
// point anywhere.  All reachable values (coefficients, pairings, dimensions,
// multiplicities) are minuscule next to the int64 range.
using Int = std::int64_t;

// Coefficient vector over the simple roots; entry k is the coefficient of
// the (k+1)-th simple root in Bourbaki numbering.
using Vec = std::vector<Int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple complex Lie algebra type.  Valid ranks: A n>=1, B n>=2, C n>=2,
// D n>=3, E n in {6,7,8}, F n=4, G n=2.  D3 is accepted and built from its
// own Cartan matrix even though it is isomorphic to A3; reports carry a note
// when it is used.
struct LieType {
  Family family;
  int rank;
};

bool operator==(const LieType& a, const LieType& b);
bool operator!=(const LieType& a, const LieType& b);

// Validates the rank bounds above; throws std::invalid_argument naming the
// violated bound.
LieType make_lie_type(Family family, int rank);

// Parses a token such as "A2" or "E8"; throws std::invalid_argument naming
// the offending token.
LieType parse_lie_type(const std::string& token);

std::string to_string(const LieType& type);

// Closed-form dimension: A_n n(n+2); B_n and C_n n(2n+1); D_n n(2n-1);
// G2 14; F4 52; E6 78; E7 133; E8 248.
Int dim_lie_algebra(const LieType& type);

// A root, stored as its coefficient vector (never all zero).
struct Root {
  Vec c;
};

bool operator==(const Root& a, const Root& b);
bool operator!=(const Root& a, const Root& b);
bool operator<(const Root& a, const Root& b);  // lexicographic

Int height(const Root& r);        // sum of coefficients
bool is_positive(const Root& r);  // every coefficient >= 0
Root negate(const Root& r);
std::string to_string(const Root& r);  // "(1,-1,0)"

// An integral realization of the root system of one simple type.
//
// cartan[i][j] = 2(a_j, a_i)/(a_i, a_i), i.e. row i pairs against the i-th
// simple coroot.  With this convention B2 has cartan = [[2,-1],[-2,2]]:
// alpha_1 is long, alpha_2 is short, pairing(alpha_1, alpha_2) = -2 and
// pairing(alpha_2, alpha_1) = -1.
//
// symmetrizer holds the smallest positive integers d_i that make
// d_i * cartan[i][j] symmetric, so bilinear() below is an invariant inner
// product up to one global scale (which cancels in every pairing).
//
// positive_roots is sorted by height, then lexicographically by
// coefficients.  Downstream output ordering leans on this being stable.
struct RootSystem {
  LieType type;
  std::vector<Vec> cartan;
  Vec symmetrizer;
  std::vector<Root> positive_roots;
  std::set<Vec> positive_index;  // membership index over positive_roots

  int rank() const { return type.rank; }
  Int root_count() const { return 2 * static_cast<Int>(positive_roots.size()); }
  Int dim_g() const { return root_count() + rank(); }
};

// Builds the root system by saturating the simple roots upward in height
// with the string-interval criterion (beta + alpha_i is a root iff the
// number of steps down from beta along alpha_i exceeds pairing(beta,
// alpha_i)).  Checks that the resulting count matches the closed-form
// dimension; throws std::logic_error if not.
RootSystem build_root_system(const LieType& type);

bool is_root(const RootSystem& rs, const Vec& v);

// a + b when the sum is again a root.
std::optional<Root> add(const RootSystem& rs, const Root& a, const Root& b);

// Symmetrized integer bilinear form (u, v).
Int bilinear(const RootSystem& rs, const Vec& u, const Vec& v);

// 2(beta, alpha)/(alpha, alpha).  Exact integer division; for roots the
// quotient is always integral (checked; std::logic_error otherwise).
Int pairing(const RootSystem& rs, const Root& beta, const Root& alpha);

}  // namespace rootcircles
