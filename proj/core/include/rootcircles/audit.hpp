#pragma once

#include <string>
#include <vector>

#include "rootcircles/parabolic.hpp"
#include "rootcircles/splitting.hpp"

namespace rootcircles {

enum class AuditMatch { equal, off_by_one, mismatch };

std::string to_string(AuditMatch m);

// One audited quantity: a classical closed-form count for the tangent
// splitting along a circle class, next to the value the string machinery
// computes.  |claimed - computed| classifies the row as equal, off_by_one
// or mismatch.  Disagreements are reported as data, never corrected.
struct AuditRow {
  std::string circle;    // Levi-conjugacy class label, e.g. "(i,j)=(3,1)"
  std::string quantity;  // "O(2)", "O(1)", "O(0)" or "rank"
  Int claimed;
  Int computed;
  AuditMatch match;
};

// Audits the classical per-degree counts for flag varieties of SL(n).  For
// the circle of the matrix-entry root in row i, column j (blocks
// s = block(j) < t = block(i)) the audited formulas are
//   O(1)-count: n + k_{s+1} + ... + k_{t-1} - 1
//   O(0)-count: (n^2 - sum k_r^2)/2 - O(1)-count
//   rank:       1 + O(0)-count + O(1)-count   (against dim G/P)
// with a single O(2).  One row group is emitted per block pair (s, t) --
// both the claims and the computed splitting depend only on (s, t) -- with
// the representative i, j chosen as the first index of each block.
std::vector<AuditRow> audit_flag(const FlagShape& shape);

// Audits the classical counts for the spinor variety of SO(2n) (D_n crossed
// at node n).  For the circle of the omitted root indexed by i > j the
// audited shape is O(0)^{p0} + O(1)^{p1} with
//   p1 = n + i - j - 3,   p0 = (n^2 - 3n + 6)/2 + j - i
// and no O(2) term.  The claims depend only on the difference i - j while
// the computed splitting is independent of (i, j); one row group is emitted
// per difference, with representative (i, j) = (1 + d, 1).  n >= 3.
std::vector<AuditRow> audit_spinor(int n);

// Audits the classical counts for the Lagrangian Grassmannian of C^{2n}
// (C_n crossed at node n).  For the circle of the omitted root indexed by
// i >= j the audited shape is O(2) + O(0)^{p0} + O(1)^{p1} with
//   p1 = n + i - j - 1,   p0 = n(n+1)/2 - p1.
// One row group per difference i - j (the computed splitting only
// distinguishes i == j from i != j), representative (i, j) = (1 + d, 1).
// n >= 2.
std::vector<AuditRow> audit_lagrangian(int n);

}  // namespace rootcircles
