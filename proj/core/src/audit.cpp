#include "rootcircles/audit.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rootcircles {

std::string to_string(AuditMatch m) {
  switch (m) {
    case AuditMatch::equal:
      return "equal";
    case AuditMatch::off_by_one:
      return "off_by_one";
    case AuditMatch::mismatch:
      return "mismatch";
  }
  throw std::logic_error("unreachable audit match");
}

namespace {

AuditMatch classify(Int claimed, Int computed) {
  const Int gap = claimed > computed ? claimed - computed : computed - claimed;
  if (gap == 0) return AuditMatch::equal;
  if (gap == 1) return AuditMatch::off_by_one;
  return AuditMatch::mismatch;
}

std::string circle_label(int i, int j) {
  std::ostringstream os;
  os << "(i,j)=(" << i << "," << j << ")";
  return os.str();
}

Int degree_mult(const SplittingType& s, Int degree) {
  const auto it = s.summands.find(degree);
  return it == s.summands.end() ? 0 : it->second;
}

// Emits the four audited rows for one circle class: the per-degree claims
// against the computed tangent splitting, then the claimed rank against the
// computed one.
void emit_rows(std::vector<AuditRow>& rows, const std::string& circle,
               Int o2_claim, Int o1_claim, Int o0_claim,
               const SplittingType& tangent) {
  const Int o2 = degree_mult(tangent, 2);
  const Int o1 = degree_mult(tangent, 1);
  const Int o0 = degree_mult(tangent, 0);
  const Int rank_claim = (o2_claim > 0 ? 1 : 0) + o1_claim + o0_claim;
  const Int rank_computed = rank(tangent);
  rows.push_back({circle, "O(2)", o2_claim, o2, classify(o2_claim, o2)});
  rows.push_back({circle, "O(1)", o1_claim, o1, classify(o1_claim, o1)});
  rows.push_back({circle, "O(0)", o0_claim, o0, classify(o0_claim, o0)});
  rows.push_back({circle, "rank", rank_claim, rank_computed,
                  classify(rank_claim, rank_computed)});
}

// alpha for the flag circle of matrix entry (i, j), i > j: the negative of
// e_j - e_i = a_j + ... + a_{i-1}.
Root flag_alpha(int n, int i, int j) {
  Vec c(static_cast<size_t>(n - 1), 0);
  for (int k = j; k <= i - 1; ++k) c[static_cast<size_t>(k - 1)] = -1;
  return Root{c};
}

// alpha for the spinor circle of the pair (i, j) = (1 + d, 1): the negative
// of e_1 + e_{1+d} in the D_n simple basis.
Root spinor_alpha(int n, int d) {
  Vec c(static_cast<size_t>(n), 0);
  if (d + 1 <= n - 2) {
    for (int k = 1; k <= d; ++k) c[static_cast<size_t>(k - 1)] = 1;
    for (int k = d + 1; k <= n - 2; ++k) c[static_cast<size_t>(k - 1)] = 2;
    c[static_cast<size_t>(n - 2)] = 1;
    c[static_cast<size_t>(n - 1)] = 1;
  } else if (d + 1 == n - 1) {
    for (int k = 1; k <= n; ++k) c[static_cast<size_t>(k - 1)] = 1;
  } else {  // d + 1 == n
    for (int k = 1; k <= n - 2; ++k) c[static_cast<size_t>(k - 1)] = 1;
    c[static_cast<size_t>(n - 1)] = 1;
  }
  return negate(Root{c});
}

// alpha for the lagrangian circle of the pair (i, j) = (1 + d, 1): the
// negative of e_1 + e_{1+d} (d = 0 gives the diagonal root 2 e_1) in the
// C_n simple basis.
Root lagrangian_alpha(int n, int d) {
  Vec c(static_cast<size_t>(n), 0);
  for (int k = 1; k <= d; ++k) c[static_cast<size_t>(k - 1)] = 1;
  for (int k = d + 1; k <= n - 1; ++k) c[static_cast<size_t>(k - 1)] = 2;
  c[static_cast<size_t>(n - 1)] = 1;
  return negate(Root{c});
}

}  // namespace

std::vector<AuditRow> audit_flag(const FlagShape& shape) {
  const auto p = flag_variety(shape);  // validates the shape
  const auto& k = shape.blocks;
  const int blocks = static_cast<int>(k.size());
  const int n = std::accumulate(k.begin(), k.end(), 0);
  const Int sum_squares = std::accumulate(
      k.begin(), k.end(), Int{0},
      [](Int acc, int b) { return acc + static_cast<Int>(b) * b; });

  std::vector<int> first(static_cast<size_t>(blocks) + 1, 1);
  for (int b = 1; b <= blocks; ++b)
    first[static_cast<size_t>(b)] =
        first[static_cast<size_t>(b - 1)] +
        (b >= 2 ? k[static_cast<size_t>(b - 2)] : 0);

  std::vector<AuditRow> rows;
  for (int s = 1; s <= blocks; ++s)
    for (int t = s + 1; t <= blocks; ++t) {
      const int j = first[static_cast<size_t>(s)];
      const int i = first[static_cast<size_t>(t)];
      Int middle = 0;
      for (int r = s + 1; r < t; ++r) middle += k[static_cast<size_t>(r - 1)];
      const Int o1_claim = n + middle - 1;
      const Int o0_claim = (static_cast<Int>(n) * n - sum_squares) / 2 -
                           o1_claim;
      const auto tangent = tangent_splitting(p, flag_alpha(n, i, j));
      emit_rows(rows, circle_label(i, j), 1, o1_claim, o0_claim, tangent);
    }
  return rows;
}

std::vector<AuditRow> audit_spinor(int n) {
  if (n < 3)
    throw std::invalid_argument("spinor audit needs rank >= 3");
  const auto p = spinor_variety(n);
  std::vector<AuditRow> rows;
  for (int d = 1; d <= n - 1; ++d) {
    const Int o1_claim = n + d - 3;
    const Int o0_claim =
        (static_cast<Int>(n) * n - 3 * n + 6) / 2 - d;
    const auto tangent = tangent_splitting(p, spinor_alpha(n, d));
    emit_rows(rows, circle_label(1 + d, 1), 0, o1_claim, o0_claim, tangent);
  }
  return rows;
}

std::vector<AuditRow> audit_lagrangian(int n) {
  if (n < 2)
    throw std::invalid_argument("lagrangian audit needs rank >= 2");
  const auto p = lagrangian_grassmannian(n);
  std::vector<AuditRow> rows;
  for (int d = 0; d <= n - 1; ++d) {
    const Int o1_claim = n + d - 1;
    const Int o0_claim = static_cast<Int>(n) * (n + 1) / 2 - o1_claim;
    const auto tangent = tangent_splitting(p, lagrangian_alpha(n, d));
    emit_rows(rows, circle_label(1 + d, 1), 1, o1_claim, o0_claim, tangent);
  }
  return rows;
}

}  // namespace rootcircles
