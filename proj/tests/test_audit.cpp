#include "rootcircles/audit.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace rootcircles {
namespace {

// Pull the single row with the given circle label and quantity.
const AuditRow& row(const std::vector<AuditRow>& rows, const std::string& circle,
                    const std::string& quantity) {
  for (const auto& r : rows)
    if (r.circle == circle && r.quantity == quantity) return r;
  throw std::runtime_error("no such audit row: " + circle + " " + quantity);
}

TEST(Audit, Grassmannian24FrozenRows) {
  const auto rows = audit_flag(FlagShape{{2, 2}});
  ASSERT_EQ(rows.size(), 4u);  // one block pair

  const auto& o2 = row(rows, "(i,j)=(3,1)", "O(2)");
  EXPECT_EQ(o2.claimed, 1);
  EXPECT_EQ(o2.computed, 1);
  EXPECT_EQ(o2.match, AuditMatch::equal);

  const auto& o1 = row(rows, "(i,j)=(3,1)", "O(1)");
  EXPECT_EQ(o1.claimed, 3);
  EXPECT_EQ(o1.computed, 2);
  EXPECT_EQ(o1.match, AuditMatch::off_by_one);

  const auto& o0 = row(rows, "(i,j)=(3,1)", "O(0)");
  EXPECT_EQ(o0.claimed, 1);
  EXPECT_EQ(o0.computed, 1);
  EXPECT_EQ(o0.match, AuditMatch::equal);

  const auto& rk = row(rows, "(i,j)=(3,1)", "rank");
  EXPECT_EQ(rk.claimed, 5);  // 1 + O(0) + O(1) overshoots dim G/P by one
  EXPECT_EQ(rk.computed, 4);
  EXPECT_EQ(rk.match, AuditMatch::off_by_one);
}

TEST(Audit, FullFlagA2Rows) {
  const auto rows = audit_flag(FlagShape{{1, 1, 1}});
  ASSERT_EQ(rows.size(), 12u);  // three block pairs

  // adjacent blocks (1,2): the O(1) claim overshoots a vanishing count by 2
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(1)").claimed, 2);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(1)").computed, 0);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(1)").match, AuditMatch::mismatch);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(0)").match, AuditMatch::off_by_one);

  // extreme blocks (1,3)
  EXPECT_EQ(row(rows, "(i,j)=(3,1)", "O(1)").claimed, 3);
  EXPECT_EQ(row(rows, "(i,j)=(3,1)", "O(1)").computed, 2);
  EXPECT_EQ(row(rows, "(i,j)=(3,1)", "O(1)").match, AuditMatch::off_by_one);
  EXPECT_EQ(row(rows, "(i,j)=(3,1)", "O(0)").claimed, 0);
  EXPECT_EQ(row(rows, "(i,j)=(3,1)", "O(0)").computed, 0);

  // every rank row overshoots by exactly one
  for (const auto& r : rows)
    if (r.quantity == "rank") {
      EXPECT_EQ(r.claimed, r.computed + 1);
      EXPECT_EQ(r.match, AuditMatch::off_by_one);
    }
}

TEST(Audit, Lagrangian2Rows) {
  const auto rows = audit_lagrangian(2);
  ASSERT_EQ(rows.size(), 8u);  // differences 0 and 1

  // diagonal circle: the O(1) claim agrees
  EXPECT_EQ(row(rows, "(i,j)=(1,1)", "O(1)").claimed, 1);
  EXPECT_EQ(row(rows, "(i,j)=(1,1)", "O(1)").computed, 1);
  EXPECT_EQ(row(rows, "(i,j)=(1,1)", "O(1)").match, AuditMatch::equal);
  EXPECT_EQ(row(rows, "(i,j)=(1,1)", "O(0)").claimed, 2);
  EXPECT_EQ(row(rows, "(i,j)=(1,1)", "O(0)").computed, 1);
  EXPECT_EQ(row(rows, "(i,j)=(1,1)", "O(2)").match, AuditMatch::equal);

  // off-diagonal circle: three O(2) summands appear (the conic coincidence)
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(2)").claimed, 1);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(2)").computed, 3);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(2)").match, AuditMatch::mismatch);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(1)").claimed, 2);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(1)").computed, 0);

  for (const auto& r : rows)
    if (r.quantity == "rank") EXPECT_EQ(r.claimed, r.computed + 1);
}

TEST(Audit, LagrangianDiagonalO1AgreesForAllRanks) {
  for (int n = 2; n <= 5; ++n) {
    const auto rows = audit_lagrangian(n);
    const auto& r = row(rows, "(i,j)=(1,1)", "O(1)");
    EXPECT_EQ(r.claimed, n - 1);
    EXPECT_EQ(r.computed, n - 1);
    EXPECT_EQ(r.match, AuditMatch::equal);
  }
}

TEST(Audit, Spinor4FrozenRows) {
  const auto rows = audit_spinor(4);
  ASSERT_EQ(rows.size(), 12u);  // differences 1, 2, 3

  // computed splitting is (i,j)-independent: {2:1, 1:4, 0:1}
  for (const auto& r : rows) {
    if (r.quantity == "O(2)") {
      EXPECT_EQ(r.claimed, 0);  // the claimed shape carries no O(2)
      EXPECT_EQ(r.computed, 1);
      EXPECT_EQ(r.match, AuditMatch::off_by_one);
    }
    if (r.quantity == "O(1)") EXPECT_EQ(r.computed, 4);
    if (r.quantity == "O(0)") EXPECT_EQ(r.computed, 1);
    if (r.quantity == "rank") {
      EXPECT_EQ(r.claimed, 6);  // p0 + p1 lands exactly on dim G/P
      EXPECT_EQ(r.computed, 6);
      EXPECT_EQ(r.match, AuditMatch::equal);
    }
  }

  // the claimed O(1) count walks with the index difference
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(1)").claimed, 2);
  EXPECT_EQ(row(rows, "(i,j)=(2,1)", "O(1)").match, AuditMatch::mismatch);
  EXPECT_EQ(row(rows, "(i,j)=(3,1)", "O(1)").claimed, 3);
  EXPECT_EQ(row(rows, "(i,j)=(3,1)", "O(1)").match, AuditMatch::off_by_one);
  EXPECT_EQ(row(rows, "(i,j)=(4,1)", "O(1)").claimed, 4);
  EXPECT_EQ(row(rows, "(i,j)=(4,1)", "O(1)").match, AuditMatch::equal);
}

TEST(Audit, SpinorRankIdentityHoldsForAllDifferences) {
  for (int n = 4; n <= 7; ++n) {
    bool flagged_o1 = false;
    for (const auto& r : audit_spinor(n)) {
      if (r.quantity == "rank") EXPECT_EQ(r.match, AuditMatch::equal) << "n=" << n;
      if (r.quantity == "O(1)" && r.match != AuditMatch::equal) flagged_o1 = true;
    }
    EXPECT_TRUE(flagged_o1) << "the (i,j)-dependence must be flagged, n=" << n;
  }
}

TEST(Audit, MatchRendering) {
  EXPECT_EQ(to_string(AuditMatch::equal), "equal");
  EXPECT_EQ(to_string(AuditMatch::off_by_one), "off_by_one");
  EXPECT_EQ(to_string(AuditMatch::mismatch), "mismatch");
}

TEST(Audit, ParameterBounds) {
  EXPECT_THROW(audit_flag(FlagShape{{}}), std::invalid_argument);
  EXPECT_THROW(audit_flag(FlagShape{{3}}), std::invalid_argument);  // no block pair
  EXPECT_THROW(audit_spinor(2), std::invalid_argument);
  EXPECT_THROW(audit_lagrangian(1), std::invalid_argument);
}

}  // namespace
}  // namespace rootcircles
