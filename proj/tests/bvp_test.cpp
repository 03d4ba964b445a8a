#include <gtest/gtest.h>

#include "hplax/bvp.hpp"
#include "hplax/errors.hpp"
#include "support/systems.hpp"

using namespace hplax;

namespace {

Rat q(long p, long d = 1) { return make_rat(p, d); }

BoundaryData boundary_of(const MomentSystem& sys, int depth) {
  return boundary_from_table(HPTable(sys), depth);
}

}  // namespace

TEST(SweepSolve, ReproducesTableFields) {
  for (const MomentSystem& sys : {fixtures::system_a(), fixtures::system_b()}) {
    HPTable t(sys);
    RecurrenceField expected = field_from_table(t, 5, 5);
    SweepReport r = sweep_solve(boundary_from_table(t, 10), 5, 5);
    ASSERT_FALSE(r.failure) << sys.label;
    EXPECT_FALSE(compare_fields(expected, r.field)) << sys.label;
    EXPECT_EQ(r.field, expected) << sys.label;
    EXPECT_GT(r.divisions_checked, 0u);
  }
}

TEST(SweepSolve, RectangularWindows) {
  HPTable t(fixtures::system_a());
  for (auto [N, M] : {std::pair{0, 0}, {3, 0}, {0, 2}, {1, 4}, {4, 2}}) {
    SweepReport r = sweep_solve(boundary_from_table(t, N + M), N, M);
    ASSERT_FALSE(r.failure);
    EXPECT_EQ(r.field, field_from_table(t, N, M)) << N << "," << M;
  }
}

TEST(SweepSolve, EqualCornerValuesFailAtOrigin) {
  BoundaryData bd = boundary_of(fixtures::system_a(), 4);
  bd.d_col[0] = bd.c_row[0];
  SweepReport r = sweep_solve(bd, 2, 2);
  ASSERT_TRUE(r.failure);
  EXPECT_EQ(r.failure->n, 0);
  EXPECT_EQ(r.failure->m, 0);
  // the partial field keeps the axis data computed before the stop
  EXPECT_EQ(r.triangle.c.at(0, 0), bd.c_row[0]);
  try {
    sweep_or_throw(bd, 2, 2);
    FAIL() << "expected NonPerfectBoundary";
  } catch (const NonPerfectBoundary& e) {
    EXPECT_EQ(e.n(), 0);
    EXPECT_EQ(e.m(), 0);
  }
}

TEST(SweepSolve, DuplicatedMeasureFailsAtOrigin) {
  MomentSystem dup = fixtures::duplicated();
  JFraction j = moments_to_jfraction(dup.s1, 5);
  for (const BoundaryData& bd : {boundary_from_jfractions(j, j), boundary_of(dup, 4)}) {
    SweepReport r = sweep_solve(bd, 2, 2);
    ASSERT_TRUE(r.failure);
    EXPECT_EQ(r.failure->n, 0);
    EXPECT_EQ(r.failure->m, 0);
  }
}

TEST(SweepSolve, ShortBoundaryIsRejected) {
  BoundaryData bd = boundary_of(fixtures::system_a(), 3);
  EXPECT_THROW(sweep_solve(bd, 2, 2), TruncationError);
  EXPECT_NO_THROW(sweep_solve(bd, 2, 1));
}

TEST(SweepSolve, OutputSatisfiesConsistencyIdentities) {
  SweepReport r = sweep_solve(boundary_of(fixtures::system_b(), 8), 4, 4);
  ASSERT_FALSE(r.failure);
  for (int n = 0; n < 4; ++n) {
    for (int m = 0; m < 4; ++m) EXPECT_TRUE(consistency_residuals(r.field, n, m).all_zero()) << n << "," << m;
  }
}

TEST(BoundaryFromJFractions, MatchesTableAxes) {
  for (const MomentSystem& sys : {fixtures::system_a(), fixtures::system_b()}) {
    const int depth = 6;
    BoundaryData from_j = boundary_from_jfractions(moments_to_jfraction(sys.s1, depth + 1),
                                                   moments_to_jfraction(sys.s2, depth + 1));
    EXPECT_EQ(from_j, boundary_of(sys, depth)) << sys.label;
  }
}

TEST(BoundaryFromTable, Examples) {
  BoundaryData bd = boundary_of(fixtures::system_a(), 1);
  EXPECT_EQ(bd.c_row, (std::vector<Rat>{q(-3, 2), q(-3, 2)}));
  EXPECT_EQ(bd.d_col, (std::vector<Rat>{q(3, 2), q(3, 2)}));
  EXPECT_EQ(bd.a_row, std::vector<Rat>{q(1, 12)});
  EXPECT_EQ(bd.b_col, std::vector<Rat>{q(1, 12)});
}

TEST(FieldFromMoments, Examples) {
  RecurrenceField f = field_from_moments(fixtures::system_a(), 2, 2);
  EXPECT_EQ(f.c.at(0, 0), q(-3, 2));
  EXPECT_EQ(f.d.at(0, 0), q(3, 2));
  EXPECT_EQ(f.a.at(1, 1), q(1, 12));
  EXPECT_NO_THROW(field_from_moments(fixtures::system_b(), 1, 1));
  try {
    field_from_moments(fixtures::duplicated(), 1, 1);
    FAIL() << "expected NotNormal";
  } catch (const NotNormal& e) {
    EXPECT_EQ(e.n(), 1);
    EXPECT_EQ(e.m(), 1);
  }
}

TEST(CdBySummation, EmptySumAndOneIndex) {
  BoundaryData bd = boundary_of(fixtures::system_a(), 4);
  SweepReport r = sweep_solve(bd, 2, 2);
  ASSERT_FALSE(r.failure);
  auto [c, d] = cd_by_summation(bd, r.triangle, 2, 0);
  EXPECT_EQ(c, r.triangle.c.at(2, 1));
  EXPECT_EQ(d, r.triangle.d.at(3, 0));
  auto [c11, d11] = cd_by_summation(bd, r.triangle, 1, 1);
  EXPECT_EQ(c11, r.triangle.c.at(1, 2));
  EXPECT_EQ(d11, r.triangle.d.at(2, 1));
}

TEST(CdBySummation, AgreesWithSweepOnTriangle) {
  for (const MomentSystem& sys : {fixtures::system_a(), fixtures::system_b()}) {
    BoundaryData bd = boundary_of(sys, 6);
    SweepReport r = sweep_solve(bd, 3, 3);
    ASSERT_FALSE(r.failure);
    for (int n = 0; n < 6; ++n) {
      for (int m = 0; n + m < 6; ++m) {
        auto [c, d] = cd_by_summation(bd, r.triangle, n, m);
        EXPECT_EQ(c, r.triangle.c.at(n, m + 1)) << sys.label << " " << n << "," << m;
        EXPECT_EQ(d, r.triangle.d.at(n + 1, m)) << sys.label << " " << n << "," << m;
      }
    }
  }
}

TEST(CdBySummation, ZeroBracketsTelescope) {
  RecurrenceField f(3, 3);
  BoundaryData bd{{2, 2, 2, 2}, {0, 0, 0}, {-1, -1, -1, -1}, {0, 0, 0}};
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      f.a.set(n, m, 0);
      f.b.set(n, m, 0);
      f.c.set(n, m, 2);
      f.d.set(n, m, -1);
    }
  }
  auto [c, d] = cd_by_summation(bd, f, 1, 1);
  EXPECT_EQ(c, 2);
  EXPECT_EQ(d, -1);
  EXPECT_THROW(cd_by_summation(bd, f, 3, 0), RangeError);
}

TEST(CrossValidate, Examples) {
  CrossValidation a = cross_validate(fixtures::system_a(), 3, 3);
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(a.grids_equal);
  EXPECT_EQ(a.consistency_max, 0);
  EXPECT_EQ(a.zcc_max_degree, -1);
  EXPECT_EQ(a.recurrence_max_degree, -1);
  EXPECT_EQ(a.stencils_checked, 9u);

  CrossValidation b = cross_validate(fixtures::system_b(), 2, 2);
  EXPECT_TRUE(b.ok());
  EXPECT_TRUE(b.grids_equal);

  EXPECT_THROW(cross_validate(fixtures::duplicated(), 1, 1), NotNormal);
}

TEST(CompareFields, PerturbedBoundaryIsReported) {
  HPTable t(fixtures::system_a());
  RecurrenceField expected = field_from_table(t, 3, 3);
  BoundaryData bd = boundary_from_table(t, 6);
  bd.a_row[1] += 1;
  SweepReport r = sweep_solve(bd, 3, 3);
  auto diff = compare_fields(expected, r.field);
  ASSERT_TRUE(r.failure || diff);
  if (diff) EXPECT_NE(diff->actual, diff->expected);
  EXPECT_EQ(r.field.a.at(2, 0), expected.a.at(2, 0) + 1);
}
