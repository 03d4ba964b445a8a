#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hplax/hptable.hpp"
#include "hplax/measures.hpp"
#include "hplax/nnrr.hpp"

namespace hplax {

/// c_row[n] = c_{n,0}, a_row[i] = a_{i+1,0}, d_col[m] = d_{0,m}, b_col[i] = b_{0,i+1}.
struct BoundaryData {
  std::vector<Rat> c_row;
  std::vector<Rat> a_row;
  std::vector<Rat> d_col;
  std::vector<Rat> b_col;

  friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
};

/// Axis data of the table up to index `depth` (c, d to depth; a, b to depth).
BoundaryData boundary_from_table(const HPTable& table, int depth);
/// Axis data read from the J-fractions of the two measures.
BoundaryData boundary_from_jfractions(const JFraction& first, const JFraction& second);

struct SweepFailure {
  int n = 0;
  int m = 0;
  std::string reason;
};

struct SweepReport {
  /// Window 0..N x 0..M.
  RecurrenceField field;
  /// Everything computed, over the triangle n + m <= N + M.
  RecurrenceField triangle;
  std::size_t divisions_checked = 0;
  std::optional<SweepFailure> failure;
};

/// Fills the triangle n + m <= N + M level by level: a and b first, then c
/// and d. A zero (c - d) divisor stops the sweep with a failure at its index.
/// Needs c_row, d_col of length N+M+1 and a_row, b_col of length N+M.
SweepReport sweep_solve(const BoundaryData& boundary, int N, int M);

/// Same as sweep_solve, but throws NonPerfectBoundary on failure.
RecurrenceField sweep_or_throw(const BoundaryData& boundary, int N, int M);

RecurrenceField field_from_moments(const MomentSystem& system, int N, int M);

/// c_{n,m+1} = c_{n,0} + sum_{i=0}^{m} [(a+b)_{n+1,i} - (a+b)_{n,i+1}] / (c-d)_{n,i}
/// d_{n+1,m} = d_{0,m} + sum_{i=0}^{n} [(a+b)_{i+1,m} - (a+b)_{i,m+1}] / (c-d)_{i,m}
/// RangeError when a summand is missing from the field.
std::pair<Rat, Rat> cd_by_summation(const BoundaryData& boundary, const RecurrenceField& field, int n, int m);

struct GridMismatch {
  std::string grid;
  int n = 0;
  int m = 0;
  Rat expected;
  Rat actual;
};

struct CrossValidation {
  int N = 0;
  int M = 0;
  bool grids_equal = false;
  std::optional<GridMismatch> first_mismatch;
  std::optional<SweepFailure> sweep_failure;
  /// Largest |residual| of the consistency identities over interior stencils.
  Rat consistency_max;
  bool consistency_degenerate = false;
  /// Largest entry degree of any zero-curvature residual; -1 when all vanish.
  int zcc_max_degree = -1;
  /// Largest degree of a recurrence residual; -1 when all vanish.
  int recurrence_max_degree = -1;
  /// Number of indices where cd_by_summation disagrees with the sweep.
  int summation_mismatches = 0;
  std::size_t stencils_checked = 0;

  bool ok() const {
    return grids_equal && !sweep_failure && is_zero(consistency_max) && zcc_max_degree < 0 &&
           recurrence_max_degree < 0 && summation_mismatches == 0;
  }
};

/// First index where two fields differ, scanning a, b, c, d in order.
std::optional<GridMismatch> compare_fields(const RecurrenceField& expected, const RecurrenceField& actual);

/// Moment route against the sweep, plus consistency, zero-curvature and
/// recurrence residuals over the window.
CrossValidation cross_validate(const MomentSystem& system, int N, int M);

}  // namespace hplax
