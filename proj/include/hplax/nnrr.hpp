#pragma once

#include <array>
#include <utility>

#include "hplax/grid.hpp"
#include "hplax/hptable.hpp"
#include "hplax/laurent.hpp"

namespace hplax {

/// Nearest-neighbour recurrence coefficients over 0 <= n <= N, 0 <= m <= M:
///   P_{n+1,m} = (x - c) P_{n,m} - a P_{n-1,m} - b P_{n,m-1}
///   P_{n,m+1} = (x - d) P_{n,m} - a P_{n-1,m} - b P_{n,m-1}
struct RecurrenceField {
  RecurrenceField() = default;
  RecurrenceField(int N, int M) : N(N), M(M), a(N + 1, M + 1), b(N + 1, M + 1), c(N + 1, M + 1), d(N + 1, M + 1) {}

  int N = 0;
  int M = 0;
  RatGrid a, b, c, d;

  /// c - d at (n, m).
  Rat gap(int n, int m) const { return c.at(n, m) - d.at(n, m); }
  friend bool operator==(const RecurrenceField&, const RecurrenceField&) = default;
};

struct Coefficients {
  Rat a, b, c, d;
};

/// a, b from determinant ratios, c, d from subleading coefficients.
/// Needs P at (n+1, m) and (n, m+1); NotNormal propagates.
Coefficients coefficients_at(const HPTable& table, int n, int m);

RecurrenceField field_from_table(const HPTable& table, int N, int M);

/// S_{n,m} S_{n+1,m+1} / (S_{n+1,m} S_{n,m+1}); NotNormal if a denominator vanishes.
Rat check_dminusc(const HPTable& table, int n, int m);

/// Both recurrence residuals at (n, m); P at negative indices is zero.
std::pair<Poly, Poly> recurrence_residuals(const RecurrenceField& field, const HPTable& table, int n, int m);

struct ConsistencyResiduals {
  std::array<Rat, 4> r;
  /// A (c - d) value used by the ratio identities is zero.
  bool degenerate = false;

  bool all_zero() const {
    for (const auto& v : r) {
      if (!is_zero(v)) return false;
    }
    return true;
  }
};

/// Residuals of
///   d_{n+1,m} - d_{n,m} = c_{n,m+1} - c_{n,m}
///   b_{n+1,m} - b_{n,m+1} + a_{n+1,m} - a_{n,m+1} = d_{n+1,m} c_{n,m} - d_{n,m} c_{n,m+1}
///   a_{n,m+1} (c-d)_{n-1,m} = a_{n,m} (c-d)_{n,m}      (n >= 1, else 0)
///   b_{n+1,m} (c-d)_{n,m-1} = b_{n,m} (c-d)_{n,m}      (m >= 1, else 0)
/// Needs (n+1, m) and (n, m+1) inside the field.
ConsistencyResiduals consistency_residuals(const RecurrenceField& field, int n, int m);

/// Expansion of -P_{n,m}/P_{n+1,m} (j = 1) or -P_{n,m}/P_{n,m+1} (j = 2) from
/// the branched continued fraction
///   m1(n,m) = -1 / (z - c + a m1(n-1,m) + b m2(n,m-1)),
///   m2(n,m) = -1 / (z - d + a m1(n-1,m) + b m2(n,m-1)).
LaurentTail m_minus_series(const RecurrenceField& field, int j, int n, int m, std::size_t order);
LaurentTail m_minus_series(const HPTable& table, int j, int n, int m, std::size_t order);

struct CFExtraction {
  Rat c, d;
  Rat f;  // a + b
  Rat g;  // a c_prev1 + b d_prev2
  Rat a, b;
};

/// Reads c, d, f, g from -1/series - z and solves for a, b.
/// Series must have order >= 4. NonPerfectData when gap = 0 and (f, g) != 0.
CFExtraction cf_extract(const LaurentTail& series1, const LaurentTail& series2, const Rat& c_prev1,
                        const Rat& d_prev2, const Rat& gap);

}  // namespace hplax
