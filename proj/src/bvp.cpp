#include "hplax/bvp.hpp"

#include <algorithm>
#include <string>

#include "hplax/errors.hpp"
#include "hplax/lax3.hpp"

namespace hplax {

BoundaryData boundary_from_table(const HPTable& table, int depth) {
  BoundaryData out;
  for (int k = 0; k <= depth; ++k) {
    out.c_row.push_back(subleading(table.poly(k, 0)) - subleading(table.poly(k + 1, 0)));
    out.d_col.push_back(subleading(table.poly(0, k)) - subleading(table.poly(0, k + 1)));
  }
  for (int k = 1; k <= depth; ++k) {
    const Rat sa = table.s_det(k, 0);
    const Rat sb = table.s_det(0, k);
    if (is_zero(sa)) throw NotNormal(k, 0);
    if (is_zero(sb)) throw NotNormal(0, k);
    out.a_row.push_back(table.s_det(k + 1, 0) * table.s_det(k - 1, 0) / (sa * sa));
    out.b_col.push_back(table.s_det(0, k + 1) * table.s_det(0, k - 1) / (sb * sb));
  }
  return out;
}

BoundaryData boundary_from_jfractions(const JFraction& first, const JFraction& second) {
  return {first.c, first.a, second.c, second.a};
}

namespace {

struct Stop {
  SweepFailure failure;
};

class Sweep {
 public:
  Sweep(const BoundaryData& bd, int total) : bd_(bd), f_(total, total) {}

  void level(int l) {
    for (int n = 0; n <= l; ++n) fill_ab(n, l - n);
    for (int n = 0; n <= l; ++n) fill_cd(n, l - n);
  }

  RecurrenceField& field() { return f_; }
  std::size_t divisions() const { return divisions_; }

 private:
  Rat gap(int n, int m, const char* what) {
    Rat g = f_.gap(n, m);
    ++divisions_;
    if (is_zero(g)) throw Stop{{n, m, std::string("(c-d) vanishes as divisor of ") + what}};
    return g;
  }
  Rat ab(int n, int m) const { return f_.a.at(n, m) + f_.b.at(n, m); }

  void fill_ab(int n, int m) {
    if (m == 0) {
      f_.a.set(n, 0, n == 0 ? Rat(0) : bd_.a_row[static_cast<std::size_t>(n - 1)]);
      f_.b.set(n, 0, Rat(0));
      return;
    }
    if (n == 0) {
      f_.a.set(0, m, Rat(0));
      f_.b.set(0, m, bd_.b_col[static_cast<std::size_t>(m - 1)]);
      return;
    }
    const Rat corner = gap(n - 1, m - 1, "a and b");
    f_.a.set(n, m, f_.a.at(n, m - 1) * f_.gap(n, m - 1) / corner);
    f_.b.set(n, m, f_.b.at(n - 1, m) * f_.gap(n - 1, m) / corner);
  }

  void fill_cd(int n, int m) {
    if (m == 0) {
      f_.c.set(n, 0, bd_.c_row[static_cast<std::size_t>(n)]);
    } else {
      const Rat g = gap(n, m - 1, "c");
      f_.c.set(n, m, f_.c.at(n, m - 1) + (ab(n + 1, m - 1) - ab(n, m)) / g);
    }
    if (n == 0) {
      f_.d.set(0, m, bd_.d_col[static_cast<std::size_t>(m)]);
    } else {
      const Rat g = gap(n - 1, m, "d");
      f_.d.set(n, m, f_.d.at(n - 1, m) + (ab(n, m) - ab(n - 1, m + 1)) / g);
    }
  }

  const BoundaryData& bd_;
  RecurrenceField f_;
  std::size_t divisions_ = 0;
};

RecurrenceField restrict_to(const RecurrenceField& from, int N, int M) {
  RecurrenceField out(N, M);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= M; ++m) {
      if (from.a.has(n, m)) out.a.set(n, m, from.a.at(n, m));
      if (from.b.has(n, m)) out.b.set(n, m, from.b.at(n, m));
      if (from.c.has(n, m)) out.c.set(n, m, from.c.at(n, m));
      if (from.d.has(n, m)) out.d.set(n, m, from.d.at(n, m));
    }
  }
  return out;
}

}  // namespace

SweepReport sweep_solve(const BoundaryData& boundary, int N, int M) {
  if (N < 0 || M < 0) throw RangeError("negative sweep window");
  const int total = N + M;
  const auto need = static_cast<std::size_t>(total);
  if (boundary.c_row.size() < need + 1 || boundary.d_col.size() < need + 1 || boundary.a_row.size() < need ||
      boundary.b_col.size() < need) {
    throw TruncationError("window (" + std::to_string(N) + "," + std::to_string(M) + ") needs c, d to index " +
                          std::to_string(total) + " and a, b to index " + std::to_string(total));
  }
  SweepReport report;
  Sweep sweep(boundary, total);
  try {
    for (int l = 0; l <= total; ++l) sweep.level(l);
  } catch (const Stop& stop) {
    report.failure = stop.failure;
  }
  report.divisions_checked = sweep.divisions();
  report.triangle = std::move(sweep.field());
  report.field = restrict_to(report.triangle, N, M);
  return report;
}

RecurrenceField sweep_or_throw(const BoundaryData& boundary, int N, int M) {
  SweepReport r = sweep_solve(boundary, N, M);
  if (r.failure) throw NonPerfectBoundary(r.failure->n, r.failure->m, r.failure->reason);
  return std::move(r.field);
}

RecurrenceField field_from_moments(const MomentSystem& system, int N, int M) {
  return field_from_table(HPTable(system), N, M);
}

std::pair<Rat, Rat> cd_by_summation(const BoundaryData& boundary, const RecurrenceField& f, int n, int m) {
  if (n < 0 || m < 0 || static_cast<std::size_t>(n) >= boundary.c_row.size() ||
      static_cast<std::size_t>(m) >= boundary.d_col.size()) {
    throw RangeError("summation index outside the boundary data");
  }
  auto ab = [&](int i, int j) { return f.a.at(i, j) + f.b.at(i, j); };
  auto divide = [&](const Rat& num, int i, int j) {
    const Rat g = f.gap(i, j);
    if (is_zero(g)) throw NonPerfectBoundary(i, j, "(c-d) vanishes in a summation term");
    return Rat(num / g);
  };
  Rat c = boundary.c_row[static_cast<std::size_t>(n)];
  for (int i = 0; i <= m; ++i) c += divide(ab(n + 1, i) - ab(n, i + 1), n, i);
  Rat d = boundary.d_col[static_cast<std::size_t>(m)];
  for (int i = 0; i <= n; ++i) d += divide(ab(i + 1, m) - ab(i, m + 1), i, m);
  return {c, d};
}

std::optional<GridMismatch> compare_fields(const RecurrenceField& expected, const RecurrenceField& actual) {
  const std::pair<const char*, RatGrid RecurrenceField::*> grids[] = {
      {"a", &RecurrenceField::a}, {"b", &RecurrenceField::b}, {"c", &RecurrenceField::c}, {"d", &RecurrenceField::d}};
  for (const auto& [name, member] : grids) {
    const RatGrid& e = expected.*member;
    const RatGrid& g = actual.*member;
    for (int n = 0; n <= expected.N; ++n) {
      for (int m = 0; m <= expected.M; ++m) {
        if (!e.has(n, m)) continue;
        if (!g.has(n, m)) return GridMismatch{name, n, m, e.at(n, m), Rat(0)};
        if (e.at(n, m) != g.at(n, m)) return GridMismatch{name, n, m, e.at(n, m), g.at(n, m)};
      }
    }
  }
  return std::nullopt;
}

CrossValidation cross_validate(const MomentSystem& system, int N, int M) {
  CrossValidation out;
  out.N = N;
  out.M = M;
  const HPTable table(system);
  const RecurrenceField oracle = field_from_table(table, N, M);
  const BoundaryData boundary = boundary_from_table(table, N + M);
  const SweepReport sweep = sweep_solve(boundary, N, M);
  out.sweep_failure = sweep.failure;
  out.first_mismatch = compare_fields(oracle, sweep.field);
  out.grids_equal = !out.first_mismatch && !sweep.failure;

  const RecurrenceField& field = sweep.failure ? oracle : sweep.field;
  const NormalizationGrid norms = normalization_grid(table, N + 1, M + 1);
  const TransitionGrid pairs(field, norms, N, M);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= M; ++m) {
      auto [r1, r2] = recurrence_residuals(field, table, n, m);
      out.recurrence_max_degree = std::max({out.recurrence_max_degree, r1.degree(), r2.degree()});
      if (n + 1 > N || m + 1 > M) continue;
      ++out.stencils_checked;
      const ConsistencyResiduals cr = consistency_residuals(field, n, m);
      for (const auto& r : cr.r) out.consistency_max = std::max(out.consistency_max, abs(r));
      out.consistency_degenerate = out.consistency_degenerate || cr.degenerate;
      const MatPoly z = zcc_residual(pairs.at(n, m), pairs.at(n + 1, m), pairs.at(n, m + 1));
      out.zcc_max_degree = std::max(out.zcc_max_degree, z.max_degree());
    }
  }
  if (!sweep.failure) {
    for (int n = 0; n + 1 <= N + M; ++n) {
      for (int m = 0; n + m + 1 <= N + M; ++m) {
        auto [c, d] = cd_by_summation(boundary, sweep.triangle, n, m);
        if (c != sweep.triangle.c.at(n, m + 1) || d != sweep.triangle.d.at(n + 1, m)) ++out.summation_mismatches;
      }
    }
  }
  return out;
}

}  // namespace hplax
