#include "hplax/nnrr.hpp"

#include <map>
#include <string>
#include <tuple>

#include "hplax/errors.hpp"

namespace hplax {

Coefficients coefficients_at(const HPTable& table, int n, int m) {
  const Rat s = table.s_det(n, m);
  if (is_zero(s)) throw NotNormal(n, m);
  const Rat s2 = s * s;
  Coefficients out;
  out.a = n == 0 ? Rat(0) : Rat(table.s_det(n + 1, m) * table.s_det(n - 1, m) / s2);
  out.b = m == 0 ? Rat(0) : Rat(table.s_det(n, m + 1) * table.s_det(n, m - 1) / s2);
  const Rat sub = subleading(table.poly(n, m));
  out.c = sub - subleading(table.poly(n + 1, m));
  out.d = sub - subleading(table.poly(n, m + 1));
  return out;
}

RecurrenceField field_from_table(const HPTable& table, int N, int M) {
  RecurrenceField field(N, M);
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= M; ++m) {
      Coefficients k = coefficients_at(table, n, m);
      field.a.set(n, m, k.a);
      field.b.set(n, m, k.b);
      field.c.set(n, m, k.c);
      field.d.set(n, m, k.d);
    }
  }
  return field;
}

Rat check_dminusc(const HPTable& table, int n, int m) {
  const Rat s10 = table.s_det(n + 1, m);
  const Rat s01 = table.s_det(n, m + 1);
  if (is_zero(s10)) throw NotNormal(n + 1, m);
  if (is_zero(s01)) throw NotNormal(n, m + 1);
  return table.s_det(n, m) * table.s_det(n + 1, m + 1) / (s10 * s01);
}

std::pair<Poly, Poly> recurrence_residuals(const RecurrenceField& field, const HPTable& table, int n, int m) {
  const Poly& p = table.poly(n, m);
  const Poly x = Poly::monomial(1);
  const Poly lower = field.a.at(n, m) * table.poly_or_zero(n - 1, m) + field.b.at(n, m) * table.poly_or_zero(n, m - 1);
  Poly r1 = table.poly(n + 1, m) - ((x - Poly::constant(field.c.at(n, m))) * p - lower);
  Poly r2 = table.poly(n, m + 1) - ((x - Poly::constant(field.d.at(n, m))) * p - lower);
  return {std::move(r1), std::move(r2)};
}

ConsistencyResiduals consistency_residuals(const RecurrenceField& f, int n, int m) {
  ConsistencyResiduals out;
  const Rat& c = f.c.at(n, m);
  const Rat& d = f.d.at(n, m);
  out.r[0] = (f.d.at(n + 1, m) - d) - (f.c.at(n, m + 1) - c);
  out.r[1] = (f.b.at(n + 1, m) - f.b.at(n, m + 1) + f.a.at(n + 1, m) - f.a.at(n, m + 1)) -
             (f.d.at(n + 1, m) * c - d * f.c.at(n, m + 1));
  const Rat gap = c - d;
  if (is_zero(gap)) out.degenerate = true;
  if (n >= 1) {
    const Rat left = f.gap(n - 1, m);
    if (is_zero(left)) out.degenerate = true;
    out.r[2] = f.a.at(n, m + 1) * left - f.a.at(n, m) * gap;
  }
  if (m >= 1) {
    const Rat below = f.gap(n, m - 1);
    if (is_zero(below)) out.degenerate = true;
    out.r[3] = f.b.at(n + 1, m) * below - f.b.at(n, m) * gap;
  }
  return out;
}

namespace {

class BranchedFraction {
 public:
  explicit BranchedFraction(const RecurrenceField& field) : field_(field) {}

  const LaurentTail& get(int j, int n, int m, std::size_t order) {
    auto key = std::make_tuple(j, n, m);
    if (auto it = memo_.find(key); it != memo_.end() && it->second.order() >= order) return it->second;
    if (order == 0) return memo_[key] = LaurentTail::zero(0);

    const std::size_t inner = order >= 2 ? order - 2 : 0;
    LaurentTail t = LaurentTail::zero(inner);
    if (n >= 1) t = t + field_.a.at(n, m) * get(1, n - 1, m, inner);
    if (m >= 1) t = t + field_.b.at(n, m) * get(2, n, m - 1, inner);
    const Rat& shift = j == 1 ? field_.c.at(n, m) : field_.d.at(n, m);
    LaurentTail r = reciprocal_of_shifted(shift, t, order);
    return memo_[key] = -r;
  }

 private:
  const RecurrenceField& field_;
  std::map<std::tuple<int, int, int>, LaurentTail> memo_;
};

}  // namespace

LaurentTail m_minus_series(const RecurrenceField& field, int j, int n, int m, std::size_t order) {
  if (j != 1 && j != 2) throw std::invalid_argument("series index j must be 1 or 2");
  if (n < 0 || m < 0 || n > field.N || m > field.M) {
    throw RangeError("branched fraction index (" + std::to_string(n) + "," + std::to_string(m) +
                     ") outside the field");
  }
  BranchedFraction bf(field);
  return bf.get(j, n, m, order).truncated(order);
}

LaurentTail m_minus_series(const HPTable& table, int j, int n, int m, std::size_t order) {
  return m_minus_series(field_from_table(table, n, m), j, n, m, order);
}

CFExtraction cf_extract(const LaurentTail& series1, const LaurentTail& series2, const Rat& c_prev1,
                        const Rat& d_prev2, const Rat& gap) {
  if (series1.order() < 4 || series2.order() < 4) {
    throw TruncationError("continued fraction extraction needs series of order 4");
  }
  // -1/m = z - c - f/z - g/z^2 + ...
  auto read = [](const LaurentTail& s) {
    LaurentSeries inv = reciprocal(s);
    inv = Rat(-1) * inv;
    if (inv.polynomial_part.coefficient(1) != 1 || inv.polynomial_part.degree() > 1) {
      throw DegeneracyError(0, "series does not start with -1/z");
    }
    return std::make_tuple(Rat(-inv.polynomial_part.coefficient(0)), Rat(-inv.tail[0]), Rat(-inv.tail[1]));
  };
  auto [c, f1, g1] = read(series1);
  auto [d, f2, g2] = read(series2);
  if (f1 != f2 || g1 != g2) {
    throw IntegrityError("branched series disagree on a+b or on the second-order term");
  }
  CFExtraction out{c, d, f1, g1, Rat(0), Rat(0)};
  if (is_zero(out.f) && is_zero(out.g)) return out;
  if (is_zero(gap)) throw NonPerfectData("c - d vanishes at the previous level; a and b are not determined");
  out.a = (out.g - out.f * d_prev2) / gap;
  out.b = out.f - out.a;
  if (out.a * c_prev1 + out.b * d_prev2 != out.g) {
    throw IntegrityError("supplied gap differs from c_prev1 - d_prev2");
  }
  return out;
}

}  // namespace hplax
