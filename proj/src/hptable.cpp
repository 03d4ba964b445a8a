#include "hplax/hptable.hpp"

#include <algorithm>
#include <string>

#include "hplax/errors.hpp"
#include "hplax/linalg.hpp"

namespace hplax {

namespace {

// Rows k < n hold s1_{k..k+cols-1}, rows k < m hold s2_{k..k+cols-1}.
RatMatrix moment_rows(const MomentSystem& ms, int n, int m, int cols) {
  RatMatrix a(static_cast<std::size_t>(n + m), static_cast<std::size_t>(cols));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < cols; ++i) a(k, i) = ms.s1[static_cast<std::size_t>(k + i)];
  }
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < cols; ++i) a(n + k, i) = ms.s2[static_cast<std::size_t>(k + i)];
  }
  return a;
}

}  // namespace

void HPTable::check_index(int n, int m) const {
  if (n < 0 || m < 0) {
    throw RangeError("negative multi-index (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
}

// extra = 0 for S_{n,m}, 1 for P_{n,m}.
void HPTable::check_moments(int n, int m, int extra) const {
  const int need1 = n > 0 ? 2 * n + m - 1 + extra : 0;
  const int need2 = m > 0 ? n + 2 * m - 1 + extra : 0;
  if (static_cast<int>(moments_.s1.size()) < need1 || static_cast<int>(moments_.s2.size()) < need2) {
    throw TruncationError("index (" + std::to_string(n) + "," + std::to_string(m) + ") needs " +
                          std::to_string(need1) + " moments of the first measure and " +
                          std::to_string(need2) + " of the second");
  }
}

Rat HPTable::s_det(int n, int m) const {
  check_index(n, m);
  {
    std::lock_guard lock(mutex_);
    if (auto it = s_cache_.find({n, m}); it != s_cache_.end()) return it->second;
  }
  check_moments(n, m, 0);
  Rat value = det_exact(moment_rows(moments_, n, m, n + m));
  std::lock_guard lock(mutex_);
  return s_cache_.emplace(std::make_pair(n, m), std::move(value)).first->second;
}

Poly HPTable::hp_poly_det(int n, int m) const {
  check_index(n, m);
  const Rat s = s_det(n, m);
  if (is_zero(s)) throw NotNormal(n, m);
  check_moments(n, m, 1);
  const int size = n + m;
  // Bordered matrix with last row (1, x, ..., x^size); expand along that row.
  const RatMatrix top = moment_rows(moments_, n, m, size + 1);
  std::vector<Rat> coeffs(static_cast<std::size_t>(size) + 1);
  for (int r = 0; r <= size; ++r) {
    RatMatrix minor(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (int row = 0; row < size; ++row) {
      for (int col = 0, mc = 0; col <= size; ++col) {
        if (col == r) continue;
        minor(row, mc++) = top(row, col);
      }
    }
    Rat cof = det_exact(minor);
    if ((size + r) % 2 != 0) cof = -cof;
    coeffs[static_cast<std::size_t>(r)] = cof / s;
  }
  return Poly(std::move(coeffs));
}

Poly HPTable::hp_poly_solve(int n, int m) const {
  check_index(n, m);
  if (!is_normal(n, m)) throw NotNormal(n, m);
  check_moments(n, m, 1);
  const int size = n + m;
  const RatMatrix full = moment_rows(moments_, n, m, size + 1);
  RatMatrix a(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  std::vector<Rat> rhs(static_cast<std::size_t>(size));
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) a(r, c) = full(r, c);
    rhs[static_cast<std::size_t>(r)] = -full(r, size);
  }
  auto sol = solve_exact(a, rhs);
  if (!sol) {
    throw IntegrityError("singular orthogonality system at normal index (" + std::to_string(n) + "," +
                         std::to_string(m) + ")");
  }
  sol->push_back(Rat(1));
  return Poly(std::move(*sol));
}

const Poly& HPTable::poly(int n, int m) const {
  check_index(n, m);
  {
    std::lock_guard lock(mutex_);
    if (auto it = p_cache_.find({n, m}); it != p_cache_.end()) return it->second;
  }
  Poly p = hp_poly_solve(n, m);
  std::lock_guard lock(mutex_);
  return p_cache_.emplace(std::make_pair(n, m), std::move(p)).first->second;
}

Poly HPTable::poly_or_zero(int n, int m) const {
  if (n < 0 || m < 0) return Poly();
  return poly(n, m);
}

HPTriple hp_remainder(const HPTable& table, const LaurentTail& f1, const LaurentTail& f2, int n, int m) {
  const std::size_t need = static_cast<std::size_t>(n + m + std::max(n, m) + 2);
  if (f1.order() < need || f2.order() < need) {
    throw TruncationError("remainder at (" + std::to_string(n) + "," + std::to_string(m) +
                          ") needs series of order " + std::to_string(need));
  }
  HPTriple out;
  out.n = n;
  out.m = m;
  out.P = table.poly(n, m);
  auto r1 = poly_from_series_product(f1, out.P);
  auto r2 = poly_from_series_product(f2, out.P);
  out.Q1 = std::move(r1.polynomial_part);
  out.R1 = std::move(r1.tail);
  out.Q2 = std::move(r2.polynomial_part);
  out.R2 = std::move(r2.tail);
  auto check = [&](const LaurentTail& r, int nj, int j) {
    for (int k = 0; k < nj; ++k) {
      if (!is_zero(r[static_cast<std::size_t>(k)])) {
        throw IntegrityError("remainder R" + std::to_string(j) + " at (" + std::to_string(n) + "," +
                             std::to_string(m) + ") has a nonzero z^-" + std::to_string(k + 1) + " term");
      }
    }
  };
  check(out.R1, n, 1);
  check(out.R2, m, 2);
  return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> orthogonality_residuals(const HPTable& table, int n, int m) {
  const Poly& p = table.poly(n, m);
  const auto& ms = table.moments();
  auto pair_with = [&](const std::vector<Rat>& s, int count) {
    std::vector<Rat> out;
    for (int k = 0; k < count; ++k) {
      Rat acc = 0;
      for (int i = 0; i <= p.degree(); ++i) acc += p.coefficient(i) * s.at(static_cast<std::size_t>(k + i));
      out.push_back(acc);
    }
    return out;
  };
  return {pair_with(ms.s1, n), pair_with(ms.s2, m)};
}

Rat subleading(const Poly& p) { return p.coefficient(p.degree() - 1); }

}  // namespace hplax
