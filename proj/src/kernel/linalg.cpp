#include "hplax/linalg.hpp"

#include <utility>

#include "hplax/errors.hpp"

namespace hplax {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

RatMatrix RatMatrix::minor(std::size_t row, std::size_t col) const {
  RatMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, ro = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, co = 0; c < cols_; ++c) {
      if (c == col) continue;
      out(ro, co++) = (*this)(r, c);
    }
    ++ro;
  }
  return out;
}

Rat det_exact(const RatMatrix& matrix) {
  if (!matrix.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = matrix.rows();
  if (n == 0) return Rat(1);

  // Clear denominators row by row; det(A) = det(B) / prod(scale).
  std::vector<BigInt> m(n * n);
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), matrix(r, c).get_den_mpz_t());
    }
    scale *= lcm;
    for (std::size_t c = 0; c < n; ++c) {
      const Rat& v = matrix(r, c);
      m[r * n + c] = v.get_num() * (lcm / v.get_den());
    }
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k * n + k]) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(m[swap * n + k]) == 0) ++swap;
      if (swap == n) return Rat(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[swap * n + c]);
      sign = -sign;
    }
    const BigInt& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i * n + k] = 0;
    }
    prev = pivot;
  }
  BigInt det = m[n * n - 1];
  if (sign < 0) det = -det;
  return make_rat(det, scale);
}

std::optional<std::vector<Rat>> solve_exact(const RatMatrix& a, const std::vector<Rat>& b) {
  if (!a.square() || b.size() != a.rows()) throw DimensionError("solve_exact: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n) = b[r];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t c = k; c <= n; ++c) std::swap(m(k, c), m(p, c));
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(m(r, k))) continue;
      Rat factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c <= n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = m(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
    x[i] = acc / m(i, i);
  }
  return x;
}

}  // namespace hplax
