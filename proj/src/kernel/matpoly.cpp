#include "hplax/matpoly.hpp"

#include <algorithm>
#include <sstream>

#include "hplax/errors.hpp"

namespace hplax {

MatPoly::MatPoly(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim != 2 && dim != 3) throw DimensionError("matrix polynomials must be 2x2 or 3x3");
}

MatPoly MatPoly::identity(std::size_t dim) {
  MatPoly out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = Poly::constant(1);
  return out;
}

MatPoly MatPoly::from_rows(const std::vector<std::vector<Poly>>& rows) {
  MatPoly out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw DimensionError("matrix polynomial rows must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
  }
  return out;
}

bool MatPoly::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

int MatPoly::max_degree() const {
  int deg = -1;
  for (const auto& p : entries_) deg = std::max(deg, p.degree());
  return deg;
}

Poly MatPoly::determinant() const {
  const MatPoly& a = *this;
  if (dim_ == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

MatPoly MatPoly::adjugate() const {
  const MatPoly& a = *this;
  MatPoly out(dim_);
  if (dim_ == 2) {
    out(0, 0) = a(1, 1);
    out(0, 1) = -a(0, 1);
    out(1, 0) = -a(1, 0);
    out(1, 1) = a(0, 0);
    return out;
  }
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      // cofactor of (r, c), stored at (c, r)
      const std::size_t r1 = (r + 1) % 3, r2 = (r + 2) % 3;
      const std::size_t c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      out(c, r) = a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1);
    }
  }
  return out;
}

MatPoly MatPoly::divided_by(const Rat& scalar) const {
  if (hplax::is_zero(scalar)) throw std::domain_error("matrix polynomial divided by zero");
  MatPoly out = *this;
  const Rat inv = 1 / scalar;
  for (auto& p : out.entries_) p *= inv;
  return out;
}

std::string MatPoly::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < dim_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < dim_; ++c) out << (c ? ", " : "") << (*this)(r, c).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

static void require_same_dim(const MatPoly& lhs, const MatPoly& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix polynomial dimension mismatch");
}

MatPoly operator+(const MatPoly& lhs, const MatPoly& rhs) {
  require_same_dim(lhs, rhs);
  MatPoly out = lhs;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

MatPoly operator-(const MatPoly& lhs, const MatPoly& rhs) {
  require_same_dim(lhs, rhs);
  MatPoly out = lhs;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

MatPoly operator*(const MatPoly& lhs, const MatPoly& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  MatPoly out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Poly acc;
      for (std::size_t k = 0; k < n; ++k) acc += lhs(r, k) * rhs(k, c);
      out(r, c) = std::move(acc);
    }
  }
  return out;
}

}  // namespace hplax
