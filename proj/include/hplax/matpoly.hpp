#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hplax/poly.hpp"

namespace hplax {

/// Square matrix whose entries are polynomials in x. Dimension 2 or 3.
class MatPoly {
 public:
  MatPoly() = default;
  /// Zero matrix of the given dimension (DimensionError unless 2 or 3).
  explicit MatPoly(std::size_t dim);
  static MatPoly identity(std::size_t dim);
  static MatPoly from_rows(const std::vector<std::vector<Poly>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  bool is_zero() const;
  /// Largest entry degree; -1 for the zero matrix.
  int max_degree() const;

  Poly determinant() const;
  /// Transposed cofactor matrix; A * adj(A) = det(A) I.
  MatPoly adjugate() const;
  /// Divides every entry by a nonzero constant.
  MatPoly divided_by(const Rat& scalar) const;
  std::string to_string() const;

  friend MatPoly operator+(const MatPoly& lhs, const MatPoly& rhs);
  friend MatPoly operator-(const MatPoly& lhs, const MatPoly& rhs);
  friend MatPoly operator*(const MatPoly& lhs, const MatPoly& rhs);
  friend bool operator==(const MatPoly& lhs, const MatPoly& rhs) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Poly> entries_;
};

}  // namespace hplax
