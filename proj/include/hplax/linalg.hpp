#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hplax/rat.hpp"

namespace hplax {

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length (DimensionError otherwise).
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Copy with row `row` and column `col` deleted.
  RatMatrix minor(std::size_t row, std::size_t col) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact determinant. Rows are scaled to integers and reduced with
/// fraction-free Bareiss elimination; the 0x0 determinant is 1.
Rat det_exact(const RatMatrix& matrix);

/// Solves A x = b by exact Gaussian elimination over the rationals.
/// Returns nullopt when A is singular.
std::optional<std::vector<Rat>> solve_exact(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace hplax
