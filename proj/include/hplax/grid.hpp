#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hplax/errors.hpp"
#include "hplax/rat.hpp"

namespace hplax {

/// (rows x cols) array indexed [n][m] whose cells may be absent.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool in_range(int n, int m) const noexcept { return n >= 0 && m >= 0 && n < rows_ && m < cols_; }
  bool has(int n, int m) const noexcept { return in_range(n, m) && cell(n, m).has_value(); }

  /// Present value or RangeError.
  const T& at(int n, int m) const {
    if (!has(n, m)) {
      throw RangeError("no value at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
    return *cell(n, m);
  }
  void set(int n, int m, T value) {
    if (!in_range(n, m)) {
      throw RangeError("index (" + std::to_string(n) + "," + std::to_string(m) + ") outside grid");
    }
    cells_[index(n, m)] = std::move(value);
  }
  void erase(int n, int m) {
    if (in_range(n, m)) cells_[index(n, m)].reset();
  }
  const std::optional<T>& cell(int n, int m) const { return cells_[index(n, m)]; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int n, int m) const { return static_cast<std::size_t>(n * cols_ + m); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::optional<T>> cells_;
};

using RatGrid = Grid<Rat>;

}  // namespace hplax
