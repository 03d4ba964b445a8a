#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hplax/poly.hpp"
#include "hplax/rat.hpp"

namespace hplax {

/// Truncated series sum_k t_k z^{-k-1} at infinity. Entry k is the coefficient
/// of z^{-k-1}; `order()` is the number of coefficients known exactly.
/// Reading past the order raises TruncationError.
class LaurentTail {
 public:
  LaurentTail() = default;
  explicit LaurentTail(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {}
  /// Exact zero tail known to `order` coefficients.
  static LaurentTail zero(std::size_t order) { return LaurentTail(std::vector<Rat>(order)); }

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rat& operator[](std::size_t k) const;
  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }

  /// First `order` coefficients (TruncationError if fewer are known).
  LaurentTail truncated(std::size_t order) const;
  /// Index of the first nonzero coefficient, or order() if none.
  std::size_t leading_zeros() const;

  LaurentTail& operator*=(const Rat& scalar);
  friend LaurentTail operator*(LaurentTail t, const Rat& s) { return t *= s; }
  friend LaurentTail operator*(const Rat& s, LaurentTail t) { return t *= s; }
  /// Sum and difference are valid to the shorter operand's order.
  friend LaurentTail operator+(const LaurentTail& lhs, const LaurentTail& rhs);
  friend LaurentTail operator-(const LaurentTail& lhs, const LaurentTail& rhs);
  friend LaurentTail operator-(const LaurentTail& t);
  /// Product of two tails; coefficient 0 is always zero, valid to min order + 1.
  friend LaurentTail operator*(const LaurentTail& lhs, const LaurentTail& rhs);

  /// Exact equality of stored coefficients (including order).
  friend bool operator==(const LaurentTail& lhs, const LaurentTail& rhs) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// Coefficientwise equality on the first min(order) coefficients.
bool agree_to_common_order(const LaurentTail& lhs, const LaurentTail& rhs);

/// Polynomial part plus tail: a Laurent series at infinity with finitely many
/// positive powers.
struct LaurentSeries {
  Poly polynomial_part;
  LaurentTail tail;

  friend LaurentSeries operator+(const LaurentSeries& lhs, const LaurentSeries& rhs);
  friend LaurentSeries operator*(const Rat& s, const LaurentSeries& rhs);
};

/// Equal polynomial parts and tails agreeing to the common order.
bool agree_to_common_order(const LaurentSeries& lhs, const LaurentSeries& rhs);

/// f(z) = sum_k s_k z^{-k-1}, truncation order = s.size().
LaurentTail series_from_moments(std::span<const Rat> moments);

/// Splits f * p into its polynomial part and its tail. The tail has order
/// f.order() - deg p; TruncationError if f.order() < deg p.
LaurentSeries poly_from_series_product(const LaurentTail& f, const Poly& p);

/// p * (q + t) for a polynomial p and a Laurent series q + t.
LaurentSeries multiply(const Poly& p, const LaurentSeries& series);

/// 1 / (z - shift + t(z)) as a tail of the requested order.
/// Needs t.order() >= order - 2.
LaurentTail reciprocal_of_shifted(const Rat& shift, const LaurentTail& t, std::size_t order);

/// 1 / t(z) for a tail with t_0 != 0: the result is alpha z + beta + tail of
/// order t.order() - 2. DegeneracyError if t_0 == 0.
LaurentSeries reciprocal(const LaurentTail& t);

/// Coefficients of 1/u for a formal power series u with u_0 != 0, truncated
/// to `count` terms (u must hold at least `count` terms).
std::vector<Rat> inverse_power_series(std::span<const Rat> u, std::size_t count);

}  // namespace hplax
