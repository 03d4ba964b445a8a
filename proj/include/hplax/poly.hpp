#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hplax/rat.hpp"

namespace hplax {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// powers of x. Trailing zeros are never stored, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coefficients);
  Poly(std::initializer_list<Rat> coefficients) : Poly(std::vector<Rat>(coefficients)) {}

  static Poly constant(const Rat& value);
  static Poly monomial(int power, const Rat& coefficient = 1);
  /// x - root
  static Poly linear(const Rat& root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^power; zero outside the stored range.
  Rat coefficient(int power) const;
  const Rat& leading() const;
  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }

  Rat evaluate(const Rat& x) const;
  Poly monic() const;
  std::string to_string() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator-(const Poly& p);
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Rat& s) { return p *= s; }
  friend Poly operator*(const Rat& s, Poly p) { return p *= s; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Euclidean division: returns (quotient, remainder) with deg r < deg divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor (zero if both are zero).
Poly gcd(Poly a, Poly b);

}  // namespace hplax
