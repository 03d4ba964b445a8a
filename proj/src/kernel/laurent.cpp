#include "hplax/laurent.hpp"

#include <algorithm>
#include <string>

#include "hplax/errors.hpp"

namespace hplax {

const Rat& LaurentTail::operator[](std::size_t k) const {
  if (k >= coeffs_.size()) {
    throw TruncationError("series coefficient " + std::to_string(k) + " requested, order is " +
                          std::to_string(coeffs_.size()));
  }
  return coeffs_[k];
}

LaurentTail LaurentTail::truncated(std::size_t order) const {
  if (order > coeffs_.size()) {
    throw TruncationError("cannot extend a series of order " + std::to_string(coeffs_.size()) +
                          " to order " + std::to_string(order));
  }
  return LaurentTail(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

std::size_t LaurentTail::leading_zeros() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && is_zero(coeffs_[k])) ++k;
  return k;
}

LaurentTail& LaurentTail::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

LaurentTail operator+(const LaurentTail& lhs, const LaurentTail& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rat> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = lhs.coeffs_[k] + rhs.coeffs_[k];
  return LaurentTail(std::move(out));
}

LaurentTail operator-(const LaurentTail& lhs, const LaurentTail& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rat> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = lhs.coeffs_[k] - rhs.coeffs_[k];
  return LaurentTail(std::move(out));
}

LaurentTail operator-(const LaurentTail& t) {
  LaurentTail out = t;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentTail operator*(const LaurentTail& lhs, const LaurentTail& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order()) + 1;
  std::vector<Rat> out(n);
  // z^{-i-1} z^{-j-1} = z^{-(i+j+1)-1}
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + 1 <= k; ++i) out[k] += lhs.coeffs_[i] * rhs.coeffs_[k - 1 - i];
  }
  return LaurentTail(std::move(out));
}

bool agree_to_common_order(const LaurentTail& lhs, const LaurentTail& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs[k] != rhs[k]) return false;
  }
  return true;
}

LaurentSeries operator+(const LaurentSeries& lhs, const LaurentSeries& rhs) {
  return {lhs.polynomial_part + rhs.polynomial_part, lhs.tail + rhs.tail};
}

LaurentSeries operator*(const Rat& s, const LaurentSeries& rhs) {
  return {s * rhs.polynomial_part, s * rhs.tail};
}

bool agree_to_common_order(const LaurentSeries& lhs, const LaurentSeries& rhs) {
  return lhs.polynomial_part == rhs.polynomial_part && agree_to_common_order(lhs.tail, rhs.tail);
}

LaurentTail series_from_moments(std::span<const Rat> moments) {
  return LaurentTail(std::vector<Rat>(moments.begin(), moments.end()));
}

LaurentSeries poly_from_series_product(const LaurentTail& f, const Poly& p) {
  if (p.is_zero()) return {Poly(), LaurentTail::zero(f.order())};
  const std::size_t deg = static_cast<std::size_t>(p.degree());
  if (f.order() < deg) {
    throw TruncationError("series of order " + std::to_string(f.order()) +
                          " is too short to multiply by a polynomial of degree " +
                          std::to_string(deg));
  }
  const auto& pc = p.coefficients();
  const auto& fc = f.coefficients();
  // x^j * z^{-k-1} contributes to z^{j-k-1}.
  std::vector<Rat> poly(deg);
  for (std::size_t e = 0; e < deg; ++e) {
    for (std::size_t j = e + 1; j <= deg; ++j) poly[e] += pc[j] * fc[j - 1 - e];
  }
  std::vector<Rat> tail(f.order() - deg);
  for (std::size_t t = 0; t < tail.size(); ++t) {
    for (std::size_t j = 0; j <= deg; ++j) tail[t] += pc[j] * fc[j + t];
  }
  return {Poly(std::move(poly)), LaurentTail(std::move(tail))};
}

LaurentSeries multiply(const Poly& p, const LaurentSeries& series) {
  LaurentSeries out = poly_from_series_product(series.tail, p);
  out.polynomial_part += p * series.polynomial_part;
  return out;
}

std::vector<Rat> inverse_power_series(std::span<const Rat> u, std::size_t count) {
  if (u.empty() || is_zero(u[0])) throw DegeneracyError(0, "power series with zero constant term");
  if (u.size() < count) throw TruncationError("power series too short to invert");
  std::vector<Rat> v(count);
  if (count == 0) return v;
  const Rat inv0 = 1 / u[0];
  v[0] = inv0;
  for (std::size_t k = 1; k < count; ++k) {
    Rat acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += u[i] * v[k - i];
    v[k] = -acc * inv0;
  }
  return v;
}

LaurentTail reciprocal_of_shifted(const Rat& shift, const LaurentTail& t, std::size_t order) {
  // z - shift + t = z (1 + U(w)), w = 1/z, U = -shift w + sum_k t_k w^{k+2}.
  if (order > t.order() + 2) {
    throw TruncationError("reciprocal of order " + std::to_string(order) +
                          " needs a tail of order " + std::to_string(order - 2));
  }
  std::vector<Rat> u(order);
  if (order > 0) u[0] = 1;
  if (order > 1) u[1] = -shift;
  for (std::size_t i = 2; i < order; ++i) u[i] = t[i - 2];
  return LaurentTail(inverse_power_series(u, order));
}

LaurentSeries reciprocal(const LaurentTail& t) {
  // t = w U(w) so 1/t = z V(w) with V = 1/U.
  if (t.order() < 2) throw TruncationError("reciprocal needs a series of order >= 2");
  if (is_zero(t[0])) throw DegeneracyError(0, "reciprocal of a series with vanishing leading term");
  std::vector<Rat> v = inverse_power_series(t.coefficients(), t.order());
  Poly poly({v[1], v[0]});
  return {std::move(poly), LaurentTail(std::vector<Rat>(v.begin() + 2, v.end()))};
}

}  // namespace hplax
