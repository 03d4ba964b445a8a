#include "hplax/poly.hpp"

#include <sstream>

#include "hplax/errors.hpp"

namespace hplax {

Poly::Poly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rat& value) { return Poly(std::vector<Rat>{value}); }

Poly Poly::monomial(int power, const Rat& coefficient) {
  std::vector<Rat> c(static_cast<std::size_t>(power) + 1);
  c.back() = coefficient;
  return Poly(std::move(c));
}

Poly Poly::linear(const Rat& root) { return Poly({Rat(-root), Rat(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && hplax::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rat Poly::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw IntegrityError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat Poly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading();
  return *this * inv;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (hplax::is_zero(c)) continue;
    Rat mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    if (k == 0 || mag != 1) {
      out << hplax::to_string(mag);
      if (k > 0) out << "*";
    }
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (hplax::is_zero(scalar)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly operator-(const Poly& p) {
  Poly out = p;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (is_zero(lhs.coeffs_[i])) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Poly(), dividend};
  std::vector<Rat> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Rat& lead = divisor.leading();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (is_zero(q)) continue;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * divisor.coefficient(i);
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace hplax
