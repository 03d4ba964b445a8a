#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hplax/laurent.hpp"
#include "hplax/measures.hpp"
#include "hplax/poly.hpp"

namespace hplax {

/// P_{n,m} with its numerators Q_j and remainders R_j = f_j P - Q_j.
struct HPTriple {
  int n = 0;
  int m = 0;
  Poly P;
  Poly Q1, Q2;
  LaurentTail R1, R2;
};

/// Memoized determinants S_{n,m} and type II Hermite-Pade denominators P_{n,m}
/// of a moment system. Each cell is computed once; concurrent readers are safe.
class HPTable {
 public:
  explicit HPTable(MomentSystem moments) : moments_(std::move(moments)) {}

  const MomentSystem& moments() const noexcept { return moments_; }

  /// det of the (n+m)x(n+m) moment matrix; S_{0,0} = 1.
  /// Needs s1 up to index 2n+m-2 and s2 up to n+2m-2.
  Rat s_det(int n, int m) const;
  bool is_normal(int n, int m) const { return sgn(s_det(n, m)) != 0; }

  /// Bordered determinant divided by S_{n,m}. NotNormal when S_{n,m} = 0.
  Poly hp_poly_det(int n, int m) const;
  /// Solves sum_i p_i s_{j,k+i} = 0 (k < n_j) with p_{n+m} = 1.
  Poly hp_poly_solve(int n, int m) const;

  /// Memoized P_{n,m} (linear-solve route).
  const Poly& poly(int n, int m) const;
  /// P_{n,m}, or the zero polynomial when n or m is negative.
  Poly poly_or_zero(int n, int m) const;

 private:
  void check_index(int n, int m) const;
  void check_moments(int n, int m, int extra) const;

  MomentSystem moments_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, Rat> s_cache_;
  mutable std::map<std::pair<int, int>, Poly> p_cache_;
};

/// Splits f_j P_{n,m} into Q_j + R_j and checks that R_j starts at z^{-n_j-1}.
/// Needs series of order at least n+m+max(n,m)+2; IntegrityError if the order
/// condition fails.
HPTriple hp_remainder(const HPTable& table, const LaurentTail& f1, const LaurentTail& f2, int n, int m);

/// sum_i p_i s_{j,k+i} for k < n_j, j = 1, 2.
std::pair<std::vector<Rat>, std::vector<Rat>> orthogonality_residuals(const HPTable& table, int n, int m);

/// Coefficient of x^{deg-1}; zero for constants.
Rat subleading(const Poly& p);

}  // namespace hplax
