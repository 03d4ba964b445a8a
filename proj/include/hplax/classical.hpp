#pragma once

#include <utility>
#include <vector>

#include "hplax/grid.hpp"
#include "hplax/matpoly.hpp"
#include "hplax/measures.hpp"
#include "hplax/poly.hpp"

namespace hplax {

/// n x n Hankel determinant det(s_{k+i+j}); S_0^{(k)} = 1.
Rat hankel_shifted(const std::vector<Rat>& moments, int n, int k);

struct QdPair {
  Rat V, W;
};

/// V = S_{n+1}^{(k+1)} S_n^{(k)} / (S_n^{(k+1)} S_{n+1}^{(k)}),
/// W = S_{n+1}^{(k+1)} S_n^{(k+1)} / (S_{n+1}^{(k)} S_n^{(k+2)}).
/// DegeneracyError on a zero denominator.
QdPair qd_vw(const std::vector<Rat>& moments, int n, int k);

/// V, W over 0..N x 0..K.
struct QdField {
  std::vector<Rat> moments;
  RatGrid V, W;
};
QdField qd_field(const std::vector<Rat>& moments, int N, int K);

/// L_{n,k} and x M_{n,k} (M is stored as a numerator over the scalar x).
struct Transition2 {
  MatPoly L;
  MatPoly M_num;
  Poly M_den;
};
Transition2 transition_2x2(const std::vector<Rat>& moments, int n, int k);
Transition2 transition_2x2(const QdField& field, int n, int k);

/// L_{n,k+1} (x M_{n,k}) - (x M_{n+1,k}) L_{n,k}.
MatPoly zcc2_residual(const std::vector<Rat>& moments, int n, int k);
MatPoly zcc2_residual(const QdField& field, int n, int k);

/// Monic degree-n polynomial orthogonal to 1..x^{n-1} under the moments
/// (Hankel solve). DegeneracyError when the Hankel matrix is singular.
Poly monic_orthogonal(const std::vector<Rat>& moments, int n);

/// pi_0..pi_upto from pi_{j+1} = (x - c_j) pi_j - a_j pi_{j-1}.
std::vector<Poly> three_term_polys(const JFraction& j, int upto);

/// pi_{k+1} - [(x - c_k) pi_k - a_k pi_{k-1}] for k < upto, where pi_k are the
/// monic orthogonal polynomials of the fraction's moments.
std::vector<Poly> three_term_check(const JFraction& j, int upto);

/// num / den with den monic and gcd(num, den) = 1.
struct RationalFunction {
  Poly num, den;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Reduces and normalizes num/den.
RationalFunction make_rational(const Poly& num, const Poly& den);

/// -1/(x - c_d + a_d (-1/(x - c_{d-1} + ... a_1 (-1/(x - c_0))))) = -pi_d/pi_{d+1},
/// evaluated bottom-up. DegeneracyError on a zero a_k or missing coefficients.
RationalFunction cf_tail_eval(const JFraction& j, int depth);

}  // namespace hplax
