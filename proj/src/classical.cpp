#include "hplax/classical.hpp"

#include <map>
#include <string>

#include "hplax/errors.hpp"
#include "hplax/linalg.hpp"

namespace hplax {

Rat hankel_shifted(const std::vector<Rat>& moments, int n, int k) {
  if (n < 0 || k < 0) throw RangeError("negative Hankel index");
  if (n == 0) return Rat(1);
  const int need = 2 * n + k - 1;
  if (static_cast<int>(moments.size()) < need) {
    throw TruncationError("Hankel determinant S_" + std::to_string(n) + "^(" + std::to_string(k) + ") needs " +
                          std::to_string(need) + " moments");
  }
  RatMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h(i, j) = moments[static_cast<std::size_t>(k + i + j)];
  }
  return det_exact(h);
}

namespace {

class HankelCache {
 public:
  explicit HankelCache(const std::vector<Rat>& s) : s_(s) {}
  const Rat& operator()(int n, int k) {
    auto [it, inserted] = memo_.try_emplace({n, k});
    if (inserted) it->second = hankel_shifted(s_, n, k);
    return it->second;
  }

 private:
  const std::vector<Rat>& s_;
  std::map<std::pair<int, int>, Rat> memo_;
};

QdPair qd_from(HankelCache& S, int n, int k) {
  const Rat dv = S(n, k + 1) * S(n + 1, k);
  const Rat dw = S(n + 1, k) * S(n, k + 2);
  if (is_zero(dv) || is_zero(dw)) {
    throw DegeneracyError(n, "vanishing Hankel denominator for V, W at k = " + std::to_string(k));
  }
  return {S(n + 1, k + 1) * S(n, k) / dv, S(n + 1, k + 1) * S(n, k + 1) / dw};
}

}  // namespace

QdPair qd_vw(const std::vector<Rat>& moments, int n, int k) {
  HankelCache S(moments);
  return qd_from(S, n, k);
}

QdField qd_field(const std::vector<Rat>& moments, int N, int K) {
  QdField out{moments, RatGrid(N + 1, K + 1), RatGrid(N + 1, K + 1)};
  HankelCache S(out.moments);
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= K; ++k) {
      QdPair q = qd_from(S, n, k);
      out.V.set(n, k, q.V);
      out.W.set(n, k, q.W);
    }
  }
  return out;
}

Transition2 transition_2x2(const QdField& f, int n, int k) {
  const Poly x = Poly::monomial(1);
  const Rat& v = f.V.at(n, k);
  const Rat& w = f.W.at(n, k);
  Transition2 t{MatPoly(2), MatPoly(2), x};
  t.L(0, 0) = Poly::constant(-v);
  t.L(0, 1) = x;
  t.L(1, 0) = Poly::constant(-v);
  t.L(1, 1) = x + Poly::constant(w - f.V.at(n, k + 1));
  t.M_num(0, 1) = x;
  t.M_num(1, 0) = Poly::constant(-v);
  t.M_num(1, 1) = x + Poly::constant(w);
  return t;
}

Transition2 transition_2x2(const std::vector<Rat>& moments, int n, int k) {
  return transition_2x2(qd_field(moments, n, k + 1), n, k);
}

MatPoly zcc2_residual(const QdField& f, int n, int k) {
  const Transition2 here = transition_2x2(f, n, k);
  const Transition2 up = transition_2x2(f, n, k + 1);
  const Transition2 next = transition_2x2(f, n + 1, k);
  return up.L * here.M_num - next.M_num * here.L;
}

MatPoly zcc2_residual(const std::vector<Rat>& moments, int n, int k) {
  return zcc2_residual(qd_field(moments, n + 1, k + 2), n, k);
}

Poly monic_orthogonal(const std::vector<Rat>& s, int n) {
  if (n == 0) return Poly::constant(1);
  if (static_cast<int>(s.size()) < 2 * n) {
    throw TruncationError("orthogonal polynomial of degree " + std::to_string(n) + " needs " +
                          std::to_string(2 * n) + " moments");
  }
  RatMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::vector<Rat> rhs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) h(k, i) = s[static_cast<std::size_t>(k + i)];
    rhs[static_cast<std::size_t>(k)] = -s[static_cast<std::size_t>(k + n)];
  }
  auto sol = solve_exact(h, rhs);
  if (!sol) throw DegeneracyError(n, "singular Hankel matrix");
  sol->push_back(Rat(1));
  return Poly(std::move(*sol));
}

std::vector<Poly> three_term_polys(const JFraction& j, int upto) {
  if (upto > static_cast<int>(j.c.size()) || (upto > 1 && upto - 1 > static_cast<int>(j.a.size()))) {
    throw RangeError("three-term recurrence to degree " + std::to_string(upto) + " needs more coefficients");
  }
  const Poly x = Poly::monomial(1);
  std::vector<Poly> out{Poly::constant(1)};
  for (int k = 0; k < upto; ++k) {
    Poly next = (x - Poly::constant(j.c[static_cast<std::size_t>(k)])) * out.back();
    if (k >= 1) next -= j.a[static_cast<std::size_t>(k - 1)] * out[static_cast<std::size_t>(k - 1)];
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Poly> three_term_check(const JFraction& j, int upto) {
  if (upto > static_cast<int>(j.c.size()) || (upto > 1 && upto - 1 > static_cast<int>(j.a.size()))) {
    throw RangeError("three-term check to degree " + std::to_string(upto) + " needs more coefficients");
  }
  const std::vector<Rat> s = jfraction_to_moments(j, static_cast<std::size_t>(2 * upto));
  const Poly x = Poly::monomial(1);
  std::vector<Poly> pi;
  for (int k = 0; k <= upto; ++k) pi.push_back(monic_orthogonal(s, k));
  std::vector<Poly> residuals;
  for (int k = 0; k < upto; ++k) {
    Poly rhs = (x - Poly::constant(j.c[static_cast<std::size_t>(k)])) * pi[static_cast<std::size_t>(k)];
    if (k >= 1) rhs -= j.a[static_cast<std::size_t>(k - 1)] * pi[static_cast<std::size_t>(k - 1)];
    residuals.push_back(pi[static_cast<std::size_t>(k + 1)] - rhs);
  }
  return residuals;
}

RationalFunction make_rational(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  const Poly g = gcd(num, den);
  Poly n = divmod(num, g).first;
  Poly d = divmod(den, g).first;
  const Rat lead = d.leading();
  return {n * (1 / lead), d * (1 / lead)};
}

RationalFunction cf_tail_eval(const JFraction& j, int depth) {
  if (depth < 0 || depth >= static_cast<int>(j.c.size()) || depth > static_cast<int>(j.a.size())) {
    throw DegeneracyError(depth, "continued fraction deeper than the available coefficients");
  }
  const Poly x = Poly::monomial(1);
  Poly num = Poly::constant(-1);
  Poly den = x - Poly::constant(j.c[0]);
  for (int k = 1; k <= depth; ++k) {
    const Rat& a = j.a[static_cast<std::size_t>(k - 1)];
    if (is_zero(a)) throw DegeneracyError(k, "vanishing continued fraction coefficient");
    Poly next_den = (x - Poly::constant(j.c[static_cast<std::size_t>(k)])) * den + a * num;
    num = -den;
    den = std::move(next_den);
  }
  return make_rational(num, den);
}

}  // namespace hplax
