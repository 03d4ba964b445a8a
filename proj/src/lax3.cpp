#include "hplax/lax3.hpp"

#include <cstdlib>
#include <string>

#include "hplax/errors.hpp"
#include "hplax/measures.hpp"

namespace hplax {

namespace {

std::string at_index(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

Rat pairing(const std::vector<Rat>& s, const Poly& p, int shift) {
  Rat acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t k = static_cast<std::size_t>(shift) + i;
    if (k >= s.size()) throw TruncationError("normalization needs moment " + std::to_string(k));
    acc += c[i] * s[k];
  }
  return acc;
}

Rat neg_inverse(const Rat& h, int n, int m) {
  if (is_zero(h)) throw IntegrityError("zero normalization at " + at_index(n, m));
  return -1 / h;
}

// alpha4 at (n, m): -1/h1_{n-1,m}, zero on n = 0.
Rat alpha4_at(const NormalizationGrid& norms, int n, int m) {
  return n >= 1 ? neg_inverse(norms.h1.at(n - 1, m), n - 1, m) : Rat(0);
}

// alpha5 at (n, m): -1/h2_{n,m-1}, zero on m = 0.
Rat alpha5_at(const NormalizationGrid& norms, int n, int m) {
  return m >= 1 ? neg_inverse(norms.h2.at(n, m - 1), n, m - 1) : Rat(0);
}

Poly constant(const Rat& v) { return Poly::constant(v); }

}  // namespace

NormalizationGrid normalization_grid(const HPTable& table, int N, int M) {
  NormalizationGrid out(N, M);
  const auto& ms = table.moments();
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= M; ++m) {
      const Poly& p = table.poly(n, m);
      Rat h1 = pairing(ms.s1, p, n);
      Rat h2 = pairing(ms.s2, p, m);
      // h1 = +-S_{n+1,m}/S_{n,m}, h2 = +-S_{n,m+1}/S_{n,m}
      if (is_zero(h1)) throw NotNormal(n + 1, m);
      if (is_zero(h2)) throw NotNormal(n, m + 1);
      out.h1.set(n, m, std::move(h1));
      out.h2.set(n, m, std::move(h2));
    }
  }
  return out;
}

Alphas alphas_at(const RecurrenceField& field, const NormalizationGrid& norms, int n, int m) {
  Alphas out;
  out.alpha2 = n >= 1 ? Rat(field.a.at(n, m) * norms.h1.at(n - 1, m)) : norms.h1.at(0, m);
  out.alpha3 = m >= 1 ? Rat(field.b.at(n, m) * norms.h2.at(n, m - 1)) : norms.h2.at(n, 0);
  out.alpha4 = alpha4_at(norms, n, m);
  out.alpha5 = alpha5_at(norms, n, m);
  return out;
}

TransitionPair build_transition(const RecurrenceField& field, const NormalizationGrid& norms, int n, int m) {
  TransitionPair t;
  t.n = n;
  t.m = m;
  const Alphas al = alphas_at(field, norms, n, m);
  t.alpha1 = -field.c.at(n, m);
  t.beta1 = -field.d.at(n, m);
  t.alpha2 = al.alpha2;
  t.alpha3 = al.alpha3;
  t.alpha4 = al.alpha4;
  t.alpha5 = al.alpha5;
  const Poly x = Poly::monomial(1);

  t.L = MatPoly(3);
  t.L(0, 0) = x + constant(t.alpha1);
  t.L(0, 1) = constant(t.alpha2);
  t.L(0, 2) = constant(t.alpha3);
  t.L(1, 0) = constant(alpha4_at(norms, n + 1, m));
  t.L(2, 0) = constant(alpha5_at(norms, n + 1, m));
  t.L(2, 2) = constant(1);

  t.M = MatPoly(3);
  t.M(0, 0) = x + constant(t.beta1);
  t.M(0, 1) = constant(t.alpha2);
  t.M(0, 2) = constant(t.alpha3);
  t.M(1, 0) = constant(alpha4_at(norms, n, m + 1));
  t.M(1, 1) = constant(1);
  t.M(2, 0) = constant(alpha5_at(norms, n, m + 1));
  return t;
}

MatPoly zcc_residual(const TransitionPair& at, const TransitionPair& n_next, const TransitionPair& m_next) {
  return m_next.L * at.M - n_next.M * at.L;
}

Poly det_transition(const TransitionPair& pair, Which which) {
  return which == Which::L ? pair.L.determinant() : pair.M.determinant();
}

WaveMatrix wave_matrix(const HPTable& table, const LaurentTail& f1, const LaurentTail& f2, int n, int m) {
  const auto& ms = table.moments();
  const std::size_t order = std::min(f1.order(), f2.order());
  auto row_of = [&](const Poly& q) {
    std::array<LaurentSeries, 3> row;
    row[0] = {q, LaurentTail::zero(order)};
    auto r1 = poly_from_series_product(f1, q);
    auto r2 = poly_from_series_product(f2, q);
    row[1] = {Poly(), std::move(r1.tail)};
    row[2] = {Poly(), std::move(r2.tail)};
    return row;
  };
  auto unit_row = [&](int col) {
    std::array<LaurentSeries, 3> row;
    for (int c = 0; c < 3; ++c) {
      row[c] = {c == col ? Poly::constant(-1) : Poly(), LaurentTail::zero(order)};
    }
    return row;
  };

  WaveMatrix y;
  y[0] = row_of(table.poly(n, m));
  if (n >= 1) {
    const Rat h = pairing(ms.s1, table.poly(n - 1, m), n - 1);
    y[1] = row_of(neg_inverse(h, n - 1, m) * table.poly(n - 1, m));
  } else {
    y[1] = unit_row(1);
  }
  if (m >= 1) {
    const Rat h = pairing(ms.s2, table.poly(n, m - 1), m - 1);
    y[2] = row_of(neg_inverse(h, n, m - 1) * table.poly(n, m - 1));
  } else {
    y[2] = unit_row(2);
  }
  return y;
}

WaveMatrix apply(const MatPoly& t, const WaveMatrix& y) {
  if (t.dim() != 3) throw DimensionError("wave matrices are 3x3");
  WaveMatrix out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      LaurentSeries acc = multiply(t(r, 0), y[0][c]);
      for (int k = 1; k < 3; ++k) acc = acc + multiply(t(r, k), y[k][c]);
      out[r][c] = std::move(acc);
    }
  }
  return out;
}

bool agree_to_common_order(const WaveMatrix& lhs, const WaveMatrix& rhs) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (!agree_to_common_order(lhs[r][c], rhs[r][c])) return false;
    }
  }
  return true;
}

TransitionGrid::TransitionGrid(const RecurrenceField& field, const NormalizationGrid& norms, int N, int M)
    : pairs_(N + 1, M + 1) {
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= M; ++m) pairs_.set(n, m, build_transition(field, norms, n, m));
  }
}

TransitionGrid transition_grid(const HPTable& table, int N, int M) {
  const RecurrenceField field = field_from_table(table, N, M);
  const NormalizationGrid norms = normalization_grid(table, N + 1, M + 1);
  return TransitionGrid(field, norms, N, M);
}

MatPoly path_transport(const TransitionGrid& grid, const std::vector<Step>& path) {
  MatPoly acc = MatPoly::identity(3);
  int n = 0, m = 0;
  auto fetch = [&](int i, int j) -> const TransitionPair& {
    if (!grid.has(i, j)) throw RangeError("path leaves the transition grid at " + at_index(i, j));
    return grid.at(i, j);
  };
  auto inverse = [](const MatPoly& t) {
    const Poly det = t.determinant();
    if (det.degree() != 0) throw IntegrityError("transition matrix without a constant nonzero determinant");
    return t.adjugate().divided_by(det.leading());
  };
  for (Step s : path) {
    switch (s) {
      case Step::NPlus:
        acc = fetch(n, m).L * acc;
        ++n;
        break;
      case Step::MPlus:
        acc = fetch(n, m).M * acc;
        ++m;
        break;
      case Step::NMinus:
        acc = inverse(fetch(n - 1, m).L) * acc;
        --n;
        break;
      case Step::MMinus:
        acc = inverse(fetch(n, m - 1).M) * acc;
        --m;
        break;
    }
  }
  return acc;
}

std::pair<int, int> reflect_index(int n, int m) { return {std::abs(n), std::abs(m)}; }

}  // namespace hplax
