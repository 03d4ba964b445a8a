#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hplax/grid.hpp"
#include "hplax/hptable.hpp"
#include "hplax/laurent.hpp"
#include "hplax/matpoly.hpp"
#include "hplax/nnrr.hpp"

namespace hplax {

/// h1_{n,m} = sum_i p_i s_{1,n+i}, h2_{n,m} = sum_i p_i s_{2,m+i} for P_{n,m}.
struct NormalizationGrid {
  NormalizationGrid() = default;
  NormalizationGrid(int N, int M) : N(N), M(M), h1(N + 1, M + 1), h2(N + 1, M + 1) {}

  int N = 0;
  int M = 0;
  RatGrid h1, h2;
};

/// A zero h1_{n,m} (h2_{n,m}) means S_{n+1,m} (S_{n,m+1}) vanishes: NotNormal there.
NormalizationGrid normalization_grid(const HPTable& table, int N, int M);

/// L_{n,m} = [[x - c, alpha2, alpha3], [alpha4_{n+1,m}, 0, 0], [alpha5_{n+1,m}, 0, 1]]
/// M_{n,m} = [[x - d, alpha2, alpha3], [alpha4_{n,m+1}, 1, 0], [alpha5_{n,m+1}, 0, 0]]
/// with alpha2 = a h1_{n-1,m}, alpha4 = -1/h1_{n-1,m} (alpha2 = h1_{0,m},
/// alpha4 = 0 on n = 0) and alpha3, alpha5 likewise from h2 in m.
struct TransitionPair {
  int n = 0;
  int m = 0;
  MatPoly L, M;
  Rat alpha1, alpha2, alpha3, alpha4, alpha5, beta1;
};

/// alpha values at (n, m) from the field and the norms.
struct Alphas {
  Rat alpha2, alpha3, alpha4, alpha5;
};
Alphas alphas_at(const RecurrenceField& field, const NormalizationGrid& norms, int n, int m);

/// Needs the field at (n, m) and norms up to (n+1, m+1).
TransitionPair build_transition(const RecurrenceField& field, const NormalizationGrid& norms, int n, int m);

/// L_{n,m+1} M_{n,m} - M_{n+1,m} L_{n,m}.
MatPoly zcc_residual(const TransitionPair& at, const TransitionPair& n_next, const TransitionPair& m_next);

enum class Which { L, M };
Poly det_transition(const TransitionPair& pair, Which which);

/// Entry (r, c) of Y_{n,m}: polynomial part plus Cauchy-transform tail.
using WaveMatrix = std::array<std::array<LaurentSeries, 3>, 3>;

/// Rows: (P, R1(P), R2(P)) for P_{n,m}, -P_{n-1,m}/h1_{n-1,m} and -P_{n,m-1}/h2_{n,m-1};
/// rows 2 and 3 are (0,-1,0) and (0,0,-1) on n = 0 and m = 0.
WaveMatrix wave_matrix(const HPTable& table, const LaurentTail& f1, const LaurentTail& f2, int n, int m);

/// Matrix polynomial times wave matrix, entrywise in series arithmetic.
WaveMatrix apply(const MatPoly& t, const WaveMatrix& y);

/// Entrywise equality to the common truncation order.
bool agree_to_common_order(const WaveMatrix& lhs, const WaveMatrix& rhs);

/// Transition pairs for every (n, m) in 0..N x 0..M.
class TransitionGrid {
 public:
  TransitionGrid() = default;
  TransitionGrid(const RecurrenceField& field, const NormalizationGrid& norms, int N, int M);

  int N() const noexcept { return pairs_.rows() - 1; }
  int M() const noexcept { return pairs_.cols() - 1; }
  const TransitionPair& at(int n, int m) const { return pairs_.at(n, m); }
  bool has(int n, int m) const { return pairs_.has(n, m); }

 private:
  Grid<TransitionPair> pairs_;
};

/// Builds field and norms from the table and every pair on 0..N x 0..M.
TransitionGrid transition_grid(const HPTable& table, int N, int M);

enum class Step { NPlus, NMinus, MPlus, MMinus };

/// Ordered product of transition matrices along a lattice path from (0, 0);
/// backward steps use adj/det. RangeError if a step leaves the grid.
MatPoly path_transport(const TransitionGrid& grid, const std::vector<Step>& path);

/// Quadrant representative (|n|, |m|) for wave-function lookup.
std::pair<int, int> reflect_index(int n, int m);

}  // namespace hplax
