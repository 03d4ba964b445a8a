#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hplax/errors.hpp"
#include "hplax/laurent.hpp"
#include "hplax/linalg.hpp"
#include "hplax/matpoly.hpp"
#include "hplax/poly.hpp"

using namespace hplax;

namespace {

// Leibniz expansion over all permutations.
Rat leibniz_det(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rat random_rat(std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Rat r;
  do {
    r = make_rat(num(rng), den(rng));
  } while (!allow_zero && is_zero(r));
  return r;
}

Poly random_poly(std::mt19937& rng, int degree) {
  std::vector<Rat> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_rat(rng));
  c.push_back(random_rat(rng, false));
  return Poly(std::move(c));
}

}  // namespace

TEST(Rat, CanonicalForm) {
  EXPECT_EQ(make_rat(6, -4), make_rat(-3, 2));
  EXPECT_EQ(to_string(make_rat(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rat(5)), "5");
  EXPECT_EQ(parse_rat("-14/21"), make_rat(-2, 3));
  EXPECT_EQ(parse_rat("7"), Rat(7));
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
  EXPECT_THROW(make_rat(1, 0), std::invalid_argument);
}

TEST(Rat, AdditionIsExact) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Rat x = random_rat(rng), y = random_rat(rng);
    EXPECT_EQ(Rat(x + y - y), x);
  }
}

TEST(DetExact, HandValues) {
  EXPECT_EQ(det_exact(RatMatrix::from_rows({{1, 0}, {0, 1}})), 1);
  EXPECT_EQ(det_exact(RatMatrix::from_rows({{1, make_rat(1, 2)}, {make_rat(1, 2), make_rat(1, 3)}})), make_rat(1, 12));
  EXPECT_EQ(det_exact(RatMatrix::from_rows({{1, 1}, {make_rat(-3, 2), make_rat(3, 2)}})), 3);
  EXPECT_EQ(det_exact(RatMatrix()), 1);
}

TEST(DetExact, RejectsNonSquare) {
  EXPECT_THROW(det_exact(RatMatrix(2, 3)), DimensionError);
  EXPECT_THROW(RatMatrix::from_rows({{1, 2}, {3}}), DimensionError);
}

TEST(DetExact, AgreesWithLeibnizOnRandomMatrices) {
  std::mt19937 rng(42);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 60; ++t) {
      RatMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rat(rng);
      }
      // Force zero pivots now and then.
      if (t % 5 == 0) a(0, 0) = 0;
      if (t % 7 == 0 && n > 1) {
        for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = 2 * a(0, j);
      }
      EXPECT_EQ(det_exact(a), leibniz_det(a)) << "n=" << n << " t=" << t;
    }
  }
}

TEST(SolveExact, SolvesAndDetectsSingular) {
  auto a = RatMatrix::from_rows({{0, 1}, {2, 3}});
  auto x = solve_exact(a, {5, 7});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], -4);
  EXPECT_EQ((*x)[1], 5);
  EXPECT_FALSE(solve_exact(RatMatrix::from_rows({{1, 2}, {2, 4}}), {1, 1}));
}

TEST(Poly, ArithmeticAndNormalForm) {
  Poly p{1, 0, 0};
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  Poly x = Poly::monomial(1);
  Poly q = (x - Poly::constant(1)) * (x + Poly::constant(1));
  EXPECT_EQ(q, Poly({-1, 0, 1}));
  EXPECT_EQ(q.to_string(), "x^2 - 1");
  EXPECT_EQ(Poly::linear(make_rat(1, 2)).evaluate(2), make_rat(3, 2));
  EXPECT_TRUE(q.is_monic());
}

TEST(Poly, DivmodReconstructs) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 2);
    auto [quot, rem] = divmod(a, b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
}

TEST(Poly, GcdIsMonicCommonFactor) {
  Poly x = Poly::monomial(1);
  Poly f = x - Poly::constant(2);
  Poly g = gcd(f * (x + Poly::constant(3)), Rat(5) * f * (x - Poly::constant(7)));
  EXPECT_EQ(g, f);
}

TEST(SeriesFromMoments, Examples) {
  EXPECT_EQ(series_from_moments({}).order(), 0u);
  std::vector<Rat> one{1};
  EXPECT_EQ(series_from_moments(one).order(), 1u);
  std::vector<Rat> s{1, make_rat(-3, 2), make_rat(7, 3)};
  LaurentTail f = series_from_moments(s);
  EXPECT_EQ(f[1], make_rat(-3, 2));
  EXPECT_EQ(f.order(), 3u);
  EXPECT_THROW(f[3], TruncationError);
}

TEST(PolyFromSeriesProduct, Examples) {
  std::vector<Rat> one{1};
  auto r = poly_from_series_product(series_from_moments(one), Poly::monomial(1));
  EXPECT_EQ(r.polynomial_part, Poly::constant(1));
  EXPECT_EQ(r.tail.order(), 0u);

  std::vector<Rat> s{1, make_rat(1, 2)};
  auto f = series_from_moments(s);
  auto same = poly_from_series_product(f, Poly::constant(1));
  EXPECT_TRUE(same.polynomial_part.is_zero());
  EXPECT_EQ(same.tail, f);

  std::vector<Rat> leb{1, make_rat(1, 2), make_rat(1, 3), make_rat(1, 4)};
  auto g = poly_from_series_product(series_from_moments(leb), Poly::linear(make_rat(1, 2)));
  EXPECT_EQ(g.polynomial_part, Poly::constant(1));
  EXPECT_EQ(g.tail[0], 0);
  EXPECT_EQ(g.tail[1], make_rat(1, 12));
  EXPECT_EQ(g.tail.order(), 3u);
}

TEST(PolyFromSeriesProduct, TruncationIsLoud) {
  std::vector<Rat> s{1};
  EXPECT_THROW(poly_from_series_product(series_from_moments(s), Poly::monomial(2)), TruncationError);
}

TEST(PolyFromSeriesProduct, ProductOfFactorsRecombines) {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rat> s;
    for (int k = 0; k < 12; ++k) s.push_back(random_rat(rng));
    LaurentTail f = series_from_moments(s);
    Poly p = random_poly(rng, 2), q = random_poly(rng, 3);
    auto direct = poly_from_series_product(f, p * q);
    auto inner = poly_from_series_product(f, p);
    auto twice = multiply(q, inner);
    EXPECT_TRUE(agree_to_common_order(direct, twice));
    EXPECT_EQ(direct.tail.order(), twice.tail.order());
  }
}

TEST(Reciprocal, GeometricSeries) {
  // 1/(z + 3/2) = 1/z - (3/2)/z^2 + (9/4)/z^3
  LaurentTail r = reciprocal_of_shifted(make_rat(-3, 2), LaurentTail::zero(1), 3);
  EXPECT_EQ(r, LaurentTail({1, make_rat(-3, 2), make_rat(9, 4)}));
  EXPECT_THROW(reciprocal_of_shifted(0, LaurentTail::zero(0), 3), TruncationError);
}

TEST(Reciprocal, InvertsTail) {
  std::vector<Rat> s{2, 1, make_rat(1, 3), 5, -1, 4};
  LaurentTail t = series_from_moments(s);
  LaurentSeries inv = reciprocal(t);
  // t * (1/t) = 1 + O(z^{-k})
  LaurentSeries prod = multiply(inv.polynomial_part, {Poly(), t});
  LaurentTail cross = inv.tail * t;
  LaurentSeries one{prod.polynomial_part, prod.tail + cross};
  EXPECT_EQ(one.polynomial_part, Poly::constant(1));
  for (std::size_t k = 0; k < one.tail.order(); ++k) EXPECT_EQ(one.tail[k], 0) << k;
  EXPECT_THROW(reciprocal(LaurentTail({0, 1, 1})), DegeneracyError);
}

TEST(MatPoly, DeterminantAndAdjugate) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    MatPoly a(3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = random_poly(rng, t % 2);
    }
    MatPoly lhs = a * a.adjugate();
    MatPoly rhs(3);
    Poly det = a.determinant();
    for (std::size_t i = 0; i < 3; ++i) rhs(i, i) = det;
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(a.adjugate() * a, rhs);
  }
  EXPECT_TRUE((MatPoly::identity(2) - MatPoly::identity(2)).is_zero());
  EXPECT_EQ(MatPoly::identity(3).max_degree(), 0);
  EXPECT_THROW(MatPoly(4), DimensionError);
  EXPECT_THROW(MatPoly::identity(2) * MatPoly::identity(3), DimensionError);
}
