#include <gtest/gtest.h>

#include "hplax/classical.hpp"
#include "hplax/errors.hpp"
#include "support/systems.hpp"

using namespace hplax;

namespace {

Rat q(long p, long d = 1) { return make_rat(p, d); }

// Gram-Schmidt on 1, x, x^2, ... under the moment functional.
std::vector<Poly> gram_schmidt(const std::vector<Rat>& s, int upto) {
  auto pair = [&s](const Poly& f, const Poly& g) {
    Poly h = f * g;
    Rat acc = 0;
    for (int i = 0; i <= h.degree(); ++i) acc += h.coefficient(i) * s[static_cast<std::size_t>(i)];
    return acc;
  };
  std::vector<Poly> out;
  for (int k = 0; k <= upto; ++k) {
    Poly p = Poly::monomial(k);
    for (const Poly& prev : out) p -= (pair(Poly::monomial(k), prev) / pair(prev, prev)) * prev;
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(HankelShifted, Examples) {
  auto s = fixtures::lebesgue01();
  EXPECT_EQ(hankel_shifted(s, 0, 5), 1);
  EXPECT_EQ(hankel_shifted(s, 2, 0), q(1, 12));
  EXPECT_EQ(hankel_shifted(s, 1, 1), q(1, 2));
  EXPECT_THROW(hankel_shifted(fixtures::lebesgue01(3), 2, 1), TruncationError);
}

TEST(QdVw, Examples) {
  auto s = fixtures::lebesgue01();
  QdPair p = qd_vw(s, 0, 0);
  EXPECT_EQ(p.V, q(1, 2));
  EXPECT_EQ(p.W, q(1, 2));
  auto atom = measure_moments(MeasureModel::discrete({{1, 1}}), 6);
  EXPECT_EQ(qd_vw(atom, 0, 0).V, 1);
  EXPECT_THROW(qd_vw(atom, 1, 0), DegeneracyError);
}

TEST(QdVw, PositiveForLebesgueOnUnitInterval) {
  QdField f = qd_field(fixtures::lebesgue01(), 3, 3);
  for (int n = 0; n <= 3; ++n) {
    for (int k = 0; k <= 3; ++k) {
      EXPECT_GT(f.V.at(n, k), 0);
      EXPECT_GT(f.W.at(n, k), 0);
    }
  }
}

TEST(Transition2x2, Examples) {
  auto s = fixtures::lebesgue01();
  Transition2 t = transition_2x2(s, 0, 0);
  EXPECT_EQ(t.L(0, 0), Poly::constant(q(-1, 2)));
  EXPECT_EQ(t.L(0, 1), Poly::monomial(1));
  EXPECT_TRUE(t.M_num(0, 0).is_zero());
  EXPECT_EQ(t.M_den, Poly::monomial(1));

  auto atom = measure_moments(MeasureModel::discrete({{1, 1}}), 6);
  QdField af{atom, RatGrid(1, 2), RatGrid(1, 2)};
  for (int k = 0; k <= 1; ++k) {
    af.V.set(0, k, qd_vw(atom, 0, k).V);
    af.W.set(0, k, qd_vw(atom, 0, k).W);
  }
  EXPECT_EQ(af.V.at(0, 0), af.W.at(0, 0));
  EXPECT_EQ(transition_2x2(af, 0, 0).L(1, 1), Poly::monomial(1));
}

TEST(Zcc2Residual, VanishesOnLebesgueWindow) {
  auto s = fixtures::lebesgue01();
  EXPECT_TRUE(zcc2_residual(s, 0, 0).is_zero());
  QdField f = qd_field(s, 3, 4);
  for (int n = 0; n <= 2; ++n) {
    for (int k = 0; k <= 2; ++k) EXPECT_TRUE(zcc2_residual(f, n, k).is_zero()) << n << "," << k;
  }
}

TEST(Zcc2Residual, VanishesForOtherMeasuresOnHalfLine) {
  for (const MeasureModel& mu : {MeasureModel::interval(q(1, 2), 3),
                                 MeasureModel::discrete({{1, 2}, {2, 1}, {5, q(1, 3)}, {7, 1}, {9, 4}})}) {
    QdField f = qd_field(measure_moments(mu, 30), 3, 4);
    for (int n = 0; n <= 2; ++n) {
      for (int k = 0; k <= 2; ++k) EXPECT_TRUE(zcc2_residual(f, n, k).is_zero()) << n << "," << k;
    }
  }
}

TEST(Zcc2Residual, PerturbationIsDetected) {
  const QdField clean = qd_field(fixtures::lebesgue01(), 3, 4);
  QdField f = clean;
  f.W.set(0, 0, f.W.at(0, 0) + 1);
  EXPECT_FALSE(zcc2_residual(f, 0, 0).is_zero());
  f = clean;
  f.V.set(1, 0, f.V.at(1, 0) + 1);
  EXPECT_FALSE(zcc2_residual(f, 0, 0).is_zero());
  f = clean;
  f.V.set(1, 1, f.V.at(1, 1) + 1);
  EXPECT_FALSE(zcc2_residual(f, 1, 0).is_zero());
}

TEST(Zcc2Residual, CornerVOnlyScalesABracket) {
  // entry (1,0) is V_n^{(k)} times a bracket free of V_n^{(k)}, and no other
  // entry reads it, so V_0^{(0)} + 1 leaves every stencil at zero
  QdField f = qd_field(fixtures::lebesgue01(), 3, 4);
  f.V.set(0, 0, f.V.at(0, 0) + 1);
  for (int n = 0; n <= 2; ++n) {
    for (int k = 0; k <= 2; ++k) EXPECT_TRUE(zcc2_residual(f, n, k).is_zero()) << n << "," << k;
  }
}

TEST(ThreeTerm, Examples) {
  JFraction leb = moments_to_jfraction(fixtures::lebesgue01(), 4);
  auto pi = three_term_polys(leb, 2);
  EXPECT_EQ(pi[1], Poly({q(-1, 2), 1}));
  EXPECT_EQ(pi[2], Poly({q(1, 6), -1, 1}));
  for (const Poly& r : three_term_check(leb, 3)) EXPECT_TRUE(r.is_zero());

  JFraction atom{{q(5, 3)}, {}, 1};
  EXPECT_EQ(three_term_polys(atom, 1)[1], Poly({q(-5, 3), 1}));

  JFraction left = moments_to_jfraction(measure_moments(MeasureModel::interval(-2, -1), 4), 2);
  EXPECT_EQ(three_term_polys(left, 1)[1], Poly({q(3, 2), 1}));
}

TEST(ThreeTerm, MatchesGramSchmidt) {
  for (const MeasureModel& mu : {MeasureModel::interval(0, 1), MeasureModel::interval(-2, -1),
                                 MeasureModel::discrete({{0, 1}, {1, 2}, {3, q(1, 2)}, {-2, q(1, 5)}, {4, 1}})}) {
    auto s = measure_moments(mu, 12);
    JFraction j = moments_to_jfraction(s, 5);
    auto pi = three_term_polys(j, 4);
    auto gs = gram_schmidt(s, 4);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(pi[static_cast<std::size_t>(k)], gs[static_cast<std::size_t>(k)]);
    for (const Poly& r : three_term_check(j, 4)) EXPECT_TRUE(r.is_zero());
  }
}

TEST(JFraction, RoundTripToDepthFive) {
  auto s = fixtures::lebesgue01(10);
  JFraction j = moments_to_jfraction(s, 5);
  EXPECT_EQ(j.c.size(), 5u);
  EXPECT_EQ(jfraction_to_moments(j, 10), s);
}

TEST(CfTailEval, Examples) {
  JFraction leb = moments_to_jfraction(fixtures::lebesgue01(), 6);
  RationalFunction d0 = cf_tail_eval(leb, 0);
  EXPECT_EQ(d0.num, Poly::constant(-1));
  EXPECT_EQ(d0.den, Poly({q(-1, 2), 1}));

  auto pi = three_term_polys(leb, 2);
  EXPECT_EQ(cf_tail_eval(leb, 1), make_rational(-pi[1], pi[2]));

  JFraction atom = moments_to_jfraction(measure_moments(MeasureModel::discrete({{2, 1}}), 2), 1);
  EXPECT_THROW(cf_tail_eval(atom, 1), DegeneracyError);
  EXPECT_THROW(cf_tail_eval(JFraction{{2, 2}, {0}, 1}, 1), DegeneracyError);
}

TEST(CfTailEval, EqualsRatioOfOrthogonalPolynomials) {
  for (const MeasureModel& mu : {MeasureModel::interval(0, 1), MeasureModel::interval(q(-1, 3), q(7, 5))}) {
    auto s = measure_moments(mu, 14);
    JFraction j = moments_to_jfraction(s, 6);
    for (int depth = 0; depth <= 4; ++depth) {
      // independent route: Hankel-solve orthogonal polynomials
      RationalFunction expected = make_rational(-monic_orthogonal(s, depth), monic_orthogonal(s, depth + 1));
      EXPECT_EQ(cf_tail_eval(j, depth), expected) << "depth " << depth;
    }
  }
}

TEST(MakeRational, ReducesAndNormalizes) {
  Poly x = Poly::monomial(1);
  RationalFunction r = make_rational(Rat(2) * (x - Poly::constant(1)), Rat(4) * (x - Poly::constant(1)) * x);
  EXPECT_EQ(r.num, Poly::constant(q(1, 2)));
  EXPECT_EQ(r.den, x);
}
