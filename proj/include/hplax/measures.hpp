#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hplax/poly.hpp"
#include "hplax/rat.hpp"

namespace hplax {

struct Atom {
  Rat node;
  Rat weight;
};

/// Finite sum of weighted point masses. Nodes are pairwise distinct.
struct DiscreteMeasure {
  std::vector<Atom> atoms;
};

/// Lebesgue measure on [lo, hi], lo < hi.
struct IntervalMeasure {
  Rat lo;
  Rat hi;
};

/// Exactly representable measure: atoms or a Lebesgue interval.
class MeasureModel {
 public:
  /// Throws std::invalid_argument on repeated nodes or an empty interval.
  static MeasureModel discrete(std::vector<Atom> atoms);
  static MeasureModel interval(const Rat& lo, const Rat& hi);

  bool is_discrete() const noexcept { return std::holds_alternative<DiscreteMeasure>(data_); }
  const DiscreteMeasure& as_discrete() const { return std::get<DiscreteMeasure>(data_); }
  const IntervalMeasure& as_interval() const { return std::get<IntervalMeasure>(data_); }

  /// Smallest closed interval containing the support.
  std::pair<Rat, Rat> hull() const;

 private:
  explicit MeasureModel(std::variant<DiscreteMeasure, IntervalMeasure> data) : data_(std::move(data)) {}
  std::variant<DiscreteMeasure, IntervalMeasure> data_;
};

/// Two moment sequences of equal length K.
struct MomentSystem {
  std::vector<Rat> s1;
  std::vector<Rat> s2;
  std::string label;

  std::size_t order() const noexcept { return std::min(s1.size(), s2.size()); }
  friend bool operator==(const MomentSystem&, const MomentSystem&) = default;
};

/// 1/(z - c_0 - a_1/(z - c_1 - a_2/(...))) scaled by s0.
/// a[i] holds a_{i+1}.
struct JFraction {
  std::vector<Rat> c;
  std::vector<Rat> a;
  Rat s0;

  friend bool operator==(const JFraction&, const JFraction&) = default;
};

/// int x^k dmu for k < count.
std::vector<Rat> measure_moments(const MeasureModel& mu, std::size_t count);

/// Moments of two measures whose convex hulls are disjoint (DisjointnessError otherwise).
MomentSystem make_angelesco(const MeasureModel& mu1, const MeasureModel& mu2, std::size_t count);

/// s1 = moments of sigma1; s2 = moments of hat(sigma2)(x) dsigma1(x), where
/// hat(sigma2)(x) = sum_i w_i / (x - t_i). PoleError on a shared node,
/// DisjointnessError when the hulls overlap.
MomentSystem make_nikishin(const MeasureModel& sigma1, const MeasureModel& sigma2, std::size_t count);

/// Linear functional p -> sum_i p_i s_i. TruncationError if deg p >= s.size().
Rat apply_functional(const std::vector<Rat>& s, const Poly& p);

/// Monic Stieltjes procedure: c_0..c_{depth-1} and a_1..a_{depth-1}.
/// Uses s_0..s_{2 depth - 1}. DegeneracyError names the first depth whose
/// norm vanishes.
JFraction moments_to_jfraction(const std::vector<Rat>& s, std::size_t depth);

/// s_k = s0 * (T^k)_{00} for the monic tridiagonal T built from the fraction.
std::vector<Rat> jfraction_to_moments(const JFraction& j, std::size_t count);

}  // namespace hplax
