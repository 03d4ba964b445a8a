#include "hplax/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "hplax/errors.hpp"

namespace hplax {

MeasureModel MeasureModel::discrete(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("discrete measure needs at least one atom");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i].node == atoms[j].node) {
        throw std::invalid_argument("repeated node " + to_string(atoms[i].node));
      }
    }
  }
  return MeasureModel(DiscreteMeasure{std::move(atoms)});
}

MeasureModel MeasureModel::interval(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi");
  return MeasureModel(IntervalMeasure{lo, hi});
}

std::pair<Rat, Rat> MeasureModel::hull() const {
  if (!is_discrete()) return {as_interval().lo, as_interval().hi};
  const auto& atoms = as_discrete().atoms;
  auto [lo, hi] = std::minmax_element(atoms.begin(), atoms.end(),
                                      [](const Atom& x, const Atom& y) { return x.node < y.node; });
  return {lo->node, hi->node};
}

std::vector<Rat> measure_moments(const MeasureModel& mu, std::size_t count) {
  std::vector<Rat> out(count);
  if (mu.is_discrete()) {
    for (const auto& atom : mu.as_discrete().atoms) {
      Rat power = atom.weight;
      for (std::size_t k = 0; k < count; ++k) {
        out[k] += power;
        power *= atom.node;
      }
    }
    return out;
  }
  const auto& iv = mu.as_interval();
  Rat hi_pow = iv.hi, lo_pow = iv.lo;
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = (hi_pow - lo_pow) / Rat(static_cast<long>(k + 1));
    hi_pow *= iv.hi;
    lo_pow *= iv.lo;
  }
  return out;
}

static bool hulls_disjoint(const MeasureModel& x, const MeasureModel& y) {
  auto [xlo, xhi] = x.hull();
  auto [ylo, yhi] = y.hull();
  return xhi < ylo || yhi < xlo;
}

MomentSystem make_angelesco(const MeasureModel& mu1, const MeasureModel& mu2, std::size_t count) {
  if (!hulls_disjoint(mu1, mu2)) throw DisjointnessError("Angelesco supports overlap");
  return {measure_moments(mu1, count), measure_moments(mu2, count), "angelesco"};
}

MomentSystem make_nikishin(const MeasureModel& sigma1, const MeasureModel& sigma2, std::size_t count) {
  if (!sigma1.is_discrete() || !sigma2.is_discrete()) {
    throw std::invalid_argument("Nikishin generation needs discrete component measures");
  }
  const auto& outer = sigma1.as_discrete().atoms;
  const auto& inner = sigma2.as_discrete().atoms;
  for (const auto& x : outer) {
    for (const auto& t : inner) {
      if (x.node == t.node) throw PoleError("second measure has an atom at node " + to_string(x.node));
    }
  }
  if (!hulls_disjoint(sigma1, sigma2)) throw DisjointnessError("Nikishin supports overlap");

  std::vector<Atom> weighted;
  weighted.reserve(outer.size());
  for (const auto& x : outer) {
    Rat cauchy = 0;
    for (const auto& t : inner) cauchy += t.weight / (x.node - t.node);
    weighted.push_back({x.node, x.weight * cauchy});
  }
  return {measure_moments(sigma1, count), measure_moments(MeasureModel::discrete(std::move(weighted)), count),
          "nikishin"};
}

Rat apply_functional(const std::vector<Rat>& s, const Poly& p) {
  if (p.degree() >= static_cast<int>(s.size())) {
    throw TruncationError("moment functional needs s_" + std::to_string(p.degree()) + ", only " +
                          std::to_string(s.size()) + " moments");
  }
  Rat acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * s[i];
  return acc;
}

JFraction moments_to_jfraction(const std::vector<Rat>& s, std::size_t depth) {
  if (s.size() < 2 * depth) {
    throw TruncationError("J-fraction of depth " + std::to_string(depth) + " needs " +
                          std::to_string(2 * depth) + " moments");
  }
  JFraction out;
  out.s0 = s.empty() ? Rat(0) : s[0];
  Poly prev, cur = Poly::constant(1);
  Rat prev_norm = 0;
  const Poly x = Poly::monomial(1);
  for (std::size_t n = 0; n < depth; ++n) {
    const Poly sq = cur * cur;
    const Rat norm = apply_functional(s, sq);
    if (is_zero(norm)) {
      throw DegeneracyError(static_cast<int>(n), "vanishing Hankel determinant in the Stieltjes procedure");
    }
    const Rat c = apply_functional(s, x * sq) / norm;
    out.c.push_back(c);
    Rat a = 0;
    if (n > 0) {
      a = norm / prev_norm;
      out.a.push_back(a);
    }
    Poly next = (x - Poly::constant(c)) * cur - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
    prev_norm = norm;
  }
  return out;
}

std::vector<Rat> jfraction_to_moments(const JFraction& j, std::size_t count) {
  std::vector<Rat> c = j.c;
  if (j.a.size() == c.size()) c.push_back(0);
  if (j.a.size() + 1 != c.size()) throw DimensionError("J-fraction needs len a = len c - 1 or len c");
  for (const auto& a : j.a) {
    if (is_zero(a)) throw DegeneracyError(0, "J-fraction with a vanishing a coefficient");
  }
  const std::size_t size = c.size();
  // v = T^k e_0 with T tridiagonal: diagonal c, superdiagonal 1, subdiagonal a.
  std::vector<Rat> v(size), next(size);
  if (size > 0) v[0] = 1;
  std::vector<Rat> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = j.s0 * (size > 0 ? v[0] : Rat(k == 0 ? 1 : 0));
    for (std::size_t i = 0; i < size; ++i) {
      Rat acc = c[i] * v[i];
      if (i + 1 < size) acc += v[i + 1];
      if (i > 0) acc += j.a[i - 1] * v[i - 1];
      next[i] = std::move(acc);
    }
    std::swap(v, next);
  }
  return out;
}

}  // namespace hplax
