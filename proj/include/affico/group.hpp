#pragma once

// The icosahedral groups I (order 60) and I_h (order 120) as exact matrix
// sets, their rotation axes, and orbits.

#include <affico/geometry.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace affico {

class PointGroup {
 public:
  PointGroup(std::string name, std::vector<Mat3G> elements)
      : name_(std::move(name)), elements_(std::move(elements)) {}

  const std::string& name() const { return name_; }
  const std::vector<Mat3G>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  std::string name_;
  std::vector<Mat3G> elements_;
};

/// Breadth-first closure of `generators` under left multiplication. The
/// identity comes first, then elements in discovery order.
inline PointGroup generate_closure(const std::vector<Mat3G>& generators, std::size_t bound = 200,
                                   std::string name = "G") {
  for (const auto& g : generators)
    if (!g.is_orthogonal()) throw std::invalid_argument("generator is not orthogonal");
  std::vector<Mat3G> elems{Mat3G::identity()};
  std::unordered_set<Mat3G, Mat3Hash> seen{elems.front()};
  std::size_t head = 0;
  while (head < elems.size()) {
    const std::size_t end = elems.size();
    std::vector<Mat3G> fresh;
    for (; head < end; ++head) {
      for (const auto& g : generators) {
        Mat3G m = g * elems[head];
        if (seen.insert(m).second) fresh.push_back(std::move(m));
      }
    }
    // ties within one BFS layer are broken by the canonical entry order
    std::sort(fresh.begin(), fresh.end(), [](const Mat3G& a, const Mat3G& b) { return canonical_less(a, b); });
    for (auto& m : fresh) {
      elems.push_back(std::move(m));
      if (elems.size() > bound) throw std::length_error("group closure exceeded bound");
    }
  }
  return {std::move(name), std::move(elems)};
}

namespace generators {

/// Cyclic coordinate permutation (x, y, z) -> (z, x, y).
inline Mat3G r3() {
  Mat3G m;
  m(0, 2) = m(1, 0) = m(2, 1) = GoldenNumber(1);
  return m;
}

/// Order-5 rotation about the (0, 1, tau) axis:
/// 1/2 [[tau-1, -tau, 1], [tau, 1, tau-1], [-1, tau-1, tau]].
inline Mat3G b5() {
  const Rational h(1, 2);
  const GoldenNumber t = GoldenNumber::tau();
  const GoldenNumber half(h);
  return Mat3G({half * (t - 1), half * -t, half, half * t, half, half * (t - 1), -half, half * (t - 1),
                half * t});
}

}  // namespace generators

/// The rotation group I.
inline const PointGroup& icosahedral_rotations() {
  static const PointGroup g = generate_closure({generators::r3(), generators::b5()}, 200, "I");
  return g;
}

/// The full icosahedral group I_h = H3.
inline const PointGroup& icosahedral_full() {
  static const PointGroup g =
      generate_closure({generators::r3(), generators::b5(), -Mat3G::identity()}, 200, "I_h");
  return g;
}

/// Smallest n > 0 with m^n = 1.
inline int element_order(const Mat3G& m, int limit = 1000) {
  const Mat3G id = Mat3G::identity();
  Mat3G p = m;
  for (int n = 1; n <= limit; ++n) {
    if (p == id) return n;
    p = p * m;
  }
  throw std::runtime_error("element order exceeds limit");
}

/// Orbit in first-seen order over the group's element order.
inline std::vector<Vec3E> orbit(const PointGroup& g, const Vec3E& v) {
  std::vector<Vec3E> out;
  std::unordered_set<Vec3E, Vec3Hash> seen;
  for (const auto& m : g.elements()) {
    Vec3E w = m * v;
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

inline std::size_t stabilizer_order(const PointGroup& g, const Vec3E& v) {
  return static_cast<std::size_t>(std::count_if(g.elements().begin(), g.elements().end(),
                                                [&](const Mat3G& m) { return m * v == v; }));
}

/// First nonzero coordinate is positive.
inline bool lex_positive(const Vec3E& v) {
  for (std::size_t i = 0; i < 3; ++i) {
    Sign s = v[i].sign();
    if (s != Sign::zero) return s == Sign::positive;
  }
  return false;
}

/// Canonical (non-normalized) vector on each axis type, in Q(tau)^3.
inline Vec3E canonical_axis_vector(int fold, const Radicand& k = Radicand::unit()) {
  const GoldenNumber t = GoldenNumber::tau();
  switch (fold) {
    case 5: return {GoldenNumber(0), GoldenNumber(1), t, k};
    case 3: return {GoldenNumber(1), GoldenNumber(1), GoldenNumber(1), k};
    case 2: return {GoldenNumber(1), GoldenNumber(0), GoldenNumber(0), k};
    default: throw std::invalid_argument("unsupported fold " + std::to_string(fold));
  }
}

/// Radicand under which the unit axis vector of the given fold is exact.
inline Radicand axis_radicand(int fold) {
  switch (fold) {
    case 5: return Radicand::two_plus_tau();
    case 3: return Radicand::three();
    case 2: return Radicand::unit();
    default: throw std::invalid_argument("unsupported fold " + std::to_string(fold));
  }
}

/// Scale factor s with canonical_axis_vector(fold) * s a unit vector, as an
/// element of Q(tau)(sqrt k) for k = axis_radicand(fold).
inline ExtNumber unit_axis_scale(int fold) {
  const Radicand k = axis_radicand(fold);
  const GoldenNumber n2 = norm2(canonical_axis_vector(fold)).p();  // 2+tau, 3, 1
  if (k.is_one()) return ExtNumber(GoldenNumber(1), k);
  return ExtNumber(GoldenNumber(0), n2.inverse(), k);  // sqrt(k) / k
}

struct Axis {
  Vec3E direction;  ///< lexicographically positive canonical vector on the axis
  Vec3E unit;       ///< unit direction in the fold's radicand
};

/// The axes of the given fold: 6 (fold 5), 10 (fold 3) or 15 (fold 2) for I / I_h.
inline std::vector<Axis> axes(const PointGroup& g, int fold) {
  const Vec3E seed = canonical_axis_vector(fold);
  const ExtNumber scale = unit_axis_scale(fold);
  std::vector<Axis> out;
  for (const auto& v : orbit(g, seed)) {
    if (!lex_positive(v)) continue;
    Vec3E u(v[0].p(), v[1].p(), v[2].p(), scale.radicand());
    u *= scale;
    out.push_back({v, std::move(u)});
  }
  return out;
}

struct GroupSummary {
  std::size_t order = 0;
  std::map<int, std::size_t> axis_counts;
  std::map<int, std::size_t> element_orders;
  std::size_t improper = 0;
};

inline GroupSummary summarize(const PointGroup& g) {
  GroupSummary s;
  s.order = g.order();
  for (int fold : {2, 3, 5}) s.axis_counts[fold] = axes(g, fold).size();
  for (const auto& m : g.elements()) {
    ++s.element_orders[element_order(m)];
    if (m.det().sign() == Sign::negative) ++s.improper;
  }
  return s;
}

}  // namespace affico
