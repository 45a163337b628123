#pragma once

// The planar warm-up: C5 acting on a translated regular pentagon.

#include <affico/ext_number.hpp>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace affico {

struct Vec2E {
  ExtNumber x, y;

  friend Vec2E operator+(const Vec2E& a, const Vec2E& b) { return {a.x + b.x, a.y + b.y}; }
  friend bool operator==(const Vec2E& a, const Vec2E& b) { return a.x == b.x && a.y == b.y; }
  ExtNumber norm2() const { return x * x + y * y; }
  std::size_t hash() const { return hash_combine(x.hash(), y.hash()); }
};

struct Vec2Hash {
  std::size_t operator()(const Vec2E& v) const noexcept { return v.hash(); }
};

/// 2x2 matrix over Q(tau)(sqrt(2+tau)).
struct Mat2E {
  std::array<ExtNumber, 4> e;

  friend Vec2E operator*(const Mat2E& m, const Vec2E& v) {
    return {m.e[0] * v.x + m.e[1] * v.y, m.e[2] * v.x + m.e[3] * v.y};
  }
  friend Mat2E operator*(const Mat2E& a, const Mat2E& b) {
    return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
             a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
  }
  friend bool operator==(const Mat2E& a, const Mat2E& b) { return a.e == b.e; }
};

inline Radicand pentagon_radicand() { return Radicand::two_plus_tau(); }

/// Rotation by 72 degrees: cos 72 = (tau-1)/2, sin 72 = sqrt(2+tau)/2.
inline Mat2E rotation72() {
  const Radicand k = pentagon_radicand();
  const Rational h(1, 2);
  const ExtNumber c(GoldenNumber(-h, h), k);
  const ExtNumber s(GoldenNumber(0), GoldenNumber(h), k);
  return {{c, -s, s, c}};
}

inline Mat2E identity2() {
  const Radicand k = pentagon_radicand();
  return {{ExtNumber(GoldenNumber(1), k), ExtNumber(k), ExtNumber(k), ExtNumber(GoldenNumber(1), k)}};
}

/// Unit-circumradius pentagon with a vertex at (0, 1), counter-clockwise.
inline std::vector<Vec2E> pentagon_vertices() {
  const Radicand k = pentagon_radicand();
  const Mat2E r = rotation72();
  std::vector<Vec2E> out{{ExtNumber(k), ExtNumber(GoldenNumber(1), k)}};
  for (int j = 1; j < 5; ++j) out.push_back(r * out.back());
  return out;
}

enum class PentagonDirection { vertex, edge };

struct PentagonArray {
  std::vector<Vec2E> points;
  std::size_t generic = 30;

  std::size_t actual() const { return points.size(); }
  std::size_t coincidences() const { return generic - points.size(); }
};

/// X together with R^j (X + lambda d), j = 0..4, d = (0, 1) through a vertex
/// or (0, -1) through an edge midpoint.
inline PentagonArray pentagon_array(const GoldenNumber& lambda, PentagonDirection dir = PentagonDirection::vertex) {
  if (lambda.sign() != Sign::positive) throw std::invalid_argument("translation length must be positive");
  const Radicand k = pentagon_radicand();
  const auto x = pentagon_vertices();
  const Mat2E r = rotation72();
  const Vec2E t{ExtNumber(k), ExtNumber(dir == PentagonDirection::vertex ? lambda : -lambda, k)};
  PentagonArray out;
  std::unordered_set<Vec2E, Vec2Hash> seen;
  auto add = [&](const Vec2E& p) {
    if (seen.insert(p).second) out.points.push_back(p);
  };
  for (const auto& v : x) add(v);
  Mat2E rj = identity2();
  for (int j = 0; j < 5; ++j) {
    for (const auto& v : x) add(rj * (v + t));
    rj = r * rj;
  }
  return out;
}

inline PentagonDirection parse_pentagon_direction(const std::string& s) {
  if (s == "vertex") return PentagonDirection::vertex;
  if (s == "edge") return PentagonDirection::edge;
  throw std::invalid_argument("unknown pentagon direction '" + s + "'");
}

}  // namespace affico
