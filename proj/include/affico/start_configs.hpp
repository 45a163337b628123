#pragma once

// Seed polyhedra for affine extensions: the built-in catalog and a simple
// text format for custom seeds.

#include <affico/field_parser.hpp>
#include <affico/group.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace affico {

struct StartConfig {
  std::string name;
  std::vector<Vec3E> vertices;  // over Q(tau), unit radicand

  /// Distinct squared radii, ascending.
  std::vector<ExtNumber> radius2_spectrum() const {
    std::vector<ExtNumber> r;
    std::unordered_set<ExtNumber> seen;
    for (const auto& v : vertices) {
      ExtNumber n = norm2(v);
      if (seen.insert(n).second) r.push_back(std::move(n));
    }
    std::sort(r.begin(), r.end(), [](const ExtNumber& a, const ExtNumber& b) { return a < b; });
    return r;
  }
};

/// Exact check g.V == V for all g in `group`.
inline bool is_invariant(const PointGroup& group, const std::vector<Vec3E>& points) {
  std::unordered_set<Vec3E, Vec3Hash> set(points.begin(), points.end());
  for (const auto& g : group.elements())
    for (const auto& v : points)
      if (!set.contains(g * v)) return false;
  return true;
}

/// Union of I_h orbits of `seeds`, deduplicated, in first-seen order.
inline std::vector<Vec3E> close_under(const PointGroup& group, const std::vector<Vec3E>& seeds) {
  std::vector<Vec3E> out;
  std::unordered_set<Vec3E, Vec3Hash> seen;
  for (const auto& s : seeds)
    for (auto& v : orbit(group, s))
      if (seen.insert(v).second) out.push_back(std::move(v));
  return out;
}

namespace detail {

inline Vec3E gv(const GoldenNumber& x, const GoldenNumber& y, const GoldenNumber& z) {
  return {x, y, z, Radicand::unit()};
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"icosahedron", "dodecahedron", "icosidodecahedron", "c60", "c80"};
  return names;
}

/// Built-in start configurations. Every set is the I_h closure of a few
/// seeds; vertices are listed in orbit order.
///
///  icosahedron        cyclic permutations of (0, +-1, +-tau); radius^2 2+tau
///  dodecahedron       (+-1, +-1, +-1) and cyclic (0, +-tau, +-1/tau); radius^2 3
///  icosidodecahedron  cyclic (+-tau, 0, 0) and cyclic (+-1, +-tau^2, +-tau)/2; radius^2 tau^2
///  c60                cyclic (0, +-1, +-3tau), (+-1, +-(2+tau), +-2tau), (+-tau, +-2, +-(2tau+1))
///  c80                orbit of 2tau(1,1,1) and of (tau, (7+6tau)/5, (1+13tau)/5)
///
/// The c80 pentagon vertex is (7+tau)/5 (0,1,tau) + tau (1,1,1): it lies on the
/// mirror plane through its pentagon's 5-fold axis and the neighbouring 3-fold
/// vertex, and all 120 edges of the resulting cage have length exactly 2.
/// Its radius^2 is (56+68tau)/5, slightly above the 3-fold vertices' 12+12tau.
inline StartConfig builtin(const std::string& name) {
  using detail::gv;
  const GoldenNumber t = GoldenNumber::tau();
  const GoldenNumber z(0), one(1);
  std::vector<Vec3E> seeds;
  if (name == "icosahedron") {
    seeds = {gv(z, one, t)};
  } else if (name == "dodecahedron") {
    seeds = {gv(one, one, one), gv(z, t, t.inverse())};
  } else if (name == "icosidodecahedron") {
    const GoldenNumber h(Rational(1, 2));
    seeds = {gv(t, z, z), gv(h, h * t * t, h * t)};
  } else if (name == "c60") {
    seeds = {gv(z, one, 3 * t), gv(one, 2 + t, 2 * t), gv(t, 2, 2 * t + 1)};
  } else if (name == "c80") {
    const GoldenNumber fifth(Rational(1, 5));
    seeds = {gv(2 * t, 2 * t, 2 * t), gv(t, fifth * (7 + 6 * t), fifth * (1 + 13 * t))};
  } else {
    throw std::invalid_argument("unknown start configuration '" + name + "'");
  }
  return {name, close_under(icosahedral_full(), seeds)};
}

/// Reads a seed file:
///
///   # comment
///   @closure on|off
///   x,y,z            (field literals, e.g. "0,1,tau")
///
/// With closure on, the listed points are seeds whose I_h orbits form the
/// configuration; with closure off they must already be an I_h-invariant set.
inline StartConfig parse_seed_text(const std::string& text, const std::string& name = "custom") {
  bool closure = false;
  std::vector<Vec3E> pts;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string body = line.substr(first);
    try {
      if (body[0] == '@') {
        std::istringstream d(body);
        std::string key, val;
        d >> key >> val;
        if (key != "@closure" || (val != "on" && val != "off"))
          throw ParseError("unknown directive '" + body + "'", first);
        closure = val == "on";
        continue;
      }
      auto c = parse_triple(body, Radicand::unit());
      pts.emplace_back(c[0], c[1], c[2]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  if (pts.empty()) throw ParseError("seed file contains no points", 0);
  StartConfig cfg{name, {}};
  if (closure) {
    cfg.vertices = close_under(icosahedral_full(), pts);
  } else {
    std::unordered_set<Vec3E, Vec3Hash> seen;
    for (auto& p : pts)
      if (seen.insert(p).second) cfg.vertices.push_back(std::move(p));
    if (!is_invariant(icosahedral_full(), cfg.vertices))
      throw std::invalid_argument("seed set is not I_h-invariant (enable '@closure on')");
  }
  return cfg;
}

inline StartConfig load_custom(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open seed file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_seed_text(ss.str(), path);
}

/// Built-in name or path to a seed file.
inline StartConfig resolve_config(const std::string& name_or_path) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin(name_or_path);
  return load_custom(name_or_path);
}

}  // namespace affico
