#pragma once

// Affine extensions of I_h: translations along symmetry axes, the point
// arrays generated by words containing up to k translations, and their
// decomposition into exact-radius shells and radial bands.

#include <affico/group.hpp>
#include <affico/parallel.hpp>
#include <affico/start_configs.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace affico {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How a translation length is measured.
///  axis: multiples of the canonical axis vectors (0,1,tau), (1,1,1), (1,0,0).
///        The default unit.
///  unit: multiples of unit vectors; coordinates pick up sqrt(2+tau) or sqrt(3).
enum class LengthUnit { axis, unit };

inline const char* to_string(LengthUnit u) { return u == LengthUnit::axis ? "axis" : "unit"; }

inline LengthUnit parse_length_unit(const std::string& s) {
  if (s == "axis") return LengthUnit::axis;
  if (s == "unit") return LengthUnit::unit;
  throw std::invalid_argument("unknown length unit '" + s + "'");
}

struct AffineTranslation {
  int fold = 5;
  GoldenNumber length;
  LengthUnit unit = LengthUnit::axis;
  std::vector<Vec3E> vectors;  // lambda * (orbit of the axis direction), both signs

  const Radicand& radicand() const { return vectors.front().radicand(); }
};

inline AffineTranslation make_translation(const PointGroup& group, int fold, const GoldenNumber& length,
                                          LengthUnit unit = LengthUnit::axis) {
  if (length.sign() != Sign::positive) throw std::invalid_argument("translation length must be positive");
  const Radicand k = unit == LengthUnit::axis ? Radicand::unit() : axis_radicand(fold);
  Vec3E d = canonical_axis_vector(fold, k);
  if (unit == LengthUnit::unit) d *= unit_axis_scale(fold);
  d *= length;
  return {fold, length, unit, orbit(group, d)};
}

/// Re-expresses a Q(tau) point set in the workspace radicand.
inline std::vector<Vec3E> lift(const std::vector<Vec3E>& pts, const Radicand& k) {
  std::vector<Vec3E> out;
  out.reserve(pts.size());
  for (const auto& v : pts) {
    if (v.radicand() == k) {
      out.push_back(v);
      continue;
    }
    if (!v[0].in_base_field() || !v[1].in_base_field() || !v[2].in_base_field())
      throw std::invalid_argument("radicand mismatch");
    out.emplace_back(v[0].p(), v[1].p(), v[2].p(), k);
  }
  return out;
}

struct Shell {
  ExtNumber radius2;
  std::size_t begin = 0;  // index range into PointArray::points
  std::size_t end = 0;
  double radius = 0;

  std::size_t size() const { return end - begin; }
};

struct Band {
  std::size_t first_shell = 0;  // shell index range [first_shell, last_shell]
  std::size_t last_shell = 0;
  double rmin = 0, rmax = 0;
  std::size_t count = 0;
};

struct PointArray {
  std::vector<Vec3E> points;  // ordered by (radius^2, float coordinates)
  std::vector<Shell> shells;  // ascending radius, partitioning `points`
  int depth = 0;

  std::size_t size() const { return points.size(); }
};

namespace detail {

inline bool float_lex_less(const Vec3d& a, const Vec3d& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

}  // namespace detail

/// Sorts points into exact-radius shells.
inline PointArray make_point_array(std::vector<Vec3E> pts, int depth = 0) {
  struct Item {
    Vec3E p;
    Vec3d f;
    std::size_t shell;
  };
  std::unordered_map<ExtNumber, std::size_t> shell_of;
  std::vector<ExtNumber> radii;
  std::vector<Item> items;
  items.reserve(pts.size());
  for (auto& p : pts) {
    ExtNumber r2 = norm2(p);
    auto [it, fresh] = shell_of.try_emplace(r2, radii.size());
    if (fresh) radii.push_back(std::move(r2));
    Vec3d f = p.to_double();
    items.push_back({std::move(p), f, it->second});
  }
  std::vector<std::size_t> order(radii.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return radii[a] < radii[b]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.shell != b.shell) return rank[a.shell] < rank[b.shell];
    if (detail::float_lex_less(a.f, b.f)) return true;
    if (detail::float_lex_less(b.f, a.f)) return false;
    return lex_compare(a.p, b.p) < 0;
  });
  PointArray out;
  out.depth = depth;
  out.points.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 || items[i].shell != items[i - 1].shell) {
      if (!out.shells.empty()) out.shells.back().end = i;
      const ExtNumber& r2 = radii[items[i].shell];
      out.shells.push_back({r2, i, i, std::sqrt(std::max(0.0, r2.to_double()))});
    }
    out.points.push_back(std::move(items[i].p));
  }
  if (!out.shells.empty()) out.shells.back().end = out.points.size();
  return out;
}

/// Distinct sums of at most `depth` translation vectors (including 0).
inline std::vector<Vec3E> translation_sums(const AffineTranslation& t, int depth, std::size_t cap) {
  std::vector<Vec3E> all{Vec3E(t.radicand())};
  std::unordered_set<Vec3E, Vec3Hash> seen{all.front()};
  std::vector<Vec3E> layer = all;
  for (int j = 0; j < depth; ++j) {
    std::vector<Vec3E> next;
    for (const auto& s : layer)
      for (const auto& v : t.vectors) {
        Vec3E w = s + v;
        if (seen.insert(w).second) {
          next.push_back(w);
          all.push_back(std::move(w));
          if (all.size() > cap) throw ResourceLimit("translation sum count exceeds cap");
        }
      }
    layer = std::move(next);
  }
  return all;
}

struct GenerateOptions {
  std::size_t cap = 1'000'000;
  unsigned threads = 1;
};

/// { x + t_1 + ... + t_j : x in start, 0 <= j <= depth }. Because the start
/// set is I_h-invariant this is the image of the start under every word with
/// at most `depth` translations.
inline PointArray generate_array(const std::vector<Vec3E>& start, const AffineTranslation& t, int depth,
                                 const GenerateOptions& opt = {}) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  const std::vector<Vec3E> base = lift(start, t.radicand());
  const std::vector<Vec3E> sums = translation_sums(t, depth, opt.cap);
  if (base.empty()) return make_point_array({}, depth);

  // per-start-point candidate lists, merged in a fixed order
  std::vector<std::vector<Vec3E>> parts(base.size());
  parallel_for(base.size(), opt.threads, [&](std::size_t i) {
    auto& out = parts[i];
    out.reserve(sums.size());
    for (const auto& s : sums) out.push_back(base[i] + s);
  });
  std::unordered_set<Vec3E, Vec3Hash> seen;
  std::vector<Vec3E> pts;
  for (auto& part : parts) {
    for (auto& p : part) {
      if (seen.insert(p).second) {
        pts.push_back(std::move(p));
        if (pts.size() > opt.cap) throw ResourceLimit("point array exceeds cap");
      }
    }
    part.clear();
    part.shrink_to_fit();
  }
  return make_point_array(std::move(pts), depth);
}

inline PointArray generate_array(const StartConfig& start, const AffineTranslation& t, int depth,
                                 const GenerateOptions& opt = {}) {
  return generate_array(start.vertices, t, depth, opt);
}

/// Radial bands: consecutive shells split where the relative gap
/// (r_{i+1} - r_i) / r_{i+1} exceeds `gap`.
inline std::vector<Band> bands(const PointArray& a, double gap = 0.05) {
  if (!(gap > 0 && gap < 0.5)) throw std::invalid_argument("band gap must lie in (0, 0.5)");
  std::vector<Band> out;
  for (std::size_t i = 0; i < a.shells.size(); ++i) {
    const Shell& s = a.shells[i];
    const bool split = i == 0 || (s.radius - a.shells[i - 1].radius) / s.radius > gap;
    if (split) out.push_back({i, i, s.radius, s.radius, 0});
    Band& b = out.back();
    b.last_shell = i;
    b.rmax = s.radius;
    b.count += s.size();
  }
  return out;
}

inline std::size_t generic_cardinality(std::size_t start_size, const AffineTranslation& t) {
  return start_size * (1 + t.vectors.size());
}

/// True when the depth-1 array has coinciding points.
inline bool is_nontrivial(const StartConfig& start, const AffineTranslation& t) {
  return generate_array(start, t, 1).size() < generic_cardinality(start.vertices.size(), t);
}

/// Points of the given shells, in array order.
inline std::vector<Vec3E> shell_points(const PointArray& a, const std::vector<std::size_t>& shell_ids) {
  std::vector<Vec3E> out;
  for (std::size_t id : shell_ids) {
    const Shell& s = a.shells.at(id);
    out.insert(out.end(), a.points.begin() + static_cast<std::ptrdiff_t>(s.begin),
               a.points.begin() + static_cast<std::ptrdiff_t>(s.end));
  }
  return out;
}

}  // namespace affico
